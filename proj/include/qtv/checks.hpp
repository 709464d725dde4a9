#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qtv/frames.hpp"
#include "qtv/vertex.hpp"
#include "qtv/wedge_oracle.hpp"

namespace qtv {

/// W_{(0,k)} on the vacuum equals (-1)^(k+1) / [k]_q for 1 <= k <= kmax.
CheckReport check_highest_weights(long kmax);

/// The vectors used for the vertex symmetry checks.
std::vector<Vec2> generating_set();
CheckReport check_symmetry(const TripleState& T, const std::vector<Vec2>& vs,
                           const std::optional<Areas>& areas = std::nullopt);

/// Oracle blocks equal engine blocks for |a|,|b| <= range and source degree <= n.
CheckReport check_oracle_blocks(const TwistConvention& tw, long range, int n);
/// Commutation relations of the oracle operators on random pairs.
CheckReport check_oracle_commutation(const TwistConvention& tw, int pairs, int n, std::uint64_t seed);

/// Frames ((1,0),(0,1)), ((1,1),(0,1)), ((1,-1),(0,1)).
std::vector<Frame> frames_sharing_normal();
/// F(1) = 1, intertwining for |a|,|b| <= range, and F^T G F = G, degrees <= n.
CheckReport check_framing_change(const Frame& f1, const Frame& f2, int n, long range);

/// hbar_expand(qint(m), 3) = [0, m, 0, -m^3/24] for |m| <= mmax.
CheckReport check_hbar_qint(long mmax);

CheckReport check_gluing(int n, const mpq_class& x, const mpq_class& y);
/// P_x W = t^(-a x) W P_x on basis vectors of degree <= n for |a|,|b| <= range.
CheckReport check_propagation(long range, int n, const mpq_class& x);

/// permutation_identity(m) = [m == 1] for 1 <= m <= mmax.
CheckReport check_permutation_identity(int mmax);

/// Jacobi identity on seeded random triples with coordinates in [-range, range].
CheckReport check_jacobi(int count, std::uint64_t seed, long range = 3);

}  // namespace qtv

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtv/wengine.hpp"

namespace qtv {

/// Sign rule applied to the fermionic operators. `twisted` inserts
/// (-1)^{k(2j-r)} inside the sum; `sign` is an overall factor chosen by
/// the parities of (r, k), indexed as sign[2*(r mod 2) + (k mod 2)].
struct TwistConvention {
    bool twisted = true;
    std::array<int, 4> sign{1, 1, 1, 1};

    int sign_for(long r, long k) const;
    std::string describe() const;
    friend bool operator==(const TwistConvention&, const TwistConvention&) = default;
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix unit E_{i,j} with half-integer indices stored doubled (odd integers).
struct FermionMatrixUnit {
    int i2;
    int j2;
};

/// E_{i,j} on the charge-zero wedge state of lam; nullopt when the result is zero.
/// Diagonal units are normal ordered so that the vacuum has eigenvalue 0.
std::optional<std::pair<int, Partition>> e_unit_apply(FermionMatrixUnit u, const Partition& lam);

/// The operator family F_{r,k} on Schur-basis vectors (coefficient maps).
FockVector e_operator_apply(long r, long k, const TwistConvention& tw, const FockVector& schur);

/// Basis change p_mu = sum_lam chi^lam_mu s_lam and its inverse.
FockVector boson_to_schur(const FockVector& x);
FockVector schur_to_boson(const FockVector& y);

/// Block of the oracle operator for sym expressed in the alpha basis.
WMatrix oracle_w_matrix(WSymbol sym, int source_degree, const TwistConvention& tw);

/// Searches the finite candidate set for a convention matching the bosonic
/// engine on |a|,|b| <= 1 and source degrees <= n. Throws OracleError if none does.
TwistConvention calibrate(int n);

}  // namespace qtv

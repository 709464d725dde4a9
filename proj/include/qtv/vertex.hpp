#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtv/frames.hpp"
#include "qtv/partitions.hpp"
#include "qtv/wengine.hpp"

namespace qtv {

class VertexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two exponential orderings disagree.
class OrderingMismatch : public VertexError {
public:
    using VertexError::VertexError;
};

/// A requested check cannot be decided at the available truncation.
class TruncationError : public VertexError {
public:
    using VertexError::VertexError;
};

using Areas = std::array<mpq_class, 3>;

struct CheckReport {
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
    void fail(const std::string& what);
};

/// Element of the completed triple tensor product, truncated to total degree <= bound.
/// Coefficients are series in t; an undecorated state only uses the exponent 0.
struct TripleState {
    VertexFrames frames;
    int bound = 0;
    std::map<PartitionTriple, TSeries, PartitionTripleLess> coeffs;

    static TripleState vacuum(const VertexFrames& frames, int bound);

    void add(const PartitionTriple& key, const mpq_class& t, const QRat& c);
    void add_series(const PartitionTriple& key, const TSeries& s, const QRat& c);
    /// Coefficient at t^0.
    QRat get(const PartitionTriple& key) const;
    const TSeries* find(const PartitionTriple& key) const;
    bool is_zero() const { return coeffs.empty(); }
    TripleState truncated(int n) const;
    /// Components whose legs outside `keep` are empty.
    TripleState projected(const std::array<bool, 3>& keep) const;
    friend bool operator==(const TripleState& x, const TripleState& y) { return x.coeffs == y.coeffs; }
};

/// t^t_shift W_{v, leg^-}; legs are 0-based.
struct LegFactor {
    int leg = 0;
    Vec2 v;
    mpq_class t_shift = 0;
};

/// coeff * f_1 f_2 ... f_m, the last factor acting first.
struct OpTerm {
    QRat coeff;
    std::vector<LegFactor> factors;
};

using OpSum = std::vector<OpTerm>;

/// Total degree change of W_{v, leg^-}.
long leg_degree(Vec2 v, int leg, const VertexFrames& frames);
long term_degree(const OpTerm& term, const VertexFrames& frames);

/// W_{v, leg^-} (times t^t_shift) on one tensor factor; components above n are dropped.
TripleState leg_apply(Vec2 v, int leg, const TripleState& state, int n, const mpq_class& t_shift = 0);
TripleState apply_term(const OpTerm& term, const TripleState& state, int n);
TripleState apply_sum(const OpSum& op, const TripleState& state, int n);
/// exp(op) applied to state, truncated at n. Every term must raise the total degree.
TripleState exp_apply(const OpSum& op, const TripleState& state, int n);

enum class EMode {
    next,  // the factor sourced from leg + 1
    prev,  // the factor sourced from leg - 1
};

struct EDescriptor {
    int leg = 0;
    EMode mode = EMode::next;
    std::optional<Areas> areas;
};

/// Exponent of the vertex exponential; terms k = 1..n.
OpSum e_exponent(const EDescriptor& desc, const VertexFrames& frames, int n);
TripleState e_exp(const EDescriptor& desc, const TripleState& state, int n);

/// Exponentials in application order (first element acts first).
using Ordering = std::vector<EDescriptor>;
Ordering ordering_next(const std::optional<Areas>& areas = std::nullopt);
Ordering ordering_prev(const std::optional<Areas>& areas = std::nullopt);
/// With project_first, the output of the first exponential is restricted to
/// its own leg: its second raising factor does not annihilate the vacuum and
/// would otherwise leave a two-leg remainder.
TripleState apply_ordering(const Ordering& order, const VertexFrames& frames, int n, bool project_first = true);

/// The vertex state from both orderings; throws OrderingMismatch if they differ.
TripleState build_T(int n, const VertexFrames& frames);
/// Compares the two orderings; with project_first false both act on the bare vacuum.
CheckReport check_orderings(int n, const VertexFrames& frames, bool project_first);
/// Solves the annihilation equations for all |a|,|b| <= range degree by degree,
/// independently of the exponentials. Throws if the solution is not unique.
TripleState solve_annihilation(int n, const VertexFrames& frames, long range = 2);
/// The area-decorated state as a product of decorated exponentials.
TripleState build_Z(int n, const VertexFrames& frames, const Areas& areas);
/// Component of tri-degree (d1,d2,d3) multiplied by t^(d1 x1 + d2 x2 + d3 x3).
TripleState decorate_t(const TripleState& state, const Areas& areas);

/// Differences between two states over total degrees <= n.
CheckReport compare_states(const TripleState& x, const TripleState& y, int n, const std::string& label = "");

/// (sum_l t^(x_l deg_l) W_{v,l^-}) state = 0 on every component below the guard
/// state.bound + min(0, leg degrees of v).
CheckReport check_annihilation(Vec2 v, const TripleState& state, const std::optional<Areas>& areas = std::nullopt);

/// Closed forms for a single leg: coefficient sign * (-1)^(k+1) / (k [k]_q) on
/// W_{-k n_{leg+1}, leg^-} (next) or sign * (-1)^k / (k [k]_q) on W_{k n_{leg-1}, leg^-} (prev).
OpSum one_leg_exponent(int leg, EMode mode, int sign, int n, const VertexFrames& frames);

/// Single exponential for legs 2 and 3: alpha_k (W_{-k n_1, 3^-} - W_{k n_1, 2^-}) +
/// (cross / k) W_{k n_1, 2^-} W_{-k n_1, 3^-} with alpha_k = sign * (-1)^(k+1) / (k [k]_q).
OpSum two_leg_exponent(int sign, long cross, int n, const VertexFrames& frames);

/// Both closed forms against each other and against the projection of T.
CheckReport check_one_leg(const TripleState& T, int sign);
/// Two-leg recursions on every pair of adjacent legs.
CheckReport check_two_leg(const TripleState& T);
/// The single-exponential display for legs 2 and 3.
CheckReport check_two_leg_display(const TripleState& T, int sign, long cross);

/// Commutator identities of the exponentials with the leg operators on every
/// basis triple of total degree <= n.
CheckReport we_identity_check(int leg, long k, int n, const VertexFrames& frames);

/// Frames with every w replaced by w + n.
VertexFrames sheared(const VertexFrames& frames);
/// T for the sheared frames equals T mapped through the leg framing changes.
CheckReport check_framing_covariance(int n, const VertexFrames& frames);

/// All partition triples of total degree <= n in sorted order.
std::vector<PartitionTriple> triples_up_to(int n);

/// Two-leg state: map (p, q) -> series, each leg truncated at bound.
struct TwoLegState {
    std::array<Frame, 2> frames;
    int bound = 0;
    std::map<std::pair<Partition, Partition>, TSeries> coeffs;

    void add(const Partition& p, const Partition& q, const mpq_class& t, const QRat& c);
    friend bool operator==(const TwoLegState& x, const TwoLegState& y) { return x.coeffs == y.coeffs; }
};

/// exp(sum_k t^(kx) / k alpha^-_{k} alpha^-_{k}) with legs (f, reversed f).
TwoLegState product_state(const mpq_class& x, int n, const Frame& f = Frame{{1, 0}, {0, 1}});

/// Contracts leg legA of a with leg legB of b with weight zfactor; the
/// remaining legs are (a's other leg, b's other leg).
TwoLegState glue_legs(const TwoLegState& a, const TwoLegState& b, int legA, int legB);

}  // namespace qtv

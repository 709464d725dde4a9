#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtv/frames.hpp"
#include "qtv/partitions.hpp"
#include "qtv/qfield.hpp"

namespace qtv {

/// Sign of the central extension: [W_u, W_{-u}] = central_sign * a_u, where
/// a_u is the first frame coordinate of u. Fixed so that the structure
/// constants [u^v]_q and the highest weights (-1)^{b+1}/[b]_q are consistent.
inline constexpr int central_sign = -1;

/// Operator symbol W_v with v = a*w + b*n in the leg frame.
struct WSymbol {
    long a = 0;
    long b = 0;

    WSymbol() = default;
    WSymbol(long a_, long b_);
    static WSymbol from_vector(Vec2 v, const Frame& f);

    long degree() const { return -a; }
    friend WSymbol operator+(WSymbol u, WSymbol v) { return WSymbol::raw(u.a + v.a, u.b + v.b); }
    friend auto operator<=>(const WSymbol&, const WSymbol&) = default;
    bool is_zero() const { return a == 0 && b == 0; }
    static WSymbol raw(long a_, long b_);
};

using Word = std::vector<WSymbol>;

/// Finitely supported map Partition -> QRat; never stores zeros.
struct FockVector {
    std::map<Partition, QRat> coeffs;

    static FockVector basis(const Partition& p) { return FockVector{{{p, QRat(1)}}}; }
    static FockVector vacuum() { return basis(Partition()); }

    bool is_zero() const { return coeffs.empty(); }
    QRat get(const Partition& p) const;
    void add(const Partition& p, const QRat& c);
    void add_scaled(const FockVector& v, const QRat& c);
    FockVector scaled(const QRat& c) const;
    FockVector truncated(int n) const;
    int max_degree() const;
    friend bool operator==(const FockVector& x, const FockVector& y) { return x.coeffs == y.coeffs; }
};

/// Block of W_sym from degree source_degree to degree target_degree;
/// entries[row][col] with rows/cols in partition enumeration order.
struct WMatrix {
    WSymbol sym;
    int source_degree = 0;
    int target_degree = 0;
    std::vector<std::vector<QRat>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const;
};

using QMatrix = std::vector<std::vector<QRat>>;
QMatrix mat_mul(const QMatrix& x, const QMatrix& y, std::size_t inner);
QMatrix mat_sub(const QMatrix& x, const QMatrix& y);
QMatrix mat_transpose(const QMatrix& x, std::size_t cols);

/// W_{b n}(1): (-1)^{b+1} / [b]_q for every nonzero b.
QRat base_weight(long b);

/// <A_p C_p> for annihilator and creator words of p: central_sign^len(p) * zfactor(p).
QRat extraction_norm(const Partition& p);

Word annihilator_word(const Partition& p);
Word creator_word(const Partition& p);

enum class RewriteStrategy { leftmost, rightmost };

/// <1, W_{s1} ... W_{sk} 1> by the normal-ordering rewriting system.
QRat vev(const Word& word, RewriteStrategy strategy = RewriteStrategy::leftmost);

/// W_sym applied to the basis vector alpha^{+p} (exact, cached).
const FockVector& act(WSymbol sym, const Partition& p);

/// Coefficient of alpha^{+p} in W_sym alpha^{+src} via vev extraction.
QRat extract_coefficient(WSymbol sym, const Partition& p, const Partition& src);

FockVector apply_w(WSymbol sym, const FockVector& state, int n);

/// act(sym, p) = act_scale(sym) * act_reduced(sym, p), and every coefficient of
/// act_reduced is a Laurent polynomial: the scale is base_weight(b), or 1 when b = 0.
QRat act_scale(WSymbol sym);
const FockVector& act_reduced(WSymbol sym, const Partition& p);

struct CommutationReport {
    long checks = 0;
    long failures = 0;
    /// Failures among pairs with u + v = 0, the only ones the central term affects.
    long opposite_failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

/// Checks [W_u, W_v] = [a_u b_v - b_u a_v]_q W_{u+v} + central * a_u * delta_{u+v,0}
/// on every basis vector of degree <= n, for all symbols with |a|,|b| <= range.
/// With opposite_only, only pairs u + v = 0 are visited.
CommutationReport check_commutation(long range, int n, int central = central_sign, bool opposite_only = false);

WMatrix w_matrix(WSymbol sym, int source_degree);

QRat pairing(const FockVector& x, const FockVector& y);

/// Coefficient series in the area variable t: exponent -> coefficient.
using TSeries = std::map<mpq_class, QRat>;

struct DecoratedFock {
    std::map<Partition, TSeries> coeffs;

    static DecoratedFock plain(const FockVector& v);
    void add(const Partition& p, const mpq_class& t, const QRat& c);
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const DecoratedFock&, const DecoratedFock&) = default;
};

DecoratedFock propagate(const DecoratedFock& x, const TExponent& area);
DecoratedFock propagate(const FockVector& x, const TExponent& area);
DecoratedFock apply_w(WSymbol sym, const DecoratedFock& state, int n);
/// Multiplies every coefficient by t^shift.
DecoratedFock t_shift(const DecoratedFock& x, const mpq_class& shift);

/// Matrices of the framing-change isomorphism from frame f1 to frame f2
/// (same normal), one square block per degree 0..n.
std::vector<QMatrix> framing_change(const Frame& f1, const Frame& f2, int n);

/// Clears memo tables (used by tests exercising determinism).
void clear_engine_caches();

}  // namespace qtv

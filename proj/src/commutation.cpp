#include <map>
#include <utility>
#include <vector>

#include "qtv/wengine.hpp"

namespace qtv {

namespace {

using i128 = __int128;

// Raised when a value leaves the integer kernel's range; the caller then
// redoes that check in QRat arithmetic.
struct Fallback {};

i128 mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Fallback{};
    return r;
}

i128 add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Fallback{};
    return r;
}

i128 lcm128(i128 a, i128 b) {
    i128 x = a, y = b;
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    return mul(a / x, b);
}

i128 to_i128(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Fallback{};
    return z.get_si();
}

mpz_class to_mpz(i128 x) {
    bool neg = x < 0;
    auto u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(u & ~0UL);
    return neg ? mpz_class(-r) : r;
}

// Gaussian-integer Laurent polynomial sum_j (re[j] + i im[j]) z^(low + j).
struct ZPoly {
    int low = 0;
    std::vector<i128> re, im;

    int high() const { return low + static_cast<int>(re.size()) - 1; }
    bool is_zero() const {
        for (std::size_t j = 0; j < re.size(); ++j)
            if (re[j] != 0 || im[j] != 0) return false;
        return true;
    }
};

// c * f as an integral polynomial; c must be a Laurent polynomial.
ZPoly integral(const QRat& c, const mpz_class& f) {
    if (c.den().size() != 1) throw Fallback{};
    ZPoly out;
    out.low = c.shift();
    for (const auto& g : c.num()) {
        mpq_class x = g.re.to_mpq() * f, y = g.im.to_mpq() * f;
        if (x.get_den() != 1 || y.get_den() != 1) throw Fallback{};
        out.re.push_back(to_i128(x.get_num()));
        out.im.push_back(to_i128(y.get_num()));
    }
    return out;
}

ZPoly scaled(const ZPoly& x, i128 k) {
    ZPoly out = x;
    for (std::size_t j = 0; j < x.re.size(); ++j) {
        out.re[j] = mul(x.re[j], k);
        out.im[j] = mul(x.im[j], k);
    }
    return out;
}

// acc += x * y
void add_product(ZPoly& acc, const ZPoly& x, const ZPoly& y) {
    int lo = x.low + y.low;
    int hi = x.high() + y.high();
    if (acc.re.empty()) {
        acc.low = lo;
        acc.re.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        acc.im.assign(acc.re.size(), 0);
    } else {
        if (lo < acc.low) {
            auto pad = static_cast<std::size_t>(acc.low - lo);
            acc.re.insert(acc.re.begin(), pad, 0);
            acc.im.insert(acc.im.begin(), pad, 0);
            acc.low = lo;
        }
        if (hi > acc.high()) {
            acc.re.resize(static_cast<std::size_t>(hi - acc.low + 1), 0);
            acc.im.resize(acc.re.size(), 0);
        }
    }
    auto base = static_cast<std::size_t>(lo - acc.low);
    for (std::size_t i = 0; i < x.re.size(); ++i) {
        i128 xr = x.re[i], xi = x.im[i];
        if (xr == 0 && xi == 0) continue;
        for (std::size_t j = 0; j < y.re.size(); ++j) {
            i128 yr = y.re[j], yi = y.im[j];
            std::size_t k = base + i + j;
            if (xr != 0) {
                if (yr != 0) acc.re[k] = add(acc.re[k], mul(xr, yr));
                if (yi != 0) acc.im[k] = add(acc.im[k], mul(xr, yi));
            }
            if (xi != 0) {
                if (yi != 0) acc.re[k] = add(acc.re[k], -mul(xi, yi));
                if (yr != 0) acc.im[k] = add(acc.im[k], mul(xi, yr));
            }
        }
    }
}

using ZColumn = std::vector<std::pair<Partition, ZPoly>>;

// Columns z(q) * act_reduced(s, p)[q], built on demand.
class IntegralTable {
public:
    const ZColumn& column(WSymbol s, const Partition& p) {
        auto key = std::make_pair(s, p);
        auto it = cols_.find(key);
        if (it != cols_.end()) return it->second;
        ZColumn col;
        for (const auto& [q, c] : act_reduced(s, p).coeffs) col.emplace_back(q, integral(c, zfactor(q)));
        return cols_.emplace(std::move(key), std::move(col)).first->second;
    }

private:
    std::map<std::pair<WSymbol, Partition>, ZColumn> cols_;
};

i128 degree_lcm(int d) {
    static std::map<int, i128> memo;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    mpz_class l = 1;
    for (const auto& q : partitions_of(d)) l = lcm(l, zfactor(q));
    return memo.emplace(d, to_i128(l)).first->second;
}

// W_x W_y applied to alpha^{+p}, accumulated into acc with weight L / z(q)
// per intermediate partition q, so that acc[r] / (L z(r)) is the coefficient.
void accumulate(IntegralTable& tab, std::map<Partition, ZPoly>& acc, WSymbol x, WSymbol y, const Partition& p, i128 L,
                int sign) {
    for (const auto& [q, yq] : tab.column(y, p)) {
        ZPoly t = scaled(yq, sign * (L / to_i128(zfactor(q))));
        for (const auto& [r, xr] : tab.column(x, q)) add_product(acc[r], xr, t);
    }
}

FockVector commutator_integral(IntegralTable& tab, WSymbol u, WSymbol v, const Partition& p) {
    int d = p.size();
    i128 L = 1;
    for (long a : {u.a, v.a})
        if (d - a >= 0) L = lcm128(L, degree_lcm(static_cast<int>(d - a)));
    std::map<Partition, ZPoly> acc;
    accumulate(tab, acc, u, v, p, L, 1);
    accumulate(tab, acc, v, u, p, L, -1);
    FockVector out;
    for (const auto& [r, poly] : acc) {
        if (poly.is_zero()) continue;
        mpz_class den = to_mpz(L) * zfactor(r);
        std::vector<Gauss> coeffs;
        for (std::size_t j = 0; j < poly.re.size(); ++j)
            coeffs.emplace_back(Rat(mpq_class(to_mpz(poly.re[j]), den)), Rat(mpq_class(to_mpz(poly.im[j]), den)));
        out.add(r, QRat::from_laurent(HalfLaurent(poly.low, std::move(coeffs)), HalfLaurent(0, {Gauss(1)})));
    }
    return out;
}

FockVector apply_reduced(WSymbol s, const FockVector& x) {
    FockVector out;
    for (const auto& [q, c] : x.coeffs) out.add_scaled(act_reduced(s, q), c);
    return out;
}

FockVector commutator_rational(WSymbol u, WSymbol v, const Partition& p) {
    FockVector out = apply_reduced(u, act_reduced(v, p));
    out.add_scaled(apply_reduced(v, act_reduced(u, p)), QRat(-1));
    return out;
}

std::string symbol_str(WSymbol s) { return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")"; }

}  // namespace

CommutationReport check_commutation(long range, int n, int central, bool opposite_only) {
    std::vector<WSymbol> syms;
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b)
            if (a != 0 || b != 0) syms.emplace_back(a, b);
    IntegralTable tab;
    CommutationReport rep;
    // The identity for (v, u) is the negation of the one for (u, v), so each
    // unordered pair is visited once.
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j) {
            WSymbol u = syms[i], v = syms[j];
            WSymbol s = u + v;
            if (opposite_only && !s.is_zero()) continue;
            long m = u.a * v.b - u.b * v.a;
            // Both sides divided by act_scale(u) * act_scale(v).
            QRat inv = (act_scale(u) * act_scale(v)).inverse();
            QRat factor;
            if (s.is_zero()) factor = QRat(central * u.a) * inv;
            else if (m != 0) factor = qint(m) * act_scale(s) * inv;
            for (int d = 0; d <= n; ++d)
                for (const auto& p : partitions_of(d)) {
                    FockVector lhs;
                    try {
                        lhs = commutator_integral(tab, u, v, p);
                    } catch (const Fallback&) {
                        lhs = commutator_rational(u, v, p);
                    }
                    FockVector rhs;
                    if (s.is_zero()) rhs.add(p, factor);
                    else if (m != 0) rhs = act_reduced(s, p).scaled(factor);
                    ++rep.checks;
                    if (lhs == rhs) continue;
                    if (s.is_zero()) ++rep.opposite_failures;
                    if (rep.failures++ == 0)
                        rep.first_failure = "[W" + symbol_str(u) + ", W" + symbol_str(v) + "] on " + p.str();
                }
        }
    return rep;
}

}  // namespace qtv

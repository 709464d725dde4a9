#include "qtv/wedge_oracle.hpp"

#include <algorithm>
#include <vector>

namespace qtv {

int TwistConvention::sign_for(long r, long k) const {
    int idx = 2 * static_cast<int>(((r % 2) + 2) % 2) + static_cast<int>(((k % 2) + 2) % 2);
    return sign[static_cast<std::size_t>(idx)];
}

std::string TwistConvention::describe() const {
    std::string s = twisted ? "twist (-1)^{k(2j-r)}" : "no twist";
    s += "; sign[r%2,k%2] = {";
    for (std::size_t j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(sign[j]);
    return s + "}";
}

namespace {

// Occupied doubled positions 2(lam_m - m) + 1 for m = 1..len+pad, descending.
std::vector<int> occupied(const Partition& lam, int pad) {
    std::vector<int> parts = lam.parts();
    int len = static_cast<int>(parts.size());
    std::vector<int> out;
    for (int m = 1; m <= len + pad; ++m) {
        int l = m <= len ? parts[static_cast<std::size_t>(m - 1)] : 0;
        out.push_back(2 * (l - m) + 1);
    }
    return out;
}

Partition from_occupied(const std::vector<int>& occ) {
    std::vector<int> parts;
    for (std::size_t m = 1; m <= occ.size(); ++m) {
        int l = (occ[m - 1] + 2 * static_cast<int>(m) - 1) / 2;
        if (l > 0) parts.push_back(l);
    }
    return Partition::from_parts(parts);
}

}  // namespace

std::optional<std::pair<int, Partition>> e_unit_apply(FermionMatrixUnit u, const Partition& lam) {
    if (u.i2 % 2 == 0 || u.j2 % 2 == 0) throw std::invalid_argument("matrix unit indices must be half-integers");
    int reach = std::max(std::abs(u.i2), std::abs(u.j2));
    int pad = reach / 2 + 2;
    std::vector<int> occ = occupied(lam, pad);
    auto has = [&](int p) {
        if (p < occ.back()) return true;
        return std::find(occ.begin(), occ.end(), p) != occ.end();
    };
    if (u.i2 == u.j2) {
        int e = (has(u.j2) ? 1 : 0) - (u.j2 < 0 ? 1 : 0);
        if (e == 0) return std::nullopt;
        return std::make_pair(e, lam);
    }
    if (!has(u.j2) || has(u.i2)) return std::nullopt;
    int lo = std::min(u.i2, u.j2), hi = std::max(u.i2, u.j2);
    int between = 0;
    for (int p : occ)
        if (p > lo && p < hi) ++between;
    std::vector<int> next;
    for (int p : occ)
        if (p != u.j2) next.push_back(p);
    next.push_back(u.i2);
    std::sort(next.begin(), next.end(), std::greater<int>());
    return std::make_pair(between % 2 == 0 ? 1 : -1, from_occupied(next));
}

namespace {

// z^{k e} with the optional twist (-1)^{k e}, e = 2j - r.
QRat mode_coefficient(long k, long e, bool twisted) {
    QRat c = QRat::q_half_power(static_cast<int>(k * e));
    if (twisted && ((k * e) % 2 != 0)) c = -c;
    return c;
}

FockVector e_operator_on_basis(long r, long k, const TwistConvention& tw, const Partition& lam) {
    FockVector out;
    QRat pref = QRat(Gauss(0, -tw.sign_for(r, k)));
    int len = lam.length();
    int top = lam.empty() ? 0 : lam.parts()[0];
    long ar = r < 0 ? -r : r;
    int lo2 = -2 * (len + static_cast<int>(ar)) - 3;
    int hi2 = 2 * (top + static_cast<int>(ar)) + 3;
    for (int j2 = lo2; j2 <= hi2; j2 += 2) {
        int i2 = j2 - 2 * static_cast<int>(r);
        auto res = e_unit_apply({i2, j2}, lam);
        if (!res) continue;
        QRat c = pref * mode_coefficient(k, j2 - r, tw.twisted);
        out.add(res->second, res->first > 0 ? c : -c);
    }
    if (r == 0) {
        // Constant term -i / (z^k - z^-k) with the twist applied to z.
        QRat z = QRat::q_half_power(static_cast<int>(k));
        QRat zi = QRat::q_half_power(static_cast<int>(-k));
        QRat denom = z - zi;
        if (tw.twisted && k % 2 != 0) denom = -denom;
        out.add(lam, pref / denom);
    }
    return out;
}

}  // namespace

FockVector e_operator_apply(long r, long k, const TwistConvention& tw, const FockVector& schur) {
    if (r == 0 && k == 0) throw std::invalid_argument("operator (0,0) is not allowed");
    FockVector out;
    for (const auto& [lam, c] : schur.coeffs) out.add_scaled(e_operator_on_basis(r, k, tw, lam), c);
    return out;
}

FockVector boson_to_schur(const FockVector& x) {
    FockVector out;
    for (const auto& [mu, c] : x.coeffs)
        for (const auto& lam : partitions_of(mu.size())) {
            long chi = character(lam, mu);
            if (chi != 0) out.add(lam, c * QRat(chi));
        }
    return out;
}

FockVector schur_to_boson(const FockVector& y) {
    FockVector out;
    for (const auto& [lam, c] : y.coeffs)
        for (const auto& mu : partitions_of(lam.size())) {
            long chi = character(lam, mu);
            if (chi != 0) out.add(mu, c * QRat(mpq_class(chi) / mpq_class(zfactor(mu))));
        }
    return out;
}

namespace {

// Scalar relating the oracle creation operator for part k to multiplication by p_k.
QRat creation_phase(long k, const TwistConvention& tw) { return QRat(Gauss(0, -tw.sign_for(-k, 0))); }

QRat basis_phase(const Partition& p, const TwistConvention& tw) {
    QRat c(1);
    for (int k : p.parts()) c *= creation_phase(k, tw);
    return c;
}

}  // namespace

WMatrix oracle_w_matrix(WSymbol sym, int source_degree, const TwistConvention& tw) {
    WMatrix m;
    m.sym = sym;
    m.source_degree = source_degree;
    m.target_degree = static_cast<int>(source_degree - sym.a);
    if (m.target_degree < 0) return m;
    const auto& rows = partitions_of(m.target_degree);
    const auto& cols = partitions_of(source_degree);
    m.entries.assign(rows.size(), std::vector<QRat>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        FockVector x;
        x.add(cols[j], basis_phase(cols[j], tw));
        FockVector img = schur_to_boson(e_operator_apply(sym.a, sym.b, tw, boson_to_schur(x)));
        for (const auto& [p, c] : img.coeffs) m.entries[partition_index(p)][j] = c / basis_phase(p, tw);
    }
    return m;
}

TwistConvention calibrate(int n) {
    std::vector<TwistConvention> candidates;
    for (bool twisted : {true, false})
        for (int idx = 0; idx < 16; ++idx) {
            TwistConvention tw;
            tw.twisted = twisted;
            for (std::size_t b = 0; b < 4; ++b) tw.sign[b] = (idx >> b) & 1 ? -1 : 1;
            candidates.push_back(tw);
        }
    for (const auto& tw : candidates) {
        bool ok = true;
        for (long a = -1; a <= 1 && ok; ++a)
            for (long b = -1; b <= 1 && ok; ++b) {
                if (a == 0 && b == 0) continue;
                WSymbol s(a, b);
                for (int d = 0; d <= n && ok; ++d) {
                    if (d - a < 0) continue;
                    if (oracle_w_matrix(s, d, tw).entries != w_matrix(s, d).entries) ok = false;
                }
            }
        if (ok) return tw;
    }
    throw OracleError("no sign convention in the candidate set reproduces the bosonic engine");
}

}  // namespace qtv

#include "qtv/checks.hpp"

#include <random>

namespace qtv {

namespace {

std::string sym_str(WSymbol s) { return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")"; }

QMatrix zeros(std::size_t r, std::size_t c) { return QMatrix(r, std::vector<QRat>(c)); }

std::size_t dim(long d) { return d < 0 ? 0 : partitions_of(static_cast<int>(d)).size(); }

// outer(mid -> target) * inner(source -> mid), zero when either block is empty.
QMatrix compose(const WMatrix& outer, const WMatrix& inner, std::size_t rows, std::size_t cols) {
    if (outer.entries.empty() || inner.entries.empty()) return zeros(rows, cols);
    return mat_mul(outer.entries, inner.entries, inner.rows());
}

QMatrix scaled(QMatrix m, const QRat& c) {
    for (auto& row : m)
        for (auto& x : row) x *= c;
    return m;
}

}  // namespace

CheckReport check_highest_weights(long kmax) {
    CheckReport rep;
    for (long k = 1; k <= kmax; ++k) {
        QRat expected = QRat(k % 2 == 1 ? 1 : -1) / qint(k);
        FockVector got = apply_w(WSymbol(0, k), FockVector::vacuum(), 0);
        ++rep.checks;
        if (!(got == FockVector::vacuum().scaled(expected)))
            rep.fail("W_(0," + std::to_string(k) + ") on the vacuum gives " + render_qrat(got.get(Partition())));
    }
    return rep;
}

std::vector<Vec2> generating_set() { return {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}; }

CheckReport check_symmetry(const TripleState& T, const std::vector<Vec2>& vs, const std::optional<Areas>& areas) {
    CheckReport rep;
    for (Vec2 v : vs) {
        CheckReport r = check_annihilation(v, T, areas);
        rep.checks += r.checks;
        if (r.failures > 0 && rep.failures == 0) rep.first_failure = r.first_failure;
        rep.failures += r.failures;
    }
    return rep;
}

CheckReport check_oracle_blocks(const TwistConvention& tw, long range, int n) {
    CheckReport rep;
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b) {
            if (a == 0 && b == 0) continue;
            WSymbol s(a, b);
            for (int d = 0; d <= n; ++d) {
                if (d - a < 0) continue;
                ++rep.checks;
                if (oracle_w_matrix(s, d, tw).entries != w_matrix(s, d).entries)
                    rep.fail("oracle block differs for W" + sym_str(s) + " from degree " + std::to_string(d));
            }
        }
    return rep;
}

CheckReport check_oracle_commutation(const TwistConvention& tw, int pairs, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-2, 2);
    auto draw = [&] {
        for (;;) {
            long a = coord(rng), b = coord(rng);
            if (a != 0 || b != 0) return WSymbol(a, b);
        }
    };
    CheckReport rep;
    for (int i = 0; i < pairs; ++i) {
        WSymbol u = draw();
        // Every fourth pair is opposite so the central term is exercised.
        WSymbol v = (i % 4 == 3) ? WSymbol(-u.a, -u.b) : draw();
        WSymbol s = u + v;
        long m = u.a * v.b - u.b * v.a;
        for (int d = 0; d <= n; ++d) {
            long target = d - s.a;
            if (target < 0) continue;
            std::size_t rows = dim(target), cols = dim(d);
            QMatrix lhs = mat_sub(compose(d - v.a >= 0 ? oracle_w_matrix(u, static_cast<int>(d - v.a), tw) : WMatrix{},
                                          oracle_w_matrix(v, d, tw), rows, cols),
                                  compose(d - u.a >= 0 ? oracle_w_matrix(v, static_cast<int>(d - u.a), tw) : WMatrix{},
                                          oracle_w_matrix(u, d, tw), rows, cols));
            QMatrix rhs = zeros(rows, cols);
            if (s.is_zero()) {
                for (std::size_t j = 0; j < cols; ++j) rhs[j][j] = QRat(central_sign * u.a);
            } else if (m != 0) {
                rhs = scaled(oracle_w_matrix(s, d, tw).entries, qint(m));
            }
            ++rep.checks;
            if (lhs != rhs) rep.fail("oracle [W" + sym_str(u) + ", W" + sym_str(v) + "] from degree " + std::to_string(d));
        }
    }
    return rep;
}

std::vector<Frame> frames_sharing_normal() {
    return {Frame{{1, 0}, {0, 1}}, Frame{{1, 1}, {0, 1}}, Frame{{1, -1}, {0, 1}}};
}

CheckReport check_framing_change(const Frame& f1, const Frame& f2, int n, long range) {
    std::vector<QMatrix> F = framing_change(f1, f2, n);
    CheckReport rep;
    std::string tag = " for w " + f1.w.str() + " -> " + f2.w.str();
    ++rep.checks;
    if (!(F[0].size() == 1 && F[0][0].size() == 1 && F[0][0][0] == QRat(1))) rep.fail("F(1) is not 1" + tag);
    for (int d = 0; d <= n; ++d) {
        const auto& ps = partitions_of(d);
        std::size_t sz = ps.size();
        QMatrix G = zeros(sz, sz);
        for (std::size_t i = 0; i < sz; ++i) G[i][i] = QRat(mpq_class(zfactor(ps[i])));
        const QMatrix& Fd = F[static_cast<std::size_t>(d)];
        QMatrix gram = mat_mul(mat_transpose(mat_mul(G, Fd, sz), sz), Fd, sz);
        ++rep.checks;
        if (gram != G) rep.fail("pairing not preserved in degree " + std::to_string(d) + tag);
    }
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b) {
            if (a == 0 && b == 0) continue;
            WSymbol s1(a, b);
            WSymbol s2 = WSymbol::from_vector(a * f1.w + b * f1.n, f2);
            for (int d = 0; d <= n; ++d) {
                long t = d - a;
                if (t < 0 || t > n) continue;
                std::size_t rows = dim(t), cols = dim(d);
                QMatrix left = mat_mul(F[static_cast<std::size_t>(t)], w_matrix(s1, d).entries, rows);
                QMatrix right = mat_mul(w_matrix(s2, d).entries, F[static_cast<std::size_t>(d)], cols);
                ++rep.checks;
                if (left != right) rep.fail("F does not intertwine W" + sym_str(s1) + " from degree " + std::to_string(d) + tag);
            }
        }
    return rep;
}

CheckReport check_hbar_qint(long mmax) {
    CheckReport rep;
    for (long m = -mmax; m <= mmax; ++m) {
        std::vector<Gauss> got = hbar_expand(qint(m), 3);
        std::vector<Gauss> want{Gauss(0), Gauss(m), Gauss(0), Gauss(Rat(-m * m * m, 24))};
        ++rep.checks;
        if (got != want) rep.fail("hbar expansion of [" + std::to_string(m) + "]_q");
        for (const auto& g : got)
            if (!g.is_real()) rep.fail("non-real hbar coefficient for [" + std::to_string(m) + "]_q");
    }
    return rep;
}

CheckReport check_gluing(int n, const mpq_class& x, const mpq_class& y) {
    CheckReport rep;
    ++rep.checks;
    if (!(glue_legs(product_state(x, n), product_state(y, n), 1, 0) == product_state(x + y, n)))
        rep.fail("glued product states differ from the composed propagation");
    ++rep.checks;
    TwoLegState s = product_state(y, n);
    if (!(glue_legs(product_state(0, n), s, 1, 0) == s)) rep.fail("zero-area state does not glue as the identity");
    return rep;
}

CheckReport check_propagation(long range, int n, const mpq_class& x) {
    CheckReport rep;
    TExponent area(x);
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b) {
            if (a == 0 && b == 0) continue;
            WSymbol s(a, b);
            for (int d = 0; d <= n; ++d)
                for (const auto& p : partitions_of(d)) {
                    FockVector e = FockVector::basis(p);
                    DecoratedFock lhs = propagate(apply_w(s, e, n), area);
                    DecoratedFock rhs = t_shift(apply_w(s, propagate(e, area), n), -x * a);
                    ++rep.checks;
                    if (!(lhs == rhs)) rep.fail("propagation fails to commute with W" + sym_str(s) + " on " + p.str());
                }
        }
    return rep;
}

CheckReport check_permutation_identity(int mmax) {
    CheckReport rep;
    for (int m = 1; m <= mmax; ++m) {
        ++rep.checks;
        QRat got = permutation_identity(m);
        if (got != QRat(m == 1 ? 1 : 0)) rep.fail("m = " + std::to_string(m) + " gives " + render_qrat(got));
    }
    return rep;
}

CheckReport check_jacobi(int count, std::uint64_t seed, long range) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-range, range);
    auto draw = [&] {
        for (;;) {
            Vec2 v{coord(rng), coord(rng)};
            if (!v.is_zero()) return v;
        }
    };
    Frame central{{1, 0}, {0, 1}};
    CheckReport rep;
    for (int i = 0; i < count; ++i) {
        Vec2 u = draw(), v = draw(), w = draw();
        ++rep.checks;
        if (!jacobi_check(u, v, w, central).is_zero())
            rep.fail("Jacobi fails for " + u.str() + ", " + v.str() + ", " + w.str());
    }
    return rep;
}

}  // namespace qtv

#include <doctest.h>

#include <random>

#include "qtv/wengine.hpp"

using namespace qtv;

namespace {
Partition P(std::vector<int> v) { return Partition::from_parts(v); }
QRat inv(const QRat& x) { return QRat(1) / x; }
}  // namespace

TEST_CASE("base weights") {
    CHECK(base_weight(1) == inv(qint(1)));
    CHECK(base_weight(2) == -inv(qint(2)));
    CHECK(base_weight(-1) == -inv(qint(1)));
    for (long b = 1; b <= 6; ++b) CHECK(base_weight(-b) == -base_weight(b));
}

TEST_CASE("vacuum expectation values") {
    CHECK(vev({}) == QRat(1));
    CHECK(vev({WSymbol(1, 0), WSymbol(-1, 0)}) == QRat(central_sign));
    CHECK(vev({WSymbol(0, 1)}) == inv(qint(1)));
    CHECK(vev({WSymbol(1, 0), WSymbol(0, 1), WSymbol(-1, 0)}) == qint(1) - inv(qint(1)));
    CHECK(vev({WSymbol(1, 0)}).is_zero());
    CHECK(vev({WSymbol(-1, 0), WSymbol(1, 0)}).is_zero());
}

TEST_CASE("both rewriting strategies agree") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> c(-2, 2), len(1, 4);
    for (int i = 0; i < 60; ++i) {
        Word w;
        long sum = 0;
        long m = len(rng);
        for (long j = 0; j < m; ++j) {
            WSymbol s(0, 1);
            do {
                s = WSymbol::raw(c(rng), c(rng));
            } while (s.is_zero());
            w.push_back(s);
            sum += s.a;
        }
        if (sum != 0) w.push_back(WSymbol::raw(-sum, 1));
        CHECK(vev(w, RewriteStrategy::leftmost) == vev(w, RewriteStrategy::rightmost));
    }
}

TEST_CASE("action on basis vectors") {
    for (long k = 1; k <= 3; ++k) {
        FockVector got = apply_w(WSymbol(-k, 0), FockVector::basis(P({2, 1})), 8);
        CHECK(got == FockVector::basis(P({2, 1}).with_part(static_cast<int>(k))));
    }
    CHECK(apply_w(WSymbol(1, 0), FockVector::vacuum(), 4).is_zero());
    FockVector f = apply_w(WSymbol(0, 1), FockVector::basis(P({1})), 4);
    CHECK(f == FockVector::basis(P({1})).scaled(inv(qint(1)) - qint(1)));
}

TEST_CASE("matrix blocks") {
    for (long b = -4; b <= 4; ++b) {
        if (b == 0) continue;
        WMatrix m = w_matrix(WSymbol(0, b), 0);
        REQUIRE(m.rows() == 1);
        CHECK(m.entries[0][0] == base_weight(b));
    }
    WMatrix k1 = w_matrix(WSymbol(1, 0), 1);
    REQUIRE(k1.rows() == 1);
    CHECK(k1.entries[0][0] == QRat(central_sign));
    WMatrix k2 = w_matrix(WSymbol(2, 0), 2);
    REQUIRE(k2.rows() == 1);
    CHECK(k2.entries[0] == std::vector<QRat>{QRat(2 * central_sign), QRat(0)});
    CHECK(w_matrix(WSymbol(3, 1), 2).entries.empty());
    CHECK(w_matrix(WSymbol(-2, 1), 1).rows() == partitions_of(3).size());
}

TEST_CASE("pairing") {
    CHECK(pairing(FockVector::basis(P({1, 1})), FockVector::basis(P({1, 1}))) == QRat(2));
    CHECK(pairing(FockVector::basis(P({2})), FockVector::basis(P({1, 1}))).is_zero());
    CHECK(pairing(FockVector::vacuum(), FockVector::vacuum()) == QRat(1));
}

TEST_CASE("adjoint with respect to the pairing") {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            for (int d = 0; d <= 4; ++d) {
                int t = d - static_cast<int>(a);
                if (t < 0 || t > 4) continue;
                for (const auto& p : partitions_of(d))
                    for (const auto& r : partitions_of(t)) {
                        FockVector x = FockVector::basis(p), y = FockVector::basis(r);
                        QRat lhs = pairing(y, apply_w(WSymbol(a, b), x, 4));
                        QRat rhs = -pairing(apply_w(WSymbol(-a, -b), y, 4), x);
                        CHECK(lhs == rhs);
                    }
            }
        }
}

TEST_CASE("propagation") {
    mpq_class x(1, 3);
    DecoratedFock got = propagate(FockVector::basis(P({2, 1})), TExponent(x));
    DecoratedFock want;
    want.add(P({2, 1}), 3 * x, QRat(1));
    CHECK(got == want);
    CHECK(propagate(FockVector::vacuum(), TExponent(x)) == DecoratedFock::plain(FockVector::vacuum()));
}

TEST_CASE("commutation relations at small scale") {
    CommutationReport r = check_commutation(2, 3);
    CHECK(r.ok());
    CHECK(r.checks > 0);
    CommutationReport flipped = check_commutation(2, 3, -central_sign, true);
    CHECK_FALSE(flipped.ok());
    CHECK(flipped.failures == flipped.opposite_failures);
}

TEST_CASE("framing change basics") {
    Frame f1{{1, 0}, {0, 1}}, f2{{1, 1}, {0, 1}};
    auto F = framing_change(f1, f2, 3);
    REQUIRE(F.size() == 4);
    CHECK(F[0][0][0] == QRat(1));
    auto G = framing_change(f2, f1, 3);
    for (int d = 0; d <= 3; ++d) {
        std::size_t n = partitions_of(d).size();
        QMatrix id = mat_mul(G[static_cast<std::size_t>(d)], F[static_cast<std::size_t>(d)], n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(id[i][j] == QRat(i == j ? 1 : 0));
    }
}

TEST_CASE("caches do not change results") {
    WMatrix a = w_matrix(WSymbol(-1, 2), 3);
    clear_engine_caches();
    WMatrix b = w_matrix(WSymbol(-1, 2), 3);
    CHECK(a.entries == b.entries);
}

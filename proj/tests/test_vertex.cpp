#include <doctest.h>

#include "qtv/checks.hpp"
#include "qtv/vertex.hpp"

using namespace qtv;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(v); }
QRat inv(const QRat& x) { return QRat(1) / x; }

const TripleState& T4() {
    static const TripleState t = build_T(4, default_vertex_frames());
    return t;
}

}  // namespace

TEST_CASE("leg operators on the vacuum") {
    VertexFrames vf = default_vertex_frames();
    TripleState vac = TripleState::vacuum(vf, 4);
    CHECK(leg_degree({-1, 0}, 0, vf) < 0);
    CHECK(leg_apply({-1, 0}, 0, vac, 4).is_zero());
    for (long k = 1; k <= 3; ++k) {
        TripleState s = leg_apply({k, 0}, 0, vac, 4);
        TripleState want = TripleState::vacuum(vf, 4);
        want.coeffs.clear();
        want.add({P({static_cast<int>(k)}), Partition(), Partition()}, 0, QRat(1));
        CHECK(s == want);
    }
    CHECK_THROWS_AS(leg_apply({0, 0}, 0, vac, 4), VertexError);
}

TEST_CASE("low-degree coefficients of the vertex state") {
    const TripleState& T = T4();
    CHECK(T.get({Partition(), Partition(), Partition()}) == QRat(1));
    for (int l = 0; l < 3; ++l) {
        PartitionTriple one{}, two{}, ones{};
        one[static_cast<std::size_t>(l)] = P({1});
        two[static_cast<std::size_t>(l)] = P({2});
        ones[static_cast<std::size_t>(l)] = P({1, 1});
        CHECK(T.get(one) == -inv(qint(1)));
        CHECK(T.get(two) == inv(QRat(2) * qint(2)));
        CHECK(T.get(ones) == inv(QRat(2) * qint(1) * qint(1)));
    }
    QRat q = QRat::q_half_power(2);
    QRat mixed = (QRat(-1) + q - q * q) / ((QRat(1) - q) * (QRat(1) - q));
    CHECK(T.get({P({1}), P({1}), Partition()}) == mixed);
    CHECK(T.get({Partition(), P({1}), P({1})}) == mixed);
    CHECK(T.get({P({1}), Partition(), P({1})}) == mixed);
}

TEST_CASE("degree zero state is the vacuum") {
    TripleState T0 = build_T(0, default_vertex_frames());
    CHECK(T0.coeffs.size() == 1);
    CHECK(T0.get({Partition(), Partition(), Partition()}) == QRat(1));
}

TEST_CASE("solver agrees with the exponential product") {
    CHECK(compare_states(solve_annihilation(4, default_vertex_frames()), T4(), 4).ok());
}

TEST_CASE("projected orderings agree and the bare orderings do not") {
    CHECK(check_orderings(4, default_vertex_frames(), true).ok());
    CHECK_FALSE(check_orderings(4, default_vertex_frames(), false).ok());
}

TEST_CASE("annihilation") {
    for (Vec2 v : generating_set()) CHECK(check_annihilation(v, T4()).ok());
    CHECK(check_annihilation({2, -1}, T4()).ok());
}

TEST_CASE("annihilation detects a perturbed coefficient") {
    TripleState bad = T4();
    bad.add({P({1}), P({1}), Partition()}, 0, QRat(1));
    CHECK_FALSE(check_symmetry(bad, generating_set()).ok());
    TripleState bad2 = T4();
    bad2.add({Partition(), Partition(), P({2, 1})}, 0, qint(2));
    CHECK_FALSE(check_symmetry(bad2, generating_set()).ok());
}

TEST_CASE("one-leg and two-leg closed forms") {
    CHECK(check_one_leg(T4(), central_sign).ok());
    CHECK_FALSE(check_one_leg(T4(), -central_sign).ok());
    CHECK(check_two_leg(T4()).ok());
    CHECK(check_two_leg_display(T4(), central_sign, -central_sign).ok());
    CHECK_FALSE(check_two_leg_display(T4(), -central_sign, central_sign).ok());
}

TEST_CASE("exponential identities with leg operators") {
    VertexFrames vf = default_vertex_frames();
    CHECK(we_identity_check(2, 1, 4, vf).ok());
    CHECK(we_identity_check(0, 2, 4, vf).ok());
    CHECK_THROWS_AS(we_identity_check(0, 0, 4, vf), VertexError);
}

TEST_CASE("exponentials must raise the degree") {
    VertexFrames vf = default_vertex_frames();
    OpSum flat{OpTerm{QRat(1), {LegFactor{0, {0, 1}, 0}}}};
    CHECK_THROWS_AS(exp_apply(flat, TripleState::vacuum(vf, 3), 3), VertexError);
}

TEST_CASE("invalid frames are rejected") {
    VertexFrames vf = default_vertex_frames();
    std::swap(vf.legs[0], vf.legs[1]);
    CHECK_THROWS_AS(build_T(2, vf), VertexError);
}

TEST_CASE("decorated state") {
    Areas zero{0, 0, 0};
    CHECK(decorate_t(T4(), zero) == T4());
    Areas x{mpq_class(1, 2), 1, mpq_class(2, 3)};
    TripleState Z = build_Z(3, default_vertex_frames(), x);
    CHECK(compare_states(Z, decorate_t(T4().truncated(3), x), 3).ok());
    CHECK(check_symmetry(Z, generating_set(), x).ok());
    const TSeries* s = Z.find({P({1}), Partition(), P({2})});
    REQUIRE(s);
    REQUIRE(s->size() == 1);
    CHECK(s->begin()->first == mpq_class(1, 2) + 2 * mpq_class(2, 3));
}

TEST_CASE("framing covariance") { CHECK(check_framing_covariance(3, default_vertex_frames()).ok()); }

TEST_CASE("gluing") {
    CHECK(check_gluing(4, mpq_class(1, 2), mpq_class(1, 3)).ok());
    TwoLegState a = product_state(1, 3);
    TwoLegState b = product_state(1, 3, Frame{{1, 1}, {0, 1}});
    CHECK_THROWS_AS(glue_legs(a, b, 1, 0), VertexError);
    CHECK_THROWS_AS(glue_legs(a, a, 2, 0), VertexError);
}

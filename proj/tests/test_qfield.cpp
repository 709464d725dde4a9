#include <doctest.h>

#include <random>

#include "qtv/qfield.hpp"

using namespace qtv;

namespace {

QRat random_qrat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3), s(-2, 2);
    auto poly = [&] {
        std::vector<Gauss> v(static_cast<std::size_t>(e(rng)) + 1);
        for (auto& g : v) g = Gauss(Rat(c(rng)), Rat(c(rng)));
        return HalfLaurent(0, v);
    };
    HalfLaurent den = poly();
    while (den.is_zero()) den = poly();
    return QRat::from_laurent(poly(), den) * QRat::q_half_power(s(rng));
}

}  // namespace

TEST_CASE("qint values") {
    QRat z = QRat::q_half_power(1);
    CHECK(qint(1) == -QRat::i() * z + QRat::i() * z.inverse());
    CHECK(qint(0).is_zero());
    CHECK(qint(-3) == -qint(3));
    for (long n = 1; n <= 20; ++n) CHECK(qint(-n) == -qint(n));
}

TEST_CASE("field arithmetic examples") {
    QRat q = QRat::q_half_power(2);
    CHECK(qint(1) * qint(1) == QRat(2) - q - q.inverse());
    QRat z = QRat::q_half_power(1);
    CHECK(qint(2) / qint(1) == z + z.inverse());
    CHECK(qrat_arith(qint(3), qint(3), ArithOp::div) == QRat(1));
    CHECK_THROWS_AS(QRat(1) / QRat(0), QRatError);
}

TEST_CASE("hbar expansion") {
    auto g = hbar_expand(qint(2), 3);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == Gauss(0));
    CHECK(g[1] == Gauss(2));
    CHECK(g[2] == Gauss(0));
    CHECK(g[3] == Gauss(Rat(-2, 6)));
    CHECK(hbar_expand(QRat(1), 5) == std::vector<Gauss>{1, 0, 0, 0, 0, 0});
    CHECK(hbar_expand(qint(1) * qint(1), 2) == std::vector<Gauss>{0, 0, 1});
}

TEST_CASE("hbar expansion of q-integers is real") {
    for (long n = -10; n <= 10; ++n)
        for (const auto& g : hbar_expand(qint(n), 8)) CHECK(g.is_real());
}

TEST_CASE("parse and render") {
    QRat a = parse_qrat("q^(-1/2)*(1 - i*q)/(1 + q)");
    QRat q = QRat::q_half_power(2);
    CHECK(a == QRat::q_half_power(-1) * (QRat(1) - QRat::i() * q) / (QRat(1) + q));
    CHECK(parse_qrat(render_qrat(a)) == a);
    CHECK(render_qrat(parse_qrat(render_qrat(qint(1)))) == render_qrat(qint(1)));
    CHECK_THROWS_AS(parse_qrat("1/0"), QRatError);
    CHECK_THROWS_AS(parse_qrat("(1 + q"), ParseError);
    CHECK_THROWS_AS(parse_qrat("q^(1/2)*"), ParseError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 150; ++i) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
        CHECK(parse_qrat(render_qrat(a)) == a);
    }
}

TEST_CASE("canonical form is independent of the construction path") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        QRat a = random_qrat(rng), b = random_qrat(rng);
        if (b.is_zero()) continue;
        QRat x = (a * b) / b;
        QRat y = a + b - b;
        CHECK(x == a);
        CHECK(y == a);
        CHECK(render_qrat(x) == render_qrat(a));
        CHECK(x.shift() == a.shift());
    }
}

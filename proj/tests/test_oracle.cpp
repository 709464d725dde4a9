#include <doctest.h>

#include <random>

#include "qtv/wedge_oracle.hpp"

using namespace qtv;

namespace {
Partition P(std::vector<int> v) { return Partition::from_parts(v); }
}  // namespace

TEST_CASE("matrix units on wedge states") {
    auto a = e_unit_apply({1, 1}, P({1}));
    REQUIRE(a);
    CHECK(a->first == 1);
    CHECK(a->second == P({1}));
    auto b = e_unit_apply({-1, 1}, P({1}));
    REQUIRE(b);
    CHECK(b->first == 1);
    CHECK(b->second == Partition());
    auto c = e_unit_apply({1, -1}, Partition());
    REQUIRE(c);
    CHECK(c->second == P({1}));
    CHECK_FALSE(e_unit_apply({1, 1}, Partition()));
    CHECK_FALSE(e_unit_apply({-1, -1}, Partition()));
}

TEST_CASE("boson to Schur basis change") {
    FockVector s1 = boson_to_schur(FockVector::basis(P({1})));
    CHECK(s1 == FockVector::basis(P({1})));
    FockVector s11 = boson_to_schur(FockVector::basis(P({1, 1})));
    FockVector want = FockVector::basis(P({2}));
    want.add(P({1, 1}), QRat(1));
    CHECK(s11 == want);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int d = 0; d <= 5; ++d) {
        FockVector x;
        for (const auto& p : partitions_of(d)) x.add(p, QRat(mpq_class(c(rng), 1 + (c(rng) + 5))));
        CHECK(schur_to_boson(boson_to_schur(x)) == x);
    }
}

TEST_CASE("calibration") {
    TwistConvention tw = calibrate(2);
    CHECK(tw.twisted);
    CHECK(tw.sign == std::array<int, 4>{1, 1, -1, 1});
    for (long a = -1; a <= 1; ++a)
        for (long b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            for (int d = 0; d <= 3; ++d) {
                if (d - a < 0) continue;
                CHECK(oracle_w_matrix(WSymbol(a, b), d, tw).entries == w_matrix(WSymbol(a, b), d).entries);
            }
        }
}

TEST_CASE("uncalibrated conventions disagree") {
    TwistConvention plain;
    plain.twisted = false;
    bool differs = false;
    for (long b = -2; b <= 2 && !differs; ++b)
        if (b != 0) differs = oracle_w_matrix(WSymbol(-1, b), 1, plain).entries != w_matrix(WSymbol(-1, b), 1).entries;
    CHECK(differs);
}

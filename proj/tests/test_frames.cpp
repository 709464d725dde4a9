#include <doctest.h>

#include <random>

#include "qtv/frames.hpp"

using namespace qtv;

TEST_CASE("wedge and coordinates") {
    CHECK(wedge({1, 0}, {0, 1}) == 1);
    CHECK(wedge({2, 5}, {2, 5}) == 0);
    CHECK(wedge({0, 1}, {-1, 0}) == 1);
    CHECK(express({1, 0}, Frame{{1, 0}, {0, 1}}) == std::pair<long, long>{1, 0});
    CHECK(express({-1, 0}, Frame{{1, 1}, {0, 1}}) == std::pair<long, long>{-1, 1});
    Frame f{{2, 1}, {1, 1}};
    CHECK(express(f.n, f) == std::pair<long, long>{0, 1});
}

TEST_CASE("degrees") {
    Frame f{{1, 1}, {0, 1}};
    for (long k = 1; k <= 4; ++k) {
        CHECK(wdegree(k * f.w, f) == -k);
        CHECK(wdegree(k * f.n, f) == 0);
    }
    CHECK(wdegree(-f.w + f.n, f) == 1);
}

TEST_CASE("frame validation") {
    VertexFrames vf = default_vertex_frames();
    CHECK(validate(vf).empty());
    VertexFrames flipped = vf;
    std::swap(flipped.legs[1], flipped.legs[2]);
    CHECK_FALSE(validate(flipped).empty());
    VertexFrames shear = vf;
    for (auto& f : shear.legs) f.w = f.w + f.n;
    CHECK(validate(shear).empty());
    VertexFrames bad = vf;
    bad.legs[0].w = {2, 0};
    CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("Jacobi identity") {
    Frame central{{1, 0}, {0, 1}};
    CHECK(jacobi_check({1, 0}, {0, 1}, {-1, -1}, central).is_zero());
    CHECK(jacobi_check({2, 1}, {-1, 1}, {0, -1}, central).is_zero());
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int i = 0; i < 100; ++i) {
        Vec2 u{c(rng), c(rng)}, v{c(rng), c(rng)}, w{c(rng), c(rng)};
        if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
        CHECK(jacobi_check(u, v, w, central).is_zero());
        CHECK(jacobi_check(u, v, w, std::nullopt).is_zero());
    }
}

TEST_CASE("bracket antisymmetry") {
    Frame central{{1, 0}, {0, 1}};
    TorusElement x = torus_bracket({1, 2}, {-1, -2}, central, -1);
    TorusElement y = torus_bracket({-1, -2}, {1, 2}, central, -1);
    x += y;
    CHECK(x.is_zero());
}

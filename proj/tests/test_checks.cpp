#include <doctest.h>

#include "qtv/checks.hpp"

using namespace qtv;

TEST_CASE("highest weights") { CHECK(check_highest_weights(6).ok()); }

TEST_CASE("q-integer expansions") { CHECK(check_hbar_qint(6).ok()); }

TEST_CASE("permutation identity table") { CHECK(check_permutation_identity(12).ok()); }

TEST_CASE("oracle at small scale") {
    TwistConvention tw = calibrate(2);
    CHECK(check_oracle_blocks(tw, 1, 3).ok());
    CHECK(check_oracle_commutation(tw, 8, 3, 1).ok());
}

TEST_CASE("framing change between frames sharing a normal") {
    auto fs = frames_sharing_normal();
    CHECK(check_framing_change(fs[0], fs[1], 3, 1).ok());
    CHECK(check_framing_change(fs[2], fs[0], 3, 1).ok());
}

TEST_CASE("propagation commutes with the operators up to a power of t") {
    CHECK(check_propagation(1, 3, mpq_class(2, 5)).ok());
}

TEST_CASE("Jacobi on seeded triples") {
    CHECK(check_jacobi(50, 3).ok());
    CHECK(check_jacobi(50, 3).checks == 50);
}

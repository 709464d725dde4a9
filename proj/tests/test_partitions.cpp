#include <doctest.h>

#include "qtv/partitions.hpp"

using namespace qtv;

namespace {
Partition P(std::vector<int> v) { return Partition::from_parts(v); }
}  // namespace

TEST_CASE("enumeration") {
    CHECK(enumerate(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate(2) == std::vector<Partition>{Partition(), P({1}), P({2}), P({1, 1})});
    CHECK(enumerate(5).size() == 19);
    std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 6; ++n)
        for (std::size_t i = 0; i < partitions_of(n).size(); ++i) CHECK(partition_index(partitions_of(n)[i]) == i);
}

TEST_CASE("automorphism factors") {
    CHECK(zfactor(Partition()) == 1);
    CHECK(zfactor(P({1, 1})) == 2);
    CHECK(zfactor(P({2})) == 2);
    CHECK(zfactor(P({3, 3, 1})) == 18);
}

TEST_CASE("characters") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(character(P({n}), mu) == 1);
    CHECK(character(P({1, 1}), P({2})) == -1);
    CHECK(character(P({2, 1}), P({1, 1, 1})) == 2);
    // Column orthogonality: sum over lambda of chi(mu) chi(nu) = z_mu delta.
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) {
                long s = 0;
                for (const auto& lam : partitions_of(n)) s += character(lam, mu) * character(lam, nu);
                CHECK(mpz_class(s) == (mu == nu ? zfactor(mu) : mpz_class(0)));
            }
}

TEST_CASE("permutation identity") {
    CHECK(permutation_identity(1) == QRat(1));
    CHECK(permutation_identity(2).is_zero());
    CHECK(permutation_identity(7).is_zero());
}

TEST_CASE("multiplicity form round trip") {
    Partition p = P({3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(1) == 2);
    CHECK(Partition::from_mult(p.mult()) == p);
    CHECK(p.with_part(2).without_part(2) == p);
}

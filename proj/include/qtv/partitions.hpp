#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "qtv/qfield.hpp"

namespace qtv {

/// Integer partition in multiplicity form: mult()[k-1] is the number of parts equal to k.
class Partition {
public:
    Partition() = default;
    static Partition from_parts(const std::vector<int>& parts);
    static Partition from_mult(std::vector<int> mult);

    const std::vector<int>& mult() const { return mult_; }
    int multiplicity(int k) const;
    int size() const { return size_; }
    int length() const;
    bool empty() const { return size_ == 0; }
    int largest() const { return static_cast<int>(mult_.size()); }
    std::vector<int> parts() const;

    Partition with_part(int k) const;
    Partition without_part(int k) const;

    std::string str() const;

    /// Size first, then larger parts first (lexicographic on descending parts).
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> mult_;
    int size_ = 0;
};

using PartitionTriple = std::array<Partition, 3>;
int total_degree(const PartitionTriple& t);
bool triple_less(const PartitionTriple& a, const PartitionTriple& b);

struct PartitionTripleLess {
    bool operator()(const PartitionTriple& a, const PartitionTriple& b) const { return triple_less(a, b); }
};

/// All partitions of sizes 0..n in enumeration order.
std::vector<Partition> enumerate(int n);
/// Partitions of exactly n in enumeration order (cached).
const std::vector<Partition>& partitions_of(int n);
/// Position of p within partitions_of(p.size()).
std::size_t partition_index(const Partition& p);

mpz_class zfactor(const Partition& p);

/// Symmetric group character chi^lam evaluated on cycle type mu.
long character(const Partition& lam, const Partition& mu);

/// Sum over partitions mu of m of (-1)^{sum (k+1) mu_k} / prod(mu_k! k^mu_k).
QRat permutation_identity(int m);

}  // namespace qtv

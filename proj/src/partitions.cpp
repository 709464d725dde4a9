#include "qtv/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qtv {

Partition Partition::from_parts(const std::vector<int>& parts) {
    std::vector<int> mult;
    for (int k : parts) {
        if (k <= 0) throw std::invalid_argument("partition parts must be positive");
        if (static_cast<int>(mult.size()) < k) mult.resize(static_cast<std::size_t>(k), 0);
        ++mult[static_cast<std::size_t>(k - 1)];
    }
    return from_mult(std::move(mult));
}

Partition Partition::from_mult(std::vector<int> mult) {
    while (!mult.empty() && mult.back() == 0) mult.pop_back();
    Partition p;
    for (std::size_t j = 0; j < mult.size(); ++j) {
        if (mult[j] < 0) throw std::invalid_argument("negative multiplicity");
        p.size_ += static_cast<int>(j + 1) * mult[j];
    }
    p.mult_ = std::move(mult);
    return p;
}

int Partition::multiplicity(int k) const {
    if (k <= 0 || k > static_cast<int>(mult_.size())) return 0;
    return mult_[static_cast<std::size_t>(k - 1)];
}

int Partition::length() const {
    int n = 0;
    for (int m : mult_) n += m;
    return n;
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    for (std::size_t j = mult_.size(); j-- > 0;)
        for (int r = 0; r < mult_[j]; ++r) out.push_back(static_cast<int>(j + 1));
    return out;
}

Partition Partition::with_part(int k) const {
    std::vector<int> m = mult_;
    if (static_cast<int>(m.size()) < k) m.resize(static_cast<std::size_t>(k), 0);
    ++m[static_cast<std::size_t>(k - 1)];
    Partition p;
    p.mult_ = std::move(m);
    p.size_ = size_ + k;
    return p;
}

Partition Partition::without_part(int k) const {
    if (multiplicity(k) == 0) throw std::invalid_argument("part not present");
    std::vector<int> m = mult_;
    --m[static_cast<std::size_t>(k - 1)];
    while (!m.empty() && m.back() == 0) m.pop_back();
    Partition p;
    p.mult_ = std::move(m);
    p.size_ = size_ - k;
    return p;
}

std::string Partition::str() const {
    std::string s = "[";
    bool first = true;
    for (int k : parts()) {
        if (!first) s += ",";
        s += std::to_string(k);
        first = false;
    }
    return s + "]";
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    std::size_t n = std::max(a.mult_.size(), b.mult_.size());
    for (std::size_t j = n; j-- > 0;) {
        int x = j < a.mult_.size() ? a.mult_[j] : 0;
        int y = j < b.mult_.size() ? b.mult_[j] : 0;
        if (x != y) return x > y;
    }
    return false;
}

int total_degree(const PartitionTriple& t) { return t[0].size() + t[1].size() + t[2].size(); }

bool triple_less(const PartitionTriple& a, const PartitionTriple& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int l = 0; l < 3; ++l)
        if (a[l].size() != b[l].size()) return a[l].size() > b[l].size();
    for (int l = 0; l < 3; ++l) {
        if (a[l] < b[l]) return true;
        if (b[l] < a[l]) return false;
    }
    return false;
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(cur));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> enumerate(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        const auto& ps = partitions_of(d);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::size_t partition_index(const Partition& p) {
    const auto& ps = partitions_of(p.size());
    auto it = std::lower_bound(ps.begin(), ps.end(), p);
    return static_cast<std::size_t>(it - ps.begin());
}

mpz_class zfactor(const Partition& p) {
    mpz_class z = 1;
    for (int k = 1; k <= p.largest(); ++k) {
        int m = p.multiplicity(k);
        for (int r = 1; r <= m; ++r) z *= k * r;
    }
    return z;
}

namespace {

// Murnaghan-Nakayama on beta sets; removes parts of mu from the largest down.
long mn(const std::vector<int>& beta, const std::vector<int>& mu_parts, std::size_t idx,
        std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (idx == mu_parts.size()) return 1;
    auto key = std::make_pair(beta, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int k = mu_parts[idx];
    long total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        int b = beta[j];
        int t = b - k;
        if (t < 0 || std::binary_search(beta.begin(), beta.end(), t)) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        std::vector<int> nb = beta;
        nb[j] = t;
        std::sort(nb.begin(), nb.end());
        long sub = mn(nb, mu_parts, idx + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
    std::vector<int> lp = lam.parts();
    int len = static_cast<int>(lp.size());
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lp[static_cast<std::size_t>(i)] + len - 1 - i);
    std::sort(beta.begin(), beta.end());
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return mn(beta, mu.parts(), 0, memo);
}

QRat permutation_identity(int m) {
    if (m <= 0) throw std::invalid_argument("permutation_identity: m must be positive");
    mpq_class sum = 0;
    for (const auto& mu : partitions_of(m)) {
        long e = 0;
        for (int k = 1; k <= mu.largest(); ++k) e += static_cast<long>(k + 1) * mu.multiplicity(k);
        mpq_class term(1);
        term /= mpq_class(zfactor(mu));
        sum += (e % 2 == 0) ? term : mpq_class(-term);
    }
    return QRat(sum);
}

}  // namespace qtv

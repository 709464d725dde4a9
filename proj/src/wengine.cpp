#include "qtv/wengine.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qtv {

WSymbol::WSymbol(long a_, long b_) : a(a_), b(b_) {
    if (a == 0 && b == 0) throw std::invalid_argument("operator symbol (0,0) is not allowed");
}

WSymbol WSymbol::raw(long a_, long b_) {
    WSymbol s;
    s.a = a_;
    s.b = b_;
    return s;
}

WSymbol WSymbol::from_vector(Vec2 v, const Frame& f) {
    auto [a, b] = express(v, f);
    return WSymbol(a, b);
}

// ---------------------------------------------------------------- vectors

QRat FockVector::get(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? QRat() : it->second;
}

void FockVector::add(const Partition& p, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

void FockVector::add_scaled(const FockVector& v, const QRat& c) {
    if (c.is_zero()) return;
    bool one = c.is_one();
    for (const auto& [p, x] : v.coeffs) add(p, one ? x : x * c);
}

FockVector FockVector::scaled(const QRat& c) const {
    FockVector out;
    out.add_scaled(*this, c);
    return out;
}

FockVector FockVector::truncated(int n) const {
    FockVector out;
    for (const auto& [p, x] : coeffs)
        if (p.size() <= n) out.coeffs.emplace(p, x);
    return out;
}

int FockVector::max_degree() const {
    int d = -1;
    for (const auto& [p, x] : coeffs) d = std::max(d, p.size());
    return d;
}

std::size_t WMatrix::cols() const { return entries.empty() ? partitions_of(source_degree).size() : entries[0].size(); }

QMatrix mat_mul(const QMatrix& x, const QMatrix& y, std::size_t inner) {
    std::size_t cols = y.empty() ? 0 : y[0].size();
    QMatrix out(x.size(), std::vector<QRat>(cols));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!y[k][j].is_zero()) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

QMatrix mat_sub(const QMatrix& x, const QMatrix& y) {
    QMatrix out = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) out[i][j] -= y[i][j];
    return out;
}

QMatrix mat_transpose(const QMatrix& x, std::size_t cols) {
    QMatrix out(cols, std::vector<QRat>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = x[i][j];
    return out;
}

// ---------------------------------------------------------------- weights

QRat base_weight(long b) {
    if (b == 0) throw std::invalid_argument("base_weight: b must be nonzero");
    QRat w = qint(b).inverse();
    return (b % 2 == 0) ? -w : w;
}

QRat extraction_norm(const Partition& p) {
    QRat z(mpq_class(zfactor(p)));
    return (central_sign < 0 && p.length() % 2 == 1) ? -z : z;
}

Word annihilator_word(const Partition& p) {
    Word w;
    for (int k : p.parts()) w.emplace_back(k, 0);
    return w;
}

Word creator_word(const Partition& p) {
    Word w;
    for (int k : p.parts()) w.emplace_back(-k, 0);
    return w;
}

// ---------------------------------------------------------------- rewriting

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<Word, QRat>& vev_cache(RewriteStrategy s) {
    static std::map<Word, QRat> left, right;
    return s == RewriteStrategy::leftmost ? left : right;
}

std::map<std::pair<WSymbol, Partition>, FockVector>& act_cache() {
    static std::map<std::pair<WSymbol, Partition>, FockVector> c;
    return c;
}

QRat vev_uncached(const Word& word, RewriteStrategy strategy) {
    if (word.empty()) return QRat(1);
    long total = 0;
    bool all_zero = true;
    for (const auto& s : word) {
        total += s.degree();
        if (s.degree() != 0) all_zero = false;
    }
    if (total != 0) return QRat();
    if (word.back().degree() < 0) return QRat();
    if (word.front().degree() > 0) return QRat();
    if (all_zero) {
        QRat r(1);
        for (const auto& s : word) r *= base_weight(s.b);
        return r;
    }
    std::size_t pos = word.size();
    if (strategy == RewriteStrategy::leftmost) {
        for (std::size_t j = 0; j + 1 < word.size(); ++j)
            if (word[j].degree() < word[j + 1].degree()) {
                pos = j;
                break;
            }
    } else {
        for (std::size_t j = word.size() - 1; j-- > 0;)
            if (word[j].degree() < word[j + 1].degree()) {
                pos = j;
                break;
            }
    }
    const WSymbol u = word[pos], v = word[pos + 1];
    Word swapped = word;
    std::swap(swapped[pos], swapped[pos + 1]);
    QRat result = vev(swapped, strategy);
    WSymbol s = u + v;
    if (s.is_zero()) {
        Word rest;
        rest.insert(rest.end(), word.begin(), word.begin() + static_cast<long>(pos));
        rest.insert(rest.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
        result += QRat(central_sign * u.a) * vev(rest, strategy);
    } else {
        long m = u.a * v.b - u.b * v.a;
        if (m != 0) {
            Word merged;
            merged.insert(merged.end(), word.begin(), word.begin() + static_cast<long>(pos));
            merged.push_back(s);
            merged.insert(merged.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
            result += qint(m) * vev(merged, strategy);
        }
    }
    return result;
}

}  // namespace

QRat vev(const Word& word, RewriteStrategy strategy) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto& c = vev_cache(strategy);
        auto it = c.find(word);
        if (it != c.end()) return it->second;
    }
    QRat r = vev_uncached(word, strategy);
    std::lock_guard<std::mutex> lock(cache_mutex());
    vev_cache(strategy).emplace(word, r);
    return r;
}

QRat extract_coefficient(WSymbol sym, const Partition& p, const Partition& src) {
    Word w = annihilator_word(p);
    w.push_back(sym);
    Word c = creator_word(src);
    w.insert(w.end(), c.begin(), c.end());
    return vev(w) / extraction_norm(p);
}

// ---------------------------------------------------------------- basis action

namespace {

// W_{(a,b)} applied to the vacuum.
FockVector act_vacuum(WSymbol s) {
    FockVector out;
    if (s.a > 0) return out;
    if (s.a == 0) {
        out.add(Partition(), base_weight(s.b));
        return out;
    }
    int d = static_cast<int>(-s.a);
    if (s.b == 0) {
        out.add(Partition::from_parts({d}), QRat(1));
        return out;
    }
    // Annihilators commute through to W_{(0,b)}, each contributing [k b]_q.
    QRat w = base_weight(s.b);
    std::vector<QRat> brackets(static_cast<std::size_t>(d + 1));
    for (int k = 1; k <= d; ++k) brackets[static_cast<std::size_t>(k)] = qint(static_cast<long>(k) * s.b);
    for (const auto& p : partitions_of(d)) {
        QRat c = w;
        for (int k = 1; k <= p.largest(); ++k)
            for (int r = 0; r < p.multiplicity(k); ++r) c *= brackets[static_cast<std::size_t>(k)];
        out.add(p, c / extraction_norm(p));
    }
    return out;
}

FockVector act_uncached(WSymbol s, const Partition& p) {
    if (p.empty()) return act_vacuum(s);
    // alpha^{+p} = W_{(-k,0)} alpha^{+p'} with k the largest part.
    int k = p.largest();
    Partition rest = p.without_part(k);
    FockVector out;
    for (const auto& [q, c] : act(s, rest).coeffs) out.add(q.with_part(k), c);
    WSymbol merged = WSymbol::raw(s.a - k, s.b);
    if (merged.is_zero()) {
        out.add(rest, QRat(central_sign * s.a));
    } else if (s.b != 0) {
        out.add_scaled(act(merged, rest), qint(s.b * k));
    }
    return out;
}

}  // namespace

const FockVector& act(WSymbol sym, const Partition& p) {
    auto key = std::make_pair(sym, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = act_cache().find(key);
        if (it != act_cache().end()) return it->second;
    }
    FockVector v = act_uncached(sym, p);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return act_cache().emplace(std::move(key), std::move(v)).first->second;
}

FockVector apply_w(WSymbol sym, const FockVector& state, int n) {
    FockVector out;
    for (const auto& [p, c] : state.coeffs) {
        if (p.size() - sym.a > n) continue;
        out.add_scaled(act(sym, p), c);
    }
    return out;
}

QRat act_scale(WSymbol sym) { return sym.b == 0 ? QRat(1) : base_weight(sym.b); }

namespace {

std::map<std::pair<WSymbol, Partition>, FockVector>& reduced_cache() {
    static std::map<std::pair<WSymbol, Partition>, FockVector> c;
    return c;
}

}  // namespace

const FockVector& act_reduced(WSymbol sym, const Partition& p) {
    auto key = std::make_pair(sym, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = reduced_cache().find(key);
        if (it != reduced_cache().end()) return it->second;
    }
    FockVector v = act(sym, p).scaled(act_scale(sym).inverse());
    std::lock_guard<std::mutex> lock(cache_mutex());
    return reduced_cache().emplace(std::move(key), std::move(v)).first->second;
}

WMatrix w_matrix(WSymbol sym, int source_degree) {
    if (source_degree < 0) throw std::invalid_argument("w_matrix: negative source degree");
    WMatrix m;
    m.sym = sym;
    m.source_degree = source_degree;
    m.target_degree = static_cast<int>(source_degree - sym.a);
    if (m.target_degree < 0) return m;
    const auto& rows = partitions_of(m.target_degree);
    const auto& cols = partitions_of(source_degree);
    m.entries.assign(rows.size(), std::vector<QRat>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [p, c] : act(sym, cols[j]).coeffs) m.entries[partition_index(p)][j] = c;
    return m;
}

QRat pairing(const FockVector& x, const FockVector& y) {
    QRat s;
    for (const auto& [p, c] : x.coeffs) {
        auto it = y.coeffs.find(p);
        if (it != y.coeffs.end()) s += c * it->second * QRat(mpq_class(zfactor(p)));
    }
    return s;
}

// ---------------------------------------------------------------- area decoration

DecoratedFock DecoratedFock::plain(const FockVector& v) {
    DecoratedFock out;
    for (const auto& [p, c] : v.coeffs) out.add(p, 0, c);
    return out;
}

void DecoratedFock::add(const Partition& p, const mpq_class& t, const QRat& c) {
    if (c.is_zero()) return;
    auto& series = coeffs[p];
    auto [it, inserted] = series.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) series.erase(it);
    }
    if (series.empty()) coeffs.erase(p);
}

DecoratedFock propagate(const DecoratedFock& x, const TExponent& area) {
    DecoratedFock out;
    for (const auto& [p, series] : x.coeffs)
        for (const auto& [t, c] : series) out.add(p, t + area.value * p.size(), c);
    return out;
}

DecoratedFock propagate(const FockVector& x, const TExponent& area) { return propagate(DecoratedFock::plain(x), area); }

DecoratedFock apply_w(WSymbol sym, const DecoratedFock& state, int n) {
    DecoratedFock out;
    for (const auto& [p, series] : state.coeffs) {
        if (p.size() - sym.a > n) continue;
        const FockVector& img = act(sym, p);
        for (const auto& [t, c] : series)
            for (const auto& [q, d] : img.coeffs) out.add(q, t, c * d);
    }
    return out;
}

DecoratedFock t_shift(const DecoratedFock& x, const mpq_class& shift) {
    DecoratedFock out;
    for (const auto& [p, series] : x.coeffs)
        for (const auto& [t, c] : series) out.add(p, t + shift, c);
    return out;
}

// ---------------------------------------------------------------- framing change

std::vector<QMatrix> framing_change(const Frame& f1, const Frame& f2, int n) {
    if (!f1.valid() || !f2.valid()) throw std::invalid_argument("framing_change: invalid frame");
    if (!(f1.n == f2.n)) throw std::invalid_argument("framing_change: frames must share the normal vector");
    std::vector<QMatrix> out;
    for (int d = 0; d <= n; ++d) {
        const auto& ps = partitions_of(d);
        QMatrix m(ps.size(), std::vector<QRat>(ps.size()));
        for (std::size_t j = 0; j < ps.size(); ++j) {
            FockVector v = FockVector::vacuum();
            for (int k : ps[j].parts()) v = apply_w(WSymbol::from_vector(-k * f1.w, f2), v, n);
            for (const auto& [p, c] : v.coeffs) m[partition_index(p)][j] = c;
        }
        out.push_back(std::move(m));
    }
    return out;
}

void clear_engine_caches() {
    std::lock_guard<std::mutex> lock(cache_mutex());
    vev_cache(RewriteStrategy::leftmost).clear();
    vev_cache(RewriteStrategy::rightmost).clear();
    act_cache().clear();
    reduced_cache().clear();
}

}  // namespace qtv

#include "qtv/vertex.hpp"

#include <algorithm>

namespace qtv {

namespace {

int next_leg(int leg) { return (leg + 1) % 3; }
int prev_leg(int leg) { return (leg + 2) % 3; }

void series_add(TSeries& s, const mpq_class& t, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = s.emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
}

std::string triple_str(const PartitionTriple& key) {
    return "(" + key[0].str() + " | " + key[1].str() + " | " + key[2].str() + ")";
}

std::string series_str(const TSeries* s) {
    if (s == nullptr) return "0";
    std::string out;
    for (const auto& [t, c] : *s) {
        if (!out.empty()) out += " + ";
        out += "(" + render_qrat(c) + ")";
        if (t != 0) out += "*t^" + t.get_str();
    }
    return out;
}

TripleState scaled(const TripleState& x, const QRat& c) {
    TripleState out = x;
    out.coeffs.clear();
    for (const auto& [key, s] : x.coeffs) out.add_series(key, s, c);
    return out;
}

void accumulate(TripleState& acc, const TripleState& x, const QRat& c) {
    for (const auto& [key, s] : x.coeffs) acc.add_series(key, s, c);
}

TripleState single(const PartitionTriple& key, const VertexFrames& frames, int bound) {
    TripleState s;
    s.frames = frames;
    s.bound = bound;
    s.add(key, 0, QRat(1));
    return s;
}

}  // namespace

// ---------------------------------------------------------------- states

TripleState TripleState::vacuum(const VertexFrames& frames, int bound) { return single({}, frames, bound); }

void TripleState::add(const PartitionTriple& key, const mpq_class& t, const QRat& c) {
    if (c.is_zero()) return;
    auto& s = coeffs[key];
    series_add(s, t, c);
    if (s.empty()) coeffs.erase(key);
}

void TripleState::add_series(const PartitionTriple& key, const TSeries& s, const QRat& c) {
    if (c.is_zero()) return;
    auto& dst = coeffs[key];
    for (const auto& [t, x] : s) series_add(dst, t, x * c);
    if (dst.empty()) coeffs.erase(key);
}

QRat TripleState::get(const PartitionTriple& key) const {
    const TSeries* s = find(key);
    if (s == nullptr) return QRat();
    auto it = s->find(0);
    return it == s->end() ? QRat() : it->second;
}

const TSeries* TripleState::find(const PartitionTriple& key) const {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? nullptr : &it->second;
}

TripleState TripleState::truncated(int n) const {
    TripleState out;
    out.frames = frames;
    out.bound = std::min(bound, n);
    for (const auto& [key, s] : coeffs)
        if (total_degree(key) <= n) out.coeffs.emplace(key, s);
    return out;
}

TripleState TripleState::projected(const std::array<bool, 3>& keep) const {
    TripleState out;
    out.frames = frames;
    out.bound = bound;
    for (const auto& [key, s] : coeffs) {
        bool ok = true;
        for (int l = 0; l < 3; ++l)
            if (!keep[static_cast<std::size_t>(l)] && !key[static_cast<std::size_t>(l)].empty()) ok = false;
        if (ok) out.coeffs.emplace(key, s);
    }
    return out;
}

std::vector<PartitionTriple> triples_up_to(int n) {
    std::vector<PartitionTriple> out;
    for (int d1 = 0; d1 <= n; ++d1)
        for (int d2 = 0; d1 + d2 <= n; ++d2)
            for (int d3 = 0; d1 + d2 + d3 <= n; ++d3)
                for (const auto& p1 : partitions_of(d1))
                    for (const auto& p2 : partitions_of(d2))
                        for (const auto& p3 : partitions_of(d3)) out.push_back({p1, p2, p3});
    std::sort(out.begin(), out.end(), PartitionTripleLess{});
    return out;
}

// ---------------------------------------------------------------- operators

long leg_degree(Vec2 v, int leg, const VertexFrames& frames) { return wdegree(v, frames.reversed(leg)); }

long term_degree(const OpTerm& term, const VertexFrames& frames) {
    long d = 0;
    for (const auto& f : term.factors) d += leg_degree(f.v, f.leg, frames);
    return d;
}

TripleState leg_apply(Vec2 v, int leg, const TripleState& state, int n, const mpq_class& t_shift) {
    if (v.is_zero()) throw VertexError("leg operator with zero vector");
    if (leg < 0 || leg > 2) throw VertexError("leg index out of range");
    WSymbol sym = WSymbol::from_vector(v, state.frames.reversed(leg));
    auto l = static_cast<std::size_t>(leg);
    TripleState out;
    out.frames = state.frames;
    out.bound = n;
    for (const auto& [key, s] : state.coeffs) {
        if (total_degree(key) - sym.a > n) continue;
        for (const auto& [q, d] : act(sym, key[l]).coeffs) {
            PartitionTriple k2 = key;
            k2[l] = q;
            auto& dst = out.coeffs[k2];
            for (const auto& [t, c] : s) series_add(dst, t + t_shift, c * d);
            if (dst.empty()) out.coeffs.erase(k2);
        }
    }
    return out;
}

TripleState apply_term(const OpTerm& term, const TripleState& state, int n) {
    // Slack for the factors still to come that lower the degree.
    std::vector<long> slack(term.factors.size() + 1, 0);
    for (std::size_t j = 0; j < term.factors.size(); ++j) {
        long d = leg_degree(term.factors[j].v, term.factors[j].leg, state.frames);
        slack[j + 1] = slack[j] + std::max(0L, -d);
    }
    TripleState cur = state;
    for (std::size_t j = term.factors.size(); j-- > 0;) {
        const auto& f = term.factors[j];
        cur = leg_apply(f.v, f.leg, cur, static_cast<int>(n + slack[j]), f.t_shift);
    }
    return scaled(cur, term.coeff);
}

TripleState apply_sum(const OpSum& op, const TripleState& state, int n) {
    TripleState out;
    out.frames = state.frames;
    out.bound = n;
    for (const auto& term : op) accumulate(out, apply_term(term, state, n), QRat(1));
    return out;
}

TripleState exp_apply(const OpSum& op, const TripleState& state, int n) {
    for (const auto& term : op)
        if (term_degree(term, state.frames) < 1)
            throw VertexError("exponent term does not raise the degree; check the frame configuration");
    TripleState result = state.truncated(n);
    TripleState power = result;
    // Each term raises the degree, so at most n + 1 powers survive.
    for (int m = 1; m <= n + 1; ++m) {
        power = scaled(apply_sum(op, power, n), QRat(1) / QRat(m));
        if (power.is_zero()) break;
        accumulate(result, power, QRat(1));
    }
    result.bound = n;
    return result;
}

// ---------------------------------------------------------------- exponentials

OpSum e_exponent(const EDescriptor& desc, const VertexFrames& frames, int n) {
    int leg = desc.leg;
    if (leg < 0 || leg > 2) throw VertexError("leg index out of range");
    int src = desc.mode == EMode::next ? next_leg(leg) : prev_leg(leg);
    int other = desc.mode == EMode::next ? prev_leg(leg) : next_leg(leg);
    Vec2 normal = frames.legs[static_cast<std::size_t>(src)].n;
    auto t_of = [&](Vec2 v, int l) -> mpq_class {
        if (!desc.areas) return 0;
        return mpq_class(leg_degree(v, l, frames)) * (*desc.areas)[static_cast<std::size_t>(l)];
    };
    OpSum out;
    for (long k = 1; k <= n; ++k) {
        Vec2 raise = desc.mode == EMode::next ? -k * normal : k * normal;
        Vec2 partner = -raise;
        // The coefficient cancels the central term of [W_partner, W_raise] on the target leg.
        long a = express(partner, frames.reversed(leg)).first;
        if (a == 0) throw VertexError("degenerate frames: exponent has no central term");
        QRat c = QRat(-1) / QRat(central_sign * a);
        LegFactor creator{leg, raise, t_of(raise, leg)};
        out.push_back({c, {LegFactor{src, partner, t_of(partner, src)}, creator}});
        out.push_back({c, {LegFactor{other, partner, t_of(partner, other)}, creator}});
    }
    return out;
}

TripleState e_exp(const EDescriptor& desc, const TripleState& state, int n) {
    return exp_apply(e_exponent(desc, state.frames, n), state, n);
}

Ordering ordering_next(const std::optional<Areas>& areas) {
    return {{0, EMode::next, areas}, {1, EMode::next, areas}, {2, EMode::next, areas}};
}

Ordering ordering_prev(const std::optional<Areas>& areas) {
    return {{0, EMode::prev, areas}, {2, EMode::prev, areas}, {1, EMode::prev, areas}};
}

TripleState apply_ordering(const Ordering& order, const VertexFrames& frames, int n, bool project_first) {
    TripleState s = TripleState::vacuum(frames, n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        s = e_exp(order[i], s, n);
        if (i == 0 && project_first) {
            std::array<bool, 3> keep{false, false, false};
            keep[static_cast<std::size_t>(order[i].leg)] = true;
            s = s.projected(keep);
        }
    }
    return s;
}

namespace {

void require_valid(const VertexFrames& frames) {
    auto problems = validate(frames);
    if (problems.empty()) return;
    std::string msg = "invalid vertex frames:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw VertexError(msg);
}

}  // namespace

TripleState build_T(int n, const VertexFrames& frames) {
    require_valid(frames);
    TripleState a = apply_ordering(ordering_next(), frames, n);
    TripleState b = apply_ordering(ordering_prev(), frames, n);
    CheckReport r = compare_states(a, b, n, "orderings");
    if (!r.ok()) throw OrderingMismatch("exponential orderings disagree: " + r.first_failure);
    return a;
}

CheckReport check_orderings(int n, const VertexFrames& frames, bool project_first) {
    require_valid(frames);
    TripleState a = apply_ordering(ordering_next(), frames, n, project_first);
    TripleState b = apply_ordering(ordering_prev(), frames, n, project_first);
    return compare_states(a, b, n, "orderings");
}

TripleState solve_annihilation(int n, const VertexFrames& frames, long range) {
    require_valid(frames);
    std::vector<Vec2> vs;
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b)
            if (a != 0 || b != 0) vs.push_back({a, b});
    TripleState T = TripleState::vacuum(frames, n);
    auto sum_apply = [&](Vec2 v, const TripleState& x, int g) {
        TripleState out;
        out.frames = frames;
        out.bound = g;
        for (int l = 0; l < 3; ++l) accumulate(out, leg_apply(v, l, x, g), QRat(1));
        return out;
    };
    for (int d = 1; d <= n; ++d) {
        std::vector<PartitionTriple> unknowns;
        for (const auto& key : triples_up_to(d))
            if (total_degree(key) == d) unknowns.push_back(key);
        std::size_t m = unknowns.size();
        // Rows: coefficients of the unknowns, then the constant.
        std::vector<std::vector<QRat>> rows;
        TripleState known = T;
        known.bound = d;
        for (Vec2 v : vs) {
            long low = 0;
            for (int l = 0; l < 3; ++l) low = std::min(low, leg_degree(v, l, frames));
            int g = static_cast<int>(d + low);
            if (g < 0) continue;
            TripleState base = sum_apply(v, known, g);
            std::vector<TripleState> cols;
            for (const auto& u : unknowns) cols.push_back(sum_apply(v, single(u, frames, d), g));
            for (const auto& key : triples_up_to(g)) {
                std::vector<QRat> row(m + 1);
                bool any = false;
                for (std::size_t i = 0; i < m; ++i) {
                    row[i] = cols[i].get(key);
                    any = any || !row[i].is_zero();
                }
                row[m] = -base.get(key);
                if (any || !row[m].is_zero()) rows.push_back(std::move(row));
            }
        }
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
            std::size_t p = r;
            while (p < rows.size() && rows[p][c].is_zero()) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[r]);
            QRat inv = rows[r][c].inverse();
            for (auto& x : rows[r]) x *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c].is_zero()) continue;
                QRat f = rows[i][c];
                for (std::size_t j = c; j <= m; ++j) rows[i][j] -= f * rows[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        if (r < m) throw VertexError("annihilation equations do not determine degree " + std::to_string(d));
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][m].is_zero()) throw VertexError("annihilation equations inconsistent at degree " + std::to_string(d));
        for (std::size_t i = 0; i < r; ++i) T.add(unknowns[pivots[i]], 0, rows[i][m]);
    }
    return T;
}

TripleState build_Z(int n, const VertexFrames& frames, const Areas& areas) {
    require_valid(frames);
    return apply_ordering(ordering_prev(areas), frames, n);
}

TripleState decorate_t(const TripleState& state, const Areas& areas) {
    TripleState out;
    out.frames = state.frames;
    out.bound = state.bound;
    for (const auto& [key, s] : state.coeffs) {
        mpq_class shift = 0;
        for (std::size_t l = 0; l < 3; ++l) shift += areas[l] * key[l].size();
        TSeries& dst = out.coeffs[key];
        for (const auto& [t, c] : s) dst.emplace(t + shift, c);
    }
    return out;
}

// ---------------------------------------------------------------- checks

void CheckReport::fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
}

namespace {

void merge(CheckReport& into, const CheckReport& r) {
    into.checks += r.checks;
    if (r.failures > 0 && into.failures == 0) into.first_failure = r.first_failure;
    into.failures += r.failures;
}

}  // namespace

CheckReport compare_states(const TripleState& x, const TripleState& y, int n, const std::string& label) {
    CheckReport rep;
    auto visit = [&](const PartitionTriple& key) {
        if (total_degree(key) > n) return;
        ++rep.checks;
        const TSeries* a = x.find(key);
        const TSeries* b = y.find(key);
        bool same = (a == nullptr || b == nullptr) ? a == b : *a == *b;
        if (!same)
            rep.fail((label.empty() ? "" : label + ": ") + triple_str(key) + " has " + series_str(a) + " vs " +
                     series_str(b));
    };
    for (const auto& [key, s] : x.coeffs) visit(key);
    for (const auto& [key, s] : y.coeffs)
        if (x.find(key) == nullptr) visit(key);
    return rep;
}

CheckReport check_annihilation(Vec2 v, const TripleState& state, const std::optional<Areas>& areas) {
    long low = 0;
    for (int l = 0; l < 3; ++l) low = std::min(low, leg_degree(v, l, state.frames));
    long guard = state.bound + low;
    if (guard < 0)
        throw TruncationError("truncation " + std::to_string(state.bound) + " too low to test v = " + v.str());
    int g = static_cast<int>(guard);
    TripleState sum;
    sum.frames = state.frames;
    sum.bound = g;
    for (int l = 0; l < 3; ++l) {
        mpq_class t = areas ? mpq_class((*areas)[static_cast<std::size_t>(l)] * leg_degree(v, l, state.frames)) : 0;
        accumulate(sum, leg_apply(v, l, state, g, t), QRat(1));
    }
    CheckReport rep;
    rep.checks = static_cast<long>(triples_up_to(g).size());
    for (const auto& [key, s] : sum.coeffs)
        rep.fail("v = " + v.str() + " leaves " + series_str(&s) + " at " + triple_str(key));
    return rep;
}

OpSum one_leg_exponent(int leg, EMode mode, int sign, int n, const VertexFrames& frames) {
    OpSum out;
    for (long k = 1; k <= n; ++k) {
        int parity = (k % 2 == 1) ? 1 : -1;  // (-1)^(k+1)
        QRat base = QRat(sign * parity) / (QRat(k) * qint(k));
        if (mode == EMode::next)
            out.push_back({base, {LegFactor{leg, -k * frames.legs[static_cast<std::size_t>(next_leg(leg))].n, 0}}});
        else
            out.push_back({-base, {LegFactor{leg, k * frames.legs[static_cast<std::size_t>(prev_leg(leg))].n, 0}}});
    }
    return out;
}

OpSum two_leg_exponent(int sign, long cross, int n, const VertexFrames& frames) {
    Vec2 normal = frames.legs[0].n;
    OpSum out;
    for (long k = 1; k <= n; ++k) {
        int parity = (k % 2 == 1) ? 1 : -1;
        QRat alpha = QRat(sign * parity) / (QRat(k) * qint(k));
        LegFactor third{2, -k * normal, 0};
        LegFactor second{1, k * normal, 0};
        out.push_back({alpha, {third}});
        out.push_back({-alpha, {second}});
        out.push_back({QRat::frac(cross, k), {second, third}});
    }
    return out;
}

namespace {

std::array<bool, 3> only(int a, int b = -1) {
    std::array<bool, 3> keep{false, false, false};
    keep[static_cast<std::size_t>(a)] = true;
    if (b >= 0) keep[static_cast<std::size_t>(b)] = true;
    return keep;
}

std::string leg_name(int l) { return "leg " + std::to_string(l + 1); }

}  // namespace

CheckReport check_one_leg(const TripleState& T, int sign) {
    int n = T.bound;
    TripleState vac = TripleState::vacuum(T.frames, n);
    CheckReport rep;
    for (int l = 0; l < 3; ++l) {
        TripleState a = exp_apply(one_leg_exponent(l, EMode::next, sign, n, T.frames), vac, n);
        TripleState b = exp_apply(one_leg_exponent(l, EMode::prev, sign, n, T.frames), vac, n);
        merge(rep, compare_states(a, b, n, leg_name(l) + " closed forms"));
        merge(rep, compare_states(a, T.projected(only(l)), n, leg_name(l) + " projection"));
    }
    return rep;
}

CheckReport check_two_leg(const TripleState& T) {
    int n = T.bound;
    CheckReport rep;
    for (int l = 0; l < 3; ++l) {
        int m = next_leg(l);
        TripleState pair = T.projected(only(l, m));
        TripleState from_l = e_exp({m, EMode::next, std::nullopt}, T.projected(only(l)), n);
        TripleState from_m = e_exp({l, EMode::prev, std::nullopt}, T.projected(only(m)), n);
        std::string name = "legs " + std::to_string(l + 1) + "," + std::to_string(m + 1);
        merge(rep, compare_states(from_l, pair, n, name + " from " + leg_name(l)));
        merge(rep, compare_states(from_m, pair, n, name + " from " + leg_name(m)));
    }
    return rep;
}

CheckReport check_two_leg_display(const TripleState& T, int sign, long cross) {
    int n = T.bound;
    TripleState vac = TripleState::vacuum(T.frames, n);
    TripleState f = exp_apply(two_leg_exponent(sign, cross, n, T.frames), vac, n);
    return compare_states(f, T.projected(only(1, 2)), n, "legs 2,3 display");
}

CheckReport we_identity_check(int leg, long k, int n, const VertexFrames& frames) {
    if (k < 1) throw VertexError("identity check needs k >= 1");
    CheckReport rep;
    for (EMode mode : {EMode::next, EMode::prev}) {
        int src = mode == EMode::next ? next_leg(leg) : prev_leg(leg);
        Vec2 normal = frames.legs[static_cast<std::size_t>(src)].n;
        // The lowering partner of the k-th creator on the target leg.
        Vec2 u = mode == EMode::next ? k * normal : -k * normal;
        int o1 = next_leg(leg), o2 = prev_leg(leg);
        long slack = 0;
        slack = std::max(slack, -leg_degree(u, leg, frames));
        slack = std::max(slack, -leg_degree(u, o1, frames));
        slack = std::max(slack, -leg_degree(u, o2, frames));
        int wide = static_cast<int>(n + slack);
        EDescriptor desc{leg, mode, std::nullopt};
        std::string name = std::string(mode == EMode::next ? "next" : "prev") + " " + leg_name(leg) +
                           " k=" + std::to_string(k);
        for (const auto& key : triples_up_to(n)) {
            TripleState x = single(key, frames, wide);
            TripleState ex = e_exp(desc, x, wide);
            TripleState lhs = leg_apply(u, leg, ex, n);
            accumulate(lhs, e_exp(desc, leg_apply(u, leg, x, wide), n), QRat(-1));
            TripleState rhs = leg_apply(u, o1, ex, n);
            accumulate(rhs, leg_apply(u, o2, ex, n), QRat(1));
            rhs = scaled(rhs, QRat(-1));
            merge(rep, compare_states(lhs, rhs, n, name + " on " + triple_str(key)));
        }
    }
    return rep;
}

VertexFrames sheared(const VertexFrames& frames) {
    VertexFrames out = frames;
    for (auto& f : out.legs) f.w = f.w + f.n;
    return out;
}

CheckReport check_framing_covariance(int n, const VertexFrames& frames) {
    VertexFrames other = sheared(frames);
    TripleState T = build_T(n, frames);
    TripleState S = build_T(n, other);
    std::array<std::vector<QMatrix>, 3> F;
    for (int l = 0; l < 3; ++l)
        F[static_cast<std::size_t>(l)] = framing_change(frames.reversed(l), other.reversed(l), n);
    auto column = [&](int l, const Partition& p) {
        std::vector<std::pair<Partition, QRat>> out;
        const QMatrix& m = F[static_cast<std::size_t>(l)][static_cast<std::size_t>(p.size())];
        std::size_t j = partition_index(p);
        const auto& rows = partitions_of(p.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!m[i][j].is_zero()) out.emplace_back(rows[i], m[i][j]);
        return out;
    };
    TripleState mapped;
    mapped.frames = other;
    mapped.bound = n;
    for (const auto& [key, s] : T.coeffs)
        for (const auto& [p1, c1] : column(0, key[0]))
            for (const auto& [p2, c2] : column(1, key[1]))
                for (const auto& [p3, c3] : column(2, key[2])) mapped.add_series({p1, p2, p3}, s, c1 * c2 * c3);
    return compare_states(mapped, S, n, "sheared frames");
}

// ---------------------------------------------------------------- two-leg states

void TwoLegState::add(const Partition& p, const Partition& q, const mpq_class& t, const QRat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(p, q);
    auto& s = coeffs[key];
    series_add(s, t, c);
    if (s.empty()) coeffs.erase(key);
}

TwoLegState product_state(const mpq_class& x, int n, const Frame& f) {
    TwoLegState out;
    out.frames = {f, f.reversed()};
    out.bound = n;
    for (int d = 0; d <= n; ++d)
        for (const auto& p : partitions_of(d)) out.add(p, p, x * d, QRat(mpq_class(1, zfactor(p))));
    return out;
}

TwoLegState glue_legs(const TwoLegState& a, const TwoLegState& b, int legA, int legB) {
    if (legA < 0 || legA > 1 || legB < 0 || legB > 1) throw VertexError("two-leg index out of range");
    if (!(a.frames[static_cast<std::size_t>(legA)] == b.frames[static_cast<std::size_t>(legB)].reversed()))
        throw VertexError("glued legs do not carry opposite frames");
    TwoLegState out;
    out.frames = {a.frames[static_cast<std::size_t>(1 - legA)], b.frames[static_cast<std::size_t>(1 - legB)]};
    out.bound = std::min(a.bound, b.bound);
    std::multimap<Partition, std::pair<const Partition*, const TSeries*>> right;
    for (const auto& [key, s] : b.coeffs) {
        const Partition& q = legB == 0 ? key.first : key.second;
        const Partition& r = legB == 0 ? key.second : key.first;
        right.emplace(q, std::make_pair(&r, &s));
    }
    for (const auto& [key, s] : a.coeffs) {
        const Partition& q = legA == 0 ? key.first : key.second;
        const Partition& p = legA == 0 ? key.second : key.first;
        if (q.size() > out.bound || p.size() > out.bound) continue;
        QRat weight(mpq_class(zfactor(q)));
        auto [lo, hi] = right.equal_range(q);
        for (auto it = lo; it != hi; ++it) {
            const auto& [r, sb] = it->second;
            if (r->size() > out.bound) continue;
            for (const auto& [t1, c1] : s)
                for (const auto& [t2, c2] : *sb) out.add(p, *r, t1 + t2, c1 * c2 * weight);
        }
    }
    return out;
}

}  // namespace qtv

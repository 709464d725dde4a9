// Acceptance suite: one PASS/FAIL line per criterion, followed by indented notes.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qtv/checks.hpp"

using namespace qtv;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
};

std::string describe(const CheckReport& r) {
    std::string s = std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures";
    if (!r.ok()) s += "; first: " + r.first_failure;
    return s;
}

std::string describe(const CommutationReport& r) {
    std::string s = std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures (" +
                    std::to_string(r.opposite_failures) + " on opposite pairs)";
    if (!r.ok()) s += "; first: " + r.first_failure;
    return s;
}

void merge(CheckReport& into, const CheckReport& r) {
    into.checks += r.checks;
    if (r.failures > 0 && into.failures == 0) into.first_failure = r.first_failure;
    into.failures += r.failures;
}

Outcome from(const CheckReport& r) { return {r.ok(), describe(r), {}}; }

const TripleState& vertex_state(int n) {
    static std::map<int, TripleState> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_T(n, default_vertex_frames())).first;
    return it->second;
}

Outcome commutation() {
    // Central term as written: +a_u for u + v = 0.
    CommutationReport literal = check_commutation(3, 6, 1);
    Outcome o{literal.ok(), describe(literal), {}};
    CommutationReport ours = check_commutation(3, 6, central_sign, true);
    o.notes.push_back("non-central pairs: " + std::to_string(literal.failures - literal.opposite_failures) +
                      " failures");
    o.notes.push_back("opposite pairs with central term " + std::to_string(central_sign) + " * a_u: " +
                      describe(ours));
    return o;
}

Outcome highest_weights() { return from(check_highest_weights(6)); }

Outcome symmetry() { return from(check_symmetry(vertex_state(5), generating_set())); }

Outcome orderings() {
    CheckReport literal = check_orderings(6, default_vertex_frames(), false);
    Outcome o{literal.ok(), "bare orderings: " + describe(literal), {}};
    o.notes.push_back("orderings with the first factor projected to its leg: " +
                      describe(check_orderings(6, default_vertex_frames(), true)));
    o.notes.push_back("projected product against the direct solution of the annihilation equations (N = 5): " +
                      describe(compare_states(solve_annihilation(5, default_vertex_frames()), vertex_state(5), 5)));
    return o;
}

Outcome one_leg() {
    CheckReport literal = check_one_leg(vertex_state(8), 1);
    Outcome o{literal.ok(), "coefficients as written: " + describe(literal), {}};
    o.notes.push_back("overall sign " + std::to_string(central_sign) + ": " +
                      describe(check_one_leg(vertex_state(8), central_sign)));
    return o;
}

Outcome two_leg() {
    const TripleState& T = vertex_state(6);
    CheckReport relations = check_two_leg(T);
    CheckReport display = check_two_leg_display(T, 1, -1);
    CheckReport all = relations;
    merge(all, display);
    Outcome o{all.ok(), "relations: " + describe(relations) + "; display as written: " + describe(display), {}};
    o.notes.push_back("display with every sign reversed: " +
                      describe(check_two_leg_display(T, central_sign, -central_sign)));
    return o;
}

Outcome oracle() {
    TwistConvention tw = calibrate(2);
    CheckReport r = check_oracle_blocks(tw, 2, 5);
    CheckReport c = check_oracle_commutation(tw, 20, 5, 12345);
    Outcome o{r.ok() && c.ok(), "blocks: " + describe(r) + "; oracle commutation: " + describe(c), {}};
    o.notes.push_back("calibrated " + tw.describe());
    return o;
}

Outcome framing() {
    CheckReport r;
    auto fs = frames_sharing_normal();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (i != j) merge(r, check_framing_change(fs[i], fs[j], 6, 2));
    return from(r);
}

Outcome hbar() { return from(check_hbar_qint(6)); }

Outcome gluing() {
    CheckReport g = check_gluing(6, mpq_class(1, 2), mpq_class(1, 3));
    CheckReport p = check_propagation(2, 6, mpq_class(1, 2));
    return {g.ok() && p.ok(), "gluing: " + describe(g) + "; propagation: " + describe(p), {}};
}

Outcome identity() { return from(check_permutation_identity(12)); }

Outcome jacobi() { return from(check_jacobi(100, 12345)); }

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"C1 commutation suite |a|,|b|<=3, degrees<=6", commutation},
        {"C2 highest weights k<=6", highest_weights},
        {"C3 vertex symmetry N=5", symmetry},
        {"C4 product orderings agree N=6", orderings},
        {"C5 one-leg closed forms N=8", one_leg},
        {"C6 two-leg relations and display N=6", two_leg},
        {"C7 oracle equivalence", oracle},
        {"C8 framing change", framing},
        {"C9 hbar expansion of q-integers", hbar},
        {"C10 gluing and propagation", gluing},
        {"C11 permutation identity m<=12", identity},
        {"C12 Jacobi on 100 seeded triples", jacobi},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what(), {}};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << o.summary << "] (" << std::fixed
                  << std::setprecision(1) << secs << " s)\n";
        for (const auto& n : o.notes) std::cout << "    note: " << n << "\n";
        std::cout.flush();
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

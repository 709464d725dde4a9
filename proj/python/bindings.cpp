#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qtv/checks.hpp"
#include "qtv/cli.hpp"

namespace py = pybind11;
using namespace qtv;

namespace {

py::dict report(const CheckReport& r) {
    py::dict d;
    d["ok"] = r.ok();
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["first_failure"] = r.first_failure;
    return d;
}

std::vector<int> parts(const Partition& p) { return p.parts(); }

py::dict state_dict(const TripleState& s) {
    py::dict d;
    for (const auto& [key, series] : s.coeffs)
        for (const auto& [t, c] : series) {
            py::tuple k = py::make_tuple(py::tuple(py::cast(parts(key[0]))), py::tuple(py::cast(parts(key[1]))),
                                         py::tuple(py::cast(parts(key[2]))), t.get_str());
            d[k] = render_qrat(c);
        }
    return d;
}

VertexFrames frames_or_default(const std::optional<std::vector<std::pair<std::pair<long, long>, std::pair<long, long>>>>& f) {
    if (!f) return default_vertex_frames();
    if (f->size() != 3) throw std::invalid_argument("expected three (w, n) pairs");
    VertexFrames vf;
    for (std::size_t l = 0; l < 3; ++l) {
        const auto& [w, n] = (*f)[l];
        vf.legs[l] = Frame{{w.first, w.second}, {n.first, n.second}};
    }
    auto problems = validate(vf);
    if (!problems.empty()) throw std::invalid_argument(problems.front());
    return vf;
}

}  // namespace

PYBIND11_MODULE(_qtv, m) {
    m.doc() = "Exact quantum torus operators and the vertex state";
    m.attr("central_sign") = central_sign;
    m.attr("max_degree") = kMaxDegree;

    py::register_exception<QRatError>(m, "QRatError", PyExc_ValueError);
    py::register_exception<VertexError>(m, "VertexError", PyExc_RuntimeError);

    m.def("qint", [](long n) { return render_qrat(qint(n)); }, "The q-integer [n]_q as a canonical string.");
    m.def("normalize", [](const std::string& s) { return render_qrat(parse_qrat(s)); },
          "Parses an expression and returns its canonical form.");
    m.def(
        "arith",
        [](const std::string& a, const std::string& b, char op) {
            ArithOp o = op == '+' ? ArithOp::add : op == '-' ? ArithOp::sub : op == '*' ? ArithOp::mul : ArithOp::div;
            if (std::string("+-*/").find(op) == std::string::npos) throw std::invalid_argument("op must be + - * /");
            return render_qrat(qrat_arith(parse_qrat(a), parse_qrat(b), o));
        },
        py::arg("a"), py::arg("b"), py::arg("op"));
    m.def(
        "hbar_expand",
        [](const std::string& s, int order) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& g : hbar_expand(parse_qrat(s), order)) out.emplace_back(g.re.str(), g.im.str());
            return out;
        },
        py::arg("expr"), py::arg("order"), "Coefficients (re, im) of hbar^0..hbar^order as strings.");

    m.def("partitions", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions_of(n)) out.push_back(p.parts());
        return out;
    });
    m.def("permutation_identity", [](int k) { return render_qrat(permutation_identity(k)); });

    m.def(
        "w_matrix",
        [](long a, long b, int degree) {
            std::vector<std::vector<std::string>> out;
            for (const auto& row : w_matrix(WSymbol(a, b), degree).entries) {
                out.emplace_back();
                for (const auto& x : row) out.back().push_back(render_qrat(x));
            }
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("degree"));
    m.def("vev", [](const std::vector<std::pair<long, long>>& word) {
        Word w;
        for (auto [a, b] : word) w.emplace_back(a, b);
        return render_qrat(vev(w));
    });

    m.def(
        "vertex_state",
        [](int n, std::optional<std::vector<std::string>> areas,
           std::optional<std::vector<std::pair<std::pair<long, long>, std::pair<long, long>>>> frames) {
            if (n < 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
            TripleState T = build_T(n, frames_or_default(frames));
            if (areas) {
                if (areas->size() != 3) throw std::invalid_argument("expected three areas");
                Areas x{mpq_class((*areas)[0]), mpq_class((*areas)[1]), mpq_class((*areas)[2])};
                T = decorate_t(T, x);
            }
            return state_dict(T);
        },
        py::arg("degree"), py::arg("areas") = py::none(), py::arg("frames") = py::none(),
        "Map (leg1, leg2, leg3, t exponent) -> coefficient string.");

    m.def("check_symmetry", [](int n) { return report(check_symmetry(build_T(n, default_vertex_frames()), generating_set())); });
    m.def("check_commutation", [](long range, int n) {
        CommutationReport c = check_commutation(range, n);
        CheckReport r;
        r.checks = c.checks;
        r.failures = c.failures;
        r.first_failure = c.first_failure;
        return report(r);
    });
    m.def("check_jacobi", [](int count, std::uint64_t seed) { return report(check_jacobi(count, seed)); });
    m.def("calibrate", [](int n) { return calibrate(n).describe(); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> all{"qtv"};
            all.insert(all.end(), args.begin(), args.end());
            std::vector<const char*> argv;
            for (const auto& a : all) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs the command line in-process; returns (exit code, stdout, stderr).");
}

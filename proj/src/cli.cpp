#include "qtv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qtv/checks.hpp"
#include "qtv/json_io.hpp"
#include "qtv/wedge_oracle.hpp"

namespace qtv {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int degree = 4;
    VertexFrames frames = default_vertex_frames();
    bool default_frames = true;
    std::optional<Areas> areas;
    std::uint64_t seed = 12345;
    std::string format = "json";
    int hbar_order = 3;
    std::string output;
    std::optional<int> leg;
    std::optional<Vec2> v;
};

// Raw flag values; empty means "not given".
struct Flags {
    std::string config;
    std::optional<int> degree;
    std::string frames;
    std::string areas;
    std::optional<std::uint64_t> seed;
    std::string format;
    std::optional<int> hbar_order;
    std::string output;
    std::optional<int> leg;
    std::string v;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long x = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw UsageError("invalid integer for " + what + ": '" + s + "'");
    }
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw UsageError("invalid rational '" + s + "'");
    q.canonicalize();
    return q;
}

Vec2 parse_vec(const std::string& s, const std::string& what) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError(what + " must be given as a,b");
    return {parse_long(parts[0], what), parse_long(parts[1], what)};
}

Areas parse_areas(const std::vector<std::string>& parts) {
    if (parts.size() != 3) throw UsageError("areas must be three rationals x1,x2,x3");
    Areas a;
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = parse_rational(parts[i]);
        if (a[i] < 0) throw UsageError("areas must be nonnegative");
    }
    return a;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

void set_frames(RunConfig& cfg, const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "default") {
            cfg.frames = default_vertex_frames();
            cfg.default_frames = true;
            return;
        }
        cfg.frames = frames_from_json(read_json_file(s));
    } else {
        cfg.frames = frames_from_json(j);
    }
    cfg.default_frames = false;
}

RunConfig resolve(const Flags& f) {
    RunConfig cfg;
    if (!f.config.empty()) {
        json j = read_json_file(f.config);
        if (!j.is_object()) throw UsageError("config must be a JSON object");
        try {
            if (j.contains("degree")) cfg.degree = j["degree"].get<int>();
            if (j.contains("frames")) set_frames(cfg, j["frames"]);
            if (j.contains("areas")) {
                std::vector<std::string> parts;
                for (const auto& x : j["areas"]) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
                cfg.areas = parse_areas(parts);
            }
            if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
            if (j.contains("format")) cfg.format = j["format"].get<std::string>();
            if (j.contains("hbar_order")) cfg.hbar_order = j["hbar_order"].get<int>();
        } catch (const json::type_error& e) {
            throw UsageError(std::string("bad config value: ") + e.what());
        }
    }
    if (f.degree) cfg.degree = *f.degree;
    if (!f.frames.empty()) set_frames(cfg, json(f.frames));
    if (!f.areas.empty()) cfg.areas = parse_areas(split(f.areas, ','));
    if (f.seed) cfg.seed = *f.seed;
    if (!f.format.empty()) cfg.format = f.format;
    if (f.hbar_order) cfg.hbar_order = *f.hbar_order;
    cfg.output = f.output;
    cfg.leg = f.leg;
    if (!f.v.empty()) cfg.v = parse_vec(f.v, "--v");

    if (cfg.degree < 0 || cfg.degree > kMaxDegree)
        throw UsageError("degree must lie in 0.." + std::to_string(kMaxDegree));
    if (cfg.format != "json" && cfg.format != "text") throw UsageError("format must be json or text");
    if (cfg.hbar_order < 0) throw UsageError("hbar order must be nonnegative");
    if (cfg.leg && (*cfg.leg < 1 || *cfg.leg > 3)) throw UsageError("leg must be 1, 2 or 3");
    auto problems = validate(cfg.frames);
    if (!problems.empty()) {
        std::string msg = "invalid frames:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw UsageError(msg);
    }
    return cfg;
}

json metadata(const RunConfig& cfg) {
    json m;
    m["convention_version"] = 1;
    m["central_sign"] = central_sign;
    m["twist"] = calibrate(2).describe();
    m["seed"] = cfg.seed;
    m["frames"] = cfg.default_frames ? json("default") : frames_to_json(cfg.frames);
    if (cfg.areas) {
        json a = json::array();
        for (const auto& x : *cfg.areas) a.push_back(x.get_str());
        m["areas"] = a;
    }
    return m;
}

json report_json(const std::string& name, const CheckReport& r) {
    json j;
    j["check"] = name;
    j["pass"] = r.ok();
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    if (!r.ok()) j["first_failure"] = r.first_failure;
    return j;
}

void merge(CheckReport& into, const CheckReport& r) {
    into.checks += r.checks;
    if (r.failures > 0 && into.failures == 0) into.first_failure = r.first_failure;
    into.failures += r.failures;
}

CheckReport from_commutation(const CommutationReport& c) {
    CheckReport r;
    r.checks = c.checks;
    r.failures = c.failures;
    r.first_failure = c.first_failure;
    return r;
}

CheckReport run_check(const std::string& which, const RunConfig& cfg) {
    int n = cfg.degree;
    if (which == "commutation") return from_commutation(check_commutation(3, n));
    if (which == "identity") return check_permutation_identity(12);
    if (which == "jacobi") return check_jacobi(100, cfg.seed);
    if (which == "oracle") {
        TwistConvention tw = calibrate(std::min(n, 2));
        CheckReport r = check_oracle_blocks(tw, 2, n);
        merge(r, check_oracle_commutation(tw, 20, std::min(n, 4), cfg.seed));
        return r;
    }
    if (which == "framing") {
        CheckReport r;
        auto fs = frames_sharing_normal();
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j) merge(r, check_framing_change(fs[i], fs[j], std::min(n, 6), 2));
        merge(r, check_framing_covariance(n, cfg.frames));
        return r;
    }
    if (which == "gluing") {
        mpq_class x = cfg.areas ? (*cfg.areas)[0] : mpq_class(1, 2);
        mpq_class y = cfg.areas ? (*cfg.areas)[1] : mpq_class(1, 3);
        CheckReport r = check_gluing(n, x, y);
        merge(r, check_propagation(2, n, x));
        return r;
    }
    TripleState T = build_T(n, cfg.frames);
    if (which == "symmetry") {
        CheckReport r = check_symmetry(T, generating_set());
        if (cfg.areas) merge(r, check_symmetry(decorate_t(T, *cfg.areas), generating_set(), cfg.areas));
        return r;
    }
    if (which == "oneleg") return check_one_leg(T, central_sign);
    if (which == "twoleg") {
        CheckReport r = check_two_leg(T);
        merge(r, check_two_leg_display(T, central_sign, -central_sign));
        return r;
    }
    throw UsageError("unknown check '" + which + "'");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write '" + cfg.output + "'");
    f << text;
}

std::string partition_text(const Partition& p) { return partition_to_json(p).dump(); }

std::string compute_text(const TripleState& s, bool with_t) {
    std::ostringstream os;
    os << "N = " << s.bound << "\n";
    for (const auto& [key, series] : s.coeffs)
        for (const auto& [t, c] : series) {
            os << partition_text(key[0]) << " " << partition_text(key[1]) << " " << partition_text(key[2]) << "  "
               << render_qrat(c);
            if (with_t) os << "  t^" << t.get_str();
            os << "\n";
        }
    return os.str();
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    TripleState T = build_T(cfg.degree, cfg.frames);
    bool with_t = cfg.areas.has_value();
    if (with_t) T = decorate_t(T, *cfg.areas);
    if (cfg.format == "text") {
        emit(cfg, compute_text(T, with_t), out);
    } else {
        json j = state_to_json(T, with_t);
        j["metadata"] = metadata(cfg);
        emit(cfg, j.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_check(const std::string& which, const RunConfig& cfg, std::ostream& out) {
    CheckReport r = run_check(which, cfg);
    if (cfg.format == "text") {
        std::string line = which + ": " + (r.ok() ? "pass" : "FAIL") + " (" + std::to_string(r.checks) + " checks";
        if (!r.ok()) line += ", " + std::to_string(r.failures) + " failures; first: " + r.first_failure;
        emit(cfg, line + ")\n", out);
    } else {
        json j = report_json(which, r);
        j["degree"] = cfg.degree;
        j["metadata"] = metadata(cfg);
        emit(cfg, j.dump(2) + "\n", out);
    }
    return r.ok() ? 0 : 1;
}

WSymbol symbol_from(const RunConfig& cfg) {
    if (!cfg.v) throw UsageError("--v a,b is required");
    if (cfg.v->is_zero()) throw UsageError("the symbol (0,0) is not allowed");
    if (cfg.leg) return WSymbol::from_vector(*cfg.v, cfg.frames.reversed(*cfg.leg - 1));
    return WSymbol(cfg.v->x, cfg.v->y);
}

int cmd_wmatrix(const RunConfig& cfg, std::ostream& out) {
    WSymbol s = symbol_from(cfg);
    WMatrix m = w_matrix(s, cfg.degree);
    json j = matrix_to_json(m.entries, m.target_degree, m.source_degree);
    j["symbol"] = json::array({s.a, s.b});
    j["source_degree"] = m.source_degree;
    j["target_degree"] = m.target_degree;
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "W(" << s.a << "," << s.b << ") degree " << m.source_degree << " -> " << m.target_degree << "\n";
        for (const auto& row : m.entries) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << render_qrat(row[c]);
            os << "\n";
        }
        emit(cfg, os.str(), out);
    } else {
        emit(cfg, j.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_framing_change(const RunConfig& cfg, const std::string& from, const std::string& to,
                       const std::string& normal, std::ostream& out) {
    Vec2 n = parse_vec(normal, "--normal");
    Frame f1{parse_vec(from, "--from"), n}, f2{parse_vec(to, "--to"), n};
    if (!f1.valid() || !f2.valid()) throw UsageError("frames must satisfy w ^ n = 1");
    auto F = framing_change(f1, f2, cfg.degree);
    json blocks = json::array();
    for (int d = 0; d <= cfg.degree; ++d) {
        json b = matrix_to_json(F[static_cast<std::size_t>(d)], d, d);
        b["degree"] = d;
        blocks.push_back(std::move(b));
    }
    json j;
    j["from"] = {{"w", {f1.w.x, f1.w.y}}, {"n", {n.x, n.y}}};
    j["to"] = {{"w", {f2.w.x, f2.w.y}}, {"n", {n.x, n.y}}};
    j["blocks"] = std::move(blocks);
    emit(cfg, j.dump(2) + "\n", out);
    return 0;
}

int cmd_oracle_compare(const RunConfig& cfg, std::ostream& out) {
    WSymbol s = symbol_from(cfg);
    TwistConvention tw = calibrate(2);
    WMatrix a = oracle_w_matrix(s, cfg.degree, tw);
    WMatrix b = w_matrix(s, cfg.degree);
    bool same = a.entries == b.entries;
    json j;
    j["symbol"] = json::array({s.a, s.b});
    j["source_degree"] = cfg.degree;
    j["twist"] = tw.describe();
    j["equal"] = same;
    j["oracle"] = matrix_to_json(a.entries, a.target_degree, a.source_degree);
    j["engine"] = matrix_to_json(b.entries, b.target_degree, b.source_degree);
    emit(cfg, j.dump(2) + "\n", out);
    return same ? 0 : 1;
}

int cmd_expand_hbar(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    // "[n]" is shorthand for the q-integer.
    QRat a = (text.size() > 2 && text.front() == '[' && text.back() == ']')
                 ? qint(parse_long(text.substr(1, text.size() - 2), "q-integer"))
                 : parse_qrat(text);
    auto coeffs = hbar_expand(a, cfg.hbar_order);
    if (cfg.format == "text") {
        std::ostringstream os;
        for (std::size_t k = 0; k < coeffs.size(); ++k) os << "hbar^" << k << ": " << coeffs[k].str() << "\n";
        emit(cfg, os.str(), out);
        return 0;
    }
    json arr = json::array();
    for (const auto& g : coeffs) arr.push_back({{"re", g.re.str()}, {"im", g.im.str()}});
    json j;
    j["input"] = render_qrat(a);
    j["order"] = cfg.hbar_order;
    j["coefficients"] = arr;
    emit(cfg, j.dump(2) + "\n", out);
    return 0;
}

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--config", f.config, "JSON config file; flags override its values");
    app->add_option("--degree", f.degree, "Truncation degree (0.." + std::to_string(kMaxDegree) + ")");
    app->add_option("--frames", f.frames, "Frames JSON path or 'default'");
    app->add_option("--areas", f.areas, "Leg areas x1,x2,x3 (nonnegative rationals)");
    app->add_option("--seed", f.seed, "Seed for randomized checks");
    app->add_option("--format", f.format, "json or text");
    app->add_option("--hbar-order", f.hbar_order, "Order of the hbar expansion");
    app->add_option("--output", f.output, "Write output to this path");
    app->add_option("--leg", f.leg, "Leg index 1..3");
    app->add_option("--v", f.v, "Operator vector a,b");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact quantum torus representation and vertex state calculator", "qtv"};
    app.require_subcommand(1);
    Flags flags;
    std::string which, qtext, from = "1,0", to = "1,1", normal = "0,1";

    auto* compute = app.add_subcommand("compute", "Compute the vertex state (decorated when --areas is given)");
    add_common(compute, flags);
    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("which", which, "commutation|symmetry|oneleg|twoleg|framing|oracle|jacobi|gluing|identity")
        ->required()
        ->check(CLI::IsMember(
            {"commutation", "symmetry", "oneleg", "twoleg", "framing", "oracle", "jacobi", "gluing", "identity"}));
    add_common(check, flags);
    auto* wmatrix = app.add_subcommand("wmatrix", "Matrix block of one operator");
    add_common(wmatrix, flags);
    auto* framing = app.add_subcommand("framing-change", "Framing-change matrices between frames sharing n");
    add_common(framing, flags);
    framing->add_option("--from", from, "Source w as x,y");
    framing->add_option("--to", to, "Target w as x,y");
    framing->add_option("--normal", normal, "Shared n as x,y");
    auto* oracle = app.add_subcommand("oracle-compare", "Fermionic against bosonic block for one operator");
    add_common(oracle, flags);
    auto* hbar = app.add_subcommand("expand-hbar", "Expand a q-expression in hbar");
    hbar->add_option("expr", qtext, "Expression in the QRat grammar")->required();
    add_common(hbar, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        RunConfig cfg = resolve(flags);
        if (*compute) return cmd_compute(cfg, out);
        if (*check) return cmd_check(which, cfg, out);
        if (*wmatrix) return cmd_wmatrix(cfg, out);
        if (*framing) return cmd_framing_change(cfg, from, to, normal, out);
        if (*oracle) return cmd_oracle_compare(cfg, out);
        if (*hbar) return cmd_expand_hbar(cfg, qtext, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const QRatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qtv

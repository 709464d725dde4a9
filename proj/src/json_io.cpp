#include "qtv/json_io.hpp"

namespace qtv {

namespace {

json poly_to_json(const std::vector<Gauss>& c) {
    json out = json::array();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        out.push_back({static_cast<long>(e), c[e].re.numerator().get_str(), c[e].re.denominator().get_str(),
                       c[e].im.numerator().get_str(), c[e].im.denominator().get_str()});
    }
    return out;
}

mpz_class big(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ConfigError("expected an integer");
}

HalfLaurent poly_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("polynomial must be an array of terms");
    std::map<long, Gauss> terms;
    long top = -1;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 5) throw ConfigError("polynomial term must be [e, re_n, re_d, im_n, im_d]");
        long e = t[0].get<long>();
        if (e < 0) throw ConfigError("negative exponent in polynomial");
        mpz_class rd = big(t[2]), id = big(t[4]);
        if (rd == 0 || id == 0) throw ConfigError("zero denominator in polynomial");
        terms[e] = Gauss(Rat(mpq_class(big(t[1]), rd)), Rat(mpq_class(big(t[3]), id)));
        top = std::max(top, e);
    }
    std::vector<Gauss> c(static_cast<std::size_t>(top + 1));
    for (auto& [e, g] : terms) c[static_cast<std::size_t>(e)] = g;
    return HalfLaurent(0, std::move(c));
}

Vec2 vec_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ConfigError(what + " must be a pair of integers");
    return {j[0].get<long>(), j[1].get<long>()};
}

json vec_to_json(Vec2 v) { return json::array({v.x, v.y}); }

}  // namespace

json qrat_to_json(const QRat& a) {
    json out;
    out["shift"] = a.shift();
    out["num"] = poly_to_json(a.num());
    out["den"] = poly_to_json(a.den());
    return out;
}

QRat qrat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shift") || !j.contains("num") || !j.contains("den"))
        throw ConfigError("QRat object needs shift, num and den");
    HalfLaurent num = poly_from_json(j["num"]);
    HalfLaurent den = poly_from_json(j["den"]);
    if (den.is_zero()) throw ConfigError("QRat denominator is zero");
    return QRat::from_laurent(num, den) * QRat::q_half_power(j["shift"].get<int>());
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (int k : p.parts()) out.push_back(k);
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("partition must be a list of parts");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() <= 0) throw ConfigError("partition parts must be positive integers");
        parts.push_back(x.get<int>());
    }
    return Partition::from_parts(parts);
}

json frames_to_json(const VertexFrames& vf) {
    json legs = json::array();
    for (const auto& f : vf.legs) legs.push_back({{"w", vec_to_json(f.w)}, {"n", vec_to_json(f.n)}});
    return json{{"legs", legs}};
}

VertexFrames frames_from_json(const json& j) {
    if (!j.is_object() || !j.contains("legs") || !j["legs"].is_array() || j["legs"].size() != 3)
        throw ConfigError("frames must be {\"legs\": [three {\"w\", \"n\"} objects]}");
    VertexFrames vf;
    for (std::size_t l = 0; l < 3; ++l) {
        const auto& leg = j["legs"][l];
        if (!leg.is_object() || !leg.contains("w") || !leg.contains("n"))
            throw ConfigError("leg " + std::to_string(l + 1) + " needs \"w\" and \"n\"");
        vf.legs[l] = Frame{vec_from_json(leg["w"], "w"), vec_from_json(leg["n"], "n")};
    }
    return vf;
}

json state_to_json(const TripleState& s, bool with_t) {
    json coeffs = json::array();
    for (const auto& [key, series] : s.coeffs) {
        json legs = json::array({partition_to_json(key[0]), partition_to_json(key[1]), partition_to_json(key[2])});
        for (const auto& [t, c] : series) {
            json entry;
            entry["legs"] = legs;
            entry["q"] = render_qrat(c);
            if (with_t) entry["t"] = t.get_str();
            coeffs.push_back(std::move(entry));
        }
    }
    json out;
    out["frames"] = frames_to_json(s.frames);
    out["N"] = s.bound;
    out["coefficients"] = std::move(coeffs);
    return out;
}

json matrix_to_json(const QMatrix& m, int row_degree, int col_degree) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    if (row_degree >= 0)
        for (const auto& p : partitions_of(row_degree)) rows.push_back(partition_to_json(p));
    for (const auto& p : partitions_of(col_degree)) cols.push_back(partition_to_json(p));
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(render_qrat(x));
        entries.push_back(std::move(row));
    }
    json out;
    out["rows"] = std::move(rows);
    out["cols"] = std::move(cols);
    out["entries"] = std::move(entries);
    return out;
}

}  // namespace qtv

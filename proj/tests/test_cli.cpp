#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qtv/cli.hpp"
#include "qtv/json_io.hpp"

using namespace qtv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qtv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    std::string path = std::string(P_tmpdir) + "/qtv_test_" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("compute at degree zero") {
    Result r = run({"compute", "--degree", "0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["coefficients"].size() == 1);
    CHECK(j["coefficients"][0]["q"] == "1");
    CHECK(j["metadata"]["central_sign"] == central_sign);
}

TEST_CASE("compute at degree two carries the one-leg coefficients") {
    Result r = run({"compute", "--degree", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& c : j["coefficients"])
        if (c["legs"] == json::parse("[[], [], [1]]")) {
            found = true;
            CHECK(parse_qrat(c["q"].get<std::string>()) == -(QRat(1) / qint(1)));
        }
    CHECK(found);
}

TEST_CASE("output is deterministic") {
    Result a = run({"compute", "--degree", "3", "--areas", "1/2,1,0"});
    Result b = run({"compute", "--degree", "3", "--areas", "1/2,1,0"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("invalid frames exit with code 2") {
    std::string path = temp_file("bad_frames.json",
                                 R"({"legs":[{"w":[-1,1],"n":[-1,0]},{"w":[1,0],"n":[0,1]},{"w":[0,-1],"n":[1,-1]}]})");
    Result r = run({"compute", "--frames", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("invalid frames") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("config file values are overridden by flags") {
    std::string path = temp_file("config.json", R"({"degree": 1, "format": "text"})");
    Result a = run({"compute", "--config", path});
    REQUIRE(a.code == 0);
    CHECK(a.out.rfind("N = 1", 0) == 0);
    Result b = run({"compute", "--config", path, "--degree", "2"});
    CHECK(b.out.rfind("N = 2", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("check subcommands") {
    CHECK(run({"check", "symmetry", "--degree", "4"}).code == 0);
    CHECK(run({"check", "oracle", "--degree", "4"}).code == 0);
    Result id = run({"check", "identity"});
    CHECK(id.code == 0);
    CHECK(json::parse(id.out)["checks"] == 12);
    CHECK(run({"check", "unknown"}).code == 2);
}

TEST_CASE("wmatrix") {
    Result a = run({"wmatrix", "--v", "0,1", "--degree", "0"});
    REQUIRE(a.code == 0);
    json j = json::parse(a.out);
    CHECK(parse_qrat(j["entries"][0][0].get<std::string>()) == QRat(1) / qint(1));
    Result b = run({"wmatrix", "--v", "1,0", "--degree", "1"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["entries"][0][0] == std::to_string(central_sign));
    CHECK(run({"wmatrix", "--v", "0,0"}).code == 2);
    CHECK(run({"wmatrix"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"compute", "--degree", "11"}).code == 2);
    CHECK(run({"compute", "--areas", "1,2"}).code == 2);
    CHECK(run({"compute", "--format", "xml"}).code == 2);
    CHECK(run({"expand-hbar", "(1 + q"}).code == 2);
}

TEST_CASE("hbar expansion command") {
    Result r = run({"expand-hbar", "[2]", "--hbar-order", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["coefficients"][1]["re"] == "2");
    CHECK(j["coefficients"][3]["re"] == "-1/3");
}

TEST_CASE("oracle comparison and framing change commands") {
    CHECK(run({"oracle-compare", "--v", "-1,2", "--degree", "2"}).code == 0);
    Result f = run({"framing-change", "--degree", "2", "--to", "1,-1"});
    REQUIRE(f.code == 0);
    CHECK(json::parse(f.out)["blocks"].size() == 3);
    CHECK(run({"framing-change", "--to", "2,1"}).code == 2);
}

TEST_CASE("json round trips") {
    QRat a = parse_qrat("q^(-1/2)*(1 - i*q)/(1 + q)");
    CHECK(qrat_from_json(qrat_to_json(a)) == a);
    Partition p = Partition::from_parts({3, 1, 1});
    CHECK(partition_from_json(partition_to_json(p)) == p);
    VertexFrames vf = default_vertex_frames();
    CHECK(frames_from_json(frames_to_json(vf)).legs == vf.legs);
    CHECK_THROWS_AS(frames_from_json(json::parse("{\"legs\": []}")), ConfigError);
}

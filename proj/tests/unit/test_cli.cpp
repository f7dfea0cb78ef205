#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "tnc/cli/cli.hpp"
#include "tnc/error.hpp"

using namespace tnc;
using namespace tnc::cli;

namespace {

std::string fixture_path(const std::string& name) { return std::string(TNC_FIXTURE_DIR) + "/" + name + ".json"; }

// Temporary file removed when the test ends.
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text, const std::string& tag = "doc") {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("tnc-cli-test-" + std::to_string(::getpid()) + "-" + tag + std::to_string(counter++) + ".json"))
                   .string();
        std::ofstream(path) << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

RunConfig config(const std::string& sub, const std::string& input) {
    RunConfig c;
    c.subcommand = sub;
    c.input = input;
    return c;
}

Json report(const RunResult& r) { return Json::parse(r.output); }

// s -> a (delay 1) -> d (delay 2) over GF(5), kernels 2, 3, 4: y(t) = 24 x(t-3) = 4 x(t-3).
Json chain_doc() {
    return Json::parse(R"({
      "field": {"p": 5, "m": 1},
      "nodes": ["s", "a", "d"],
      "edges": [{"tail": "s", "head": "a"}, {"tail": "a", "head": "d", "delay": 2}],
      "sources": [{"node": "s"}],
      "sinks": [{"node": "d", "demands": [[0, 0]]}],
      "leks": {
        "alpha": [{"source": 0, "process": 0, "edge": {"tail": "s", "head": "a"}, "value": [2]}],
        "beta": [{"from": {"tail": "s", "head": "a"}, "to": {"tail": "a", "head": "d"}, "value": [3]}],
        "eps": [{"from": {"tail": "a", "head": "d"}, "sink": 0, "output": 0, "value": [4]}]
      }
    })");
}

}  // namespace

TEST_CASE("bundled fixture files match the built-in documents") {
    for (const char* name : {"example1", "example2"}) {
        CAPTURE(name);
        CHECK(read_file(fixture_path(name)) == load_fixture(name));
    }
    CHECK_THROWS_WITH_AS(load_fixture("example3"), doctest::Contains("example3"), Error);
    try {
        load_fixture("nope");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownFixture);
    }
    RunConfig c = config("validate", "");
    c.fixture = "nope";
    const auto r = run(c);
    CHECK(r.exit_code == 2);
    CHECK(report(r)["error"] == "UnknownFixture");
}

TEST_CASE("feasibility of the first example reports f = D^25") {
    const auto r = run(config("feasibility", fixture_path("example1")));
    CHECK(r.exit_code == 0);
    const auto j = report(r);
    CHECK(j["f"] == "D^25");
    CHECK(j["feasible"] == true);
    CHECK(j["zero_interference"] == true);
    CHECK(r.output.find("\"f\":\"D^25\"") != std::string::npos);
    // D^25 has coefficient 1 at index 25 only
    const auto& coeffs = j["f_coeffs"];
    REQUIRE(coeffs.size() == 26);
    for (std::size_t k = 0; k < 25; ++k) CHECK(coeffs[k].empty());
    CHECK(coeffs[25] == Json::array({1}));
}

TEST_CASE("feasibility plan search") {
    auto c = config("feasibility", fixture_path("example1"));
    c.find_plan = true;
    auto j = report(run(c));
    REQUIRE(j["plan"].is_object());
    const auto n = j["plan"]["n"].get<std::size_t>();
    const auto p = j["plan"]["field"]["p"].get<std::uint64_t>();
    const auto m = j["plan"]["field"]["m"].get<std::uint64_t>();
    std::uint64_t q = 1;
    for (std::uint64_t k = 0; k < m; ++k) q *= p;
    CHECK((q - 1) % n == 0);
    CHECK(n % p != 0);

    c.max_n = 2;
    c.n_min = 2;
    c.max_ext_degree = 1;
    j = report(run(c));
    CHECK(j["plan"].is_null());
    CHECK(j.contains("plan_error"));
}

TEST_CASE("align --verify-only on the second example") {
    auto c = config("align", fixture_path("example2"));
    c.verify_only = true;
    c.trials = 20;
    const auto r = run(c);
    CHECK(r.exit_code == 0);
    const auto j = report(r);
    CHECK(j["ranks"] == Json::array({7, 7, 7}));
    CHECK(j["category"] == "full");
    CHECK(j["N"] == 7);
    CHECK(j["channel_uses"] == 9);
    CHECK(j["decode_exact"] == true);
    const auto& t = j["throughput"];
    CHECK(t[0]["throughput"] == Json::array({4, 7}));
    CHECK(t[1]["throughput"] == Json::array({3, 7}));
    CHECK(t[2]["throughput"] == Json::array({3, 7}));
}

TEST_CASE("align --verify-only fails with a degenerate kernel") {
    auto doc = read_file(fixture_path("example2"));
    // c = 0 gives M31 a zero eigenvalue
    for (auto& b : doc["leks"]["beta"])
        if (b.contains("name") && b["name"] == "c") b["value"] = Json::array();
    TempFile f(doc.dump());
    auto c = config("align", f.path);
    c.verify_only = true;
    const auto r = run(c);
    CHECK(r.exit_code == 1);
    CHECK(report(r)["feasible"] == false);
}

TEST_CASE("align search is deterministic for a seed") {
    auto c = config("align", fixture_path("example2"));
    c.seed = 11;
    c.trials = 5;
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = report(a);
    CHECK(j["seed"] == 11);
    CHECK(j["attempts"].get<std::size_t>() >= 1);
    CHECK(j["leks"].is_object());

    c.budget = 0;
    const auto none = run(c);
    CHECK(none.exit_code == 1);
    CHECK(report(none)["found"] == false);
}

TEST_CASE("found kernels verify when fed back") {
    auto c = config("align", fixture_path("example2"));
    c.seed = 5;
    c.trials = 3;
    const auto j = report(run(c));
    REQUIRE(j["feasible"] == true);
    if (j["kernel_field"] != j["field"]) return;  // kernels live in the search field only when no extension was needed
    auto doc = read_file(fixture_path("example2"));
    doc["leks"] = j["leks"];
    TempFile f(doc.dump());
    auto v = config("align", f.path);
    v.verify_only = true;
    v.trials = 3;
    const auto r = run(v);
    CHECK(r.exit_code == 0);
    CHECK(report(r)["ranks"] == j["ranks"]);
}

TEST_CASE("parse errors name line and column") {
    TempFile f("{\n  \"nodes\": [1,\n  }\n");
    const auto r = run(config("validate", f.path));
    CHECK(r.exit_code == 2);
    const auto j = report(r);
    CHECK(j["error"] == "ParseError");
    CHECK(j["message"].get<std::string>().find("line 3, column 3") != std::string::npos);

    CHECK_THROWS_AS(parse_text("[1, 2"), Error);
    const auto missing = run(config("validate", "/nonexistent/tnc.json"));
    CHECK(missing.exit_code == 2);
    CHECK(report(missing)["error"] == "InvalidArgument");
}

TEST_CASE("schema errors are collected, not just the first") {
    TempFile f(R"({"field":{"p":4,"m":1},"nodes":["a",3],"edges":[{"tail":"a"}],
                  "sources":[{"node":"a","processes":-1}],"sinks":"x","bogus":1})");
    const auto r = run(config("validate", f.path));
    CHECK(r.exit_code == 2);
    const auto j = report(r);
    CHECK(j["error"] == "SchemaError");
    const auto& v = j["violations"];
    REQUIRE(v.size() == 6);
    auto has = [&](const std::string& s) {
        for (const auto& x : v)
            if (x.get<std::string>().find(s) != std::string::npos) return true;
        return false;
    };
    CHECK(has("bogus"));
    CHECK(has("/field"));
    CHECK(has("/nodes/1"));
    CHECK(has("/edges/0"));
    CHECK(has("/sources/0/processes"));
    CHECK(has("/sinks"));
}

TEST_CASE("schema errors in kernels and inputs") {
    SUBCASE("kernel on a non-adjacent pair") {
        auto doc = chain_doc();
        doc["leks"]["beta"][0]["from"] = Json{{"tail", "a"}, {"head", "d"}};
        TempFile f(doc.dump());
        CHECK(report(run(config("transfer", f.path)))["error"] == "SchemaError");
    }
    SUBCASE("element outside the field") {
        auto doc = chain_doc();
        doc["leks"]["alpha"][0]["value"] = Json::array({7});
        TempFile f(doc.dump());
        const auto j = report(run(config("transfer", f.path)));
        CHECK(j["error"] == "SchemaError");
        CHECK(j["violations"][0].get<std::string>().find("/leks/alpha/0/value") != std::string::npos);
    }
    SUBCASE("malformed random kernels") {
        auto doc = chain_doc();
        doc["leks"] = "random:x";
        TempFile f(doc.dump());
        CHECK(report(run(config("transfer", f.path)))["error"] == "SchemaError");
    }
    SUBCASE("inputs with the wrong symbol count") {
        auto doc = chain_doc();
        doc["inputs"] = Json{{"series", Json::array({Json::array({Json::array({Json::array({1}), Json::array({2})})})})}};
        TempFile f(doc.dump());
        CHECK(report(run(config("simulate", f.path)))["error"] == "SchemaError");
    }
}

TEST_CASE("structural errors keep their own codes") {
    TempFile cyc(R"({"nodes":["s","a","b","d"],
      "edges":[{"tail":"s","head":"a"},{"tail":"a","head":"b"},{"tail":"b","head":"a"},{"tail":"b","head":"d"}],
      "sources":[{"node":"s"}],"sinks":[{"node":"d","demands":[[0,0]]}]})");
    auto r = run(config("validate", cyc.path));
    CHECK(r.exit_code == 2);
    CHECK(report(r)["error"] == "CycleDetected");

    auto doc = chain_doc();
    doc.erase("leks");
    TempFile noleks(doc.dump());
    r = run(config("transfer", noleks.path));
    CHECK(r.exit_code == 2);
    CHECK(report(r)["error"] == "InvalidArgument");

    r = run(config("feasibility", fixture_path("example2")));
    CHECK(r.exit_code == 1);  // interference between the pairs

    r = run(config("frobnicate", fixture_path("example2")));
    CHECK(r.exit_code == 2);
}

TEST_CASE("validate and mincut on the second example") {
    auto r = run(config("validate", fixture_path("example2")));
    CHECK(r.exit_code == 0);
    auto j = report(r);
    CHECK(j["valid"] == true);
    CHECK(j["nodes"] == 16);
    CHECK(j["unit_delay"] == true);

    r = run(config("mincut", fixture_path("example2")));
    CHECK(r.exit_code == 0);
    j = report(r);
    for (int i = 0; i < 3; ++i) CHECK(j["min_cut"][i][i] == 1);
}

TEST_CASE("simulate matches the hand-computed chain response") {
    auto doc = chain_doc();
    Json series = Json::array();
    const std::uint32_t xs[] = {1, 2, 3, 4, 0, 1};
    for (auto x : xs) series.push_back(Json::array({Json::array({x})}));
    doc["inputs"] = Json{{"t0", 0}, {"steps", 9}, {"series", Json::array({series})}};
    TempFile f(doc.dump());
    const auto r = run(config("simulate", f.path));
    REQUIRE(r.exit_code == 0);
    const auto out = report(r)["outputs"][0];
    REQUIRE(out.size() == 9);
    for (std::size_t t = 0; t < 9; ++t) {
        const std::uint32_t want = t >= 3 && t - 3 < 6 ? (4 * xs[t - 3]) % 5 : 0;
        CAPTURE(t);
        CHECK(out[t][0] == (want ? Json::array({want}) : Json::array()));
    }
}

TEST_CASE("transfer and the normalized dump round trip") {
    const auto dump = (std::filesystem::temp_directory_path() / ("tnc-cli-norm-" + std::to_string(::getpid()) + ".json")).string();
    auto c = config("transfer", fixture_path("example2"));
    c.dump_normalized = dump;
    const auto first = run(c);
    REQUIRE(first.exit_code == 0);
    const auto second = run(config("transfer", dump));
    REQUIRE(second.exit_code == 0);
    CHECK(report(first)["M"] == report(second)["M"]);
    CHECK(report(first)["d_max"] == report(second)["d_max"]);
    std::remove(dump.c_str());

    // the chain collapses to 24 D^3 = 4 D^3 over GF(5); normalized by D^3
    TempFile f(chain_doc().dump());
    const auto j = report(run(config("transfer", f.path)));
    CHECK(j["d_prime_min"] == 3);
    CHECK(j["d_max"] == 0);
    CHECK(j["M"][0][0] == Json::array({Json::array({4})}));
}

TEST_CASE("transform with an explicit block length extends the field") {
    TempFile f(chain_doc().dump());
    auto c = config("transform", f.path);
    c.n = 3;
    c.seed = 4;
    const auto r = run(c);
    CHECK(r.exit_code == 0);
    std::vector<Json> lines;
    std::size_t start = 0;
    while (start < r.output.size()) {
        const auto end = r.output.find('\n', start);
        lines.push_back(Json::parse(r.output.substr(start, end - start)));
        start = end + 1;
    }
    REQUIRE(lines.size() == 5);
    CHECK(lines[0]["n"] == 3);
    CHECK(lines[0]["field"]["m"] == 2);  // 3 divides 24 but not 4
    for (std::size_t t = 1; t <= 3; ++t) {
        CHECK(lines[t]["matches_prediction"] == true);
        CHECK(lines[t]["sinks_solvable"] == Json::array({true}));
    }
    CHECK(lines[4]["summary"]["all_match"] == true);
    CHECK(run(c).output == r.output);
}

TEST_CASE("command line parsing") {
    const std::string in = fixture_path("example1");
    const std::string out =
        (std::filesystem::temp_directory_path() / ("tnc-cli-out-" + std::to_string(::getpid()) + ".json")).string();
    std::vector<std::string> args = {"tnc", "feasibility", in, "--pretty", "-o", out};
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    CHECK(main_entry(static_cast<int>(argv.size()), argv.data()) == 0);
    CHECK(read_file(out)["f"] == "D^25");
    std::remove(out.c_str());

    std::vector<std::string> bad = {"tnc", "feasibility", in, "--budget", "many"};
    argv.clear();
    for (auto& a : bad) argv.push_back(a.data());
    CHECK(main_entry(static_cast<int>(argv.size()), argv.data()) == 2);
}

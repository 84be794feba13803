/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quasifs/builders.hpp"
#include "quasifs/cli.hpp"
#include "quasifs/errors.hpp"
#include "support.hpp"

using namespace quasifs;
using namespace quasifs::test;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("quasifs_test_" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

} // namespace

TEST_SUITE("bundle") {

TEST_CASE("s3 loads") {
    Bundle b = load("s3");
    CHECK(b.data.dim == 6);
    CHECK(b.data.field->conductor() == 1);
    CHECK(b.modules.size() == 3);
    REQUIRE(b.group);
    CHECK(b.group->kind == "group-algebra");
    CHECK(b.group->table.names()[1] == "(12)");
    CHECK(b.find_module("standard")->dim() == 2);
    CHECK(b.find_module("nope") == nullptr);
    CHECK(b.data.phi_inv);
}

TEST_CASE("malformed input") {
    std::string text = slurp(corpus("s3"));
    CHECK_THROWS_AS(parse_bundle(text.substr(0, text.size() / 2)), ParseError);
    try {
        parse_bundle(text.substr(0, 40));
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_bundle("[]"), ParseError);

    Json j = Json::parse(text);
    j["modules"][0]["action"].erase(0);
    CHECK_THROWS_AS(parse_bundle(j.dump()), DimensionError);

    Json k = Json::parse(text);
    k["algebra"]["unit"][0] = "1 +";
    try {
        parse_bundle(k.dump());
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("algebra.unit") != std::string::npos);
    }

    Json m = Json::parse(text);
    m["algebra"]["mult"][0][0] = 17;
    CHECK_THROWS_AS(parse_bundle(m.dump()), ParseError);

    Json n = Json::parse(text);
    n["algebra"]["dimension"] = 0;
    CHECK_THROWS_AS(parse_bundle(n.dump()), DimensionError);
    CHECK_THROWS_AS(load_bundle(data_dir() / "does_not_exist.json"), ParseError);
}

TEST_CASE("dimension limit") {
    ::setenv("QUASIFS_MAX_DIM", "4", 1);
    CHECK(max_dimension() == 4);
    CHECK_THROWS_AS(load("s3"), DimensionError);
    CHECK_NOTHROW(load("z4"));
    ::unsetenv("QUASIFS_MAX_DIM");
    CHECK(max_dimension() == 64);
}

TEST_CASE("round trip") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        std::string text = slurp(corpus(name));
        Bundle b = parse_bundle(text);
        std::string again = emit_bundle(b);
        CHECK(again == text);
        CHECK(same_bundle(b, parse_bundle(again)));
        CHECK(emit_bundle(parse_bundle(again)) == again);
    }
    Bundle a = load("z4w1"), c = load("z4w3");
    CHECK(!same_bundle(a, c));
}

TEST_CASE("derived phi inverse is not written back") {
    Json j = Json::parse(slurp(corpus("z2w1")));
    j["algebra"].erase("phi_inv");
    Bundle b = parse_bundle(j.dump());
    CHECK(!b.data.phi_inv);
    CHECK(!b.algebra->phi_inv_supplied());
    CHECK(Json::parse(emit_bundle(b))["algebra"].contains("phi_inv") == false);
}

TEST_CASE("group files") {
    GroupFile g = load_group_file(data_dir() / "groups" / "q8.group.json");
    CHECK(g.name == "Q8");
    CHECK(g.conductor == 4);
    CHECK(g.table.order() == 8);
    CHECK(g.irreps.size() == 5);
    CHECK(g.irreps[4].first == "spin");
    CHECK(g.irreps[4].second.size() == 8);
    CHECK_THROWS_AS(parse_group_file("{\"name\": \"x\"}"), ParseError);
}

TEST_CASE("cocycle files") {
    auto p = scratch("cocycle.json",
                     "{\"conductor\": 2, \"exponents\": [[[0, 0], [0, 0]], [[0, 0], [0, 1]]]}");
    CocycleTable w = load_cocycle_file(p, GroupTable::cyclic(2));
    CHECK(w.exponent(1, 1, 1) == 1);
    CHECK(w.exponents() == cyclic_cocycle(2, 1).exponents());
    auto bad = scratch("cocycle_bad.json", "{\"conductor\": 2, \"exponents\": [[[0, 0]]]}");
    CHECK_THROWS_AS(load_cocycle_file(bad, GroupTable::cyclic(2)), DimensionError);
}

TEST_CASE("json formatting") {
    Json j = Json::parse(R"({"a": [1, 2, 3], "b": {"c": [[1, "x"], [2, "y"]]}})");
    CHECK(format_json(j) == "{\n  \"a\": [1, 2, 3],\n  \"b\": {\n    \"c\": [\n      [1, \"x\"],\n      [2, \"y\"]\n    ]\n  }\n}\n");
}

}

TEST_SUITE("cli") {

TEST_CASE("validate") {
    Run ok = cli({"validate", "--strict", corpus("d4").string()});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("19/19") != std::string::npos);
    std::ifstream in(data_dir() / "broken" / "expected.json");
    Json expected = Json::parse(in);
    for (const auto& [file, axiom] : expected.items()) {
        CAPTURE(file);
        Run r = cli({"validate", "--strict", (data_dir() / "broken" / file).string()});
        CHECK(r.code == exit_axiom);
        CHECK((r.out + r.err).find("axiom failed: " + axiom.get<std::string>()) != std::string::npos);
    }
    // the pentagon is a strict-level axiom
    CHECK(cli({"validate", (data_dir() / "broken" / "bad_pentagon.bundle.json").string()}).code == exit_ok);
}

TEST_CASE("usage and parse errors") {
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"indicators"}).code == exit_usage);
    CHECK(cli({"indicators", "/nonexistent/file.json"}).code == exit_usage);
    CHECK(cli({"classify", corpus("s3").string()}).code == exit_usage);
    CHECK(cli({"classify", "--module", "nope", corpus("s3").string()}).code == exit_usage);
    auto truncated = scratch("truncated.json", slurp(corpus("z3")).substr(0, 100));
    Run r = cli({"validate", truncated.string()});
    CHECK(r.code == exit_usage);
    CHECK(!r.err.empty());
}

TEST_CASE("integral failures") {
    // Sweedler's algebra is a genuine Hopf algebra whose integrals vanish
    // under the counit
    auto sweedler = data_dir() / "nonsemisimple" / "sweedler.bundle.json";
    CHECK(cli({"validate", "--strict", sweedler.string()}).code == exit_ok);
    CHECK(cli({"integral", sweedler.string()}).code == exit_integral);
    CHECK(cli({"indicators", sweedler.string()}).code == exit_integral);

    Json j = Json::parse(slurp(corpus("z2")));
    j["algebra"]["mult"] = Json::array();
    auto p = scratch("null_mult.json", j.dump());
    // the gate catches the broken unit before the integral solver runs
    CHECK(cli({"integral", p.string()}).code == exit_axiom);
    CHECK(cli({"integral", "--level", "core", p.string()}).code == exit_axiom);
}

TEST_CASE("q8 indicators") {
    Run r = cli({"indicators", "--format", "json", corpus("q8").string()});
    REQUIRE(r.code == exit_ok);
    Json j = Json::parse(r.out);
    std::vector<std::string> nu;
    for (const auto& m : j["modules"]) nu.push_back(m["nu"].get<std::string>());
    CHECK(nu == std::vector<std::string>{"1", "1", "1", "1", "-1"});
    CHECK(cli({"indicators", "--t", "pr", corpus("q8").string()}).code == exit_ok);
}

TEST_CASE("every corpus bundle passes crosscheck") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        Run r = cli({"crosscheck", corpus(name).string()});
        CHECK(r.code == exit_ok);
        CHECK(r.out.find("crosscheck passed") != std::string::npos);
    }
}

TEST_CASE("other subcommands") {
    for (const char* cmd : {"integral", "elements", "pivotal", "indicators"}) {
        CAPTURE(cmd);
        CHECK(cli({cmd, corpus("z4w1").string()}).code == exit_ok);
        Run j = cli({cmd, "--format", "json", corpus("z4w1").string()});
        CHECK(j.code == exit_ok);
        Json parsed;
        CHECK_NOTHROW(parsed = Json::parse(j.out));
        CHECK(parsed["command"] == cmd);
    }
    Run c = cli({"classify", "--module", "standard", corpus("s3").string()});
    CHECK(c.code == exit_ok);
    CHECK(c.out.find("mu = 1") != std::string::npos);
    Run core = cli({"pivotal", "--level", "core", corpus("s3").string()});
    CHECK(core.code == exit_ok);
    CHECK(!core.err.empty());
}

TEST_CASE("gen is deterministic") {
    for (const auto& name : group_algebra_names()) {
        CAPTURE(name);
        Run a = cli({"gen", "group-algebra", "--group", (data_dir() / "groups" / (name + ".group.json")).string()});
        Run b = cli({"gen", "group-algebra", "--group", (data_dir() / "groups" / (name + ".group.json")).string()});
        CHECK(a.code == exit_ok);
        CHECK(a.out == b.out);
        CHECK(a.out == slurp(corpus(name)));
    }
    Run t = cli({"gen", "twisted-dual", "--cyclic", "4", "--class", "3"});
    CHECK(t.code == exit_ok);
    CHECK(t.out == slurp(corpus("z4w3")));
    auto w = scratch("gen_cocycle.json", "{\"conductor\": 2, \"exponents\": [[[0, 0], [0, 0]], [[0, 0], [0, 1]]]}");
    auto z2 = scratch("z2_group.json", slurp(data_dir() / "groups" / "z2.group.json"));
    Run u = cli({"gen", "twisted-dual", "--group", z2.string(), "--cocycle", w.string()});
    CHECK(u.code == exit_ok);
    Bundle from_file = parse_bundle(u.out);
    CHECK(from_file.provenance.find("gen_cocycle.json") != std::string::npos);
    from_file.provenance = load("z2w1").provenance;
    CHECK(emit_bundle(from_file) == slurp(corpus("z2w1")));
    auto bad = scratch("gen_bad.json", "{\"conductor\": 2, \"exponents\": [[[0, 1], [0, 0]], [[0, 0], [0, 1]]]}");
    Run v = cli({"gen", "twisted-dual", "--group", z2.string(), "--cocycle", bad.string()});
    CHECK(v.code == exit_usage);
}

}

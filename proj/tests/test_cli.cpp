#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include <zonalg/cli.hpp>
#include <zonalg/errors.hpp>

#include "configs.hpp"

using namespace zonalg;
using njson = nlohmann::json;

namespace {

JobSpec spec_of(std::vector<std::vector<long long>> rows) {
    JobSpec s;
    s.matrix = std::move(rows);
    return s;
}

JobSpec k3_spec() { return spec_of({{1, 0, 1}, {0, 1, -1}}); }
JobSpec k4_spec() {
    return spec_of({{1, 0, 0, 1, 1, 0}, {0, 1, 0, -1, 0, 1}, {0, 0, 1, 0, -1, -1}});
}
JobSpec mix5_spec() { return spec_of({{1, 0, 0, 1, 1}, {0, 1, 0, 2, 1}, {0, 0, 1, 1, 1}}); }
JobSpec skew2_spec() { return spec_of({{1, 1}, {0, 2}}); }
JobSpec identity2_spec() { return spec_of({{1, 0}, {0, 1}}); }

njson run_json(const std::vector<std::string>& cmd, const JobSpec& spec, int want_exit) {
    RunResult r = run(cmd, spec);
    CHECK(r.exit_code == want_exit);
    return njson::parse(r.output);
}

}  // namespace

TEST_CASE("plain rows parse into a matrix") {
    JobSpec s = parse_input("1 0 1\n0 1 -1\n");
    CHECK(s.matrix == std::vector<std::vector<long long>>{{1, 0, 1}, {0, 1, -1}});
    CHECK(!s.order);
    CHECK(!s.b0);
    CHECK(!s.points);
    CHECK(!s.graph_n);
    CHECK(s.seed == 0);
    CHECK(s.degcap == -1);

    CHECK_THROWS_AS(parse_input("1 a\n2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_input(""), ParseError);
    CHECK_THROWS_AS(parse_input("   \n\t\n"), ParseError);
    CHECK_THROWS_AS(parse_input("{bad"), ParseError);
}

TEST_CASE("json input covers every option") {
    JobSpec s = parse_input(R"({
        "matrix": [[1, 0], [0, 1]],
        "order": [1, 0],
        "b0": [[1, 2], [1, 3]],
        "points": [["1/2", "0"], ["1", "-2"]],
        "n": 3,
        "seed": 5,
        "degcap": 4
    })");
    CHECK(s.matrix == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    REQUIRE(s.order);
    CHECK(*s.order == std::vector<int>{1, 0});
    REQUIRE(s.b0);
    CHECK(*s.b0 == std::vector<std::vector<long long>>{{1, 2}, {1, 3}});
    REQUIRE(s.points);
    CHECK((*s.points)[0] == std::vector<std::string>{"1/2", "0"});
    REQUIRE(s.graph_n);
    CHECK(*s.graph_n == 3);
    CHECK(s.seed == 5);
    CHECK(s.degcap == 4);
}

TEST_CASE("render and parse invert each other") {
    JobSpec plain = k3_spec();
    CHECK(parse_input(render(plain)) == plain);

    JobSpec full = identity2_spec();
    full.order = std::vector<int>{1, 0};
    full.b0 = std::vector<std::vector<long long>>{{1, 2}, {1, 3}};
    full.points = std::vector<std::vector<std::string>>{{"1/2", "-3"}};
    full.graph_n = 2;
    full.seed = 9;
    full.degcap = 3;
    CHECK(parse_input(render(full)) == full);
}

TEST_CASE("ground_of applies the column order") {
    JobSpec s = k3_spec();
    s.order = std::vector<int>{2, 0, 1};
    GroundSet X = ground_of(s);
    CHECK(X.col(0) == IntVec{1, -1});
    CHECK(X.col(1) == IntVec{1, 0});
    CHECK(X.col(2) == IntVec{0, 1});
}

TEST_CASE("analyze reports the whole matroid layer") {
    njson out = run_json({"analyze"}, k3_spec(), 0);
    CHECK(out["status"] == "ok");
    CHECK(out["n"] == 2);
    CHECK(out["N"] == 3);
    CHECK(out["unimodular"] == true);
    CHECK(out["bases"] == 3);
    CHECK(out["independents"] == 7);
    CHECK(out["internalBases"] == 1);
    CHECK(out["facets"].size() == 3);
    for (const auto& f : out["facets"]) {
        CHECK(f["normal"].size() == 2);
        CHECK(f["mult"] == 2);
    }
    CHECK(out["hilbertCentral"] == njson::parse("[1,2]"));
    CHECK(out["hilbertExternal"] == njson::parse("[1,2,3,1]"));
    CHECK(out["hilbertInternal"] == njson::parse("[1]"));
    CHECK(out["volume"] == "3");
}

TEST_CASE("hilbert central matches the worked example") {
    njson out = run_json({"hilbert", "central"}, k4_spec(), 0);
    CHECK(out["kind"] == "central");
    CHECK(out["h"] == njson::parse("[1,3,6,6]"));
}

TEST_CASE("identical jobs produce identical bytes") {
    RunResult a = run({"analyze"}, mix5_spec());
    RunResult b = run({"analyze"}, mix5_spec());
    CHECK(a.output == b.output);
    RunResult c = run({"verify", "thm-3.8"}, k4_spec());
    RunResult d = run({"verify", "thm-3.8"}, k4_spec());
    CHECK(c.output == d.output);
}

TEST_CASE("bad jobs exit 2 with an error object") {
    for (auto cmd : std::vector<std::vector<std::string>>{
             {"frobnicate"}, {"hilbert"}, {"hilbert", "sideways"}, {"verify", "thm-9.9"}, {}}) {
        njson out = run_json(cmd, k3_spec(), 2);
        CHECK(out["status"] == "error");
        CHECK(out["message"].is_string());
    }
    njson out = run_json({"analyze"}, spec_of({{0, 1}, {0, 1}}), 2);
    CHECK(out["status"] == "error");
}

TEST_CASE("basis listings carry polynomials") {
    njson central = run_json({"basis", "central"}, k3_spec(), 0);
    CHECK(central["count"] == 3);
    CHECK(central["basis"].size() == 3);
    for (const auto& e : central["basis"]) {
        CHECK(e["set"].size() == 2);
        CHECK(e.contains("valuation"));
        CHECK(e["poly"].is_string());
    }

    njson ext = run_json({"basis", "external"}, k3_spec(), 0);
    CHECK(ext["count"] == 7);

    njson internal = run_json({"basis", "internal"}, mix5_spec(), 0);
    CHECK(internal["count"] == 3);
    bool corrected = false;
    for (const auto& e : internal["basis"]) {
        CHECK(e.contains("uncorrected"));
        if (e["poly"] != e["uncorrected"]) corrected = true;
    }
    CHECK(corrected);
}

TEST_CASE("ideal generators render by selector") {
    njson im = run_json({"ideal-gens", "i-"}, identity2_spec(), 0);
    CHECK(im["ideal"] == "i-");
    CHECK(im["count"] == 2);
    CHECK(im["generators"] == njson::parse(R"(["1","1"])"));

    njson jc = run_json({"ideal-gens", "j"}, k3_spec(), 0);
    CHECK(jc["count"] == 3);
    CHECK(jc["longSets"].size() == 3);

    njson ip = run_json({"ideal-gens", "i+"}, k3_spec(), 0);
    CHECK(ip["count"] == 3);
    for (const auto& g : ip["generators"]) CHECK(g.is_string());
}

TEST_CASE("kernel reports a graded space") {
    njson out = run_json({"kernel", "j"}, k3_spec(), 0);
    CHECK(out["ideal"] == "j");
    CHECK(out["h"] == njson::parse("[1,2]"));
    CHECK(out["dim"] == 3);
    CHECK(out["basis"].size() == 3);
}

TEST_CASE("zonotope queries") {
    njson vol = run_json({"zonotope", "volume"}, k3_spec(), 0);
    CHECK(vol["volume"] == "3");

    njson pts = run_json({"zonotope", "points"}, k3_spec(), 0);
    CHECK(pts["mode"] == "points");
    CHECK(pts["count"] == 7);
    CHECK(pts["points"].size() == 7);

    njson in = run_json({"zonotope", "interior"}, k3_spec(), 0);
    CHECK(in["count"] == 1);
    CHECK(in["points"][0] == njson::parse(R"(["1","0"])"));
}

TEST_CASE("arrangement vertex counts") {
    njson v = run_json({"arrangement", "vertices"}, k3_spec(), 0);
    CHECK(v["count"] == 3);
    CHECK(v["lambda"].size() == 3);
    CHECK(v["vertices"].size() == 3);

    njson vm = run_json({"arrangement", "v-"}, k3_spec(), 0);
    CHECK(vm["count"] == 1);

    JobSpec good = k3_spec();
    good.b0 = std::vector<std::vector<long long>>{{1, 2}, {1, 3}};
    njson vp = run_json({"arrangement", "v+"}, good, 0);
    CHECK(vp["count"] == 7);
    CHECK(vp["frameAttempts"] == 0);

    JobSpec bad = k3_spec();
    bad.b0 = std::vector<std::vector<long long>>{{1, 0}, {0, 1}};
    njson err = run_json({"arrangement", "v+"}, bad, 2);
    CHECK(err["status"] == "error");
}

TEST_CASE("least space of explicit points") {
    JobSpec s;
    s.points = std::vector<std::vector<std::string>>{{"0", "0"}, {"1", "0"}};
    njson out = run_json({"least"}, s, 0);
    CHECK(out["points"] == 2);
    CHECK(out["h"] == njson::parse("[1,1]"));
    CHECK(out["dim"] == 2);

    JobSpec empty;
    run_json({"least"}, empty, 2);
}

TEST_CASE("parking commands") {
    JobSpec s;
    s.graph_n = 2;
    njson ext = run_json({"parking", "external"}, s, 0);
    CHECK(ext["n"] == 2);
    CHECK(ext["count"] == 7);
    CHECK(ext["byDegree"] == njson::parse("[1,2,3,1]"));
    CHECK(ext["functions"].size() == 7);

    njson in = run_json({"parking", "internal"}, s, 0);
    CHECK(in["count"] == 1);
    CHECK(in["functions"][0] == njson::parse("[0,0]"));

    njson m = run_json({"parking", "match"}, s, 0);
    CHECK(m["status"] == "ok");
    CHECK(m["ok"] == true);
    CHECK(m["pairs"] == 7);

    JobSpec none;
    run_json({"parking", "external"}, none, 2);
}

TEST_CASE("verify lattice and dimension counts") {
    njson out = run_json({"verify", "prop-1.1"}, k3_spec(), 0);
    CHECK(out["status"] == "pass");
    CHECK(out["suite"] == "prop-1.1");
    CHECK(out["latticeClosed"] == 7);
    CHECK(out["latticeOpen"] == 1);
    CHECK(out["dimKerIplus"] == 7);
    CHECK(out["dimKerI"] == 3);
    CHECK(out["dimKerIminus"] == 1);
    CHECK(out["volume"] == "3");
    CHECK(out["closedCount"] == true);
    CHECK(out["centralCount"] == true);
    CHECK(out["openCount"] == true);
}

TEST_CASE("verify main suites") {
    njson c = run_json({"verify", "thm-3.8"}, k3_spec(), 0);
    CHECK(c["status"] == "pass");
    CHECK(c["dimP"] == 3);
    CHECK(c["dimensionsMatch"] == true);
    CHECK(c["dualityNonsingular"] == true);
    CHECK(c["dEqualsLeastOfVertices"] == true);
    CHECK(c["directSum"] == true);
    CHECK(c["pEqualsKernel"] == true);

    njson e = run_json({"verify", "thm-4.8"}, k3_spec(), 0);
    CHECK(e["status"] == "pass");
    CHECK(e["dimP"] == 7);

    njson i = run_json({"verify", "thm-5.9"}, mix5_spec(), 0);
    CHECK(i["status"] == "pass");
    CHECK(i["dimP"] == 3);
    CHECK(i["tildeSpanEqualsKernel"] == true);
    CHECK(i["correctionInIdeal"] == true);
    CHECK(i["splitOfInternalIdeal"] == true);
}

TEST_CASE("verify interpolation suites need unimodularity") {
    njson ok = run_json({"verify", "thm-3.9"}, k3_spec(), 0);
    CHECK(ok["status"] == "pass");
    CHECK(ok["countMatchesFamily"] == true);
    CHECK(ok["leastEqualsP"] == true);

    njson skip = run_json({"verify", "thm-3.9"}, skew2_spec(), 2);
    CHECK(skip["status"] == "inapplicable");
    CHECK(skip["unimodular"] == false);

    CHECK(run({"verify", "thm-4.9"}, k3_spec()).exit_code == 0);
    CHECK(run({"verify", "thm-5.10"}, k4_spec()).exit_code == 0);
    njson also = run_json({"verify", "thm-5.10"}, mix5_spec(), 2);
    CHECK(also["status"] == "inapplicable");
}

TEST_CASE("verify span characterizations") {
    njson a = run_json({"verify", "thm-4.10"}, k3_spec(), 0);
    CHECK(a["status"] == "pass");
    CHECK(a["spanIsKernel"] == true);

    njson b = run_json({"verify", "thm-4.11"}, k3_spec(), 0);
    CHECK(b["intersectionEqualsExternal"] == true);
}

TEST_CASE("verify span conjecture reports a verdict") {
    njson m = run_json({"verify", "conj-6.1"}, mix5_spec(), 0);
    CHECK(m["status"] == "pass");
    CHECK(m["containment"] == true);
    CHECK((m["verdict"] == "equal" || m["verdict"] == "strict-subspace"));

    njson k = run_json({"verify", "conj-6.1"}, k3_spec(), 0);
    CHECK(k["verdict"] == "equal");
    CHECK(k["equal"] == true);
}

TEST_CASE("verify lattice point counting polynomial") {
    njson out = run_json({"verify", "ehrhart"}, k4_spec(), 0);
    CHECK(out["status"] == "pass");
    CHECK(out["coefficients"] == njson::parse("[1,6,15,16]"));
    CHECK(out["dilationCounts"] == true);
    CHECK(out["reciprocityMatchesInterior"] == true);
    CHECK(out["valueAtOne"] == true);

    njson skip = run_json({"verify", "ehrhart"}, skew2_spec(), 2);
    CHECK(skip["status"] == "inapplicable");
}

TEST_CASE("text format flattens to lines") {
    RunResult r = run({"hilbert", "central"}, k3_spec(), "text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status: \"ok\"") != std::string::npos);
    CHECK(r.output.find("kind: \"central\"") != std::string::npos);
    CHECK(r.output.find('{') == std::string::npos);
}

TEST_CASE("library configs match their row forms") {
    CHECK(ground_of(k3_spec()) == cfg::k3());
    CHECK(ground_of(k4_spec()) == cfg::k4());
    CHECK(ground_of(mix5_spec()) == cfg::mix5());
    CHECK(ground_of(skew2_spec()) == cfg::skew2());
}

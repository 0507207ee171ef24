#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hyperdeg/cli.hpp"
#include "hyperdeg/double_cone.hpp"
#include "hyperdeg/state_io.hpp"
#include "support/errors.hpp"
#include "support/gen.hpp"

using namespace hyperdeg;
using testgen::code_of;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hyperdeg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(int(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch_dir()
{
    fs::path dir = fs::temp_directory_path() / ("hyperdeg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

BaseParams params(int n, int m, int r, int d, uint32_t p)
{
    BaseParams bp;
    bp.n = n;
    bp.m = m;
    bp.r = r;
    bp.d = d;
    bp.p = p;
    return bp;
}

}  // namespace

TEST_CASE("state files round-trip losslessly, including symbolic Laurent parameters")
{
    testgen::Rng rng(2024);
    const std::vector<BaseParams> cases{params(2, 2, 1, 4, 101), params(3, 2, 6, 5, 101), params(2, 3, 2, 5, 7),
                                        params(3, 2, 3, 7, 11), params(2, 2, 2, 6, 13)};
    int states = 0;
    for (const auto& bp : cases) {
        ParamAssignment pr;
        if (rng() % 2) pr.set(Param::Pi, testgen::nonzero(rng, bp.p)).set(Param::Rho, testgen::nonzero(rng, bp.p));
        HypersurfaceState st = build_base_state(bp, HChoice::Auto, pr);
        for (int step = 0; step < 3; ++step) {
            HypersurfaceState back = state_from_json(state_to_json(st));
            CHECK(back == st);
            CHECK(state_to_json(back).dump() == state_to_json(st).dump());
            ++states;
            bool any = false;
            for (int e : st.e) any = any || e >= 1;
            if (!any) break;
            // the step introduces fresh symbolic lam and t, so lam^-1 terms reach the file
            ParamAssignment lt;
            lt.set(Param::Lam, testgen::nonzero(rng, bp.p)).set(Param::T, testgen::nonzero(rng, bp.p));
            HypersurfaceState next = induct_step(specialize_state(st, lt), choose_j0(st));
            st = next;
        }
    }
    CHECK(states >= 8);
}

TEST_CASE("malformed state files are rejected")
{
    const Json good = state_to_json(build_base_state(params(2, 2, 1, 4, 101)));
    auto broken = [&](auto&& edit) {
        Json doc = good;
        edit(doc);
        return code_of([&] { state_from_json(doc); });
    };
    CHECK(broken([](Json& d) { d.erase("f0"); }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["schema_version"] = 99; }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["p"] = 100; }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["params"]["lam"] = "maybe"; }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["params"]["pi"] = 101; }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["e"] = Json::array({1}); }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["a"].erase("1,1"); }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["a"]["9,9"] = "0"; }) == ErrorCode::MalformedInput);
    CHECK(broken([](Json& d) { d["f0"] = "x0^^2"; }) == ErrorCode::ParseError);
    CHECK(broken([](Json& d) { d["f0"] = "x9*x0"; }) == ErrorCode::ParseError);
    CHECK(broken([](Json& d) { d["provenance"][0]["n"] = 2; }) == ErrorCode::MalformedInput);
}

TEST_CASE("reports serialize in insertion order")
{
    Report rep;
    rep.add("zeta", "tag-z", "1", "1", true);
    rep.add("alpha", "tag-a", "2", "3", false);
    Json doc = report_to_json(rep);
    CHECK(doc["checks"][0]["check"] == "zeta");
    CHECK(doc["checks"][1]["ref"] == "tag-a");
    CHECK(doc["summary"]["failed"] == 1);
    CHECK(doc.dump() ==
          R"({"checks":[{"check":"zeta","ref":"tag-z","expected":"1","got":"1","pass":true},)"
          R"({"check":"alpha","ref":"tag-a","expected":"2","got":"3","pass":false}],)"
          R"("summary":{"total":2,"passed":1,"failed":1}})");
    Report back = report_from_json(doc);
    REQUIRE(back.checks().size() == 2);
    CHECK(back.checks()[1].got == "3");
    CHECK_FALSE(back.checks()[1].pass);
}

TEST_CASE("bounds command")
{
    auto a = run({"bounds", "--d", "5", "--N", "10", "--m", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == "applicable: yes, witness n=3 r=6 s=1\n");
    CHECK(run({"bounds", "--d", "5", "--N", "13", "--m", "2"}).out == "applicable: no\n");
    CHECK(run({"bounds", "--sum", "4", "2"}).out == "S(4,2) = 10 (closed form 10)\n");
    CHECK(run({"bounds", "--sum", "5", "4"}).out == "S(5,4) = 5\n");
    auto t = run({"bounds", "--table", "5-6"});
    CHECK(t.out == "d\tm\tmax_N\tn\n5\t2\t12\t3\n6\t2\t28\t4\n");
    auto j = run({"--json", "bounds", "--d", "5", "--N", "4", "--m", "3"});
    CHECK(j.code == 0);
    Json doc = Json::parse(j.out);
    CHECK(doc["applicable"] == true);
    CHECK(run({"bounds", "--d", "5", "--N", "5", "--m", "3"}).out == "applicable: no\n");
    CHECK(run({"bounds", "--d", "7", "--N", "6", "--divisors"}).out == "divisors: 2 3 4\nlcm: 12\nupper bound: 5040\n");

    CHECK(run({"bounds", "--d", "3", "--N", "10"}).code == 2);
    CHECK(run({"bounds", "--d", "5", "--N", "10", "--m", "2", "--char", "2"}).code == 2);
    CHECK(run({"bounds", "--d", "8", "--N", "4", "--divisors"}).code == 2);
    CHECK(run({"bounds", "--d", "5"}).code == 2);
    CHECK(run({"bounds", "--table", "9-5"}).code == 2);
    CHECK(run({"bounds", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("schema_version") != std::string::npos);
}

TEST_CASE("construct, induct and verify pipeline through files")
{
    const fs::path dir = scratch_dir();
    const std::string s0 = (dir / "s0.json").string(), s3 = (dir / "s3.json").string();
    auto c = run({"construct", "base", "--n", "3", "--m", "2", "--r", "6", "--d", "5", "--p", "101", "--out", s0});
    REQUIRE(c.code == 0);
    CHECK(run({"verify", "--state", s0, "--seed", "1"}).code == 0);

    auto four = run({"induct", "--state", s0, "--steps", "4", "--seed", "3", "--out", s3});
    CHECK(four.code == 1);
    CHECK(four.err.find("EjExhausted") != std::string::npos);
    const Json after = Json::parse(slurp(s3));
    CHECK(after["dims"]["s"] == 3);
    CHECK(after["h_poly"] == "z1*z2*z3");

    const Json before = Json::parse(slurp(s0));
    for (size_t i = 0; i < before["provenance"].size(); ++i) CHECK(after["provenance"][i] == before["provenance"][i]);
    CHECK(after["provenance"].size() > before["provenance"].size());

    auto v = run({"--json", "verify", "--state", s3, "--seed", "4"});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["summary"]["failed"] == 0);

    auto bad_j = run({"induct", "--state", s0, "--j", "3"});
    CHECK(bad_j.code == 1);
    CHECK(bad_j.err.find("EjTooSmall") != std::string::npos);
    CHECK(run({"--json", "induct", "--state", s0}).code == 2);
    CHECK(run({"--json", "verify", "--state", s0}).code == 2);
    CHECK(run({"induct", "--state", (dir / "missing.json").string()}).code == 2);
    write_file(dir / "junk.json", "{not json");
    CHECK(run({"verify", "--state", (dir / "junk.json").string()}).code == 2);
    CHECK(run({"construct", "base", "--n", "3", "--m", "2", "--r", "6", "--d", "5", "--p", "100"}).code == 2);

    Json corrupt = before;
    corrupt["a"]["2,1"] = "x0^3*y1";
    write_file(dir / "corrupt.json", corrupt.dump());
    auto vc = run({"verify", "--state", (dir / "corrupt.json").string(), "--seed", "1"});
    CHECK(vc.code == 1);
    CHECK(vc.out.find("FAIL") != std::string::npos);

    auto samp = run({"verify", "--state", s0, "--seed", "2", "--samples", "3"});
    CHECK(samp.code == 0);
    CHECK(samp.out.find("jacobian_rank2") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("skeleton commands")
{
    const fs::path dir = scratch_dir();
    const std::string graph = (dir / "g.json").string();
    write_file(graph, R"({"vertices": ["A", "B", "C"], "edges": [[0, 1], [1, 2], [0, 2]]})");

    auto s = run({"--json", "skeleton", "subdivide", "--graph", graph, "--r", "3"});
    CHECK(s.code == 0);
    Json sd = Json::parse(s.out);
    CHECK(sd["graph"]["vertices"].size() == 9);
    CHECK(sd["graph"]["edges"].size() == 9);

    CHECK(run({"skeleton", "telescope", "--c", "2", "--r", "2", "--k", "1", "--trials", "10", "--seed", "7"}).out ==
          "10/10 pass\n");
    auto viol = run({"skeleton", "telescope", "--c", "3", "--r", "4", "--k", "1", "--trials", "10", "--seed", "7"});
    CHECK(viol.code == 1);
    CHECK(viol.err.find("RDivisibilityViolated") != std::string::npos);

    auto yes = run({"skeleton", "coker", "--map", "[[2]]", "--m", "2"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("2-torsion: yes") != std::string::npos);
    CHECK(run({"skeleton", "coker", "--map", "[[3]]", "--m", "2"}).code == 1);
    CHECK(run({"skeleton", "coker", "--map", "[[1, 2], [3]]", "--m", "2"}).code == 2);
    write_file(dir / "map.json", R"({"matrix": [[2, 0], [0, 3]], "ring": 6})");
    auto ring6 = run({"skeleton", "coker", "--map", (dir / "map.json").string(), "--m", "6"});
    CHECK(ring6.code == 0);
    CHECK(ring6.out.find("torsion [6], free rank 0") != std::string::npos);

    auto tr = run({"skeleton", "transfer", "--graph", graph, "--c", "2", "--r", "2", "--trials", "4", "--seed", "1"});
    CHECK(tr.code == 0);
    CHECK(tr.out.find("verified 4/4") != std::string::npos);

    write_file(dir / "loop.json", R"({"vertices": ["A"], "edges": [[0, 0]]})");
    CHECK(run({"skeleton", "subdivide", "--graph", (dir / "loop.json").string(), "--r", "2"}).code == 2);
    write_file(dir / "badring.json", R"({"vertices": ["A", "B"], "edges": [[0, 1]], "ring": 3})");
    CHECK(run({"skeleton", "transfer", "--graph", (dir / "badring.json").string(), "--c", "2", "--r", "2", "--seed",
               "1"})
              .code == 2);
    CHECK(run({"skeleton", "subdivide", "--graph", graph, "--r", "1"}).code == 2);
    CHECK(run({"--json", "skeleton", "telescope", "--c", "2", "--r", "2"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("identical invocations give byte-identical output")
{
    const std::vector<std::vector<std::string>> commands{
        {"--json", "skeleton", "telescope", "--c", "4", "--r", "8", "--k", "3", "--trials", "20", "--seed", "11"},
        {"--json", "construct", "base", "--n", "2", "--m", "2", "--r", "2", "--d", "5", "--p", "101", "--seed", "9"},
        {"--json", "bounds", "--table", "5-12"},
    };
    for (const auto& cmd : commands) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    auto x = run({"--json", "construct", "base", "--n", "2", "--m", "2", "--r", "2", "--d", "5", "--p", "101", "--seed", "8"});
    auto y = run({"--json", "construct", "base", "--n", "2", "--m", "2", "--r", "2", "--d", "5", "--p", "101", "--seed", "9"});
    CHECK(x.out != y.out);
}

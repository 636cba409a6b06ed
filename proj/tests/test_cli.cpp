#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "gonality/spec_parse.hpp"

using namespace gonality;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("GONALITY_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("parse_group examples") {
    CHECK(parse_group("Z/47").invariant_factors == std::vector<Int>{Int(47)});
    const auto g = parse_group("Z/9 + Z/3");
    CHECK(g.invariant_factors == std::vector<Int>{Int(9), Int(3)});
    CHECK(parse_group(" 12 + Z/6 ").invariant_factors == std::vector<Int>{Int(12), Int(6)});
    CHECK_THROWS_AS(parse_group("Z/1"), ParseError);
    CHECK_THROWS_AS(parse_group("Z/4 +"), ParseError);
    CHECK_THROWS_AS(parse_group("W/4"), ParseError);
    try {
        parse_group("Z/6 + Z/1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("parse_field examples") {
    CHECK(parse_field("Q").n == 1);
    CHECK(parse_field("Q(zeta_8)").n == 8);
    CHECK(parse_field(" Q ( zeta_12 ) ").n == 12);
    CHECK_THROWS_AS(parse_field("Q(zeta_0)"), ParseError);
    CHECK_THROWS_AS(parse_field("F_5"), ParseError);
    CHECK_THROWS_AS(parse_field("Q(zeta_8) junk"), ParseError);
}

TEST_CASE("bound command: JSON reports and exit codes") {
    const RunResult ok = run("bound --group Z/13 --field Q --output json");
    CHECK(ok.exit_code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["reported_bound"] == "1");
    CHECK(j["rationality"] == "rational_by_criterion");
    CHECK(j["summands"][0]["search"]["certified"] == true);

    const RunResult violation = run("bound --group Z/16 --field Q --output json");
    CHECK(violation.exit_code == 2);
    const Json vj = Json::parse(violation.out);
    CHECK(vj["error"] == "hypothesis_violation");
    CHECK(vj["violations"][0]["s"] == "16");

    const RunResult empty_omega = run("bound --group Z/16 --field \"Q(zeta_8)\" --output json");
    CHECK(empty_omega.exit_code == 0);
    const Json ej = Json::parse(empty_omega.out);
    CHECK(ej["reported_bound"] == "1");
    CHECK(ej["summands"].empty());

    const RunResult bad = run("bound --group Z/1 --output json");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("JSON round-trips byte-identically") {
    const RunResult r = run("bound --group \"Z/9 + Z/3\" --output json");
    CHECK(r.exit_code == 0);
    const Json parsed = Json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
}

TEST_CASE("text and JSON agree on the numbers") {
    const RunResult text = run("bound --group Z/13 --output text");
    const RunResult json = run("bound --group Z/13 --output json");
    const Json j = Json::parse(json.out);
    const std::string reported = j["reported_bound"].get<std::string>();
    const std::string factorial = j["factorial_bound"].get<std::string>();
    CHECK(text.out.find("reported_bound: " + reported) != std::string::npos);
    CHECK(text.out.find("factorial_bound: " + factorial) != std::string::npos);
    CHECK(text.out.find("candidate_index: " +
                        j["summands"][0]["candidate_index"].get<std::string>()) !=
          std::string::npos);
}

TEST_CASE("determinism: consecutive runs are byte-identical") {
    const std::string args = "bound --group Z/13 --output json";
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("GONALITY_BUDGET environment override") {
    // Z/47 cannot certify, so a tiny budget must exhaust: exit 3.
    const RunResult r =
        run("bound --group Z/47 --output json", "GONALITY_BUDGET=1000 ");
    CHECK(r.exit_code == 3);
    const Json j = Json::parse(r.out);
    CHECK(j["budget_exhausted"] == true);
    CHECK(j["summands"][0]["search"]["certified"] == false);
    CHECK(j["budget"] == "1000");

    // an explicit flag overrides the environment
    const RunResult flag =
        run("bound --group Z/29 --output json --budget 10000000", "GONALITY_BUDGET=1000 ");
    CHECK(flag.exit_code == 0);
    CHECK(Json::parse(flag.out)["budget"] == "10000000");
}

TEST_CASE("primroot, scan, fischer, ideal commands") {
    const RunResult pr = run("primroot --p 7 --output json");
    CHECK(pr.exit_code == 0);
    CHECK(Json::parse(pr.out)["t"] == "-2");

    const RunResult sc = run("scan --limit 5 --output json");
    const Json sj = Json::parse(sc.out);
    REQUIRE(sj["rows"].size() == 2);
    CHECK(sj["rows"][0]["abs_root"] == "1");
    CHECK(sj["rows"][0]["satisfies"] == false);

    const RunResult fi = run("fischer --group Z/6 --output json");
    const Json fj = Json::parse(fi.out);
    CHECK(fj["index"] == "6");

    const RunResult id = run("ideal --m 4 --gen 5 --gen=-2,1 --search --output json");
    CHECK(id.exit_code == 0);
    const Json ij = Json::parse(id.out);
    CHECK(ij["norm"] == "5");
    CHECK(ij["search"]["best_index"] == "1");

    const RunResult cite = run("--cite");
    CHECK(cite.exit_code == 0);
    CHECK(cite.out.find("product_bound") != std::string::npos);
}

TEST_CASE("summand command") {
    const RunResult r = run("summand --s 29 --output json");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["command"] == "summand");
    CHECK(j["summand"]["candidate_index"] == "113");
    CHECK(j["summand"]["search"]["best_index"] == "1");

    const RunResult bad = run("summand --s 12 --output json");  // not a prime power
    CHECK(bad.exit_code == 1);
}

TEST_CASE("class-number table flows into the formulas") {
    const std::string path = "/tmp/gonality_test_h.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("# class numbers of Q(zeta_n)\n12 1\n", f);
        fclose(f);
    }
    const RunResult r =
        run("bound --group Z/13 --class-numbers " + path + " --output json");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    bool found = false;
    for (const auto& e : j["formulas"])
        if (e["name"] == "min_index_class_bound(s=13)") {
            found = true;
            CHECK(e["value"] == "1");  // 13^(h-1) with h = 1
        }
    CHECK(found);

    // table present but missing the needed degree: hard error
    const RunResult missing =
        run("bound --group Z/7 --class-numbers " + path + " --output json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("ideal command rejects the zero ideal") {
    const RunResult r = run("ideal --m 4 --gen 0,0 --output json");
    CHECK(r.exit_code == 1);
}

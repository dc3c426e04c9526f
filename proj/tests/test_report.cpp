#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cering/run.hpp"
#include "cering/verify.hpp"
#include "support/corpus.hpp"

using namespace cering;
using namespace cering::tests;

TEST_CASE("spec document round-trip") {
    auto a = exterior_algebra(FieldSpec::prime(3), 2);
    Json spec = algebra_to_spec_json(*a);
    AlgebraPtr back = algebra_from_spec_json(spec, "roundtrip");
    CHECK(back->dim() == a->dim());
    CHECK(back->basis_labels() == a->basis_labels());
    CHECK(check_algebra(*back).ok());
    // same multiplication
    for (size_t i = 0; i < a->dim(); i++)
        for (size_t j = 0; j < a->dim(); j++)
            CHECK(a->multiply(a->basis_vector(i), a->basis_vector(j)) ==
                  back->multiply(back->basis_vector(i), back->basis_vector(j)));
}

TEST_CASE("spec document over the rationals with fractional coefficients") {
    Json spec = Json::parse(R"({
      "field": {"kind": "rationals"},
      "dim": 2,
      "basis": ["1", "t"],
      "unit": ["1", "0"],
      "table": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1/2"]]
    })");
    AlgebraPtr a = algebra_from_spec_json(spec, "halved");
    CHECK(check_algebra(*a).ok());
    Vec t = a->basis_vector(1);
    Vec sq = a->multiply(t, t);
    CHECK(sq[0] == Scalar::from_rational(a->field(), BigRational(1, 2)));
}

TEST_CASE("spec parse errors carry context") {
    CHECK_THROWS_WITH_AS(algebra_from_spec_text("{ not json", "bad.json"),
                         doctest::Contains("bad.json:1"), Error);
    CHECK_THROWS_WITH_AS(algebra_from_spec_text("{\n\n  [", "bad.json"),
                         doctest::Contains("bad.json:3"), Error);
    Json missing = Json::parse(R"({"field": {"kind": "rationals"}})");
    CHECK_THROWS_AS(algebra_from_spec_json(missing, "m"), Error);
    Json bad_index = Json::parse(R"({
      "field": {"kind": "rationals"}, "dim": 1, "basis": ["1"], "unit": ["1"],
      "table": [[0,0,5,"1"]]
    })");
    CHECK_THROWS_AS(algebra_from_spec_json(bad_index, "m"), Error);
}

TEST_CASE("resolve_input") {
    CHECK(resolve_input("exterior:gf3:3")->dim() == 8);
    CHECK(resolve_input("group:gf2:q8")->dim() == 8);
    CHECK_THROWS_AS(resolve_input("exterior:gf3"), Error);
    CHECK_THROWS_AS(resolve_input("group:gf2:q9"), Error);
    CHECK_THROWS_AS(resolve_input("diffmat"), Error);
    CHECK_THROWS_AS(resolve_input("/nonexistent/path.json"), Error);

    // cayley file input
    std::string path = "/tmp/cering_c3.cayley";
    std::ofstream(path) << "3\ne g h\ng h e\nh e g\n";
    AlgebraPtr c3 = resolve_input("group:gf2:@" + path);
    CHECK(c3->dim() == 3);
    CHECK(c3->is_commutative());
}

TEST_CASE("cmd_report emits the expected verdicts") {
    RunConfig cfg;
    cfg.input = "exterior:gf3:3";
    Json j = cmd_report(cfg);
    CHECK(j["command"] == "report");
    CHECK(j["algebra"]["dim"] == 8);
    CHECK(j["structure"]["center"]["dim"] == 5);
    CHECK(j["structure"]["radical"]["dim"] == 7);
    CHECK(j["centrally_essential"]["value"] == "true");
    CHECK(j["subdirectly_indecomposable"]["value"] == "true");
    CHECK(j["center_subdirectly_indecomposable"]["value"] == "false");

    cfg.input = "exterior:gf3:2";
    Json j2 = cmd_report(cfg);
    CHECK(j2["centrally_essential"]["value"] == "false");

    cfg.input = "group:gf2:q8";
    Json j8 = cmd_report(cfg);
    CHECK(j8["centrally_essential"]["value"] == "true");
    CHECK(j8["structure"]["cores"]["two_sided"]["value"] == "true");
    CHECK(j8["structure"]["cores"]["two_sided"]["witness_space"]["dim"] == 1);
}

TEST_CASE("cmd_report on diffmat") {
    RunConfig cfg;
    cfg.input = "diffmat";
    cfg.seed = 7;
    Json j = cmd_report(cfg);
    CHECK(j["diffmat"]["ok"] == true);
    CHECK(j["diffmat"]["seed"] == 7);
}

TEST_CASE("reports are byte-identical across runs") {
    RunConfig cfg;
    cfg.input = "group:gf2:q8";
    cfg.seed = 42;
    std::string a = cmd_report(cfg).dump(2);
    std::string b = cmd_report(cfg).dump(2);
    CHECK(a == b);
}

TEST_CASE("cmd_quotient") {
    RunConfig cfg;
    cfg.input = "exterior:gf3:3";
    cfg.generators = {"e1^e3", "e1^e2^e3"};
    Json j = cmd_quotient(cfg);
    CHECK(j["ideal"]["dim"] == 2);
    CHECK(j["algebra"]["dim"] == 6);
    CHECK(j["subdirectly_indecomposable"]["value"] == "false");

    cfg.input = "group:gf2:q8";
    cfg.generators = {"Qhat"};
    Json jq = cmd_quotient(cfg);
    CHECK(jq["algebra"]["dim"] == 7);
    CHECK(jq["centrally_essential"]["value"] == "false");

    // zero generators: the quotient is a copy of the base
    cfg.input = "exterior:gf3:2";
    cfg.generators = {};
    Json j0 = cmd_quotient(cfg);
    CHECK(j0["ideal"]["dim"] == 0);
    CHECK(j0["algebra"]["dim"] == 4);
    CHECK(j0["algebra"]["basis"] == Json::array({"1", "e1", "e2", "e1^e2"}));
    CHECK(j0["centrally_essential"]["value"] == "false");

    // improper ideal rejected
    cfg.generators = {"1"};
    CHECK_THROWS_AS(cmd_quotient(cfg), Error);
}

TEST_CASE("cmd_scan families") {
    RunConfig cfg;
    cfg.family = "exterior:gf3:3";
    Json j = cmd_scan(cfg);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["table"][0]["centrally_essential"] == "true");   // n=1 commutative
    CHECK(j["table"][1]["centrally_essential"] == "false");  // n=2
    CHECK(j["table"][2]["centrally_essential"] == "true");   // n=3

    cfg.family = "quotients:group:gf2:q8";
    Json jq = cmd_scan(cfg);
    CHECK(jq["any_proper_noncommutative_centrally_essential_factor"] == false);
    CHECK(jq["rows"].size() == 10);

    // scan rows are independent of the worker count
    cfg.jobs = 4;
    Json jq4 = cmd_scan(cfg);
    cfg.jobs = 1;
    CHECK(jq.dump() == jq4.dump());

    cfg.family = "bogus:gf2:1";
    CHECK_THROWS_AS(cmd_scan(cfg), Error);
}

TEST_CASE("cmd_build exports a loadable spec") {
    RunConfig cfg;
    cfg.input = "group:gf2:q8";
    Json j = cmd_build(cfg);
    CHECK(j["table_check"]["associative"] == true);
    CHECK(j["table_check"]["unital"] == true);
    // the build document itself is a loadable spec
    AlgebraPtr back = algebra_from_spec_json(j, "q8-copy");
    CHECK(back->dim() == 8);
    CHECK(check_algebra(*back).ok());
    CHECK(jacobson_radical(back).dim() == 7);
}

TEST_CASE("verify_paper summary contract") {
    VerifySummary sum = verify_paper(1);
    CHECK(sum.failures() == 0);
    CHECK(sum.warnings() >= 2);
    CHECK(sum.checks.size() >= 30);
    Json j = verify_to_json(sum);
    CHECK(j["fail"] == 0);
}

TEST_CASE("skip flags trim the report") {
    RunConfig cfg;
    cfg.input = "exterior:gf3:3";
    cfg.skip = {"cores", "invariant", "essential", "minimal-ideals", "local"};
    Json j = cmd_report(cfg);
    CHECK(!j["structure"].contains("cores"));
    CHECK(!j["structure"].contains("invariant"));
    CHECK(!j["structure"].contains("minimal_right_ideals"));
    CHECK(!j.contains("centrally_essential"));
    CHECK(j["structure"]["center"]["dim"] == 5);
}

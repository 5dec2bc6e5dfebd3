#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gell/report.hpp"

using namespace gell;

namespace {

nlohmann::json parse(const char* text) { return nlohmann::json::parse(text); }

std::string fixture(const std::string& name) { return std::string(GELL_FIXTURE_DIR) + "/" + name; }

int run_cli(const std::string& args) {
    std::string cmd = std::string(GELL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("spec document parsing") {
    SUBCASE("full document") {
        SpecDocument doc = parse_spec_document(parse(R"({
            "rank": 2,
            "steps": [[["2","0"],["0","3"]]],
            "periodic_tail": [[["2","0"],["0","3"]]],
            "theta": {"upper": ["1/5"]},
            "depth": 4
        })"));
        CHECK(doc.rank == 2);
        CHECK(doc.steps.size() == 1);
        CHECK(doc.tail.size() == 1);
        CHECK(doc.twist.mode == Twist::Mode::numeric);
        CHECK(doc.twist.form->entry(0, 1) == make_rat(1, 5));
        CHECK(doc.depth == 4);
        SpecPtr spec = to_spec(doc);
        CHECK(spec->index_at(4) == 1296);
    }
    SUBCASE("plain integers are accepted") {
        SpecDocument doc = parse_spec_document(parse(R"({"rank": 1, "steps": [[[2]]]})"));
        CHECK(doc.steps[0].at(0, 0) == 2);
    }
    SUBCASE("schema violations name the field") {
        auto field_of = [](const char* text) {
            try {
                parse_spec_document(nlohmann::json::parse(text));
            } catch (const SchemaError& e) {
                return e.field;
            }
            return std::string("NO ERROR");
        };
        CHECK(field_of(R"({"steps": []})") == "rank");
        CHECK(field_of(R"({"rank": 0, "steps": []})") == "rank");
        CHECK(field_of(R"({"rank": 9, "steps": []})") == "rank");
        CHECK(field_of(R"({"rank": 2, "steps": [[["1","0"]]]})") == "steps[0]");
        CHECK(field_of(R"({"rank": 1, "steps": [[["x"]]]})") == "steps[0][0][0]");
        CHECK(field_of(R"({"rank": 1, "steps": [[["0"]]]})") == "steps");  // singular
        CHECK(field_of(R"({"rank": 1, "steps": [], "theta": {"upper": []}, "bogus": 1})") ==
              "bogus");
        CHECK(field_of(R"({"rank": 2, "steps": [], "theta": {"upper": ["1/2","1/3"]}})") ==
              "theta.upper");
        CHECK(field_of(R"({"rank": 1, "steps": [], "theta": {"symbolic": true}})") ==
              "theta.symbolic");
        CHECK(field_of(R"({"rank": 1, "steps": [], "depth": -1})") == "depth");
        CHECK(field_of(R"({"rank": 1, "steps": [], "depth": "1/2"})") == "depth");
    }
    SUBCASE("effective depth clamps the default but checks explicit requests") {
        SpecDocument doc = parse_spec_document(parse(R"({"rank": 1, "steps": [[["2"]]]})"));
        SpecPtr spec = to_spec(doc);
        CHECK(effective_depth(doc, *spec, std::nullopt) == 1);  // default 6 clamped
        CHECK(effective_depth(doc, *spec, 1) == 1);
        CHECK_THROWS_AS(effective_depth(doc, *spec, 3), std::invalid_argument);
    }
}

TEST_CASE("report determinism") {
    SpecDocument doc = parse_spec_document(parse(R"({
        "rank": 2,
        "steps": [[["2","0"],["0","3"]]],
        "periodic_tail": [[["2","0"],["0","3"]]],
        "theta": {"symbolic": true}
    })"));
    SpecPtr spec = to_spec(doc);
    GEllData a = compute_gell(spec, doc.twist, 3);
    GEllData b = compute_gell(to_spec(doc), doc.twist, 3);
    CHECK(gell_report_json(a).dump(2) == gell_report_json(b).dump(2));

    SUBCASE("report carries the convention flags") {
        nlohmann::ordered_json j = gell_report_json(a);
        CHECK(j["conventions"].contains("pullback"));
        CHECK(j["conventions"].contains("pfaffian_empty_subset"));
        CHECK(j["conventions"].contains("rieffel_operator_order"));
        CHECK(j["gap_labels"]["agree"] == true);
        CHECK(j["gap_labels"]["untwisted"]["steinitz"] == "2^inf*3^inf");
    }
}

TEST_CASE("obstruction comparison") {
    auto load = [](const char* name) { return to_spec(load_spec_document(fixture(name))); };
    SUBCASE("2-adic vs 3-adic are distinguished") {
        CompareOutcome out = compare_specs(load("dyadic.json"), load("triadic.json"), 4, 4, {});
        CHECK(out.distinguished);
        CHECK(out.index_tower_a.str() == "2^inf");
        CHECK(out.index_tower_b.str() == "3^inf");
    }
    SUBCASE("telescoped towers are not distinguished and certify") {
        SpecPtr a = load("telescope_a.json");
        SpecPtr b = load("telescope_b.json");
        CompareOutcome bare = compare_specs(a, b, 4, 2, {});
        CHECK(!bare.distinguished);
        IntertwinerCertificate cert = load_certificate(fixture("cert_telescope.json"), 1);
        CompareOutcome certified = compare_specs(a, b, 4, 2, cert);
        CHECK(certified.used_certificate);
        CHECK(certified.certificate.ok);
    }
}

TEST_CASE("command line interface") {
    SUBCASE("gell subcommand") {
        CHECK(run_cli("gell " + fixture("dyadic.json")) == 0);
        CHECK(run_cli("gell " + fixture("diag23_theta_symbolic.json") +
                      " --out /tmp/gell_report_test.json") == 0);
        std::ifstream in("/tmp/gell_report_test.json");
        nlohmann::json j;
        in >> j;
        CHECK(j["gap_labels"]["agree"] == true);
    }
    SUBCASE("schema violations exit 1") {
        CHECK(run_cli("gell " + fixture("bad_schema.json")) == 1);
        CHECK(run_cli("gell /nonexistent.json") == 1);
    }
    SUBCASE("verify-gap") {
        CHECK(run_cli("verify-gap " + fixture("dyadic.json") + " --depth 8") == 0);
        CHECK(run_cli("verify-gap " + fixture("d2_trivial_theta15.json")) == 1);  // twisted
    }
    SUBCASE("compare") {
        CHECK(run_cli("compare " + fixture("dyadic.json") + " " + fixture("triadic.json")) == 0);
        CHECK(run_cli("compare " + fixture("telescope_a.json") + " " + fixture("telescope_b.json") +
                      " " + fixture("cert_telescope.json")) == 0);
        CHECK(run_cli("compare " + fixture("dyadic.json") + " " + fixture("diag23.json")) == 1);
    }
    SUBCASE("rieffel") {
        CHECK(run_cli("rieffel --p 2 --q 7 --eps 1/7") == 0);
        CHECK(run_cli("rieffel --p 3 --q 6 --eps 1/6") == 1);
        CHECK(run_cli("rieffel --p 1 --q 4 --eps 1/3") == 1);
    }
}

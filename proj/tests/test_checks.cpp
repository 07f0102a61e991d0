#include <doctest.h>

#include <json.hpp>

#include "rote/checks.hpp"

using namespace rote;

TEST_CASE("check registry") {
    std::vector<std::string> names = check_names();
    CHECK(names.size() == 11);
    CHECK(std::find(names.begin(), names.end(), "lower-bound-38") != names.end());
    CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
}

TEST_CASE("lower bound check passes and is deterministic") {
    CheckReport a = run_check("lower-bound-38");
    CheckReport b = run_check("lower-bound-38");
    CHECK(a.verdict == Verdict::Pass);
    REQUIRE(a.items.size() == b.items.size());
    for (size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].what == b.items[i].what);
        CHECK(a.items[i].observed == b.items[i].observed);
    }
    std::string text = report_text(a);
    CHECK(text.find("[PASS] lower-bound-38") != std::string::npos);
}

TEST_CASE("oracle-only checks pass at reduced prefix lengths") {
    CheckOptions opts;
    opts.prefix_len = 600;
    CHECK(run_check("reversible-15", opts).verdict == Verdict::Pass);
    CHECK(run_check("abelian-1234", opts).verdict == Verdict::Pass);

    CheckOptions rig;
    rig.prefix_len = 70;
    CheckReport r = run_check("rigidity-16n", rig);
    CHECK(r.verdict == Verdict::ConjecturalPass);
}

TEST_CASE("json report is well formed") {
    std::vector<CheckReport> reports{run_check("lower-bound-38")};
    nlohmann::json parsed = nlohmann::json::parse(reports_json(reports));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["name"] == "lower-bound-38");
    CHECK(parsed[0]["verdict"] == "PASS");
    CHECK(parsed[0]["items"].size() == reports[0].items.size());
    CHECK(all_passed(reports));
}

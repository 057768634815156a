#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/verify.hpp"

#include <set>
#include <string>

using namespace mhopf;

namespace {

std::set<std::string> failing(const SuiteReport& rep) {
    std::set<std::string> out;
    for (const auto& r : rep.results)
        if (r.status == FixtureStatus::fail) out.insert(r.id);
    return out;
}

VerifyConfig config(const std::string& suite) {
    VerifyConfig cfg;
    cfg.suites = {suite};
    cfg.fixture_dir = default_fixture_dir();
    return cfg;
}

}  // namespace

// Printed values that contradict the computation and the rest of the text.
TEST_CASE("tables: only the known misprints fail") {
    auto reps = run_verify(config("tables"));
    REQUIRE(reps.size() == 1);
    CHECK(failing(reps[0]) == std::set<std::string>{"multiparking_hyposylvester[m=1,n=4]", "narayana_m1[n=5]",
                                                    "narayana_q_reversed_m2[n=2]", "narayana_q_reversed_m2[n=5]"});
    CHECK(reps[0].count(FixtureStatus::skipped) == 0);
    CHECK(reps[0].results.size() > 400);
}

TEST_CASE("examples: only the known misprints fail") {
    auto reps = run_verify(config("examples"));
    REQUIRE(reps.size() == 1);
    CHECK(failing(reps[0]) == std::set<std::string>{"mdt_P_331122_class_sum", "lagrange_g3_m2"});
}

TEST_CASE("properties all hold") {
    auto reps = run_verify(config("properties"));
    REQUIRE(reps.size() == 1);
    CHECK(failing(reps[0]).empty());
    CHECK(reps[0].count(FixtureStatus::pass) == reps[0].results.size());
}

TEST_CASE("table cells") {
    auto spec = find_table("m_parking_hyposylvester");
    REQUIRE(spec);
    TableCell cell = compute_table_cell(*spec, 1, 3, true, true, default_budget);
    REQUIRE(cell.formula);
    CHECK(*cell.formula == 12);
    REQUIRE(cell.brute);
    CHECK(*cell.brute == 12);
}

TEST_CASE("argument splitting") {
    CHECK(split_args("--m 2 \"\" '1 2'") == std::vector<std::string>{"--m", "2", "", "1 2"});
}

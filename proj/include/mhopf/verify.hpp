#pragma once

#include "mhopf/congruence.hpp"
#include "mhopf/core.hpp"
#include "mhopf/hopf.hpp"
#include "mhopf/series.hpp"
#include "mhopf/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mhopf {

// One command invocation: options by name plus positional arguments.
struct Request {
    std::string command;
    std::map<std::string, std::vector<std::string>> options;
    std::vector<std::string> args;
    bool json = false;
    std::size_t budget = default_budget;

    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    unsigned get_unsigned(const std::string& key, unsigned fallback) const;
    bool has(const std::string& key) const { return options.count(key) != 0; }
};

struct Response {
    std::string output;
    // False when a check ran and did not pass (verify, count --method both).
    bool ok = true;
};

// Runs a command; throws Error on bad input.
Response run_request(const Request& req);

// Splits "a b 'c d'" style argument strings (single or double quotes).
std::vector<std::string> split_args(const std::string& text);
// Builds a request from CLI-style tokens: "--key value" pairs and positionals.
Request request_from_tokens(const std::string& command, const std::vector<std::string>& tokens);

Label parse_label(const BasisId& id, const std::string& text);
// Digit strings, bracketed lists, or lowercase letters (a = 1).
Word parse_input_word(const std::string& text);

std::string combination_json(const BasisId& id, unsigned degree, const LinearCombination& x);
std::string combination_json(const BasisId& id, unsigned degree, const TensorCombination& x);
LinearCombination linear_from_json(const std::string& text, BasisId* id = nullptr);
TensorCombination tensor_from_json(const std::string& text, BasisId* id = nullptr);

std::string series_text(const TruncatedSeries& s);

// Appendix-style tables of counts by (m, n).
struct TableSpec {
    std::string id;
    FamilyKind family;
    std::optional<Congruence> congruence;
};

const std::vector<TableSpec>& table_specs();
std::optional<TableSpec> find_table(const std::string& id);

struct TableCell {
    std::optional<Integer> formula;
    std::optional<Integer> brute;
};

// Brute force runs only when the family fits the budget.
TableCell compute_table_cell(const TableSpec& t, unsigned m, unsigned n, bool want_formula, bool want_brute,
                             std::size_t budget);

enum class FixtureStatus { pass, fail, skipped };
std::string status_name(FixtureStatus s);

struct FixtureResult {
    std::string id;
    std::string expected;
    std::string computed;
    FixtureStatus status = FixtureStatus::pass;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<FixtureResult> results;
    std::size_t count(FixtureStatus s) const;
    bool passed() const { return count(FixtureStatus::fail) == 0; }
};

struct VerifyConfig {
    std::vector<std::string> suites;
    std::size_t budget = default_budget;
    unsigned m = 2;
    unsigned maxdeg = 3;
    std::string fixture_dir;
};

std::string default_fixture_dir();

SuiteReport run_tables_suite(const VerifyConfig& cfg);
SuiteReport run_examples_suite(const VerifyConfig& cfg);
SuiteReport run_properties_suite(const VerifyConfig& cfg);
std::vector<SuiteReport> run_verify(const VerifyConfig& cfg);
std::string report_text(const std::vector<SuiteReport>& reports);
std::string report_json(const std::vector<SuiteReport>& reports);

// Printed table values: rows of (m, n, value) read from a TSV file.
struct TableFixture {
    std::string id;
    std::vector<std::tuple<unsigned, unsigned, Integer>> cells;
};
TableFixture load_table_fixture(const std::string& path);

// Printed triangle rows: (n, coefficients...).
struct TriangleFixture {
    std::string id;
    std::string variant;
    unsigned m = 1;
    std::vector<std::pair<unsigned, std::vector<Integer>>> rows;
};
TriangleFixture load_triangle_fixture(const std::string& path);

struct ExampleFixture {
    std::string id;
    std::string command;
    std::string args;
    std::string expected;
};
std::vector<ExampleFixture> load_examples(const std::string& path);

// Property checks, each returning an empty string on success or a failure witness.
std::string check_closure(Congruence c, unsigned m, unsigned maxdeg);
std::string check_refinement_chain(unsigned max_len, Letter max_letter_value);
std::string check_fibers(unsigned max_weight);
std::string check_round_trips(unsigned max_n, unsigned max_m);
std::string check_interval_theorem(unsigned m, unsigned max_total);
std::string check_naked_quotient(unsigned max_total);
std::string check_quotient_representatives(unsigned m, unsigned maxdeg);
std::string check_pairing_adjointness(unsigned m, unsigned maxdeg);

}  // namespace mhopf

#include "mhopf/congruence.hpp"
#include "mhopf/series.hpp"
#include "mhopf/text.hpp"
#include "mhopf/verify.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace mhopf;

namespace {

struct Outcome {
    std::vector<std::string> failures;  // "item: detail"
    std::string summary;
};

// Items whose printed value is contradicted by the computation and by other
// printed values; they are reported as FAIL but do not change the exit code.
const std::set<std::string> known_misprints = {
    "multiparking_hyposylvester[m=1,n=4]",
    "lagrange_g3_m2",
    "mdt_P_331122_class_sum",
    "narayana_m1[n=5]",
    "narayana_q_reversed_m2[n=2]",
    "narayana_q_reversed_m2[n=5]",
};

std::string item_of(const std::string& failure) { return failure.substr(0, failure.find(':')); }

VerifyConfig config(const std::string& suite) {
    VerifyConfig cfg;
    cfg.suites = {suite};
    cfg.fixture_dir = default_fixture_dir();
    return cfg;
}

bool is_triangle(const std::string& id) { return id.rfind("narayana", 0) == 0; }

std::string describe(const FixtureResult& r) {
    return r.id + ": printed " + r.expected + ", computed " + r.computed;
}

const SuiteReport& tables_report() {
    static const SuiteReport rep = run_tables_suite(config("tables"));
    return rep;
}

const SuiteReport& examples_report() {
    static const SuiteReport rep = run_examples_suite(config("examples"));
    return rep;
}

Outcome from_examples(const std::vector<std::string>& ids) {
    Outcome o;
    std::size_t found = 0;
    for (const auto& r : examples_report().results) {
        if (std::find(ids.begin(), ids.end(), r.id) == ids.end()) continue;
        ++found;
        if (r.status != FixtureStatus::pass) o.failures.push_back(describe(r));
    }
    if (found != ids.size()) o.failures.push_back("fixtures: " + std::to_string(ids.size() - found) + " example rows missing");
    o.summary = std::to_string(found - std::min(found, o.failures.size())) + "/" + std::to_string(ids.size()) + " examples";
    return o;
}

Outcome appendix_tables() {
    Outcome o;
    std::size_t cells = 0, brute = 0;
    for (const auto& r : tables_report().results) {
        if (is_triangle(r.id)) continue;
        ++cells;
        if (r.note.find("brute skipped") == std::string::npos) ++brute;
        if (r.status != FixtureStatus::pass) o.failures.push_back(describe(r));
    }
    o.summary = std::to_string(cells - o.failures.size()) + "/" + std::to_string(cells) + " cells, " +
                std::to_string(brute) + " also by brute force";
    return o;
}

Outcome lagrange() {
    Outcome o;
    const std::string g4 =
        "S^(4) + 3*S^(3,1) + 2*S^(2,2) + 3*S^(2,1,1) + S^(1,3) + 2*S^(1,2,1) + S^(1,1,2) + S^(1,1,1,1)";
    const std::string g3 = "S^(3) + 2*S^(2,1) + 4*S^(1,2) + 5*S^(1,1,1)";
    std::string got4 = series_text(lagrange_g(4, 1).homogeneous(4));
    if (got4 != g4) o.failures.push_back("lagrange_g4: printed " + g4 + ", computed " + got4);
    TruncatedSeries s3 = lagrange_g(3, 2).homogeneous(3);
    std::string got3 = series_text(s3);
    if (got3 != g3) o.failures.push_back("lagrange_g3_m2: printed " + g3 + ", computed " + got3);
    Integer dims = 0;
    for (const auto& [c, k] : s3.terms()) dims += k * multinomial(c.vec());
    if (dims != 49) o.failures.push_back("dimension_49: computed " + dims.str());
    o.summary = "g4, g3 (m=2), sum of dimensions " + dims.str();
    return o;
}

Outcome canonical_list(const std::vector<Letter>& ev, Congruence c, const std::vector<std::string>& printed) {
    Outcome o;
    std::vector<std::string> got;
    for (const auto& cls : classes_of_evaluation(ev, c)) got.push_back(word_text(canonical(cls.front(), c)));
    std::sort(got.begin(), got.end());
    if (got != printed)
        o.failures.push_back(congruence_name(c) + "_classes: printed " + join(printed, " ") + ", computed " + join(got, " "));
    o.summary = std::to_string(got.size()) + " classes: " + join(got, " ");
    return o;
}

std::string row_text(const std::vector<Integer>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x.str());
    return join(parts, " ");
}

Outcome narayana() {
    Outcome o;
    std::size_t rows = 0;
    for (const auto& r : tables_report().results) {
        if (!is_triangle(r.id)) continue;
        ++rows;
        if (r.status != FixtureStatus::pass) o.failures.push_back(describe(r));
    }
    // Polynomial displays, coefficients in ascending degree.
    const std::vector<std::vector<long>> n_display = {{1}, {2, 1}, {5, 6, 1}, {14, 28, 12, 1}, {42, 120, 90, 20, 1}};
    const std::vector<std::vector<long>> p_display = {{1}, {1, 2}, {1, 6, 5}, {1, 12, 28, 14}, {1, 20, 90, 120, 42}};
    const std::vector<std::vector<long>> q_display = {
        {1}, {3, 1}, {12, 8, 1}, {55, 55, 15, 1}, {273, 364, 156, 24, 1}};
    const long n_at_2[] = {1, 4, 21, 126, 818};
    const long half_p_at_2[] = {1, 5, 33, 249, 2033};
    auto as_ints = [](const std::vector<long>& v) { return std::vector<Integer>(v.begin(), v.end()); };
    for (unsigned n = 1; n <= 5; ++n) {
        const std::string tag = "[n=" + std::to_string(n) + "]";
        IntPolynomial nn = narayana_n(n, 2);
        if (nn.coeffs() != as_ints(n_display[n - 1]))
            o.failures.push_back("narayana_N_m2" + tag + ": computed " + row_text(nn.coeffs()));
        IntPolynomial px = narayana_p(n, 2).divide_by_x();
        if (px.coeffs() != as_ints(p_display[n - 1]))
            o.failures.push_back("narayana_P_over_x_m2" + tag + ": computed " + row_text(px.coeffs()));
        IntPolynomial q = nn.shift_one();
        if (q.coeffs() != as_ints(q_display[n - 1]))
            o.failures.push_back("narayana_q_m2" + tag + ": computed " + row_text(q.coeffs()));
        if (nn.eval(2) != n_at_2[n - 1]) o.failures.push_back("narayana_N_at_2" + tag + ": computed " + nn.eval(2).str());
        Integer half = narayana_p(n, 2).eval(2) / 2;
        if (half != half_p_at_2[n - 1]) o.failures.push_back("half_P_at_2" + tag + ": computed " + half.str());
        for (unsigned m = 1; m <= 3; ++m)
            if (narayana_n(n, m).reciprocal(n - 1) != narayana_p(n, m).divide_by_x())
                o.failures.push_back("reciprocity[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]");
    }
    o.summary = std::to_string(rows) + " triangle rows, displays, values at 2, reciprocity";
    return o;
}

Outcome single_property(const std::string& id, const std::function<std::string()>& check) {
    Outcome o;
    std::string witness = check();
    if (!witness.empty()) o.failures.push_back(id + ": " + witness);
    o.summary = id;
    return o;
}

Outcome properties() {
    Outcome o;
    SuiteReport rep = run_properties_suite(config("properties"));
    for (const auto& r : rep.results)
        if (r.status != FixtureStatus::pass) o.failures.push_back(r.id + ": " + r.computed);
    o.summary = std::to_string(rep.count(FixtureStatus::pass)) + "/" + std::to_string(rep.results.size()) + " properties";
    return o;
}

Outcome sequences() {
    Outcome o;
    std::vector<std::string> got;
    auto expect = [&](const std::string& id, const Integer& computed, const Integer& expected) {
        if (computed != expected) o.failures.push_back(id + ": expected " + expected.str() + ", computed " + computed.str());
    };
    const long sylv[] = {1, 2, 7, 30, 143};
    for (unsigned k = 0; k < 5; ++k) {
        std::vector<Letter> ev(k, 2);
        ev.push_back(1);
        Integer formula = count_classes_formula(Composition(ev), Congruence::sylvester);
        expect("sylvester_2^" + std::to_string(k) + "1", formula, sylv[k]);
        expect("sylvester_2^" + std::to_string(k) + "1_brute", count_classes_brute(ev, Congruence::sylvester), formula);
    }
    const long hypo[] = {1, 1, 3, 10, 34, 116};
    for (unsigned n = 1; n <= 5; ++n) {
        expect("hyposylv_packed[n=" + std::to_string(n) + "]", count_sequence("hyposylv_packed", n, 1), hypo[n]);
        if (n <= 4) {
            Integer brute = 0;
            for (const auto& ev : family_evaluations({FamilyKind::packed_m_words, {}}, n, 1))
                brute += count_classes_brute(ev, Congruence::hyposylvester);
            expect("hyposylv_packed_brute[n=" + std::to_string(n) + "]", brute, hypo[n]);
        }
    }
    for (unsigned n = 1; n <= 4; ++n) {
        Integer brute = 0;
        for (const auto& ev : family_evaluations({FamilyKind::packed_m_words, {}}, n, 1))
            brute += count_classes_brute(ev, Congruence::metasylvester);
        expect("metasylv_packed[n=" + std::to_string(n) + "]", brute, factorial(n + 1) / 2);
    }
    o.summary = "sylvester 1,2,7,30,143; hyposylvester 1,1,3,10,34,116; metasylvester (n+1)!/2";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"appendix tables", appendix_tables},
        {"Lagrange series", lagrange},
        {"sylvester classes of evaluation 112",
         [] {
             return canonical_list({1, 1, 2}, Congruence::sylvester,
                                   {"1233", "2133", "2313", "2331", "3123", "3213", "3231", "3312", "3321"});
         }},
        {"hyposylvester maximal words of evaluation 222",
         [] {
             return canonical_list({2, 2, 2}, Congruence::hyposylvester,
                                   {"112233", "211233", "223311", "311223", "321123", "322311", "331122", "332112",
                                    "332211"});
         }},
        {"worked examples",
         [] {
             return from_examples({"std_bbacab", "park_m1_bracketed", "std_m2_aabacbcbab", "decreasing_tree_1413324343",
                                   "canonical_1413324343", "decreasing_tree_556119367322474898",
                                   "canonical_556119367322474898", "comb_m2_n4", "bst_shape_78563412",
                                   "duplicial_tree_113344", "duplicial_word_of_bst_213132", "ternary_tree_134",
                                   "ternary_tree_of_213132", "duplicial_over_12_113", "duplicial_under_12_113"});
         }},
        {"Hopf expansions",
         [] {
             return from_examples({"mfqsym_G_2121_G_11", "mfqsym_F_11_F_1212", "mfqsym_delta_F_1122",
                                   "mfqsym_delta_F_2211", "mdt_P_11_P_1122", "mdt_P_11_P_2112", "mdt_P_11_P_2211",
                                   "mdt_Q_11_Q_1122", "mdt_Q_11_Q_2112", "mdt_Q_11_Q_2211", "mdt_delta_P_311223",
                                   "mdt_delta_P_322311", "mdt_delta_P_113322", "mdt_P_113322_class_sum",
                                   "mdt_P_311322_class_sum", "mdt_P_331122_class_sum", "mqsym_F_1_F_empty",
                                   "mqsym_F_empty_F_1"});
         }},
        {"Narayana polynomials and triangles", narayana},
        {"m-Tamari interval theorem", [] { return single_property("intervals m=2 total<=4", [] { return check_interval_theorem(2, 4); }); }},
        {"property suites", properties},
        {"sequence spot checks", sequences},
    };

    bool unexpected = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, run] = criteria[i];
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("error: ") + e.what());
        }
        std::cout << (o.failures.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << name << ": " << o.summary;
        if (!o.failures.empty()) {
            std::vector<std::string> misprints, others;
            for (const auto& f : o.failures) (known_misprints.count(item_of(f)) ? misprints : others).push_back(f);
            if (!misprints.empty()) std::cout << "; misprinted: " << join(misprints, "; ");
            if (!others.empty()) {
                std::cout << "; unexpected: " << join(others, "; ");
                unexpected = true;
            }
        }
        std::cout << "\n";
    }
    return unexpected ? 1 : 0;
}

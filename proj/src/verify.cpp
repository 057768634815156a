#include "mhopf/verify.hpp"

#include "mhopf/text.hpp"
#include "mhopf/trees.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef MHOPF_FIXTURE_DIR
#define MHOPF_FIXTURE_DIR "fixtures"
#endif

namespace mhopf {

const std::vector<TableSpec>& table_specs() {
    static const std::vector<TableSpec> specs = {
        {"m_permutations", FamilyKind::m_permutations, std::nullopt},
        {"m_permutations_sylvester", FamilyKind::m_permutations, Congruence::sylvester},
        {"m_permutations_hyposylvester", FamilyKind::m_permutations, Congruence::hyposylvester},
        {"m_permutations_metasylvester", FamilyKind::m_permutations, Congruence::metasylvester},
        {"packed_m_words", FamilyKind::packed_m_words, std::nullopt},
        {"packed_m_words_sylvester", FamilyKind::packed_m_words, Congruence::sylvester},
        {"packed_m_words_hyposylvester", FamilyKind::packed_m_words, Congruence::hyposylvester},
        {"packed_m_words_metasylvester", FamilyKind::packed_m_words, Congruence::metasylvester},
        {"m_parking", FamilyKind::m_parking, std::nullopt},
        {"m_parking_sylvester", FamilyKind::m_parking, Congruence::sylvester},
        {"m_parking_hyposylvester", FamilyKind::m_parking, Congruence::hyposylvester},
        {"m_parking_hypoplactic", FamilyKind::m_parking, Congruence::hypoplactic},
        {"m_parking_metasylvester", FamilyKind::m_parking, Congruence::metasylvester},
        {"multiparking", FamilyKind::multiparking, std::nullopt},
        {"multiparking_sylvester", FamilyKind::multiparking, Congruence::sylvester},
        {"multiparking_hyposylvester", FamilyKind::multiparking, Congruence::hyposylvester},
        {"multiparking_metasylvester", FamilyKind::multiparking, Congruence::metasylvester},
    };
    return specs;
}

std::optional<TableSpec> find_table(const std::string& id) {
    for (const auto& t : table_specs())
        if (t.id == id) return t;
    return std::nullopt;
}

static Composition packed_evaluation(const std::vector<Letter>& ev) {
    Composition c;
    for (Letter x : ev)
        if (x) c.push_back(x);
    return c;
}

static bool member_ok(FamilyKind kind, const Word& w, unsigned m) {
    switch (kind) {
        case FamilyKind::m_permutations: return is_m_permutation(w, m);
        case FamilyKind::packed_m_words: return is_packed(w) && is_m_word(w, m);
        case FamilyKind::m_parking: return is_m_parking(w, m);
        case FamilyKind::multiparking: {
            auto ev = evaluation_of(w).ev;
            std::vector<Letter> reduced;
            for (Letter x : ev) {
                if (x % m) return false;
                reduced.push_back(x / m);
            }
            return is_ndpf(sorted_word(reduced), 1);
        }
        default: return true;
    }
}

TableCell compute_table_cell(const TableSpec& t, unsigned m, unsigned n, bool want_formula, bool want_brute,
                             std::size_t budget) {
    const Family fam{t.family, {}};
    TableCell cell;
    const auto evaluations = family_evaluations(fam, n, m);
    if (want_formula) {
        Integer total = 0;
        for (const auto& ev : evaluations)
            total += t.congruence ? count_classes_formula(packed_evaluation(ev), *t.congruence) : multinomial(ev);
        cell.formula = total;
    }
    if (want_brute && family_size(fam, n, m) <= budget) {
        Integer total = 0;
        if (t.congruence) {
            for (const auto& ev : evaluations) total += count_classes_brute(ev, *t.congruence, budget);
        } else {
            std::set<Word> seen;
            for_each_member(fam, n, m, budget, [&](const Word& w) {
                if (member_ok(t.family, w, m)) seen.insert(w);
            });
            total = seen.size();
        }
        cell.brute = total;
    }
    return cell;
}

std::string status_name(FixtureStatus s) {
    switch (s) {
        case FixtureStatus::pass: return "PASS";
        case FixtureStatus::fail: return "FAIL";
        case FixtureStatus::skipped: return "SKIP";
    }
    return "";
}

std::size_t SuiteReport::count(FixtureStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const FixtureResult& r) { return r.status == s; }));
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("M_HOPF_FIXTURES")) return env;
    return MHOPF_FIXTURE_DIR;
}

static std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, '\t')) out.push_back(item);
    if (!line.empty() && line.back() == '\t') out.emplace_back();
    return out;
}

static std::ifstream open_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot open fixture " + path);
    return in;
}

// Header lines look like "# key: value".
static std::map<std::string, std::string> read_header(const std::string& line, std::map<std::string, std::string> h) {
    auto colon = line.find(':');
    if (colon == std::string::npos) return h;
    std::string key = line.substr(1, colon - 1);
    std::string value = line.substr(colon + 1);
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
    };
    h[trim(key)] = trim(value);
    return h;
}

TableFixture load_table_fixture(const std::string& path) {
    auto in = open_fixture(path);
    TableFixture f;
    std::map<std::string, std::string> header;
    std::string line;
    bool column_line = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            header = read_header(line, header);
            continue;
        }
        if (!column_line) {
            column_line = true;
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() != 3) throw Error(ErrorCode::parse_error, path + ": expected m, n, value in '" + line + "'");
        f.cells.emplace_back(std::stoul(cols[0]), std::stoul(cols[1]), Integer(cols[2]));
    }
    f.id = header.count("table") ? header["table"] : path;
    return f;
}

TriangleFixture load_triangle_fixture(const std::string& path) {
    auto in = open_fixture(path);
    TriangleFixture f;
    std::map<std::string, std::string> header;
    std::string line;
    bool column_line = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            header = read_header(line, header);
            continue;
        }
        if (!column_line) {
            column_line = true;
            continue;
        }
        auto cols = split_tabs(line);
        std::vector<Integer> coeffs;
        for (std::size_t i = 1; i < cols.size(); ++i)
            if (!cols[i].empty()) coeffs.emplace_back(cols[i]);
        f.rows.emplace_back(std::stoul(cols.at(0)), std::move(coeffs));
    }
    f.id = header["table"];
    f.variant = header["variant"];
    f.m = static_cast<unsigned>(std::stoul(header.count("m") ? header["m"] : "1"));
    return f;
}

std::vector<ExampleFixture> load_examples(const std::string& path) {
    auto in = open_fixture(path);
    std::vector<ExampleFixture> out;
    std::string line;
    bool column_line = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!column_line) {
            column_line = true;
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() != 4) throw Error(ErrorCode::parse_error, path + ": expected 4 columns in '" + line + "'");
        std::string expected = cols[3];
        // "\n" in the expected column stands for a line break.
        for (std::size_t p = expected.find("\\n"); p != std::string::npos; p = expected.find("\\n", p + 1))
            expected.replace(p, 2, "\n");
        out.push_back({cols[0], cols[1], cols[2], expected});
    }
    return out;
}

SuiteReport run_tables_suite(const VerifyConfig& cfg) {
    SuiteReport rep{"tables", {}};
    for (const auto& spec : table_specs()) {
        TableFixture fx = load_table_fixture(cfg.fixture_dir + "/tables/" + spec.id + ".tsv");
        for (const auto& [m, n, printed] : fx.cells) {
            FixtureResult r;
            r.id = spec.id + "[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
            r.expected = printed.str();
            TableCell cell = compute_table_cell(spec, m, n, true, true, cfg.budget);
            std::vector<std::string> notes;
            r.computed = cell.formula ? cell.formula->str() : "-";
            if (cell.brute) {
                notes.push_back("brute " + cell.brute->str());
                if (cell.formula && *cell.brute != *cell.formula) {
                    r.status = FixtureStatus::fail;
                    notes.push_back("formula and brute force disagree");
                }
            } else {
                notes.push_back("brute skipped (budget)");
            }
            if (!cell.formula && !cell.brute) {
                r.status = FixtureStatus::skipped;
            } else if ((cell.formula ? *cell.formula : *cell.brute) != printed) {
                r.status = FixtureStatus::fail;
            }
            r.note = join(notes, "; ");
            rep.results.push_back(std::move(r));
        }
    }
    for (const char* name : {"narayana_m1", "narayana_m2", "narayana_m3", "narayana_q_m1", "narayana_q_m2",
                             "narayana_q_m3", "narayana_q_reversed_m2", "narayana_q_reversed_m3"}) {
        TriangleFixture fx = load_triangle_fixture(cfg.fixture_dir + "/tables/" + name + ".tsv");
        auto variant = parse_narayana_variant(fx.variant);
        if (!variant) throw Error(ErrorCode::parse_error, std::string(name) + ": unknown variant " + fx.variant);
        for (const auto& [n, printed] : fx.rows) {
            FixtureResult r;
            r.id = std::string(name) + "[n=" + std::to_string(n) + "]";
            std::vector<std::string> e, c;
            for (const auto& x : printed) e.push_back(x.str());
            auto row = narayana_row(n, fx.m, *variant);
            for (const auto& x : row) c.push_back(x.str());
            r.expected = join(e, " ");
            r.computed = join(c, " ");
            if (row != printed) r.status = FixtureStatus::fail;
            rep.results.push_back(std::move(r));
        }
    }
    return rep;
}

static std::string trim_output(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

// Linear combinations compare as multisets of " + "-separated terms.
static bool same_terms(const std::string& a, const std::string& b) {
    if (a == b) return true;
    auto terms = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t p = s.find(" + "); p != std::string::npos; p = s.find(" + ", start)) {
            out.push_back(s.substr(start, p - start));
            start = p + 3;
        }
        out.push_back(s.substr(start));
        std::sort(out.begin(), out.end());
        return out;
    };
    return terms(a) == terms(b);
}

SuiteReport run_examples_suite(const VerifyConfig& cfg) {
    SuiteReport rep{"examples", {}};
    for (const auto& ex : load_examples(cfg.fixture_dir + "/examples.tsv")) {
        FixtureResult r;
        r.id = ex.id;
        r.expected = ex.expected;
        try {
            Request req = request_from_tokens(ex.command, split_args(ex.args));
            req.budget = cfg.budget;
            Response resp = run_request(req);
            r.computed = trim_output(resp.output);
            if (!resp.ok || !same_terms(r.computed, ex.expected)) r.status = FixtureStatus::fail;
        } catch (const Error& e) {
            r.computed = std::string(error_name(e.code())) + ": " + e.what();
            r.status = r.computed.rfind(ex.expected, 0) == 0 ? FixtureStatus::pass : FixtureStatus::fail;
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

static FixtureResult property(const std::string& id, const std::function<std::string()>& check) {
    FixtureResult r;
    r.id = id;
    r.expected = "holds";
    try {
        std::string witness = check();
        r.computed = witness.empty() ? "holds" : witness;
        if (!witness.empty()) r.status = FixtureStatus::fail;
    } catch (const Error& e) {
        r.computed = std::string(error_name(e.code())) + ": " + e.what();
        r.status = FixtureStatus::fail;
    }
    return r;
}

std::string check_closure(Congruence c, unsigned m, unsigned maxdeg) {
    for (Algebra ambient : {Algebra::mfqsym, Algebra::mpqsym}) {
        auto b = make_congruence_basis(ambient, c, m);
        std::vector<std::vector<Label>> by_deg(maxdeg + 1);
        for (unsigned d = 1; d <= maxdeg; ++d) by_deg[d] = b->labels(d);
        for (unsigned d1 = 1; d1 <= maxdeg; ++d1) {
            for (const auto& x : by_deg[d1]) {
                for (const auto res = b->coproduct(x); const auto& [k, coeff] : res.terms())
                    if (coeff < 0) return "negative coefficient in coproduct of " + label_text(x);
                for (unsigned d2 = 1; d1 + d2 <= maxdeg; ++d2)
                    for (const auto& y : by_deg[d2])
                        for (const auto res = b->product(x, y); const auto& [l, coeff] : res.terms())
                            if (coeff < 0) return "negative coefficient in " + label_text(x) + " * " + label_text(y);
            }
        }
    }
    return {};
}

std::string check_refinement_chain(unsigned max_len, Letter max_letter_value) {
    const std::pair<Congruence, Congruence> chain[] = {
        {Congruence::metasylvester, Congruence::sylvester},
        {Congruence::sylvester, Congruence::hyposylvester},
        {Congruence::hyposylvester, Congruence::hypoplactic},
        {Congruence::plactic, Congruence::hypoplactic},
    };
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<Letter> ev(max_letter_value, 0);
        std::function<std::string(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) -> std::string {
            if (i == ev.size()) {
                if (left) return {};
                for (const auto& [fine, coarse] : chain) {
                    std::map<Word, std::size_t> coarse_id;
                    auto coarse_classes = classes_of_evaluation(ev, coarse);
                    for (std::size_t k = 0; k < coarse_classes.size(); ++k)
                        for (const auto& w : coarse_classes[k]) coarse_id[w] = k;
                    for (const auto& cls : classes_of_evaluation(ev, fine))
                        for (const auto& w : cls)
                            if (coarse_id[w] != coarse_id[cls.front()])
                                return congruence_name(fine) + " class of " + word_text(cls.front()) +
                                       " is not inside one " + congruence_name(coarse) + " class";
                }
                return {};
            }
            for (unsigned v = 0; v <= left; ++v) {
                ev[i] = v;
                if (auto s = rec(i + 1, left - v); !s.empty()) return s;
            }
            ev[i] = 0;
            return {};
        };
        if (auto s = rec(0, len); !s.empty()) return s;
    }
    return {};
}

template <class Invariant>
static std::string check_fiber(const std::vector<Letter>& ev, Congruence c, const std::string& name, Invariant inv) {
    auto classes = classes_of_evaluation(ev, c);
    std::set<decltype(inv(Word{}))> values;
    for (const auto& cls : classes) {
        auto v = inv(cls.front());
        for (const auto& w : cls)
            if (inv(w) != v) return name + " differs inside the " + congruence_name(c) + " class of " + word_text(w);
        values.insert(v);
    }
    if (values.size() != classes.size())
        return name + " merges two " + congruence_name(c) + " classes of evaluation " +
               composition_text(Composition(ev));
    return {};
}

std::string check_fibers(unsigned max_weight) {
    for (unsigned n = 1; n <= max_weight; ++n) {
        for (const auto& comp : compositions(n)) {
            const std::vector<Letter>& ev = comp.vec();
            if (auto s = check_fiber(ev, Congruence::metasylvester, "decreasing tree",
                                     [](const Word& w) { return tree_text(decreasing_tree(w)); });
                !s.empty())
                return s;
            if (auto s = check_fiber(ev, Congruence::sylvester, "BST shape",
                                     [](const Word& w) { return tree_text(shape(sylvester_bst(w))); });
                !s.empty())
                return s;
            if (auto s = check_fiber(ev, Congruence::hyposylvester, "signature",
                                     [](const Word& w) { return signature_hs(w); });
                !s.empty())
                return s;
        }
    }
    return {};
}

std::string check_round_trips(unsigned max_n, unsigned max_m) {
    for (unsigned n = 1; n <= max_n; ++n) {
        for (const auto& p : ndpf_list(n, 1)) {
            if (binary_to_ndpf(ndpf_to_binary(p)) != p) return "NDPF/binary round trip fails at " + word_text(p);
        }
        for (const auto& t : enumerate_ary_trees(n, 2))
            if (ndpf_to_binary(binary_to_ndpf(t)) != t) return "binary/NDPF round trip fails at " + tree_text(t);
        for (unsigned m = 1; m <= max_m; ++m) {
            for (const auto& p : ndpf_list(n, m))
                if (ary_to_ndpf(ndpf_to_ary(p, m), m) != p) return "NDPF/ary round trip fails at " + word_text(p);
            for (const auto& t : enumerate_ary_trees(n, m + 1)) {
                if (ndpf_to_ary(ary_to_ndpf(t, m), m) != t) return "ary/NDPF round trip fails at " + tree_text(t);
                PlanarTree mb = ary_to_mbinary(t, m);
                if (!is_m_binary(mb, m)) return "image of " + tree_text(t) + " is not m-binary";
                if (mbinary_to_ary(mb, m) != t) return "ary/m-binary round trip fails at " + tree_text(t);
            }
            for (const auto& t : enumerate_decreasing_trees(n, m + 1)) {
                Word w = canonical_word(t);
                if (decreasing_tree(w) != t) return "decreasing tree/canonical word round trip fails at " + tree_text(t);
            }
            if (n <= 3) {
                for (const auto& alpha : enumerate_family({FamilyKind::m_permutations, {}}, n, m)) {
                    PlanarTree s = shape(sylvester_bst(alpha));
                    if (!is_m_binary(s, m)) return "BST shape of " + word_text(alpha) + " is not m-binary";
                    Word full = binary_to_ndpf(s);
                    Word every;
                    for (std::size_t i = 0; i < full.size(); i += m) every.push_back(full[i]);
                    if (ndpf_to_ary(every, m) != mbinary_to_ary(s, m))
                        return "m-binary map disagrees with the NDPF route at " + word_text(alpha);
                }
            }
        }
    }
    return {};
}

std::string check_interval_theorem(unsigned m, unsigned max_total) {
    auto basis = make_basis({Algebra::mpbt, BasisTag::P, m});
    for (unsigned d1 = 1; d1 < max_total; ++d1) {
        for (unsigned d2 = 1; d1 + d2 <= max_total; ++d2) {
            for (const auto& x : basis->labels(d1)) {
                for (const auto& y : basis->labels(d2)) {
                    const PlanarTree& t1 = std::get<PlanarTree>(x);
                    const PlanarTree& t2 = std::get<PlanarTree>(y);
                    PlanarTree b1 = ary_to_mbinary(t1, m), b2 = ary_to_mbinary(t2, m);
                    PlanarTree lower = graft_leftmost(b2, b1);
                    PlanarTree upper = graft_rightmost(b1, b2);
                    auto ups = tamari_up_set(lower);
                    auto downs = tamari_down_set(upper);
                    std::set<PlanarTree> interval;
                    std::set<PlanarTree> down_set(downs.begin(), downs.end());
                    for (const auto& u : ups)
                        if (down_set.count(u)) interval.insert(u);
                    std::set<PlanarTree> support;
                    for (const auto res = basis->product(x, y); const auto& [l, c] : res.terms()) {
                        if (c != 1) return "coefficient " + c.str() + " in P_T * P_T' for " + tree_text(t1);
                        support.insert(ary_to_mbinary(std::get<PlanarTree>(l), m));
                    }
                    if (support != interval)
                        return "support of P_" + tree_text(t1) + " * P_" + tree_text(t2) + " is not the interval [" +
                               tree_text(lower) + ", " + tree_text(upper) + "]";
                }
            }
        }
    }
    return {};
}

std::string check_naked_quotient(unsigned max_total) {
    auto p = make_basis({Algebra::mdt, BasisTag::P, 2});
    auto pp = make_basis({Algebra::mdt, BasisTag::Pp, 2});
    for (unsigned d1 = 1; d1 < max_total; ++d1) {
        for (unsigned d2 = 1; d1 + d2 <= max_total; ++d2) {
            std::map<std::pair<PlanarTree, PlanarTree>, std::map<PlanarTree, Integer>> seen;
            for (const auto& x : p->labels(d1)) {
                for (const auto& y : p->labels(d2)) {
                    std::map<PlanarTree, Integer> shapes;
                    for (const auto res = p->product(x, y); const auto& [l, c] : res.terms())
                        shapes[shape(decreasing_tree(std::get<Word>(l)))] += c;
                    auto key = std::make_pair(shape(decreasing_tree(std::get<Word>(x))),
                                              shape(decreasing_tree(std::get<Word>(y))));
                    auto [it, fresh] = seen.emplace(key, shapes);
                    if (!fresh && it->second != shapes)
                        return "product shapes of P_" + label_text(x) + " * P_" + label_text(y) +
                               " depend on the labels";
                }
            }
            for (const auto& x : pp->labels(d1)) {
                for (const auto& y : pp->labels(d2)) {
                    PlanarTree top = graft_rightmost(std::get<PlanarTree>(x), std::get<PlanarTree>(y));
                    if (pp->product(x, y).coeff(top) != 1)
                        return "P'_" + label_text(x) + " * P'_" + label_text(y) + " lacks the rightmost glueing";
                }
            }
        }
    }
    return {};
}

std::string check_quotient_representatives(unsigned m, unsigned maxdeg) {
    for (const auto& id : all_bases(m)) {
        auto b = make_basis(id);
        auto* q = dynamic_cast<QuotientBasis*>(b.get());
        if (!q) continue;
        for (unsigned d1 = 1; d1 <= maxdeg; ++d1) {
            for (const auto& x : q->labels(d1)) {
                const TensorCombination ref = q->coproduct(x);
                for (const auto& a : q->members(x))
                    if (q->coproduct_via(a) != ref)
                        return algebra_name(id.algebra) + " " + basis_tag_name(id.basis) +
                               ": coproduct depends on the representative " + label_text(a);
                for (unsigned d2 = 1; d1 + d2 <= maxdeg; ++d2)
                    for (const auto& y : q->labels(d2)) {
                        const LinearCombination pref = q->product(x, y);
                        for (const auto& a : q->members(x))
                            for (const auto& c : q->members(y))
                                if (q->product_via(a, c) != pref)
                                    return algebra_name(id.algebra) + " " + basis_tag_name(id.basis) +
                                           ": product depends on representatives " + label_text(a) + ", " +
                                           label_text(c);
                    }
            }
        }
    }
    return {};
}

std::string check_pairing_adjointness(unsigned m, unsigned maxdeg) {
    for (Algebra a : {Algebra::mfqsym, Algebra::mpqsym}) {
        auto f = make_basis({a, BasisTag::F, m});
        auto g = make_basis({a, BasisTag::G, m});
        for (unsigned d1 = 1; d1 < maxdeg; ++d1)
            for (unsigned d2 = 1; d1 + d2 <= maxdeg; ++d2) {
                const auto xs = f->labels(d1);
                const auto ys = f->labels(d2);
                for (const auto& z : g->labels(d1 + d2)) {
                    const TensorCombination dg = g->coproduct(z);
                    const TensorCombination df = f->coproduct(z);
                    for (const auto& x : xs)
                        for (const auto& y : ys) {
                            LinearCombination gz, fz;
                            gz.add(z, 1);
                            fz.add(z, 1);
                            TensorCombination fxy, gxy;
                            fxy.add(x, y, 1);
                            gxy.add(x, y, 1);
                            if (pairing(f->product(x, y), gz) != pairing(fxy, dg))
                                return algebra_name(a) + ": <F F, G> != <F (x) F, Delta G> at " + label_text(x) + ", " +
                                       label_text(y) + ", " + label_text(z);
                            if (pairing(fz, g->product(x, y)) != pairing(df, gxy))
                                return algebra_name(a) + ": <F, G G> != <Delta F, G (x) G> at " + label_text(x) + ", " +
                                       label_text(y) + ", " + label_text(z);
                        }
                }
            }
    }
    return {};
}

SuiteReport run_properties_suite(const VerifyConfig& cfg) {
    SuiteReport rep{"properties", {}};
    const unsigned m = cfg.m;
    const unsigned maxdeg = cfg.maxdeg;
    for (Congruence c : all_congruences)
        rep.results.push_back(property("closure/" + congruence_name(c),
                                       [&] { return check_closure(c, m, maxdeg); }));
    for (unsigned mm = 1; mm <= m; ++mm)
        for (const auto& id : all_bases(mm)) {
            std::string name = "bialgebra/" + algebra_name(id.algebra) + "/" + basis_tag_name(id.basis) + "/m=" +
                               std::to_string(mm);
            rep.results.push_back(property(name, [&] {
                auto b = make_basis(id);
                auto report = check_bialgebra(*b, maxdeg);
                return report.passed ? std::string() : report.failure;
            }));
        }
    rep.results.push_back(property("quotient-representatives", [&] { return check_quotient_representatives(m, maxdeg); }));
    rep.results.push_back(property("pairing-adjointness", [&] { return check_pairing_adjointness(m, maxdeg); }));
    rep.results.push_back(property("refinement-chain", [] { return check_refinement_chain(5, 4); }));
    rep.results.push_back(property("fibers", [] { return check_fibers(6); }));
    rep.results.push_back(property("round-trips", [] { return check_round_trips(4, 2); }));
    rep.results.push_back(property("m-tamari-intervals", [] { return check_interval_theorem(2, 4); }));
    rep.results.push_back(property("decreasing-tree-shapes", [] { return check_naked_quotient(4); }));
    rep.results.push_back(property("commutative-image", [] {
        for (unsigned n = 1; n <= 3; ++n)
            for (const auto& alpha : enumerate_family({FamilyKind::m_permutations, {}}, n, 2))
                for (unsigned k = 1; k <= 3; ++k)
                    if (!commutative_image_check(alpha, 2, k)) return "fails at " + word_text(alpha);
        return std::string();
    }));
    return rep;
}

std::vector<SuiteReport> run_verify(const VerifyConfig& cfg) {
    std::vector<SuiteReport> out;
    for (const auto& s : cfg.suites) {
        if (s == "tables")
            out.push_back(run_tables_suite(cfg));
        else if (s == "examples")
            out.push_back(run_examples_suite(cfg));
        else if (s == "properties")
            out.push_back(run_properties_suite(cfg));
        else
            throw Error(ErrorCode::parse_error, "unknown suite '" + s + "'");
    }
    return out;
}

static std::string one_line(const std::string& s) {
    std::string out;
    for (char c : s) out += c == '\n' ? std::string("\\n") : std::string(1, c);
    return out;
}

std::string report_text(const std::vector<SuiteReport>& reports) {
    std::string out;
    for (const auto& rep : reports) {
        for (const auto& r : rep.results) {
            out += status_name(r.status) + " " + rep.suite + " " + r.id + " expected=" + one_line(r.expected) +
                   " computed=" + one_line(r.computed);
            if (!r.note.empty()) out += " (" + r.note + ")";
            out += "\n";
        }
        out += "== " + rep.suite + ": " + std::to_string(rep.count(FixtureStatus::pass)) + " passed, " +
               std::to_string(rep.count(FixtureStatus::fail)) + " failed, " +
               std::to_string(rep.count(FixtureStatus::skipped)) + " skipped\n";
    }
    return out;
}

std::string report_json(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json s;
        s["suite"] = rep.suite;
        s["passed"] = rep.count(FixtureStatus::pass);
        s["failed"] = rep.count(FixtureStatus::fail);
        s["skipped"] = rep.count(FixtureStatus::skipped);
        s["results"] = nlohmann::ordered_json::array();
        for (const auto& r : rep.results)
            s["results"].push_back({{"id", r.id},
                                    {"status", status_name(r.status)},
                                    {"expected", r.expected},
                                    {"computed", r.computed},
                                    {"note", r.note}});
        j.push_back(s);
    }
    return j.dump();
}

}  // namespace mhopf

#include "mhopf/text.hpp"
#include "mhopf/trees.hpp"
#include "mhopf/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mhopf {

using ojson = nlohmann::ordered_json;

std::optional<std::string> Request::get(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
}

std::string Request::get_or(const std::string& key, const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

unsigned Request::get_unsigned(const std::string& key, unsigned fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    if (v->empty() || v->size() > 9 ||
        !std::all_of(v->begin(), v->end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorCode::parse_error, "--" + key + " expects a nonnegative integer, got '" + *v + "'");
    return static_cast<unsigned>(std::stoul(*v));
}

std::vector<std::string> split_args(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    bool in_token = false;
    char quote = 0;
    for (char ch : text) {
        if (quote) {
            if (ch == quote)
                quote = 0;
            else
                cur += ch;
            continue;
        }
        if (ch == '\'' || ch == '"') {
            quote = ch;
            in_token = true;
        } else if (ch == ' ' || ch == '\t') {
            if (in_token) out.push_back(cur);
            cur.clear();
            in_token = false;
        } else {
            cur += ch;
            in_token = true;
        }
    }
    if (quote) throw Error(ErrorCode::parse_error, "unterminated quote in '" + text + "'");
    if (in_token) out.push_back(cur);
    return out;
}

Request request_from_tokens(const std::string& command, const std::vector<std::string>& tokens) {
    Request r;
    r.command = command;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t.size() > 2 && t.rfind("--", 0) == 0) {
            std::string key = t.substr(2);
            if (key == "json") {
                r.json = true;
                continue;
            }
            if (i + 1 >= tokens.size()) throw Error(ErrorCode::parse_error, "option " + t + " needs a value");
            if (key == "format") {
                const std::string& f = tokens[++i];
                if (f != "text" && f != "json") throw Error(ErrorCode::parse_error, "unknown format '" + f + "'");
                r.json = f == "json";
                continue;
            }
            r.options[key].push_back(tokens[++i]);
        } else {
            r.args.push_back(t);
        }
    }
    return r;
}

Word parse_input_word(const std::string& text) {
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        Word w;
        for (char c : text) w.push_back(static_cast<Letter>(c - 'a' + 1));
        return w;
    }
    return parse_word(text);
}

static bool looks_like_tree(const std::string& text) {
    return text.find('(') != std::string::npos || text == ".";
}

Label parse_label(const BasisId& id, const std::string& text) {
    if (looks_like_tree(text)) {
        PlanarTree t = parse_tree(text);
        if (id.algebra == Algebra::mdt && (id.basis == BasisTag::P || id.basis == BasisTag::Q)) {
            if (!is_decreasing_tree(t))
                throw Error(ErrorCode::invalid_argument, "expected a decreasing tree, got " + text);
            return canonical_word(t);
        }
        return t;
    }
    if (id.algebra == Algebra::mncsf) return parse_code_word(text);
    Word w = parse_input_word(text);
    if (w.empty()) return std::monostate{};
    return w;
}

static ojson integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

static Integer integer_from_json(const ojson& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error(ErrorCode::parse_error, "coefficient must be an integer");
}

static ojson label_json(const Label& l) {
    if (is_unit(l)) return nullptr;
    if (const Word* w = std::get_if<Word>(&l)) return w->empty() ? std::string() : word_text(*w);
    return tree_text(std::get<PlanarTree>(l));
}

static ojson basis_header(const BasisId& id, unsigned degree) {
    ojson j;
    j["algebra"] = algebra_name(id.algebra);
    j["basis"] = basis_tag_name(id.basis);
    j["m"] = id.m;
    j["degree"] = degree;
    return j;
}

std::string combination_json(const BasisId& id, unsigned degree, const LinearCombination& x) {
    ojson j = basis_header(id, degree);
    j["terms"] = ojson::array();
    for (const auto& [l, c] : x.terms()) j["terms"].push_back({{"label", label_json(l)}, {"coeff", integer_json(c)}});
    return j.dump();
}

std::string combination_json(const BasisId& id, unsigned degree, const TensorCombination& x) {
    ojson j = basis_header(id, degree);
    j["terms"] = ojson::array();
    for (const auto& [k, c] : x.terms())
        j["terms"].push_back({{"left", label_json(k.first)}, {"right", label_json(k.second)}, {"coeff", integer_json(c)}});
    return j.dump();
}

static BasisId basis_from_json(const ojson& j) {
    auto a = parse_algebra(j.at("algebra").get<std::string>());
    auto b = parse_basis_tag(j.at("basis").get<std::string>());
    if (!a || !b) throw Error(ErrorCode::parse_error, "unknown algebra or basis in JSON");
    return {*a, *b, j.at("m").get<unsigned>()};
}

static Label label_from_json(const BasisId& id, const ojson& j) {
    if (j.is_null()) return std::monostate{};
    const std::string s = j.get<std::string>();
    if (looks_like_tree(s)) return parse_tree(s);
    if (id.algebra == Algebra::mncsf) return parse_code_word(s);
    return parse_word(s);
}

LinearCombination linear_from_json(const std::string& text, BasisId* out_id) {
    try {
        ojson j = ojson::parse(text);
        BasisId id = basis_from_json(j);
        if (out_id) *out_id = id;
        LinearCombination r;
        for (const auto& t : j.at("terms")) r.add(label_from_json(id, t.at("label")), integer_from_json(t.at("coeff")));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad combination JSON: ") + e.what());
    }
}

TensorCombination tensor_from_json(const std::string& text, BasisId* out_id) {
    try {
        ojson j = ojson::parse(text);
        BasisId id = basis_from_json(j);
        if (out_id) *out_id = id;
        TensorCombination r;
        for (const auto& t : j.at("terms"))
            r.add(label_from_json(id, t.at("left")), label_from_json(id, t.at("right")), integer_from_json(t.at("coeff")));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad combination JSON: ") + e.what());
    }
}

std::string series_text(const TruncatedSeries& s) {
    if (s.terms().empty()) return "0";
    std::vector<std::pair<Composition, Integer>> terms(s.terms().begin(), s.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const std::size_t wa = weight(a.first), wb = weight(b.first);
        if (wa != wb) return wa < wb;
        return a.first > b.first;
    });
    const std::string name = series_basis_name(s.basis());
    std::string out;
    for (const auto& [c, k] : terms) {
        if (!out.empty()) out += k < 0 ? " - " : " + ";
        else if (k < 0) out += "-";
        Integer a = abs(k);
        if (c.empty()) {
            out += a.str();
            continue;
        }
        if (a != 1) out += a.str() + "*";
        out += name + "^(" + composition_text(c) + ")";
    }
    return out;
}

namespace {

const std::string& require_arg(const Request& req, std::size_t i, const std::string& what) {
    if (i >= req.args.size()) throw Error(ErrorCode::parse_error, req.command + ": missing " + what);
    return req.args[i];
}

Congruence require_congruence(const Request& req) {
    auto name = req.get("cong");
    if (!name) throw Error(ErrorCode::parse_error, req.command + ": --cong is required");
    auto c = parse_congruence(*name);
    if (!c) throw Error(ErrorCode::parse_error, "unknown congruence '" + *name + "'");
    return *c;
}

unsigned positive_m(const Request& req) {
    unsigned m = req.get_unsigned("m", 1);
    if (m == 0) throw Error(ErrorCode::invalid_argument, "--m must be positive");
    return m;
}

std::string simple_json(const std::string& command, const ojson& input, const ojson& result) {
    ojson j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = result;
    return j.dump();
}

std::string list_text(const Word& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + "]";
}

Response word_result(const Request& req, const Word& input, const Word& result, ojson extra = ojson::object()) {
    Response r;
    if (req.json) {
        ojson j;
        j["command"] = req.command;
        j["input"] = word_text(input);
        for (auto& [k, v] : extra.items()) j[k] = v;
        j["result"] = word_text(result);
        r.output = j.dump();
    } else if (!req.args.empty() && !req.args[0].empty() && req.args[0].front() == '[') {
        r.output = list_text(result);
    } else {
        r.output = word_text(result);
    }
    return r;
}

BasisId require_basis(const Request& req) {
    auto an = req.get("algebra");
    auto bn = req.get("basis");
    if (!an || !bn) throw Error(ErrorCode::parse_error, req.command + ": --algebra and --basis are required");
    auto a = parse_algebra(*an);
    auto b = parse_basis_tag(*bn);
    if (!a) throw Error(ErrorCode::parse_error, "unknown algebra '" + *an + "'");
    if (!b) throw Error(ErrorCode::parse_error, "unknown basis '" + *bn + "'");
    if (!is_defined(*a, *b))
        throw Error(ErrorCode::basis_mismatch, "basis " + *bn + " is not defined for " + algebra_name(*a));
    return {*a, *b, positive_m(req)};
}

Response cmd_count(const Request& req) {
    const std::string method = req.get_or("method", "formula");
    if (method != "formula" && method != "brute" && method != "both")
        throw Error(ErrorCode::parse_error, "unknown method '" + method + "'");
    const bool want_formula = method != "brute";
    const bool want_brute = method != "formula";
    Response r;
    auto emit = [&](const std::optional<Integer>& f, const std::optional<Integer>& b, const ojson& input) {
        if (f && b && *f != *b) r.ok = false;
        if (req.json) {
            ojson j;
            j["command"] = "count";
            j["input"] = input;
            if (f) j["formula"] = integer_json(*f);
            if (b) j["brute"] = integer_json(*b);
            j["count"] = integer_json(f ? *f : *b);
            j["agree"] = r.ok;
            r.output = j.dump();
        } else if (f && b) {
            r.output = "formula " + f->str() + "\nbrute " + b->str() + (r.ok ? "" : "\nMISMATCH");
        } else {
            r.output = (f ? *f : *b).str();
        }
    };

    if (req.has("eval")) {
        const Congruence c = require_congruence(req);
        Composition ev = parse_composition(*req.get("eval"));
        if (ev.empty()) throw Error(ErrorCode::invalid_argument, "evaluation must be nonempty");
        std::optional<Integer> f, b;
        if (want_formula) f = count_classes_formula(ev, c);
        if (want_brute) b = count_classes_brute(ev.vec(), c, req.budget);
        emit(f, b, {{"congruence", congruence_name(c)}, {"evaluation", composition_text(ev)}});
        return r;
    }
    if (auto fam = req.get("family")) {
        const unsigned n = req.get_unsigned("n", 0);
        if (n == 0) throw Error(ErrorCode::invalid_argument, "--n must be positive");
        const unsigned m = positive_m(req);
        ojson input = {{"family", *fam}, {"m", m}, {"n", n}};
        if (auto f = parse_family(*fam); f && f->kind != FamilyKind::ndpf_m && f->kind != FamilyKind::words_of_evaluation) {
            TableSpec t{*fam, f->kind, std::nullopt};
            if (req.has("cong")) {
                t.congruence = require_congruence(req);
                input["congruence"] = congruence_name(*t.congruence);
            }
            TableCell cell = compute_table_cell(t, m, n, want_formula, want_brute, req.budget);
            if (want_brute && !cell.brute)
                throw Error(ErrorCode::budget_exceeded, "family too large for brute force at budget " +
                                                            std::to_string(req.budget));
            emit(cell.formula, cell.brute, input);
            return r;
        }
        const auto names = count_sequence_families();
        if (std::find(names.begin(), names.end(), *fam) == names.end())
            throw Error(ErrorCode::parse_error, "unknown family '" + *fam + "'");
        if (want_brute) throw Error(ErrorCode::no_formula, "family '" + *fam + "' has no brute-force route");
        emit(count_sequence(*fam, n, m), std::nullopt, input);
        return r;
    }
    if (auto variant_name = req.get("narayana")) {
        auto variant = parse_narayana_variant(*variant_name);
        if (!variant) throw Error(ErrorCode::parse_error, "unknown Narayana variant '" + *variant_name + "'");
        const unsigned n = req.get_unsigned("n", 0);
        if (n == 0) throw Error(ErrorCode::invalid_argument, "--n must be positive");
        const unsigned m = positive_m(req);
        auto row = narayana_row(n, m, *variant);
        if (req.json) {
            ojson coeffs = ojson::array();
            for (const auto& c : row) coeffs.push_back(integer_json(c));
            r.output = simple_json("count", {{"narayana", *variant_name}, {"m", m}, {"n", n}}, coeffs);
        } else {
            std::vector<std::string> parts;
            for (const auto& c : row) parts.push_back(c.str());
            r.output = join(parts, " ");
        }
        return r;
    }
    if (auto series = req.get("series")) {
        if (*series != "lagrange") throw Error(ErrorCode::parse_error, "unknown series '" + *series + "'");
        const unsigned m = req.get_unsigned("m", 1);
        const unsigned maxdeg = req.get_unsigned("maxdeg", 4);
        TruncatedSeries g = lagrange_g(maxdeg, m);
        if (req.has("degree")) g = g.homogeneous(req.get_unsigned("degree", 0));
        if (req.json) {
            ojson terms = ojson::array();
            for (const auto& [c, k] : g.terms()) terms.push_back({{"composition", composition_text(c)}, {"coeff", integer_json(k)}});
            r.output = simple_json("count", {{"series", *series}, {"m", m}, {"maxdeg", maxdeg}}, terms);
        } else {
            r.output = series_text(g);
        }
        return r;
    }
    throw Error(ErrorCode::parse_error, "count: give --cong with --eval, --family, --narayana, or --series");
}

Response cmd_expand(const Request& req, bool coproduct, bool class_sum) {
    const BasisId id = require_basis(req);
    auto basis = make_basis(id);
    Response r;
    if (class_sum) {
        auto* cs = dynamic_cast<ClassSumBasis*>(basis.get());
        if (!cs) throw Error(ErrorCode::basis_mismatch, "expand needs a class-sum basis");
        Label x = basis->normalize(parse_label(id, require_arg(req, 0, "label")));
        LinearCombination e = cs->class_sum(x);
        const BasisId amb = cs->ambient().id();
        r.output = req.json ? combination_json(amb, basis->degree(x), e) : combination_text(cs->ambient(), e);
        return r;
    }
    if (coproduct) {
        Label x = basis->normalize(parse_label(id, require_arg(req, 0, "label")));
        TensorCombination t = basis->coproduct(x);
        r.output = req.json ? combination_json(id, basis->degree(x), t) : combination_text(*basis, t);
        return r;
    }
    Label x = basis->normalize(parse_label(id, require_arg(req, 0, "first label")));
    Label y = basis->normalize(parse_label(id, require_arg(req, 1, "second label")));
    LinearCombination p = basis->product(x, y);
    r.output = req.json ? combination_json(id, basis->degree(x) + basis->degree(y), p) : combination_text(*basis, p);
    return r;
}

Response tree_result(const Request& req, const std::string& input, const PlanarTree& t) {
    Response r;
    r.output = req.json ? simple_json(req.command, input, tree_text(t)) : tree_text(t);
    return r;
}

Response cmd_bijection(const Request& req) {
    auto kind = req.get("kind");
    if (!kind) throw Error(ErrorCode::parse_error, "bijection: --kind is required");
    const unsigned m = positive_m(req);
    const std::string& a = require_arg(req, 0, "input");
    const std::string& k = *kind;
    if (k == "decreasing_tree") {
        Word w = parse_input_word(a);
        if (!is_packed(w) || w.empty()) throw Error(ErrorCode::not_packed, word_text(w) + " is not a packed word");
        return tree_result(req, a, decreasing_tree(w));
    }
    if (k == "canonical_word") {
        PlanarTree t = parse_tree(a);
        return word_result(req, Word{}, canonical_word(t));
    }
    if (k == "bst") return tree_result(req, a, sylvester_bst(parse_input_word(a)));
    if (k == "bst_shape") return tree_result(req, a, shape(sylvester_bst(parse_input_word(a))));
    if (k == "ndpf_binary") return tree_result(req, a, ndpf_to_binary(parse_input_word(a)));
    if (k == "binary_ndpf") {
        Word w = binary_to_ndpf(parse_tree(a));
        return word_result(req, Word{}, w);
    }
    if (k == "ndpf_ary") return tree_result(req, a, ndpf_to_ary(parse_input_word(a), m));
    if (k == "ary_ndpf") return word_result(req, Word{}, ary_to_ndpf(parse_tree(a), m));
    if (k == "ary_mbinary") return tree_result(req, a, ary_to_mbinary(parse_tree(a), m));
    if (k == "mbinary_ary") return tree_result(req, a, mbinary_to_ary(parse_tree(a), m));
    if (k == "gd") {
        Word w = parse_input_word(a);
        if (!is_m_permutation(w, m)) throw Error(ErrorCode::not_an_m_permutation, a + " is not an m-permutation");
        Word g = gd_word(w);
        Response r;
        r.output = req.json ? simple_json(req.command, word_text(w), word_text(g)) : (g.empty() ? "[]" : word_text(g));
        return r;
    }
    if (k == "duplicial_over" || k == "duplicial_under") {
        Word u = parse_input_word(a);
        Word v = parse_input_word(require_arg(req, 1, "second word"));
        Word w = k == "duplicial_over" ? duplicial_over(u, v) : duplicial_under(u, v);
        return word_result(req, u, w);
    }
    throw Error(ErrorCode::parse_error, "unknown bijection kind '" + k + "'");
}

Response cmd_tree(const Request& req) {
    const std::string& action = require_arg(req, 0, "tree action");
    Response r;
    if (action == "comb") {
        const unsigned m = positive_m(req);
        const unsigned n = req.get_unsigned("n", 1);
        return tree_result(req, "comb", comb_tree(m, n));
    }
    if (action == "enumerate" || action == "count") {
        const std::string kind = req.get_or("kind", "ary");
        const unsigned n = req.get_unsigned("n", 1);
        const unsigned arity = req.get_unsigned("arity", 2);
        if (arity < 2) throw Error(ErrorCode::invalid_argument, "--arity must be at least 2");
        std::vector<PlanarTree> trees;
        if (kind == "ary")
            trees = enumerate_ary_trees(n, arity, req.budget);
        else if (kind == "decreasing")
            trees = enumerate_decreasing_trees(n, arity, req.budget);
        else
            throw Error(ErrorCode::parse_error, "unknown tree kind '" + kind + "'");
        if (action == "count") {
            r.output = req.json ? simple_json("tree", kind, trees.size()) : std::to_string(trees.size());
            return r;
        }
        std::vector<std::string> lines;
        for (const auto& t : trees) lines.push_back(tree_text(t));
        r.output = req.json ? simple_json("tree", kind, lines) : join(lines, "\n");
        return r;
    }
    if (action == "leq") {
        PlanarTree a = parse_tree(require_arg(req, 1, "first tree"));
        PlanarTree b = parse_tree(require_arg(req, 2, "second tree"));
        const bool le = tamari_leq(a, b, req.get_unsigned("m", 0));
        r.output = req.json ? simple_json("tree", {tree_text(a), tree_text(b)}, le) : (le ? "true" : "false");
        return r;
    }
    if (action == "dot") {
        PlanarTree t = parse_tree(require_arg(req, 1, "tree"));
        r.output = req.json ? simple_json("tree", tree_text(t), tree_dot(t)) : tree_dot(t);
        return r;
    }
    if (action == "shape") return tree_result(req, req.args.at(1), shape(parse_tree(require_arg(req, 1, "tree"))));
    if (action == "is_m_binary") {
        PlanarTree t = parse_tree(require_arg(req, 1, "tree"));
        const bool ok = is_m_binary(t, positive_m(req));
        r.output = req.json ? simple_json("tree", tree_text(t), ok) : (ok ? "true" : "false");
        return r;
    }
    throw Error(ErrorCode::parse_error, "unknown tree action '" + action + "'");
}

Response cmd_verify(const Request& req) {
    VerifyConfig cfg;
    for (const auto& s : req.options.count("suite") ? req.options.at("suite") : std::vector<std::string>{"all"}) {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part == "all") {
                cfg.suites.insert(cfg.suites.end(), {"examples", "tables", "properties"});
            } else if (part == "examples" || part == "tables" || part == "properties") {
                cfg.suites.push_back(part);
            } else {
                throw Error(ErrorCode::parse_error, "unknown suite '" + part + "'");
            }
        }
    }
    cfg.budget = req.budget;
    cfg.m = req.has("m") ? positive_m(req) : 2;
    cfg.maxdeg = req.get_unsigned("maxdeg", 3);
    cfg.fixture_dir = req.get_or("fixtures", default_fixture_dir());
    auto reports = run_verify(cfg);
    Response r;
    r.output = req.json ? report_json(reports) : report_text(reports);
    r.ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& s) { return s.passed(); });
    return r;
}

}  // namespace

Response run_request(const Request& req) {
    const std::string& c = req.command;
    if (c == "std") {
        Word w = parse_input_word(require_arg(req, 0, "word"));
        const unsigned m = positive_m(req);
        return word_result(req, w, std_m(w, m), {{"m", m}});
    }
    if (c == "pack") {
        Word w = parse_input_word(require_arg(req, 0, "word"));
        return word_result(req, w, pack(w));
    }
    if (c == "park") {
        Word w = parse_input_word(require_arg(req, 0, "word"));
        const unsigned m = positive_m(req);
        return word_result(req, w, park_m(w, m), {{"m", m}});
    }
    if (c == "canonical") {
        Word w = parse_input_word(require_arg(req, 0, "word"));
        const Congruence cong = require_congruence(req);
        return word_result(req, w, canonical(w, cong), {{"congruence", congruence_name(cong)}});
    }
    if (c == "class" && req.args.empty() && req.has("eval")) {
        const Congruence cong = require_congruence(req);
        Composition ev = parse_composition(*req.get("eval"));
        std::vector<Word> reps;
        for (const auto& cls : classes_of_evaluation(ev.vec(), cong, req.budget)) reps.push_back(canonical(cls.front(), cong));
        std::sort(reps.begin(), reps.end());
        std::vector<std::string> texts;
        for (const auto& u : reps) texts.push_back(word_text(u));
        Response r;
        if (req.json) {
            ojson j;
            j["command"] = "class";
            j["evaluation"] = composition_text(ev);
            j["congruence"] = congruence_name(cong);
            j["classes"] = texts.size();
            j["canonical"] = texts;
            r.output = j.dump();
        } else {
            r.output = join(texts, " ");
        }
        return r;
    }
    if (c == "class") {
        Word w = parse_input_word(require_arg(req, 0, "word"));
        const Congruence cong = require_congruence(req);
        auto members = cong_class(w, cong);
        std::vector<std::string> texts;
        for (const auto& u : members) texts.push_back(word_text(u));
        Response r;
        if (req.json) {
            ojson j;
            j["command"] = "class";
            j["input"] = word_text(w);
            j["congruence"] = congruence_name(cong);
            j["size"] = texts.size();
            j["class"] = texts;
            r.output = j.dump();
        } else {
            r.output = join(texts, " ");
        }
        return r;
    }
    if (c == "count") return cmd_count(req);
    if (c == "product") return cmd_expand(req, false, false);
    if (c == "coproduct") return cmd_expand(req, true, false);
    if (c == "expand") return cmd_expand(req, false, true);
    if (c == "bijection") return cmd_bijection(req);
    if (c == "tree") return cmd_tree(req);
    if (c == "verify") return cmd_verify(req);
    throw Error(ErrorCode::parse_error, "unknown command '" + c + "'");
}

}  // namespace mhopf

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/congruence.hpp"
#include "mhopf/text.hpp"
#include "mhopf/trees.hpp"
#include "mhopf/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace mhopf;

namespace {

Word w(const std::string& s) { return parse_word(s); }

using Tableau = std::vector<std::vector<Letter>>;

// Row insertion (Schensted).
Tableau rsk(const Word& u) {
    Tableau t;
    for (Letter x : u) {
        for (std::size_t r = 0;; ++r) {
            if (r == t.size()) {
                t.push_back({x});
                break;
            }
            auto it = std::upper_bound(t[r].begin(), t[r].end(), x);
            if (it == t[r].end()) {
                t[r].push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    return t;
}

std::vector<std::size_t> std_recoils(const Word& u) {
    std::vector<std::size_t> pos(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) pos[i] = i;
    std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r + 1 < pos.size(); ++r)
        if (pos[r + 1] < pos[r]) out.push_back(r + 1);
    return out;
}

// Binary search tree, letters inserted from right to left, as a bracket string.
std::string bst_string(const Word& u) {
    struct Node {
        Letter v;
        int l = -1, r = -1;
    };
    std::vector<Node> nodes;
    for (std::size_t i = u.size(); i-- > 0;) {
        nodes.push_back({u[i]});
        const int id = static_cast<int>(nodes.size()) - 1;
        if (id == 0) continue;
        int cur = 0;
        for (;;) {
            int& next = u[i] <= nodes[cur].v ? nodes[cur].l : nodes[cur].r;
            if (next < 0) {
                next = id;
                break;
            }
            cur = next;
        }
    }
    std::function<std::string(int)> rec = [&](int k) -> std::string {
        if (k < 0) return ".";
        return std::to_string(nodes[k].v) + "(" + rec(nodes[k].l) + "," + rec(nodes[k].r) + ")";
    };
    return nodes.empty() ? "." : rec(0);
}

bool occurs(const Word& u, std::size_t from, std::size_t to, const std::function<bool(Letter)>& p) {
    for (std::size_t j = from; j < to; ++j)
        if (p(u[j])) return true;
    return false;
}

// Literal reading of the defining relations; i is the position of the pair.
bool literal_swap(const Word& u, std::size_t i, Congruence c) {
    const Letter a = std::min(u[i], u[i + 1]), cc = std::max(u[i], u[i + 1]);
    if (a == cc) return false;
    const std::size_t n = u.size();
    switch (c) {
        case Congruence::hypoplactic:
            // ac...b == ca...b (a <= b < c), b...ac == b...ca (a < b <= c)
            return occurs(u, i + 2, n, [&](Letter b) { return a <= b && b < cc; }) ||
                   occurs(u, 0, i, [&](Letter b) { return a < b && b <= cc; });
        case Congruence::hyposylvester:
            // ac ~ ca if some a < b < c occurs anywhere; ab...a ~ ba...a
            return occurs(u, 0, n, [&](Letter b) { return a < b && b < cc; }) ||
                   occurs(u, i + 2, n, [&](Letter b) { return b == a; });
        case Congruence::metasylvester: {
            if (occurs(u, i + 2, n, [&](Letter b) { return b == a; })) return true;
            for (std::size_t l = 0; l < i; ++l)
                if (a < u[l] && u[l] < cc && occurs(u, i + 2, n, [&](Letter b) { return b == u[l]; })) return true;
            return false;
        }
        default:
            return false;
    }
}

std::set<Word> literal_class(const Word& start, Congruence c) {
    std::set<Word> seen{start};
    std::vector<Word> stack{start};
    while (!stack.empty()) {
        Word u = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            if (!literal_swap(u, i, c)) continue;
            Word v = u;
            std::swap(v[i], v[i + 1]);
            if (seen.insert(v).second) stack.push_back(v);
        }
    }
    return seen;
}

void evaluations(unsigned weight, unsigned parts, const std::function<void(const std::vector<Letter>&)>& f) {
    std::vector<Letter> ev;
    std::function<void(unsigned)> rec = [&](unsigned left) {
        if (left == 0) {
            f(ev);
            return;
        }
        if (ev.size() == parts) return;
        for (unsigned k = 1; k <= left; ++k) {
            ev.push_back(k);
            rec(left - k);
            ev.pop_back();
        }
    };
    rec(weight);
}

// Class partition keyed by an invariant.
template <class Key>
std::set<std::set<Word>> partition_by(const std::vector<Letter>& ev, Key key) {
    std::map<decltype(key(Word{})), std::set<Word>> groups;
    for_each_word_of_evaluation(ev, [&](const Word& u) { groups[key(u)].insert(u); });
    std::set<std::set<Word>> out;
    for (auto& [k, g] : groups) out.insert(g);
    return out;
}

std::set<std::set<Word>> library_partition(const std::vector<Letter>& ev, Congruence c) {
    std::set<std::set<Word>> out;
    for (const auto& cls : classes_of_evaluation(ev, c)) out.insert(std::set<Word>(cls.begin(), cls.end()));
    return out;
}

std::vector<std::string> canonical_texts(const std::vector<Letter>& ev, Congruence c) {
    std::vector<std::string> out;
    for (const auto& cls : classes_of_evaluation(ev, c)) out.push_back(word_text(canonical(cls.front(), c)));
    std::sort(out.begin(), out.end());
    return out;
}

bool has_aba(const Word& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            for (std::size_t k = j + 1; k < u.size(); ++k)
                if (u[i] == u[k] && u[i] < u[j]) return true;
    return false;
}

}  // namespace

TEST_CASE("plactic classes are RSK insertion fibers") {
    for (unsigned n = 1; n <= 5; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            CHECK(library_partition(ev, Congruence::plactic) == partition_by(ev, rsk));
        });
}

TEST_CASE("hypoplactic classes are recoil fibers") {
    for (unsigned n = 1; n <= 6; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            CHECK(library_partition(ev, Congruence::hypoplactic) == partition_by(ev, std_recoils));
        });
}

TEST_CASE("sylvester classes are binary search tree fibers") {
    for (unsigned n = 1; n <= 6; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            CHECK(library_partition(ev, Congruence::sylvester) == partition_by(ev, bst_string));
        });
}

TEST_CASE("nonlocal congruences match their literal relations") {
    for (Congruence c : {Congruence::hypoplactic, Congruence::hyposylvester, Congruence::metasylvester}) {
        for (unsigned n = 1; n <= 6; ++n)
            evaluations(n, 4, [&](const std::vector<Letter>& ev) {
                std::set<std::set<Word>> literal;
                for_each_word_of_evaluation(ev, [&](const Word& u) { literal.insert(literal_class(u, c)); });
                CHECK(library_partition(ev, c) == literal);
            });
    }
}

TEST_CASE("sylvester canonical representatives of evaluation 112") {
    CHECK(canonical_texts({1, 1, 2}, Congruence::sylvester) ==
          std::vector<std::string>{"1233", "2133", "2313", "2331", "3123", "3213", "3231", "3312", "3321"});
}

TEST_CASE("hyposylvester maximal words of evaluation 222") {
    CHECK(canonical_texts({2, 2, 2}, Congruence::hyposylvester) ==
          std::vector<std::string>{"112233", "211233", "223311", "311223", "321123", "322311", "331122", "332112",
                                   "332211"});
}

TEST_CASE("metasylvester canonical words") {
    CHECK(canonical(w("1413324343"), Congruence::metasylvester) == w("4114433233"));
    CHECK(canonical(w("556119367322474898"), Congruence::metasylvester) == w("559611673322744988"));
    CHECK(cong_class(w("331122"), Congruence::metasylvester) ==
          std::vector<Word>{w("133122"), w("313122"), w("331122")});
    // Each class has exactly one word avoiding a...b...a with a < b, and it is the canonical one.
    for (unsigned n = 1; n <= 6; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            for (const auto& cls : classes_of_evaluation(ev, Congruence::metasylvester)) {
                std::vector<Word> avoiders;
                for (const auto& u : cls)
                    if (!has_aba(u)) avoiders.push_back(u);
                REQUIRE(avoiders.size() == 1);
                CHECK(canonical(cls.front(), Congruence::metasylvester) == avoiders.front());
            }
        });
}

TEST_CASE("class counts: formula against brute force") {
    for (Congruence c : all_congruences) {
        for (unsigned n = 1; n <= 6; ++n)
            evaluations(n, 5, [&](const std::vector<Letter>& ev) {
                CAPTURE(congruence_name(c));
                CAPTURE(composition_text(Composition(ev)));
                CHECK(count_classes_formula(Composition(ev), c) == count_classes_brute(ev, c));
            });
    }
    CHECK(count_classes(Composition{2, 2, 2}, Congruence::hypoplactic, CountMethod::formula) == 4);
}

TEST_CASE("sylvester counts over evaluations 2...21") {
    const int expected[] = {1, 2, 7, 30, 143};
    for (unsigned k = 0; k < 5; ++k) {
        std::vector<Letter> ev(k, 2);
        ev.push_back(1);
        CHECK(count_classes_brute(ev, Congruence::sylvester) == expected[k]);
    }
}

TEST_CASE("hyposylvester signature separates classes") {
    for (unsigned n = 1; n <= 6; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            CHECK(library_partition(ev, Congruence::hyposylvester) == partition_by(ev, signature_hs));
        });
}

TEST_CASE("refinement chain") {
    for (unsigned n = 1; n <= 5; ++n)
        evaluations(n, 4, [](const std::vector<Letter>& ev) {
            for (const auto& [fine, coarse] : std::vector<std::pair<Congruence, Congruence>>{
                     {Congruence::metasylvester, Congruence::sylvester},
                     {Congruence::sylvester, Congruence::hyposylvester},
                     {Congruence::hyposylvester, Congruence::hypoplactic},
                     {Congruence::plactic, Congruence::hypoplactic}}) {
                for (const auto& cls : classes_of_evaluation(ev, fine)) {
                    auto big = cong_class(cls.front(), coarse);
                    for (const auto& u : cls) CHECK(std::binary_search(big.begin(), big.end(), u));
                }
            }
        });
}

TEST_CASE("parsing and errors") {
    CHECK(parse_congruence("sylvester") == Congruence::sylvester);
    CHECK_FALSE(parse_congruence("foo").has_value());
    CHECK_THROWS_AS(cong_class(w("13243546"), Congruence::hyposylvester, 10), Error);
}

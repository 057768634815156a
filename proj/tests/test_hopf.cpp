#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/hopf.hpp"
#include "mhopf/text.hpp"
#include "mhopf/words.hpp"

#include <algorithm>
#include <functional>
#include <map>

using namespace mhopf;

namespace {

Word w(const std::string& s) { return parse_word(s); }

std::shared_ptr<HopfBasis> basis(Algebra a, BasisTag b, unsigned m) { return make_basis({a, b, m}); }

std::string product_text(Algebra a, BasisTag b, unsigned m, const std::string& x, const std::string& y) {
    auto h = basis(a, b, m);
    return combination_text(*h, h->product(Label(w(x)), Label(w(y))));
}

std::string coproduct_text(Algebra a, BasisTag b, unsigned m, const std::string& x) {
    auto h = basis(a, b, m);
    return combination_text(*h, h->coproduct(Label(w(x))));
}

void naive_shuffle(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur, std::map<Word, int>& out) {
    if (i == u.size() && j == v.size()) {
        ++out[cur];
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        naive_shuffle(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        naive_shuffle(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

std::map<Label, Integer> as_terms(const std::map<Word, int>& m) {
    std::map<Label, Integer> out;
    for (const auto& [k, c] : m) out[Label(k)] = c;
    return out;
}

// All words of the given length over 1..max_letter.
void all_words(std::size_t len, Letter max_letter, const std::function<void(const Word&)>& f) {
    Word u(std::vector<Letter>(len, 1));
    if (len == 0) {
        f(u);
        return;
    }
    for (;;) {
        f(u);
        std::size_t i = len;
        while (i > 0 && u[i - 1] == max_letter) u[--i] = 1;
        if (i == 0) return;
        ++u[i - 1];
    }
}

Word naive_pack(const Word& u) {
    std::vector<Letter> values(u.begin(), u.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Word out;
    for (Letter x : u)
        out.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1));
    return out;
}

Word slice(const Word& u, std::size_t from, std::size_t to) { return Word(u.begin() + from, u.begin() + to); }

// Standardize (stable by position), then merge blocks of m values.
Word naive_std_m(const Word& u, unsigned m) {
    Word out(std::vector<Letter>(u.size()));
    Letter next = 0;
    for (Letter v = 1; v <= max_letter(u); ++v)
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] == v) out[i] = next++ / m + 1;
    return out;
}

}  // namespace

TEST_CASE("F basis product is the shifted shuffle") {
    auto f = basis(Algebra::mfqsym, BasisTag::F, 2);
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"11", "1212"}, {"2121", "11"}, {"1221", "2211"}}) {
        Word a = w(x), b = w(y), cur;
        Word shifted = b;
        for (auto& l : shifted) l += max_letter(a);
        std::map<Word, int> expected;
        naive_shuffle(a, 0, shifted, 0, cur, expected);
        CHECK(f->product(Label(a), Label(b)).terms() == as_terms(expected));
    }
}

TEST_CASE("G basis product is the convolution") {
    auto g = basis(Algebra::mfqsym, BasisTag::G, 2);
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"2121", "11"}, {"11", "1221"}, {"1122", "11"}}) {
        Word a = w(x), b = w(y);
        const Letter n = max_letter(a), p = max_letter(b);
        std::map<Word, int> expected;
        all_words(a.size() + b.size(), n + p, [&](const Word& c) {
            if (!is_m_permutation(c, 2)) return;
            // Each side keeps whole value blocks.
            const Word l = slice(c, 0, a.size()), r = slice(c, a.size(), c.size());
            if (naive_std_m(l, 2) == a && naive_std_m(r, 2) == b && naive_pack(l) == a && naive_pack(r) == b)
                ++expected[c];
        });
        CHECK(g->product(Label(a), Label(b)).terms() == as_terms(expected));
    }
}

TEST_CASE("F product is dual to G coproduct") {
    auto f = basis(Algebra::mfqsym, BasisTag::F, 2);
    auto g = basis(Algebra::mfqsym, BasisTag::G, 2);
    for (unsigned d1 = 1; d1 <= 2; ++d1)
        for (unsigned d2 = 1; d1 + d2 <= 3; ++d2)
            for (const auto& x : f->labels(d1))
                for (const auto& y : f->labels(d2)) {
                    auto prod = f->product(x, y);
                    for (const auto& z : f->labels(d1 + d2)) CHECK(prod.coeff(z) == g->coproduct(z).coeff(x, y));
                }
}

TEST_CASE("WQSym M product and coproduct follow the packing definitions") {
    const unsigned m = 2;
    auto mb = basis(Algebra::mwqsym, BasisTag::M, m);
    for (unsigned d1 = 1; d1 <= 2; ++d1)
        for (unsigned d2 = 1; d1 + d2 <= 3; ++d2)
            for (const auto& x : mb->labels(d1))
                for (const auto& y : mb->labels(d2)) {
                    const Word& a = std::get<Word>(x);
                    const Word& b = std::get<Word>(y);
                    std::map<Word, int> expected;
                    all_words(a.size() + b.size(), max_letter(a) + max_letter(b), [&](const Word& c) {
                        if (naive_pack(c) != c) return;
                        if (naive_pack(slice(c, 0, a.size())) == a && naive_pack(slice(c, a.size(), c.size())) == b)
                            ++expected[c];
                    });
                    CHECK(mb->product(x, y).terms() == as_terms(expected));
                }
    for (const auto& x : mb->labels(3)) {
        const Word& u = std::get<Word>(x);
        TensorCombination expected;
        for (Letter k = 0; k <= max_letter(u); ++k) {
            Word lo, hi;
            for (Letter l : u) (l <= k ? lo : hi).push_back(l);
            if (lo.size() % m || hi.size() % m) continue;
            Label left = lo.empty() ? Label{} : Label(lo);
            Label right = hi.empty() ? Label{} : Label(naive_pack(hi));
            expected.add(left, right, 1);
        }
        CHECK(mb->coproduct(x) == expected);
    }
}

TEST_CASE("printed mFQSym expansions") {
    CHECK(product_text(Algebra::mfqsym, BasisTag::G, 2, "2121", "11") == "G_212133 + G_313122 + G_323211");
    CHECK(basis(Algebra::mfqsym, BasisTag::F, 2)->product(Label(w("11")), Label(w("1212"))).terms().size() == 15);
    CHECK(coproduct_text(Algebra::mfqsym, BasisTag::F, 2, "1122") == "1 (x) F_1122 + F_11 (x) F_11 + F_1122 (x) 1");
    CHECK(coproduct_text(Algebra::mfqsym, BasisTag::F, 2, "2211") == "1 (x) F_2211 + F_11 (x) F_11 + F_2211 (x) 1");
    // Every other F indexed by a rearrangement of 1122 is primitive.
    for (const std::string s : {"1212", "1221", "2112", "2121"})
        CHECK(coproduct_text(Algebra::mfqsym, BasisTag::F, 2, s) == "1 (x) F_" + s + " + F_" + s + " (x) 1");
}

TEST_CASE("decreasing-tree class sums") {
    auto p = std::dynamic_pointer_cast<ClassSumBasis>(basis(Algebra::mdt, BasisTag::P, 2));
    REQUIRE(p);
    for (const std::string s : {"113322", "311322", "331122", "321123"}) {
        LinearCombination expected;
        for (const auto& u : cong_class(w(s), Congruence::metasylvester)) expected.add(Label(u), 1);
        CHECK(p->class_sum(Label(w(s))) == expected);
    }
    CHECK(product_text(Algebra::mdt, BasisTag::P, 2, "11", "1122") ==
          "P_112233 + P_211233 + P_221133 + P_223113 + P_223311");
    CHECK(product_text(Algebra::mdt, BasisTag::Q, 2, "11", "2211") == "Q_113322 + Q_223311 + Q_332211");
    CHECK(coproduct_text(Algebra::mdt, BasisTag::P, 2, "322311") == "1 (x) P_322311 + P_2112 (x) P_11 + P_322311 (x) 1");
}

TEST_CASE("mNCSF ribbon products") {
    auto r = basis(Algebra::mncsf, BasisTag::R, 2);
    const Label eps(Word{});
    CHECK(combination_text(*r, r->product(eps, Label(w("1")))) == "R_01 + R_11 + R_21");
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"21", "0"}, {"0", "1"}}) {
        Word a = parse_code_word(x), b = parse_code_word(y);
        LinearCombination expected;
        for (Letter k = 0; k <= 2; ++k) {
            Word c = a;
            c.push_back(k);
            for (Letter l : b) c.push_back(l);
            expected.add(Label(c), 1);
        }
        CHECK(r->product(Label(a), Label(b)) == expected);
        CHECK(ncsf_product_formula(a, b, 2) == expected);
    }
    auto f = basis(Algebra::mncsf, BasisTag::F, 2);
    CHECK(combination_text(*f, f->product(Label(w("1")), eps)) == "F_02 + F_10 + F_21");
    CHECK(combination_text(*f, f->product(eps, Label(w("1")))) == "F_01 + F_12 + F_20");
}

TEST_CASE("bialgebra axioms for every basis") {
    for (unsigned m = 1; m <= 2; ++m)
        for (const auto& id : all_bases(m)) {
            auto b = make_basis(id);
            BialgebraReport rep = check_bialgebra(*b, 3);
            CAPTURE(algebra_name(id.algebra));
            CAPTURE(basis_tag_name(id.basis));
            CAPTURE(rep.failure);
            CHECK(rep.passed);
            CHECK(rep.checks > 0);
        }
}

TEST_CASE("congruence class sums are closed") {
    for (Congruence c : all_congruences) {
        auto b = make_congruence_basis(Algebra::mfqsym, c, 2);
        for (const auto& x : b->labels(1))
            for (const auto& y : b->labels(2)) {
                auto prod = b->product(x, y);
                // Lifting back gives the ambient product exactly.
                LinearCombination lifted;
                for (const auto& [l, k] : prod.terms()) {
                    LinearCombination s = b->class_sum(l);
                    for (const auto& [u, one] : s.terms()) lifted.add(u, k * one);
                }
                CHECK(lifted == multiply(b->ambient(), b->class_sum(x), b->class_sum(y)));
            }
    }
}

TEST_CASE("commutative image") {
    for (const std::string s : {"11", "1122", "2121", "112233"})
        for (unsigned k = 1; k <= 3; ++k) CHECK(commutative_image_check(w(s), 2, k));
}

TEST_CASE("basis errors") {
    CHECK_THROWS_AS(basis(Algebra::mfqsym, BasisTag::F, 2)->normalize(Label(w("12"))), Error);
    CHECK_FALSE(is_defined(Algebra::mfqsym, BasisTag::R));
}

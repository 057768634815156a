#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/congruence.hpp"
#include "mhopf/text.hpp"
#include "mhopf/trees.hpp"
#include "mhopf/words.hpp"

#include <map>
#include <set>

using namespace mhopf;

namespace {

Word w(const std::string& s) { return parse_word(s); }
PlanarTree t(const std::string& s) { return parse_tree(s); }

Integer fuss_catalan(unsigned n, unsigned m) { return binomial((m + 1) * n, n) / (m * n + 1); }

// Number of intervals of the m-Tamari lattice of size n:
// (m+1) / (n (mn+1)) * C((m+1)^2 n + m, n-1).
Integer tamari_intervals(unsigned n, unsigned m) {
    return Integer(m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1) / (n * (m * n + 1));
}

}  // namespace

TEST_CASE("tree text round trip") {
    for (const auto& s : {".", "(.,.)", "((.,.),(.,(.,.)))", "4(.,1(.,.,.),.,3(.,.,2(.,.),.,.))"})
        CHECK(tree_text(t(s)) == s);
    CHECK_THROWS_AS(parse_tree("(.,"), Error);
}

TEST_CASE("decreasing trees of the worked examples") {
    CHECK(tree_text(decreasing_tree(w("1413324343"))) == "4(.,1(.,.,.),.,3(.,.,2(.,.),.,.))");
    CHECK(canonical_word(decreasing_tree(w("1413324343"))) == w("4114433233"));
    CHECK(tree_text(decreasing_tree(w("556119367322474898"))) ==
          "9(5(.,.,.),7(6(.,1(.,.,.),.),3(.,.,2(.,.,.)),4(.,.,.)),8(.,.,.))");
    CHECK(canonical_word(decreasing_tree(w("556119367322474898"))) == w("559611673322744988"));
}

TEST_CASE("decreasing tree fibers are metasylvester classes") {
    for (const Composition ev : {Composition{2, 2, 2}, Composition{1, 2, 1, 2}, Composition{3, 1, 2}}) {
        std::map<PlanarTree, std::set<Word>> fibers;
        for_each_word_of_evaluation(ev.vec(), [&](const Word& u) { fibers[decreasing_tree(u)].insert(u); });
        std::set<std::set<Word>> classes;
        for (const auto& cls : classes_of_evaluation(ev.vec(), Congruence::metasylvester))
            classes.insert(std::set<Word>(cls.begin(), cls.end()));
        std::set<std::set<Word>> from_trees;
        for (auto& [k, v] : fibers) from_trees.insert(v);
        CHECK(classes == from_trees);
    }
}

TEST_CASE("tree counts") {
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 0; n <= 5; ++n) CHECK(enumerate_ary_trees(n, m + 1).size() == fuss_catalan(n, m));
    // Decreasing (m+1)-ary trees: 1 (1+m) (1+2m) ...
    for (unsigned m = 1; m <= 2; ++m) {
        Integer expected = 1;
        for (unsigned n = 1; n <= 5; ++n) {
            CHECK(enumerate_decreasing_trees(n, m + 1).size() == expected);
            expected *= 1 + n * m;
        }
    }
}

TEST_CASE("binary search trees and combs") {
    CHECK(tree_text(shape(sylvester_bst(w("78563412")))) == "((.,.),((.,.),((.,.),((.,.),.))))");
    CHECK(comb_tree(2, 4) == shape(sylvester_bst(w("78563412"))));
}

TEST_CASE("duplicial bijection") {
    CHECK(duplicial_over(w("12"), w("113")) == w("12335"));
    CHECK(duplicial_under(w("12"), w("113")) == w("12224"));
    const PlanarTree bst = shape(sylvester_bst(w("213132")));
    CHECK(tree_text(bst) == "(((.,.),(.,.)),((.,.),.))");
    CHECK(binary_to_ndpf(bst) == w("113344"));
    CHECK(ndpf_to_binary(w("113344")) == bst);
    for (unsigned n = 1; n <= 6; ++n) {
        std::set<PlanarTree> images;
        for (const auto& p : ndpf_list(n, 1)) {
            PlanarTree b = ndpf_to_binary(p);
            CHECK(binary_to_ndpf(b) == p);
            images.insert(b);
        }
        CHECK(images.size() == fuss_catalan(n, 1));
    }
    CHECK_THROWS_AS(ndpf_to_binary(w("13")), Error);
}

TEST_CASE("(m+1)-ary trees of nondecreasing m-parking functions") {
    CHECK(tree_text(ndpf_to_ary(w("134"), 2)) == "(.,.,(.,(.,.,.),.))");
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            for (const auto& p : ndpf_list(n, m)) CHECK(ary_to_ndpf(ndpf_to_ary(p, m), m) == p);
}

TEST_CASE("m-binary trees") {
    const PlanarTree bst = shape(sylvester_bst(w("213132")));
    CHECK(is_m_binary(bst, 2));
    CHECK(tree_text(mbinary_to_ary(bst, 2)) == "(.,.,(.,(.,.,.),.))");
    for (unsigned m = 1; m <= 2; ++m) {
        for (unsigned n = 1; n <= 3; ++n) {
            std::set<PlanarTree> shapes;
            for (const auto& alpha : enumerate_family({FamilyKind::m_permutations, {}}, n, m)) {
                PlanarTree s = shape(sylvester_bst(alpha));
                CHECK(is_m_binary(s, m));
                shapes.insert(s);
                Word full = binary_to_ndpf(s);
                Word every;
                for (std::size_t i = 0; i < full.size(); i += m) every.push_back(full[i]);
                CHECK(mbinary_to_ary(s, m) == ndpf_to_ary(every, m));
            }
            CHECK(shapes.size() == fuss_catalan(n, m));
            std::size_t recognized = 0;
            for (const auto& b : enumerate_ary_trees(m * n, 2)) recognized += is_m_binary(b, m);
            CHECK(recognized == shapes.size());
        }
        for (unsigned n = 1; n <= 4; ++n)
            for (const auto& a : enumerate_ary_trees(n, m + 1)) CHECK(mbinary_to_ary(ary_to_mbinary(a, m), m) == a);
    }
    CHECK_THROWS_AS(mbinary_to_ary(t("(.,(.,.))"), 2), Error);
}

TEST_CASE("m-binary trees are closed under rotation downwards") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& a : enumerate_ary_trees(n, 3)) {
            PlanarTree b = ary_to_mbinary(a, 2);
            for (const auto& d : tamari_down_set(b)) CHECK(is_m_binary(d, 2));
        }
}

TEST_CASE("Tamari interval counts") {
    for (unsigned m = 1; m <= 2; ++m) {
        for (unsigned n = 1; n <= (m == 1 ? 5u : 4u); ++n) {
            auto trees = enumerate_ary_trees(n, m + 1);
            std::size_t intervals = 0;
            for (const auto& a : trees)
                for (const auto& b : trees) intervals += tamari_leq(a, b, m);
            CHECK(intervals == tamari_intervals(n, m));
        }
    }
}

TEST_CASE("rotations") {
    const PlanarTree left_comb = t("(((.,.),.),.)");
    CHECK(right_rotations(left_comb).size() == 2);
    CHECK(left_rotations(left_comb).empty());
    CHECK(tamari_up_set(left_comb).size() == 5);
}

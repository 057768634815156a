#pragma once

#include "mhopf/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mhopf {

class PlanarTree {
public:
    PlanarTree() = default;  // a leaf
    static PlanarTree leaf() { return {}; }
    static PlanarTree node(std::vector<PlanarTree> children, std::optional<Letter> label = std::nullopt);
    static PlanarTree binary(PlanarTree left, PlanarTree right) { return node({std::move(left), std::move(right)}); }

    bool is_leaf() const { return leaf_; }
    const std::optional<Letter>& label() const { return label_; }
    const std::vector<PlanarTree>& children() const { return children_; }
    std::vector<PlanarTree>& children() { return children_; }
    const PlanarTree& child(std::size_t i) const { return children_.at(i); }
    PlanarTree& child(std::size_t i) { return children_.at(i); }

    std::size_t internal_nodes() const;
    // Arity shared by all internal nodes, or nullopt if mixed / no nodes.
    std::optional<std::size_t> uniform_arity() const;

    friend bool operator==(const PlanarTree& a, const PlanarTree& b);
    friend bool operator<(const PlanarTree& a, const PlanarTree& b);
    friend bool operator!=(const PlanarTree& a, const PlanarTree& b) { return !(a == b); }

private:
    bool leaf_ = true;
    std::optional<Letter> label_;
    std::vector<PlanarTree> children_;
};

int compare(const PlanarTree& a, const PlanarTree& b);

std::string tree_text(const PlanarTree& t);
PlanarTree parse_tree(const std::string& text);
std::string tree_dot(const PlanarTree& t);

PlanarTree shape(const PlanarTree& t);

PlanarTree decreasing_tree(const Word& w);
Word canonical_word(const PlanarTree& t);
bool is_decreasing_tree(const PlanarTree& t);

PlanarTree sylvester_bst(const Word& w);

// Duplicial word operations on nondecreasing parking functions.
Word duplicial_over(const Word& a, const Word& b);   // a . b[|a|]
Word duplicial_under(const Word& a, const Word& b);  // a . b[max(a)-1]
PlanarTree ndpf_to_binary(const Word& p);
Word binary_to_ndpf(const PlanarTree& t);

PlanarTree ndpf_to_ary(const Word& p, unsigned m);
Word ary_to_ndpf(const PlanarTree& t, unsigned m);

PlanarTree ary_to_mbinary(const PlanarTree& t, unsigned m);
PlanarTree mbinary_to_ary(const PlanarTree& t, unsigned m);
bool is_m_binary(const PlanarTree& t, unsigned m);

// Graft s on the leftmost (resp. rightmost) leaf of t.
PlanarTree graft_leftmost(const PlanarTree& t, const PlanarTree& s);
PlanarTree graft_rightmost(const PlanarTree& t, const PlanarTree& s);

// Right rotations N(N(A,B),C) -> N(A,N(B,C)) at every position.
std::vector<PlanarTree> right_rotations(const PlanarTree& t);
std::vector<PlanarTree> left_rotations(const PlanarTree& t);
// All binary trees above t in the Tamari order (including t), sorted.
std::vector<PlanarTree> tamari_up_set(const PlanarTree& t);
std::vector<PlanarTree> tamari_down_set(const PlanarTree& t);
// m = 0: binary trees; m >= 1: (m+1)-ary trees compared through ary_to_mbinary.
bool tamari_leq(const PlanarTree& a, const PlanarTree& b, unsigned m);

PlanarTree comb_tree(unsigned m, unsigned n);

std::vector<PlanarTree> enumerate_ary_trees(unsigned n, unsigned arity, std::size_t budget = default_budget);
std::vector<PlanarTree> enumerate_decreasing_trees(unsigned n, unsigned arity, std::size_t budget = default_budget);

}  // namespace mhopf

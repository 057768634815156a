#pragma once

#include "mhopf/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mhopf {

struct EvaluationPair {
    std::vector<Letter> ev;  // ev[i] = multiplicity of letter i+1
    Composition pev;
};

EvaluationPair evaluation_of(const Word& w);

Word std_m(const Word& w, unsigned m);
Word pack(const Word& w);
Word park_m(const Word& w, unsigned m);
Word park_decrement(const Word& w);

Word shift(const Word& w, Letter k);
Word restrict(const Word& w, Letter lo, Letter hi);

// Shuffle of u and v (with multiplicity when letters coincide).
std::vector<Word> shuffle(const Word& u, const Word& v);
// u shuffled with v shifted by max(u).
std::vector<Word> shifted_shuffle(const Word& u, const Word& v);
std::vector<Word> shifted_shuffle_by(const Word& u, const Word& v, Letter k);

std::vector<Word> m_convolution(const Word& alpha, const Word& beta, unsigned m);

bool is_m_word(const Word& w, unsigned m);
bool is_m_permutation(const Word& w, unsigned m);
bool is_packed(const Word& w);
bool is_m_parking(const Word& w, unsigned m);
bool is_nondecreasing(const Word& w);
bool is_ndpf(const Word& w, unsigned m);
std::size_t inversions(const Word& w);

// Recoil composition of std(w).
Composition recoil_composition(const Word& w);

// Word whose letter i+1 occurs ev[i] times, in nondecreasing order.
Word sorted_word(const std::vector<Letter>& ev);

// Compositions.
std::vector<Composition> compositions(unsigned n);
std::vector<Composition> coarsenings(const Composition& c);
std::vector<Composition> partitions(unsigned n);
Composition mirror(const Composition& c);
Composition scale(const Composition& c, unsigned m);
bool is_coarsening(const Composition& coarse, const Composition& fine);

enum class FamilyKind {
    m_permutations,
    packed_m_words,
    m_parking,
    ndpf_m,
    multiparking,
    words_of_evaluation,
};

struct Family {
    FamilyKind kind;
    Composition evaluation;  // words_of_evaluation only
};

std::optional<Family> parse_family(const std::string& name);
std::string family_name(FamilyKind kind);

// Nondecreasing m-parking functions of length n (small, always materialized).
std::vector<Word> ndpf_list(unsigned n, unsigned m);

// Raw evaluations of the family members, each listed once; members of the
// family are exactly the words having one of these evaluations.
std::vector<std::vector<Letter>> family_evaluations(const Family& f, unsigned n, unsigned m);

Integer family_size(const Family& f, unsigned n, unsigned m);

// Streams every member once; throws budget_exceeded before streaming if the
// family is larger than budget.
void for_each_member(const Family& f, unsigned n, unsigned m, std::size_t budget,
                     const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_family(const Family& f, unsigned n, unsigned m,
                                   std::size_t budget = default_budget);

// All words with the given raw evaluation, lexicographic order.
void for_each_word_of_evaluation(const std::vector<Letter>& ev,
                                 const std::function<void(const Word&)>& visit);

}  // namespace mhopf

#pragma once

#include "mhopf/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mhopf {

enum class Congruence { plactic, hypoplactic, sylvester, hyposylvester, metasylvester };

inline constexpr Congruence all_congruences[] = {Congruence::plactic, Congruence::hypoplactic,
                                                 Congruence::sylvester, Congruence::hyposylvester,
                                                 Congruence::metasylvester};

std::optional<Congruence> parse_congruence(const std::string& name);
std::string congruence_name(Congruence c);

// Words one elementary rewriting away, sorted and distinct.
std::vector<Word> neighbors(const Word& w, Congruence c);

// Full class of w, sorted.
std::vector<Word> cong_class(const Word& w, Congruence c, std::size_t budget = closure_budget);

Word canonical(const Word& w, Congruence c, std::size_t budget = closure_budget);

// For each pair of consecutive letters k < k' of w, the number of k' to the
// left of the last k (computed on pack(w)).
std::vector<Letter> signature_hs(const Word& w);

enum class CountMethod { formula, brute };

Integer count_classes(const Composition& evaluation, Congruence c, CountMethod method,
                      std::size_t budget = default_budget);
Integer count_classes_formula(const Composition& evaluation, Congruence c);
Integer count_classes_brute(const std::vector<Letter>& ev, Congruence c, std::size_t budget = default_budget);

// Partition of all words of the given raw evaluation into classes.
std::vector<std::vector<Word>> classes_of_evaluation(const std::vector<Letter>& ev, Congruence c,
                                                     std::size_t budget = default_budget);

Integer kostka(const Composition& shape, const Composition& content);

}  // namespace mhopf

#pragma once

#include "mhopf/core.hpp"

#include <string>
#include <vector>

namespace mhopf {

// Digit string when every letter is at most 9, else "[a,b,...]".
std::string word_text(const Word& w);
// Accepts digit strings (letters 1..9, "" for the empty word) and bracketed lists.
Word parse_word(const std::string& text);
// Same, but letter 0 is allowed.
Word parse_code_word(const std::string& text);

// "2,1,3"; also accepts a bracketed list or a bare digit string.
std::string composition_text(const Composition& c);
Composition parse_composition(const std::string& text);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace mhopf

#include "mhopf/core.hpp"

#include <algorithm>

namespace mhopf {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok: return "Ok";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::not_an_m_word: return "NotAnMWord";
        case ErrorCode::not_an_m_permutation: return "NotAnMPermutation";
        case ErrorCode::not_packed: return "NotPacked";
        case ErrorCode::not_ndpf: return "NotNDPF";
        case ErrorCode::not_m_ndpf: return "NotMNDPF";
        case ErrorCode::not_m_binary: return "NotMBinary";
        case ErrorCode::size_mismatch: return "SizeMismatch";
        case ErrorCode::budget_exceeded: return "BudgetExceeded";
        case ErrorCode::closure_violation: return "ClosureViolation";
        case ErrorCode::non_unique_canonical: return "NonUniqueCanonical";
        case ErrorCode::no_formula: return "NoFormula";
        case ErrorCode::degree_mismatch: return "DegreeMismatch";
        case ErrorCode::basis_mismatch: return "BasisMismatch";
    }
    return "Unknown";
}

Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.vec().insert(r.end(), b.begin(), b.end());
    return r;
}

Letter max_letter(const Word& w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

std::size_t weight(const Composition& c) {
    std::size_t s = 0;
    for (Letter x : c) s += x;
    return s;
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer multinomial(const std::vector<Letter>& parts) {
    Integer r = 1;
    unsigned total = 0;
    for (Letter p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

}  // namespace mhopf

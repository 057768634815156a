#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhopf {

using Integer = boost::multiprecision::cpp_int;
using Letter = std::uint32_t;

inline constexpr std::size_t default_budget = 200000;
inline constexpr std::size_t closure_budget = 1000000;

enum class ErrorCode {
    ok = 0,
    parse_error,
    invalid_argument,
    not_an_m_word,
    not_an_m_permutation,
    not_packed,
    not_ndpf,
    not_m_ndpf,
    not_m_binary,
    size_mismatch,
    budget_exceeded,
    closure_violation,
    non_unique_canonical,
    no_formula,
    degree_mismatch,
    basis_mismatch,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Shared shape of Word and Composition: a value-semantic integer sequence.
template <class Tag>
class Sequence {
public:
    using value_type = Letter;
    using iterator = std::vector<Letter>::iterator;
    using const_iterator = std::vector<Letter>::const_iterator;

    Sequence() = default;
    Sequence(std::initializer_list<Letter> init) : data_(init) {}
    explicit Sequence(std::vector<Letter> data) : data_(std::move(data)) {}
    template <class It>
    Sequence(It first, It last) : data_(first, last) {}

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    Letter operator[](std::size_t i) const { return data_[i]; }
    Letter& operator[](std::size_t i) { return data_[i]; }
    Letter back() const { return data_.back(); }
    void push_back(Letter x) { data_.push_back(x); }
    void pop_back() { data_.pop_back(); }
    void reserve(std::size_t n) { data_.reserve(n); }

    iterator begin() { return data_.begin(); }
    iterator end() { return data_.end(); }
    const_iterator begin() const { return data_.begin(); }
    const_iterator end() const { return data_.end(); }

    const std::vector<Letter>& vec() const { return data_; }
    std::vector<Letter>& vec() { return data_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
        return a.data_ <=> b.data_;
    }

private:
    std::vector<Letter> data_;
};

struct WordTag {};
struct CompositionTag {};

using Word = Sequence<WordTag>;
using Composition = Sequence<CompositionTag>;

Word operator+(const Word& a, const Word& b);

struct SequenceHash {
    template <class Tag>
    std::size_t operator()(const Sequence<Tag>& s) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : s) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Letter max_letter(const Word& w);
std::size_t weight(const Composition& c);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer multinomial(const std::vector<Letter>& parts);

}  // namespace mhopf

#pragma once

#include "mhopf/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mhopf {

enum class SeriesBasis { S, R, M, E };

std::string series_basis_name(SeriesBasis b);

class TruncatedSeries {
public:
    TruncatedSeries(SeriesBasis basis, unsigned maxdeg) : basis_(basis), maxdeg_(maxdeg) {}

    SeriesBasis basis() const { return basis_; }
    unsigned maxdeg() const { return maxdeg_; }
    const std::map<Composition, Integer>& terms() const { return terms_; }

    void add(const Composition& c, const Integer& coeff);
    Integer coeff(const Composition& c) const;
    TruncatedSeries homogeneous(unsigned degree) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    SeriesBasis basis_;
    unsigned maxdeg_;
    std::map<Composition, Integer> terms_;
};

// Concatenation product of S-basis (or R-less multiplicative basis) series.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Fixed point of h = sum_n S_n h^{mn}; m = 0 is treated as m = 1.
TruncatedSeries lagrange_g(unsigned maxdeg, unsigned m);

enum class AdamsDirection { phi, psi };
TruncatedSeries adams(const TruncatedSeries& s, unsigned m, AdamsDirection direction);

// S <-> R (and M <-> E) conversion over the coarsening order.
TruncatedSeries s_r_convert(const TruncatedSeries& s);

struct SignedRibbon {
    int sign;
    Composition ribbon;
};
// phi_m(R_I) = sign R_K, or nullopt when it vanishes.
std::optional<SignedRibbon> ribbon_phi_m(const Composition& c, unsigned m);
// Same quantity through the S basis; returns the full R-basis image.
TruncatedSeries ribbon_phi_m_via_s(const Composition& c, unsigned m);

// Number of nondecreasing parking functions with packed evaluation J, which
// is the coefficient of S^J in g.
Integer ndpf_count_with_pev(const Composition& j);
Integer sylvester_count(const Composition& c);
Integer sylvester_count_series(const Composition& c, const TruncatedSeries& g);

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    static IntPolynomial monomial(const Integer& c, std::size_t degree);

    const std::vector<Integer>& coeffs() const { return c_; }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    Integer at(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    Integer eval(const Integer& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Integer& k) const;
    IntPolynomial divide_exact(const Integer& k) const;
    // p(x) -> p(1 + q)
    IntPolynomial shift_one() const;
    // x^{d} p(1/x)
    IntPolynomial reciprocal(std::size_t d) const;
    // p / x, requires a zero constant term
    IntPolynomial divide_by_x() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<Integer> c_;
};

std::string polynomial_text(const IntPolynomial& p, char var = 'x');

enum class NarayanaVariant { N, P, triangle_std, triangle_q, triangle_q_rev };

std::optional<NarayanaVariant> parse_narayana_variant(const std::string& name);

IntPolynomial narayana_n(unsigned n, unsigned m);
IntPolynomial narayana_p(unsigned n, unsigned m);
IntPolynomial narayana_p_enumerated(unsigned n, unsigned m);
// The m-independent closed form printed for the hypoplactic count, read with
// row index n-1 (matches the m = 2 polynomials).
IntPolynomial narayana_p_over_x_closed(unsigned n);
std::vector<Integer> narayana_row(unsigned n, unsigned m, NarayanaVariant variant);

Integer count_sequence(const std::string& family, unsigned n, unsigned m);
std::vector<std::string> count_sequence_families();

IntPolynomial q_ndpf_poly(unsigned n, unsigned m, std::size_t budget = default_budget);

}  // namespace mhopf

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/congruence.hpp"
#include "mhopf/series.hpp"
#include "mhopf/text.hpp"
#include "mhopf/words.hpp"

#include <map>

using namespace mhopf;

namespace {

// Packed evaluation of a nondecreasing word: run lengths.
Composition runs(const Word& p) {
    Composition c;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == 0 || p[i] != p[i - 1])
            c.push_back(1);
        else
            ++c[c.size() - 1];
    }
    return c;
}

// Coefficient of S^I in g^(m): ordinary nondecreasing parking functions of
// length m|I| whose run lengths are m I.
std::map<Composition, Integer> ndpf_by_runs(unsigned n, unsigned m) {
    std::map<Composition, Integer> out;
    for (const auto& p : ndpf_list(m * n, 1)) {
        Composition r = runs(p);
        bool ok = true;
        Composition scaled;
        for (Letter x : r) {
            if (x % m) ok = false;
            scaled.push_back(x / m);
        }
        if (ok) out[scaled] += 1;
    }
    return out;
}

Integer multinomial_of(const Composition& c) { return multinomial(c.vec()); }

std::vector<Integer> ints(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

// Closed form N_n^{(m)}(x) = 1/(mn+1) sum_k C(mn+1,k) C((m+1)n-k, n-k) (1-x)^k x^{n-k}.
IntPolynomial closed_narayana(unsigned n, unsigned m) {
    IntPolynomial sum;
    const IntPolynomial one_minus_x(ints({1, -1}));
    for (unsigned k = 0; k <= n; ++k) {
        IntPolynomial term = IntPolynomial::monomial(binomial(m * n + 1, k) * binomial((m + 1) * n - k, n - k), n - k);
        for (unsigned j = 0; j < k; ++j) term = term * one_minus_x;
        sum = sum + term;
    }
    return sum.divide_exact(m * n + 1);
}

}  // namespace

TEST_CASE("Lagrange series coefficients count nondecreasing parking functions") {
    for (unsigned m = 1; m <= 3; ++m) {
        const unsigned maxdeg = m == 1 ? 5 : 3;
        TruncatedSeries g = lagrange_g(maxdeg, m);
        for (unsigned n = 1; n <= maxdeg; ++n) {
            auto expected = ndpf_by_runs(n, m);
            auto got = g.homogeneous(n).terms();
            CHECK(got == expected);
        }
    }
}

TEST_CASE("printed expansions of g") {
    TruncatedSeries g4 = lagrange_g(4, 1).homogeneous(4);
    CHECK(g4.coeff({4}) == 1);
    CHECK(g4.coeff({3, 1}) == 3);
    CHECK(g4.coeff({2, 2}) == 2);
    CHECK(g4.coeff({2, 1, 1}) == 3);
    CHECK(g4.coeff({1, 3}) == 1);
    CHECK(g4.coeff({1, 2, 1}) == 2);
    CHECK(g4.coeff({1, 1, 2}) == 1);
    CHECK(g4.coeff({1, 1, 1, 1}) == 1);
    CHECK(g4.terms().size() == 8);

    TruncatedSeries g3 = lagrange_g(3, 2).homogeneous(3);
    Integer dims = 0, total = 0;
    for (const auto& [c, k] : g3.terms()) {
        dims += k * multinomial_of(c);
        total += k;
    }
    CHECK(dims == 49);
    CHECK(total == 12);
}

TEST_CASE("dimension identity for m-parking functions") {
    for (unsigned m = 1; m <= 3; ++m) {
        TruncatedSeries g = lagrange_g(4, m);
        for (unsigned n = 1; n <= 4; ++n) {
            Integer dims = 0;
            const TruncatedSeries part = g.homogeneous(n);
            for (const auto& [c, k] : part.terms()) dims += k * multinomial_of(c);
            Integer expected = 1;
            for (unsigned i = 1; i < n; ++i) expected *= m * n + 1;
            CHECK(dims == expected);
        }
    }
}

TEST_CASE("sylvester counts from the series") {
    const int expected[] = {1, 2, 7, 30, 143};
    for (unsigned k = 0; k < 5; ++k) {
        Composition c(std::vector<Letter>(k, 2));
        c.push_back(1);
        CHECK(sylvester_count(c) == expected[k]);
    }
    for (const Composition c : {Composition{1, 1, 2}, Composition{2, 1, 3}, Composition{1, 3, 1, 1}})
        CHECK(sylvester_count(c) == count_classes_brute(c.vec(), Congruence::sylvester));
}

TEST_CASE("S and R conversions invert each other") {
    TruncatedSeries s(SeriesBasis::S, 4);
    s.add({2, 1, 1}, 3);
    s.add({4}, -1);
    s.add({1, 3}, 2);
    CHECK(s_r_convert(s_r_convert(s)) == s);
}

TEST_CASE("Narayana polynomials") {
    CHECK(narayana_n(3, 2) == IntPolynomial(ints({5, 6, 1})));
    CHECK(narayana_n(4, 2) == IntPolynomial(ints({14, 28, 12, 1})));
    CHECK(narayana_n(5, 2) == IntPolynomial(ints({42, 120, 90, 20, 1})));
    const long at2[] = {1, 4, 21, 126, 818};
    const long half_p[] = {1, 5, 33, 249, 2033};
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(narayana_n(n, 2).eval(2) == at2[n - 1]);
        CHECK(narayana_p(n, 2).eval(2) / 2 == half_p[n - 1]);
    }
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 5; ++n) {
            CHECK(narayana_n(n, m) == closed_narayana(n, m));
            CHECK(narayana_n(n, m).reciprocal(n - 1) == narayana_p(n, m).divide_by_x());
            CHECK(narayana_p(n, m) == narayana_p_enumerated(n, m));
            Integer sum = 0;
            const IntPolynomial nn = narayana_n(n, m);
            for (const auto& c : nn.coeffs()) sum += c;
            CHECK(sum == binomial((m + 1) * n, n) / (m * n + 1));
        }
    for (unsigned n = 1; n <= 5; ++n) CHECK(narayana_p_over_x_closed(n) == narayana_p(n, 2).divide_by_x());
}

TEST_CASE("Narayana triangle rows") {
    CHECK(narayana_row(4, 2, NarayanaVariant::triangle_std) == ints({1, 12, 28, 14}));
    CHECK(narayana_row(3, 2, NarayanaVariant::triangle_q_rev) == ints({12, 8, 1}));
    CHECK(narayana_row(5, 2, NarayanaVariant::triangle_q_rev) == ints({273, 364, 156, 24, 1}));
    CHECK(narayana_row(5, 1, NarayanaVariant::triangle_std) == ints({1, 10, 20, 10, 1}));
}

TEST_CASE("count sequences") {
    CHECK(count_sequence("hyposylv_mpark", 3, 1) == 12);
    CHECK(count_sequence("hypoplactic_mpark", 4, 2) == 249);
    const long hypo_packed[] = {1, 3, 10, 34, 116};
    for (unsigned n = 1; n <= 5; ++n) CHECK(count_sequence("hyposylv_packed", n, 1) == hypo_packed[n - 1]);
    for (unsigned n = 1; n <= 4; ++n) CHECK(count_sequence("metasylv_packed", n, 1) == factorial(n + 1) / 2);
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
            CHECK(count_sequence("m_perm_count", n, m) == family_size({FamilyKind::m_permutations, {}}, n, m));
            CHECK(count_sequence("fuss_catalan", n, m) == ndpf_list(n, m).size());
            CHECK(count_sequence("hypoplactic_mperm", n, m) == (Integer(1) << (n - 1)));
        }
    CHECK_THROWS_AS(count_sequence("no_such_family", 3, 1), Error);
}

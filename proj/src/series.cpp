#include "mhopf/series.hpp"

#include "mhopf/words.hpp"

#include <algorithm>
#include <map>

namespace mhopf {

std::string series_basis_name(SeriesBasis b) {
    switch (b) {
        case SeriesBasis::S: return "S";
        case SeriesBasis::R: return "R";
        case SeriesBasis::M: return "M";
        case SeriesBasis::E: return "E";
    }
    return "";
}

void TruncatedSeries::add(const Composition& c, const Integer& coeff) {
    if (coeff == 0 || weight(c) > maxdeg_) return;
    auto& slot = terms_[c];
    slot += coeff;
    if (slot == 0) terms_.erase(c);
}

Integer TruncatedSeries::coeff(const Composition& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Integer(0) : it->second;
}

TruncatedSeries TruncatedSeries::homogeneous(unsigned degree) const {
    TruncatedSeries r(basis_, maxdeg_);
    for (const auto& [c, k] : terms_)
        if (weight(c) == degree) r.add(c, k);
    return r;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.basis() != b.basis() || a.basis() != SeriesBasis::S)
        throw Error(ErrorCode::basis_mismatch, "concatenation product needs two S-basis series");
    const unsigned maxdeg = std::min(a.maxdeg(), b.maxdeg());
    TruncatedSeries r(SeriesBasis::S, maxdeg);
    for (const auto& [i, x] : a.terms()) {
        const std::size_t wi = weight(i);
        for (const auto& [j, y] : b.terms()) {
            if (wi + weight(j) > maxdeg) continue;
            Composition k = i;
            k.vec().insert(k.end(), j.begin(), j.end());
            r.add(k, x * y);
        }
    }
    return r;
}

TruncatedSeries lagrange_g(unsigned maxdeg, unsigned m) {
    if (m == 0) m = 1;
    TruncatedSeries h(SeriesBasis::S, maxdeg);
    h.add({}, 1);
    for (unsigned iter = 0;; ++iter) {
        TruncatedSeries next(SeriesBasis::S, maxdeg);
        next.add({}, 1);
        TruncatedSeries power(SeriesBasis::S, maxdeg);
        power.add({}, 1);
        for (unsigned n = 1; n <= maxdeg; ++n) {
            for (unsigned k = 0; k < m; ++k) power = multiply(power, h);
            TruncatedSeries sn(SeriesBasis::S, maxdeg);
            sn.add({static_cast<Letter>(n)}, 1);
            const TruncatedSeries term = multiply(sn, power);
            for (const auto& [c, k] : term.terms()) next.add(c, k);
        }
        if (next == h) return h;
        if (iter > maxdeg + 1)
            throw Error(ErrorCode::budget_exceeded, "fixed point did not converge within the truncation degree");
        h = std::move(next);
    }
}

TruncatedSeries adams(const TruncatedSeries& s, unsigned m, AdamsDirection direction) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    if (direction == AdamsDirection::phi) {
        if (s.basis() != SeriesBasis::S) throw Error(ErrorCode::basis_mismatch, "phi_m acts on the S basis");
        TruncatedSeries r(SeriesBasis::S, s.maxdeg() / m);
        for (const auto& [c, k] : s.terms()) {
            if (!std::all_of(c.begin(), c.end(), [&](Letter p) { return p % m == 0; })) continue;
            Composition d = c;
            for (Letter& p : d) p /= m;
            r.add(d, k);
        }
        return r;
    }
    if (s.basis() != SeriesBasis::M) throw Error(ErrorCode::basis_mismatch, "psi^m acts on the M basis");
    TruncatedSeries r(SeriesBasis::M, s.maxdeg() * m);
    for (const auto& [c, k] : s.terms()) r.add(scale(c, m), k);
    return r;
}

TruncatedSeries s_r_convert(const TruncatedSeries& s) {
    // S^I = sum_{J <= I} R_J and E_I = sum_{J <= I} M_J share one shape.
    const bool forward = s.basis() == SeriesBasis::S || s.basis() == SeriesBasis::E;
    SeriesBasis target = SeriesBasis::R;
    switch (s.basis()) {
        case SeriesBasis::S: target = SeriesBasis::R; break;
        case SeriesBasis::R: target = SeriesBasis::S; break;
        case SeriesBasis::E: target = SeriesBasis::M; break;
        case SeriesBasis::M: target = SeriesBasis::E; break;
    }
    TruncatedSeries r(target, s.maxdeg());
    for (const auto& [c, k] : s.terms()) {
        for (const auto& j : coarsenings(c)) {
            const bool odd = (c.size() - j.size()) % 2 == 1;
            r.add(j, (!forward && odd) ? Integer(-k) : k);
        }
    }
    return r;
}

std::optional<SignedRibbon> ribbon_phi_m(const Composition& c, unsigned m) {
    Composition k;
    Letter acc = 0;
    for (Letter p : c) {
        acc += p;
        if (acc % m == 0) {
            k.push_back(acc / m);
            acc = 0;
        }
    }
    if (acc != 0) return std::nullopt;
    const int sign = (c.size() - k.size()) % 2 == 0 ? 1 : -1;
    return SignedRibbon{sign, k};
}

TruncatedSeries ribbon_phi_m_via_s(const Composition& c, unsigned m) {
    const unsigned w = static_cast<unsigned>(weight(c));
    TruncatedSeries r(SeriesBasis::R, w);
    r.add(c, 1);
    TruncatedSeries s = s_r_convert(r);
    return s_r_convert(adams(s, m, AdamsDirection::phi));
}

Integer ndpf_count_with_pev(const Composition& j) {
    if (j.empty()) return 1;
    // Distinct letters v_1 = 1 < v_2 < ... < v_r with v_t at most the start
    // position of block t.
    std::vector<Letter> start(j.size());
    Letter s = 1;
    for (std::size_t t = 0; t < j.size(); ++t) {
        start[t] = s;
        s += j[t];
    }
    std::vector<Integer> ways(start.back() + 1, 0);
    ways[1] = 1;
    for (std::size_t t = 1; t < j.size(); ++t) {
        std::vector<Integer> next(ways.size(), 0);
        Integer prefix = 0;
        for (Letter v = 1; v <= start[t]; ++v) {
            next[v] = prefix;
            if (v < ways.size()) prefix += ways[v];
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (const auto& x : ways) total += x;
    return total;
}

Integer sylvester_count(const Composition& c) {
    Integer total = 0;
    for (const auto& j : coarsenings(mirror(c))) total += ndpf_count_with_pev(j);
    return total;
}

Integer sylvester_count_series(const Composition& c, const TruncatedSeries& g) {
    if (weight(c) > g.maxdeg())
        throw Error(ErrorCode::budget_exceeded, "evaluation weight exceeds the truncation degree");
    Integer total = 0;
    for (const auto& j : coarsenings(mirror(c))) total += g.coeff(j);
    return total;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Integer& k) const {
    std::vector<Integer> v = c_;
    for (auto& x : v) x *= k;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const Integer& k) const {
    std::vector<Integer> v = c_;
    for (auto& x : v) {
        if (x % k != 0) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
        x /= k;
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift_one() const {
    IntPolynomial r;
    IntPolynomial base({1, 1});
    IntPolynomial power({1});
    for (const auto& c : c_) {
        r = r + power * c;
        power = power * base;
    }
    return r;
}

IntPolynomial IntPolynomial::reciprocal(std::size_t d) const {
    std::vector<Integer> v(d + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > d) throw Error(ErrorCode::invalid_argument, "reciprocal degree too small");
        v[d - i] = c_[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_by_x() const {
    if (c_.empty()) return {};
    if (c_[0] != 0) throw Error(ErrorCode::invalid_argument, "polynomial has a constant term");
    return IntPolynomial(std::vector<Integer>(c_.begin() + 1, c_.end()));
}

std::string polynomial_text(const IntPolynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Integer a = abs(c[i]);
        if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
        else if (c[i] < 0) out += "-";
        if (i == 0 || a != 1) out += a.str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::optional<NarayanaVariant> parse_narayana_variant(const std::string& name) {
    static const std::map<std::string, NarayanaVariant> names = {
        {"N", NarayanaVariant::N},
        {"P", NarayanaVariant::P},
        {"triangle_std", NarayanaVariant::triangle_std},
        {"triangle_q", NarayanaVariant::triangle_q},
        {"triangle_q_rev", NarayanaVariant::triangle_q_rev},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

IntPolynomial narayana_n(unsigned n, unsigned m) {
    IntPolynomial sum;
    const IntPolynomial one_minus_x({1, -1});
    for (unsigned k = 0; k <= n; ++k) {
        IntPolynomial term({binomial(m * n + 1, k) * binomial((m + 1) * n - k, n - k)});
        for (unsigned i = 0; i < k; ++i) term = term * one_minus_x;
        term = term * IntPolynomial::monomial(1, n - k);
        sum = sum + term;
    }
    return sum.divide_exact(m * n + 1);
}

IntPolynomial narayana_p(unsigned n, unsigned m) {
    // Bivariate series in t (outer index) with polynomial coefficients in x:
    // base = 1 + x t/(1 - t), raised to mn + 1, truncated at t^n.
    using Bivariate = std::vector<IntPolynomial>;
    Bivariate base(n + 1);
    base[0] = IntPolynomial({1});
    for (unsigned j = 1; j <= n; ++j) base[j] = IntPolynomial({0, 1});
    Bivariate power(n + 1);
    power[0] = IntPolynomial({1});
    for (unsigned e = 0; e < m * n + 1; ++e) {
        Bivariate next(n + 1);
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; i + j <= n; ++j) next[i + j] = next[i + j] + power[i] * base[j];
        power = std::move(next);
    }
    return power[n].divide_exact(m * n + 1);
}

IntPolynomial narayana_p_enumerated(unsigned n, unsigned m) {
    std::vector<Integer> c(n + 1, 0);
    for (const auto& p : ndpf_list(n, m)) c[evaluation_of(p).pev.size()] += 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial narayana_p_over_x_closed(unsigned n) {
    std::vector<Integer> c(n, 0);
    for (unsigned i = 0; i < n; ++i) c[i] = binomial(2 * n, i) * binomial(n, i + 1);
    return IntPolynomial(std::move(c)).divide_exact(n);
}

std::vector<Integer> narayana_row(unsigned n, unsigned m, NarayanaVariant variant) {
    IntPolynomial p;
    switch (variant) {
        case NarayanaVariant::N: p = narayana_n(n, m); break;
        case NarayanaVariant::P: p = narayana_p(n, m); break;
        case NarayanaVariant::triangle_std: p = narayana_p(n, m).divide_by_x(); break;
        case NarayanaVariant::triangle_q: p = narayana_p(n, m).divide_by_x().shift_one(); break;
        case NarayanaVariant::triangle_q_rev: p = narayana_n(n, m).shift_one(); break;
    }
    return p.coeffs();
}

std::vector<std::string> count_sequence_families() {
    return {"m_perm_count",      "packed_m_word_count", "decreasing_tree_count", "hyposylv_packed",
            "metasylv_packed",   "hyposylv_mperm",      "hyposylv_mpark",        "hypoplactic_mpark",
            "fuss_catalan",      "sylv_mperm",          "hypoplactic_mperm",     "hypoplactic_packed",
            "m_parking_count",   "ndpf_count",          "multiparking_count"};
}

static Integer fuss_catalan(unsigned n, unsigned m) {
    return binomial((m + 1) * n, n) / (m * n + 1);
}

Integer count_sequence(const std::string& family, unsigned n, unsigned m) {
    if (family == "m_perm_count") {
        Integer d = 1;
        for (unsigned i = 0; i < n; ++i) d *= factorial(m);
        return factorial(m * n) / d;
    }
    if (family == "packed_m_word_count") {
        std::vector<Integer> a(n + 1, 0);
        a[0] = 1;
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned k = 1; k <= i; ++k) a[i] += binomial(m * i, m * k) * a[i - k];
        return a[n];
    }
    if (family == "decreasing_tree_count") {
        Integer r = 1;
        for (unsigned k = 1; k < n; ++k) r *= 1 + k * m;
        return r;
    }
    if (family == "hyposylv_packed" || family == "hyposyl_packed") {
        if (n == 0) return 1;
        // t(1-t) / (1 - (m+3)t + 2t^2)
        std::vector<Integer> b(n + 1, 0);
        for (unsigned i = 1; i <= n; ++i) {
            b[i] = (i == 1 ? 1 : 0) - (i == 2 ? 1 : 0);
            b[i] += Integer(m + 3) * b[i - 1];
            if (i >= 2) b[i] -= 2 * b[i - 2];
        }
        return b[n];
    }
    if (family == "metasylv_packed") {
        Integer r = 1;
        for (unsigned k = 1; k < n; ++k) r *= m * k + 2;
        return r;
    }
    if (family == "hyposylv_mperm") {
        Integer r = 1;
        for (unsigned k = 1; k < n; ++k) r *= m + 1;
        return r;
    }
    if (family == "hyposylv_mpark") return fuss_catalan(n, 2 * m);
    if (family == "hypoplactic_mpark") return narayana_p(n, m).eval(2) / 2;
    if (family == "fuss_catalan" || family == "sylv_mperm" || family == "ndpf_count") return fuss_catalan(n, m);
    if (family == "hypoplactic_mperm") return n == 0 ? Integer(1) : Integer(1) << (n - 1);
    if (family == "hypoplactic_packed") {
        Integer r = 1;
        for (unsigned k = 1; k < n; ++k) r *= 3;
        return r;
    }
    if (family == "m_parking_count") {
        Integer r = 1;
        for (unsigned k = 1; k < n; ++k) r *= m * n + 1;
        return r;
    }
    if (family == "multiparking_count") return family_size(Family{FamilyKind::multiparking, {}}, n, m);
    throw Error(ErrorCode::invalid_argument, "unknown sequence family: " + family);
}

IntPolynomial q_ndpf_poly(unsigned n, unsigned m, std::size_t budget) {
    if (fuss_catalan(n, m) > budget) throw Error(ErrorCode::budget_exceeded, "too many m-NDPF to enumerate");
    std::vector<Integer> c(m * n * (n + 1) / 2 + 1, 0);
    for (const auto& p : ndpf_list(n, m)) {
        std::size_t s = 0;
        for (Letter x : p) s += x;
        c[s - n] += 1;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace mhopf

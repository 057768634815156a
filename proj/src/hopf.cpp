#include "mhopf/hopf.hpp"

#include "mhopf/text.hpp"
#include "mhopf/words.hpp"

#include <algorithm>
#include <cctype>

namespace mhopf {

std::optional<Algebra> parse_algebra(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    static const std::map<std::string, Algebra> names = {
        {"mfqsym", Algebra::mfqsym}, {"mpbt", Algebra::mpbt},     {"mdt", Algebra::mdt},
        {"mncsf", Algebra::mncsf},   {"mwqsym", Algebra::mwqsym}, {"mpqsym", Algebra::mpqsym},
        {"mcqsym", Algebra::mcqsym},
    };
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::optional<BasisTag> parse_basis_tag(const std::string& name) {
    static const std::map<std::string, BasisTag> names = {
        {"F", BasisTag::F},  {"G", BasisTag::G},  {"P", BasisTag::P},   {"Q", BasisTag::Q},
        {"P'", BasisTag::Pp}, {"Pp", BasisTag::Pp}, {"Q'", BasisTag::Qp}, {"Qp", BasisTag::Qp},
        {"R", BasisTag::R},  {"M", BasisTag::M},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::mfqsym: return "mFQSym";
        case Algebra::mpbt: return "mPBT";
        case Algebra::mdt: return "mDT";
        case Algebra::mncsf: return "mNCSF";
        case Algebra::mwqsym: return "mWQSym";
        case Algebra::mpqsym: return "mPQSym";
        case Algebra::mcqsym: return "mCQSym";
    }
    return "";
}

std::string basis_tag_name(BasisTag b) {
    switch (b) {
        case BasisTag::F: return "F";
        case BasisTag::G: return "G";
        case BasisTag::P: return "P";
        case BasisTag::Q: return "Q";
        case BasisTag::Pp: return "P'";
        case BasisTag::Qp: return "Q'";
        case BasisTag::R: return "R";
        case BasisTag::M: return "M";
    }
    return "";
}

bool is_defined(Algebra a, BasisTag b) {
    switch (a) {
        case Algebra::mfqsym: return b == BasisTag::F || b == BasisTag::G;
        case Algebra::mpbt: return b == BasisTag::P || b == BasisTag::Q;
        case Algebra::mdt: return b == BasisTag::P || b == BasisTag::Q || b == BasisTag::Pp || b == BasisTag::Qp;
        case Algebra::mncsf: return b == BasisTag::R || b == BasisTag::F;
        case Algebra::mwqsym: return b == BasisTag::M;
        case Algebra::mpqsym: return b == BasisTag::F || b == BasisTag::G;
        case Algebra::mcqsym: return b == BasisTag::P;
    }
    return false;
}

std::vector<BasisId> all_bases(unsigned m) {
    std::vector<BasisId> out;
    for (Algebra a : {Algebra::mfqsym, Algebra::mpbt, Algebra::mdt, Algebra::mncsf, Algebra::mwqsym,
                      Algebra::mpqsym, Algebra::mcqsym})
        for (BasisTag b : {BasisTag::F, BasisTag::G, BasisTag::P, BasisTag::Q, BasisTag::Pp, BasisTag::Qp,
                           BasisTag::R, BasisTag::M})
            if (is_defined(a, b)) out.push_back({a, b, m});
    return out;
}

bool is_unit(const Label& l) { return std::holds_alternative<std::monostate>(l); }

std::string label_text(const Label& l) {
    if (is_unit(l)) return "1";
    if (const Word* w = std::get_if<Word>(&l)) return w->empty() ? "[]" : word_text(*w);
    return tree_text(std::get<PlanarTree>(l));
}

static Label word_label(Word w) {
    if (w.empty()) return std::monostate{};
    return Label(std::move(w));
}

static const Word& as_word(const Label& l) {
    if (const Word* w = std::get_if<Word>(&l)) return *w;
    throw Error(ErrorCode::invalid_argument, "expected a word label, got " + label_text(l));
}

void LinearCombination::add(const Label& l, const Integer& coeff) {
    if (coeff == 0) return;
    auto& slot = terms_[l];
    slot += coeff;
    if (slot == 0) terms_.erase(l);
}

Integer LinearCombination::coeff(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Integer(0) : it->second;
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
}

void TensorCombination::add(const Label& l, const Label& r, const Integer& coeff) {
    if (coeff == 0) return;
    Key k{l, r};
    auto& slot = terms_[k];
    slot += coeff;
    if (slot == 0) terms_.erase(k);
}

Integer TensorCombination::coeff(const Label& l, const Label& r) const {
    auto it = terms_.find(Key{l, r});
    return it == terms_.end() ? Integer(0) : it->second;
}

TensorCombination& TensorCombination::operator+=(const TensorCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

LinearCombination HopfBasis::product(const Label& x, const Label& y) {
    LinearCombination r;
    if (is_unit(x)) {
        r.add(y, 1);
        return r;
    }
    if (is_unit(y)) {
        r.add(x, 1);
        return r;
    }
    return do_product(x, y);
}

TensorCombination HopfBasis::coproduct(const Label& x) {
    if (is_unit(x)) {
        TensorCombination t;
        t.add(std::monostate{}, std::monostate{}, 1);
        return t;
    }
    return do_coproduct(x);
}

std::string HopfBasis::prefix() const { return basis_tag_name(id().basis); }

LinearCombination multiply(HopfBasis& b, const LinearCombination& x, const LinearCombination& y) {
    LinearCombination r;
    for (const auto& [l1, c1] : x.terms())
        for (const auto& [l2, c2] : y.terms())
        {
            const LinearCombination p = b.product(l1, l2);
            for (const auto& [l, c] : p.terms()) r.add(l, c1 * c2 * c);
        }
    return r;
}

TensorCombination comultiply(HopfBasis& b, const LinearCombination& x) {
    TensorCombination r;
    for (const auto& [l, c] : x.terms())
    {
        const TensorCombination t = b.coproduct(l);
        for (const auto& [k, d] : t.terms()) r.add(k.first, k.second, c * d);
    }
    return r;
}

TensorCombination tensor_multiply(HopfBasis& b, const TensorCombination& x, const TensorCombination& y) {
    TensorCombination r;
    for (const auto& [k1, c1] : x.terms())
        for (const auto& [k2, c2] : y.terms()) {
            auto left = b.product(k1.first, k2.first);
            auto right = b.product(k1.second, k2.second);
            for (const auto& [l, a] : left.terms())
                for (const auto& [rr, d] : right.terms()) r.add(l, rr, c1 * c2 * a * d);
        }
    return r;
}

namespace {

class FqsymF : public HopfBasis {
public:
    explicit FqsymF(unsigned m) : m_(m) {}
    BasisId id() const override { return {Algebra::mfqsym, BasisTag::F, m_}; }
    unsigned degree(const Label& l) const override {
        return is_unit(l) ? 0 : static_cast<unsigned>(as_word(l).size() / m_);
    }
    std::vector<Label> labels(unsigned d) override {
        if (d == 0) return {std::monostate{}};
        std::vector<Label> out;
        for (auto& w : enumerate_family({FamilyKind::m_permutations, {}}, d, m_)) out.emplace_back(std::move(w));
        return out;
    }
    Label normalize(const Label& l) override {
        if (is_unit(l)) return l;
        const Word& w = as_word(l);
        if (w.empty()) return std::monostate{};
        if (!is_m_permutation(w, m_)) throw Error(ErrorCode::not_an_m_permutation, word_text(w) + " is not an m-permutation");
        return l;
    }

protected:
    LinearCombination do_product(const Label& x, const Label& y) override {
        LinearCombination r;
        for (auto& w : shifted_shuffle(as_word(x), as_word(y))) r.add(w, 1);
        return r;
    }
    TensorCombination do_coproduct(const Label& x) override {
        const Word& w = as_word(x);
        TensorCombination t;
        for (std::size_t k = 0; k <= w.size(); ++k) {
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            if (!is_m_word(u, m_)) continue;
            t.add(word_label(std_m(u, m_)), word_label(std_m(v, m_)), 1);
        }
        return t;
    }

private:
    unsigned m_;
};

class FqsymG : public FqsymF {
public:
    explicit FqsymG(unsigned m) : FqsymF(m), m_(m) {}
    BasisId id() const override { return {Algebra::mfqsym, BasisTag::G, m_}; }

protected:
    LinearCombination do_product(const Label& x, const Label& y) override {
        LinearCombination r;
        for (auto& w : m_convolution(as_word(x), as_word(y), m_)) r.add(w, 1);
        return r;
    }
    TensorCombination do_coproduct(const Label& x) override {
        const Word& w = as_word(x);
        const Letter n = max_letter(w);
        TensorCombination t;
        for (Letter k = 0; k <= n; ++k)
            t.add(word_label(std_m(restrict(w, 1, k), m_)), word_label(std_m(restrict(w, k + 1, n), m_)), 1);
        return t;
    }

private:
    unsigned m_;
};

class PqsymF : public HopfBasis {
public:
    explicit PqsymF(unsigned m) : m_(m) {}
    BasisId id() const override { return {Algebra::mpqsym, BasisTag::F, m_}; }
    unsigned degree(const Label& l) const override {
        return is_unit(l) ? 0 : static_cast<unsigned>(as_word(l).size());
    }
    std::vector<Label> labels(unsigned d) override {
        if (d == 0) return {std::monostate{}};
        std::vector<Label> out;
        for (auto& w : enumerate_family({FamilyKind::m_parking, {}}, d, m_)) out.emplace_back(std::move(w));
        std::sort(out.begin(), out.end());
        return out;
    }
    Label normalize(const Label& l) override {
        if (is_unit(l)) return l;
        const Word& w = as_word(l);
        if (w.empty()) return std::monostate{};
        if (!is_m_parking(w, m_)) throw Error(ErrorCode::invalid_argument, word_text(w) + " is not an m-parking function");
        return l;
    }

protected:
    LinearCombination do_product(const Label& x, const Label& y) override {
        const Word& a = as_word(x);
        LinearCombination r;
        for (auto& w : shifted_shuffle_by(a, as_word(y), static_cast<Letter>(m_ * a.size()))) r.add(w, 1);
        return r;
    }
    TensorCombination do_coproduct(const Label& x) override {
        const Word& w = as_word(x);
        TensorCombination t;
        for (std::size_t k = 0; k <= w.size(); ++k) {
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            t.add(word_label(park_m(u, m_)), word_label(park_m(v, m_)), 1);
        }
        return t;
    }

protected:
    unsigned m_;
};

class PqsymG : public PqsymF {
public:
    explicit PqsymG(unsigned m) : PqsymF(m) {}
    BasisId id() const override { return {Algebra::mpqsym, BasisTag::G, m_}; }

protected:
    LinearCombination do_product(const Label& x, const Label& y) override {
        const Word& a = as_word(x);
        const Word& b = as_word(y);
        LinearCombination r;
        for_each_member({FamilyKind::m_parking, {}}, static_cast<unsigned>(a.size() + b.size()), m_, default_budget,
                        [&](const Word& c) {
                            Word u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a.size()));
                            Word v(c.begin() + static_cast<std::ptrdiff_t>(a.size()), c.end());
                            if (park_m(u, m_) == a && park_m(v, m_) == b) r.add(c, 1);
                        });
        return r;
    }
    TensorCombination do_coproduct(const Label& x) override {
        const Word& a = as_word(x);
        std::vector<Letter> cuts{0};
        for (Letter v : a) cuts.push_back(v);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        const Letter top = max_letter(a);
        TensorCombination t;
        for (Letter j : cuts) {
            Word small = restrict(a, 1, j);
            Word big = restrict(a, j + 1, top);
            const Letter base = static_cast<Letter>(m_ * small.size());
            if (!big.empty() && *std::min_element(big.begin(), big.end()) != base + 1) continue;
            for (Letter& v : big) v -= base;
            t.add(word_label(small), word_label(big), 1);
        }
        return t;
    }
};

class WqsymM : public HopfBasis {
public:
    explicit WqsymM(unsigned m) : m_(m) {}
    BasisId id() const override { return {Algebra::mwqsym, BasisTag::M, m_}; }
    unsigned degree(const Label& l) const override {
        return is_unit(l) ? 0 : static_cast<unsigned>(as_word(l).size() / m_);
    }
    std::vector<Label> labels(unsigned d) override {
        if (d == 0) return {std::monostate{}};
        std::vector<Label> out;
        for (auto& w : enumerate_family({FamilyKind::packed_m_words, {}}, d, m_)) out.emplace_back(std::move(w));
        std::sort(out.begin(), out.end());
        return out;
    }
    Label normalize(const Label& l) override {
        if (is_unit(l)) return l;
        const Word& w = as_word(l);
        if (w.empty()) return std::monostate{};
        if (!is_packed(w) || !is_m_word(w, m_))
            throw Error(ErrorCode::invalid_argument, word_text(w) + " is not a packed m-word");
        return l;
    }

protected:
    LinearCombination do_product(const Label& x, const Label& y) override {
        const Word& u = as_word(x);
        const Word& v = as_word(y);
        const Letter r1 = max_letter(u), r2 = max_letter(v);
        LinearCombination out;
        for (Letter r = std::max(r1, r2); r <= r1 + r2; ++r) {
            const unsigned full = (1u << r) - 1;
            for (unsigned s = 0; s <= full; ++s) {
                if (static_cast<Letter>(__builtin_popcount(s)) != r1) continue;
                for (unsigned t = 0; t <= full; ++t) {
                    if (static_cast<Letter>(__builtin_popcount(t)) != r2 || (s | t) != full) continue;
                    std::vector<Letter> sv, tv;
                    for (Letter k = 0; k < r; ++k) {
                        if (s >> k & 1u) sv.push_back(k + 1);
                        if (t >> k & 1u) tv.push_back(k + 1);
                    }
                    Word w;
                    for (Letter a : u) w.push_back(sv[a - 1]);
                    for (Letter b : v) w.push_back(tv[b - 1]);
                    out.add(w, 1);
                }
            }
        }
        return out;
    }
    TensorCombination do_coproduct(const Label& x) override {
        const Word& u = as_word(x);
        const Letter top = max_letter(u);
        TensorCombination t;
        for (Letter k = 0; k <= top; ++k) t.add(word_label(restrict(u, 1, k)), word_label(pack(restrict(u, k + 1, top))), 1);
        return t;
    }

private:
    unsigned m_;
};

template <class F>
std::optional<Label> guarded(F&& f) {
    try {
        return f();
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

ClassSumBasis::ClassSumBasis(BasisId id, std::shared_ptr<HopfBasis> ambient, ClassKey key,
                             std::function<unsigned(const Label&)> degree)
    : id_(id), ambient_(std::move(ambient)), key_(std::move(key)), degree_(std::move(degree)) {}

std::optional<Label> ClassSumBasis::key(const Label& a) const {
    if (is_unit(a)) return a;
    return key_(a);
}

const std::map<Label, std::vector<Label>>& ClassSumBasis::index(unsigned d) {
    auto it = index_.find(d);
    if (it != index_.end()) return it->second;
    std::map<Label, std::vector<Label>> idx;
    for (const auto& a : ambient_->labels(d))
        if (auto k = key(a)) idx[*k].push_back(a);
    return index_.emplace(d, std::move(idx)).first->second;
}

std::vector<Label> ClassSumBasis::labels(unsigned d) {
    std::vector<Label> out;
    for (const auto& [k, v] : index(d)) out.push_back(k);
    return out;
}

const std::vector<Label>& ClassSumBasis::members(const Label& l) {
    const auto& idx = index(degree(l));
    auto it = idx.find(l);
    if (it == idx.end())
        throw Error(ErrorCode::invalid_argument, label_text(l) + " is not a class label of " + algebra_name(id_.algebra));
    return it->second;
}

Label ClassSumBasis::normalize(const Label& l) {
    if (is_unit(l)) return l;
    if (auto d = guarded([&]() -> std::optional<Label> {
            members(l);
            return l;
        }))
        return *d;
    if (auto k = guarded([&]() { return key(ambient_->normalize(l)); })) return *k;
    throw Error(ErrorCode::invalid_argument, label_text(l) + " is not a valid label of " + algebra_name(id_.algebra));
}

LinearCombination ClassSumBasis::class_sum(const Label& l) {
    LinearCombination r;
    for (const auto& a : members(l)) r.add(a, 1);
    return r;
}

LinearCombination ClassSumBasis::recollect(const LinearCombination& lifted) {
    std::map<Label, std::map<Label, Integer>> grouped;
    for (const auto& [a, c] : lifted.terms()) {
        auto k = key(a);
        if (!k)
            throw Error(ErrorCode::closure_violation, "term " + label_text(a) + " lies outside every class");
        grouped[*k][a] = c;
    }
    LinearCombination out;
    for (const auto& [k, seen] : grouped) {
        const auto& all = is_unit(k) ? std::vector<Label>{k} : members(k);
        const Integer c = seen.begin()->second;
        for (const auto& a : all) {
            auto it = seen.find(a);
            if (it == seen.end() || it->second != c)
                throw Error(ErrorCode::closure_violation, "class " + label_text(k) + " not uniformly covered at " +
                                                              label_text(a));
        }
        out.add(k, c);
    }
    return out;
}

TensorCombination ClassSumBasis::recollect(const TensorCombination& lifted) {
    std::map<std::pair<Label, Label>, std::map<std::pair<Label, Label>, Integer>> grouped;
    for (const auto& [ab, c] : lifted.terms()) {
        auto k1 = key(ab.first);
        auto k2 = key(ab.second);
        if (!k1 || !k2)
            throw Error(ErrorCode::closure_violation,
                        "tensor term " + label_text(ab.first) + " (x) " + label_text(ab.second) + " lies outside every class");
        grouped[{*k1, *k2}][ab] = c;
    }
    TensorCombination out;
    for (const auto& [kk, seen] : grouped) {
        const auto left = is_unit(kk.first) ? std::vector<Label>{kk.first} : members(kk.first);
        const auto right = is_unit(kk.second) ? std::vector<Label>{kk.second} : members(kk.second);
        const Integer c = seen.begin()->second;
        if (seen.size() != left.size() * right.size())
            throw Error(ErrorCode::closure_violation, "tensor block " + label_text(kk.first) + " (x) " +
                                                          label_text(kk.second) + " not fully covered");
        for (const auto& [ab, d] : seen)
            if (d != c)
                throw Error(ErrorCode::closure_violation, "tensor block " + label_text(kk.first) + " (x) " +
                                                              label_text(kk.second) + " has unequal coefficients");
        out.add(kk.first, kk.second, c);
    }
    return out;
}

LinearCombination ClassSumBasis::do_product(const Label& x, const Label& y) {
    LinearCombination lifted;
    for (const auto& a : members(x))
        for (const auto& b : members(y)) lifted += ambient_->product(a, b);
    return recollect(lifted);
}

TensorCombination ClassSumBasis::do_coproduct(const Label& x) {
    TensorCombination lifted;
    for (const auto& a : members(x)) lifted += ambient_->coproduct(a);
    return recollect(lifted);
}

QuotientBasis::QuotientBasis(BasisId id, std::shared_ptr<HopfBasis> base, ClassKey key,
                             std::function<unsigned(const Label&)> degree)
    : id_(id), base_(std::move(base)), key_(std::move(key)), degree_(std::move(degree)) {}

std::optional<Label> QuotientBasis::key(const Label& a) const {
    if (is_unit(a)) return a;
    return key_(a);
}

const std::map<Label, std::vector<Label>>& QuotientBasis::index(unsigned d) {
    auto it = index_.find(d);
    if (it != index_.end()) return it->second;
    std::map<Label, std::vector<Label>> idx;
    for (const auto& a : base_->labels(d))
        if (auto k = key(a)) idx[*k].push_back(a);
    return index_.emplace(d, std::move(idx)).first->second;
}

std::vector<Label> QuotientBasis::labels(unsigned d) {
    std::vector<Label> out;
    for (const auto& [k, v] : index(d)) out.push_back(k);
    return out;
}

const std::vector<Label>& QuotientBasis::members(const Label& l) {
    const auto& idx = index(degree(l));
    auto it = idx.find(l);
    if (it == idx.end())
        throw Error(ErrorCode::invalid_argument, label_text(l) + " is not a class label of " + algebra_name(id_.algebra));
    return it->second;
}

Label QuotientBasis::normalize(const Label& l) {
    if (is_unit(l)) return l;
    if (auto d = guarded([&]() -> std::optional<Label> {
            members(l);
            return l;
        }))
        return *d;
    if (auto k = guarded([&]() { return key(base_->normalize(l)); })) return *k;
    throw Error(ErrorCode::invalid_argument, label_text(l) + " is not a valid label of " + algebra_name(id_.algebra));
}

LinearCombination QuotientBasis::project(const LinearCombination& x) const {
    LinearCombination r;
    for (const auto& [a, c] : x.terms()) {
        auto k = key(a);
        if (!k) throw Error(ErrorCode::closure_violation, "term " + label_text(a) + " has no class");
        r.add(*k, c);
    }
    return r;
}

TensorCombination QuotientBasis::project(const TensorCombination& x) const {
    TensorCombination r;
    for (const auto& [ab, c] : x.terms()) {
        auto k1 = key(ab.first);
        auto k2 = key(ab.second);
        if (!k1 || !k2) throw Error(ErrorCode::closure_violation, "tensor term has no class");
        r.add(*k1, *k2, c);
    }
    return r;
}

LinearCombination QuotientBasis::product_via(const Label& x, const Label& y) { return project(base_->product(x, y)); }
TensorCombination QuotientBasis::coproduct_via(const Label& x) { return project(base_->coproduct(x)); }

LinearCombination QuotientBasis::do_product(const Label& x, const Label& y) {
    return product_via(representative(x), representative(y));
}

TensorCombination QuotientBasis::do_coproduct(const Label& x) { return coproduct_via(representative(x)); }

Word gd_word(const Word& sigma) {
    auto sig = signature_hs(sigma);
    return Word(std::vector<Letter>(sig.begin(), sig.end()));
}

LinearCombination ncsf_product_formula(const Word& w, const Word& w2, unsigned m) {
    LinearCombination r;
    for (Letter k = 0; k <= m; ++k) {
        Word u = w;
        u.push_back(k);
        r.add(u + w2, 1);
    }
    return r;
}

namespace {

unsigned word_degree_over(const Label& l, unsigned m) { return static_cast<unsigned>(as_word(l).size() / m); }
unsigned tree_degree(const Label& l) {
    return static_cast<unsigned>(std::get<PlanarTree>(l).internal_nodes());
}

}  // namespace

std::shared_ptr<HopfBasis> make_basis(const BasisId& id) {
    const unsigned m = id.m;
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    if (!is_defined(id.algebra, id.basis))
        throw Error(ErrorCode::basis_mismatch,
                    "basis " + basis_tag_name(id.basis) + " is not defined for " + algebra_name(id.algebra));
    auto fqsym_f = [&] { return std::make_shared<FqsymF>(m); };
    auto fqsym_g = [&] { return std::make_shared<FqsymG>(m); };
    ClassKey sylv_key = [m](const Label& a) -> std::optional<Label> {
        return mbinary_to_ary(shape(sylvester_bst(as_word(a))), m);
    };
    ClassKey ms_key = [](const Label& a) -> std::optional<Label> {
        return canonical_word(decreasing_tree(as_word(a)));
    };
    ClassKey gd_key = [](const Label& a) -> std::optional<Label> { return gd_word(as_word(a)); };
    auto words_deg = [m](const Label& l) { return word_degree_over(l, m); };

    switch (id.algebra) {
        case Algebra::mfqsym:
            if (id.basis == BasisTag::F) return fqsym_f();
            return fqsym_g();
        case Algebra::mpbt:
            if (id.basis == BasisTag::P) return std::make_shared<ClassSumBasis>(id, fqsym_f(), sylv_key, tree_degree);
            return std::make_shared<QuotientBasis>(id, fqsym_g(), sylv_key, tree_degree);
        case Algebra::mdt:
            switch (id.basis) {
                case BasisTag::P: return std::make_shared<ClassSumBasis>(id, fqsym_f(), ms_key, words_deg);
                case BasisTag::Q: return std::make_shared<QuotientBasis>(id, fqsym_g(), ms_key, words_deg);
                case BasisTag::Pp: {
                    ClassKey naked = [](const Label& a) -> std::optional<Label> {
                        const Word& w = as_word(a);
                        PlanarTree t = decreasing_tree(w);
                        if (canonical_word(t) != w) return std::nullopt;
                        return shape(t);
                    };
                    return std::make_shared<ClassSumBasis>(id, fqsym_g(), naked, tree_degree);
                }
                default: {
                    auto p = std::make_shared<ClassSumBasis>(BasisId{Algebra::mdt, BasisTag::P, m}, fqsym_f(), ms_key,
                                                             words_deg);
                    ClassKey naked = [](const Label& a) -> std::optional<Label> {
                        return shape(decreasing_tree(as_word(a)));
                    };
                    return std::make_shared<QuotientBasis>(id, p, naked, tree_degree);
                }
            }
        case Algebra::mncsf: {
            auto deg = [](const Label& l) { return static_cast<unsigned>(as_word(l).size() + 1); };
            if (id.basis == BasisTag::R) return std::make_shared<ClassSumBasis>(id, fqsym_f(), gd_key, deg);
            return std::make_shared<QuotientBasis>(id, fqsym_g(), gd_key, deg);
        }
        case Algebra::mwqsym:
            return std::make_shared<WqsymM>(m);
        case Algebra::mpqsym:
            if (id.basis == BasisTag::F) return std::make_shared<PqsymF>(m);
            return std::make_shared<PqsymG>(m);
        case Algebra::mcqsym: {
            ClassKey sorted = [](const Label& a) -> std::optional<Label> {
                Word w = as_word(a);
                std::sort(w.begin(), w.end());
                return w;
            };
            auto deg = [](const Label& l) { return static_cast<unsigned>(as_word(l).size()); };
            return std::make_shared<ClassSumBasis>(id, std::make_shared<PqsymF>(m), sorted, deg);
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown algebra");
}

std::shared_ptr<ClassSumBasis> make_congruence_basis(Algebra ambient, Congruence c, unsigned m) {
    std::shared_ptr<HopfBasis> amb;
    std::function<unsigned(const Label&)> deg;
    if (ambient == Algebra::mfqsym) {
        amb = std::make_shared<FqsymF>(m);
        deg = [m](const Label& l) { return word_degree_over(l, m); };
    } else if (ambient == Algebra::mpqsym) {
        amb = std::make_shared<PqsymF>(m);
        deg = [](const Label& l) { return static_cast<unsigned>(as_word(l).size()); };
    } else {
        throw Error(ErrorCode::invalid_argument, "congruence class sums need mFQSym or mPQSym");
    }
    auto cache = std::make_shared<std::map<Label, Label>>();
    ClassKey key = [c, cache](const Label& a) -> std::optional<Label> {
        auto it = cache->find(a);
        if (it != cache->end()) return it->second;
        Label k = canonical(as_word(a), c);
        for (const auto& w : cong_class(as_word(a), c)) cache->emplace(w, k);
        return k;
    };
    return std::make_shared<ClassSumBasis>(BasisId{ambient, BasisTag::P, m}, amb, key, deg);
}

Integer pairing(const LinearCombination& x, const LinearCombination& y) {
    Integer r = 0;
    for (const auto& [l, c] : x.terms()) r += c * y.coeff(l);
    return r;
}

Integer pairing(const TensorCombination& x, const TensorCombination& y) {
    Integer r = 0;
    for (const auto& [k, c] : x.terms()) r += c * y.coeff(k.first, k.second);
    return r;
}

namespace {

using Triple = std::map<std::tuple<Label, Label, Label>, Integer>;

void add_triple(Triple& t, const Label& a, const Label& b, const Label& c, const Integer& k) {
    auto& slot = t[{a, b, c}];
    slot += k;
    if (slot == 0) t.erase({a, b, c});
}

}  // namespace

BialgebraReport check_bialgebra(HopfBasis& b, unsigned maxdeg) {
    BialgebraReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.passed) {
            rep.passed = false;
            rep.failure = what;
        }
    };
    std::vector<std::vector<Label>> by_deg(maxdeg + 1);
    for (unsigned d = 0; d <= maxdeg; ++d) by_deg[d] = b.labels(d);
    std::map<Label, TensorCombination> delta;
    auto cop = [&](const Label& l) -> const TensorCombination& {
        auto it = delta.find(l);
        if (it == delta.end()) it = delta.emplace(l, b.coproduct(l)).first;
        return it->second;
    };

    for (unsigned d = 1; d <= maxdeg && rep.passed; ++d) {
        for (const auto& x : by_deg[d]) {
            const auto& dx = cop(x);
            ++rep.checks;
            for (const auto& [k, c] : dx.terms()) {
                if (b.degree(k.first) + b.degree(k.second) != d) fail("coproduct of " + label_text(x) + " is not homogeneous");
                const bool lu = is_unit(k.first), ru = is_unit(k.second);
                if ((lu && !(k.second == x && c == 1)) || (ru && !(k.first == x && c == 1)))
                    fail("counit law fails for " + label_text(x));
            }
            if (dx.coeff(x, std::monostate{}) != 1 || dx.coeff(std::monostate{}, x) != 1)
                fail("counit law fails for " + label_text(x));
            Triple left, right;
            for (const auto& [k, c] : dx.terms()) {
                for (const auto res = cop(k.first); const auto& [k2, c2] : res.terms()) add_triple(left, k2.first, k2.second, k.second, c * c2);
                for (const auto res = cop(k.second); const auto& [k2, c2] : res.terms()) add_triple(right, k.first, k2.first, k2.second, c * c2);
            }
            ++rep.checks;
            if (left != right) fail("coassociativity fails for " + label_text(x));
            if (!rep.passed) break;
        }
    }
    for (unsigned d1 = 1; d1 < maxdeg && rep.passed; ++d1)
        for (unsigned d2 = 1; d1 + d2 <= maxdeg && rep.passed; ++d2)
            for (const auto& x : by_deg[d1])
                for (const auto& y : by_deg[d2]) {
                    LinearCombination xy = b.product(x, y);
                    for (const auto& [l, c] : xy.terms())
                        if (b.degree(l) != d1 + d2) fail("product " + label_text(x) + "." + label_text(y) + " is not homogeneous");
                    TensorCombination lhs = comultiply(b, xy);
                    TensorCombination rhs = tensor_multiply(b, cop(x), cop(y));
                    ++rep.checks;
                    if (lhs != rhs) fail("multiplicativity fails for " + label_text(x) + " and " + label_text(y));
                    for (unsigned d3 = 1; d1 + d2 + d3 <= maxdeg && rep.passed; ++d3)
                        for (const auto& z : by_deg[d3]) {
                            LinearCombination zx;
                            zx.add(z, 1);
                            auto l1 = multiply(b, xy, zx);
                            LinearCombination xl;
                            xl.add(x, 1);
                            auto r1 = multiply(b, xl, b.product(y, z));
                            ++rep.checks;
                            if (l1 != r1) fail("associativity fails for " + label_text(x) + ", " + label_text(y) + ", " +
                                               label_text(z));
                        }
                    if (!rep.passed) return rep;
                }
    return rep;
}

bool commutative_image_check(const Word& alpha, unsigned m, unsigned k) {
    if (!is_m_permutation(alpha, m)) throw Error(ErrorCode::not_an_m_permutation, "alpha must be an m-permutation");
    const std::size_t len = alpha.size();
    std::map<std::vector<Letter>, Integer> lhs, rhs;
    // G_alpha(x_1..x_k): words w over [k] with std_m(w) = alpha.
    std::vector<Letter> w(len, 1);
    for (;;) {
        Word word(w);
        if (is_m_word(word, m) && std_m(word, m) == alpha) {
            std::vector<Letter> expo(k, 0);
            for (Letter x : word) ++expo[x - 1];
            lhs[expo] += 1;
        }
        std::size_t i = 0;
        while (i < len && w[i] == k) w[i++] = 1;
        if (i == len) break;
        ++w[i];
    }
    Composition rc = recoil_composition(alpha);
    Composition j;
    for (Letter p : rc) {
        if (p % m != 0) return false;
        j.push_back(p / m);
    }
    std::vector<bool> descent(alpha.size() / m, false);
    std::size_t acc = 0;
    for (std::size_t t = 0; t + 1 < j.size(); ++t) {
        acc += j[t];
        descent[acc - 1] = true;
    }
    const std::size_t n = alpha.size() / m;
    std::vector<Letter> seq(n, 1);
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == n) {
            std::vector<Letter> expo(k, 0);
            for (Letter x : seq) expo[x - 1] += m;
            rhs[expo] += 1;
            return;
        }
        Letter lo = pos == 0 ? 1 : seq[pos - 1] + (descent[pos - 1] ? 1 : 0);
        for (Letter v = lo; v <= k; ++v) {
            seq[pos] = v;
            fill(pos + 1);
        }
    };
    fill(0);
    return lhs == rhs;
}

std::string combination_text(const HopfBasis& b, const LinearCombination& x) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [l, c] : x.terms()) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Integer a = abs(c);
        if (a != 1) out += a.str() + "*";
        out += is_unit(l) ? std::string("1") : b.prefix() + "_" + label_text(l);
    }
    return out;
}

std::string combination_text(const HopfBasis& b, const TensorCombination& x) {
    if (x.empty()) return "0";
    auto side = [&](const Label& l) { return is_unit(l) ? std::string("1") : b.prefix() + "_" + label_text(l); };
    std::string out;
    for (const auto& [k, c] : x.terms()) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Integer a = abs(c);
        if (a != 1) out += a.str() + "*";
        out += side(k.first) + " (x) " + side(k.second);
    }
    return out;
}

}  // namespace mhopf

#pragma once

#include "mhopf/congruence.hpp"
#include "mhopf/core.hpp"
#include "mhopf/trees.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace mhopf {

enum class Algebra { mfqsym, mpbt, mdt, mncsf, mwqsym, mpqsym, mcqsym };
enum class BasisTag { F, G, P, Q, Pp, Qp, R, M };

struct BasisId {
    Algebra algebra;
    BasisTag basis;
    unsigned m = 1;
};

std::optional<Algebra> parse_algebra(const std::string& name);
std::optional<BasisTag> parse_basis_tag(const std::string& name);
std::string algebra_name(Algebra a);
std::string basis_tag_name(BasisTag b);
bool is_defined(Algebra a, BasisTag b);
std::vector<BasisId> all_bases(unsigned m);

// Unit (degree 0), word label, or tree label.
using Label = std::variant<std::monostate, Word, PlanarTree>;

bool is_unit(const Label& l);
std::string label_text(const Label& l);

class LinearCombination {
public:
    void add(const Label& l, const Integer& coeff);
    Integer coeff(const Label& l) const;
    const std::map<Label, Integer>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    LinearCombination& operator+=(const LinearCombination& o);
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    std::map<Label, Integer> terms_;
};

class TensorCombination {
public:
    using Key = std::pair<Label, Label>;
    void add(const Label& l, const Label& r, const Integer& coeff);
    Integer coeff(const Label& l, const Label& r) const;
    const std::map<Key, Integer>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    TensorCombination& operator+=(const TensorCombination& o);
    friend bool operator==(const TensorCombination&, const TensorCombination&) = default;

private:
    std::map<Key, Integer> terms_;
};

class HopfBasis {
public:
    virtual ~HopfBasis() = default;

    virtual BasisId id() const = 0;
    virtual unsigned degree(const Label& l) const = 0;
    // All labels of the given degree, sorted.
    virtual std::vector<Label> labels(unsigned degree) = 0;
    // Checks and canonicalizes a user-supplied label.
    virtual Label normalize(const Label& l) = 0;

    LinearCombination product(const Label& x, const Label& y);
    TensorCombination coproduct(const Label& x);

    std::string prefix() const;

protected:
    virtual LinearCombination do_product(const Label& x, const Label& y) = 0;
    virtual TensorCombination do_coproduct(const Label& x) = 0;
};

// Linear extensions.
LinearCombination multiply(HopfBasis& b, const LinearCombination& x, const LinearCombination& y);
TensorCombination comultiply(HopfBasis& b, const LinearCombination& x);
TensorCombination tensor_multiply(HopfBasis& b, const TensorCombination& x, const TensorCombination& y);

// Key maps an ambient label to its class label (nullopt: not covered).
using ClassKey = std::function<std::optional<Label>(const Label&)>;

// Span of class sums of an ambient basis; operations lift and re-collect.
class ClassSumBasis : public HopfBasis {
public:
    ClassSumBasis(BasisId id, std::shared_ptr<HopfBasis> ambient, ClassKey key,
                  std::function<unsigned(const Label&)> degree);

    BasisId id() const override { return id_; }
    unsigned degree(const Label& l) const override { return is_unit(l) ? 0 : degree_(l); }
    std::vector<Label> labels(unsigned degree) override;
    Label normalize(const Label& l) override;

    const std::vector<Label>& members(const Label& l);
    LinearCombination class_sum(const Label& l);
    LinearCombination recollect(const LinearCombination& lifted);
    TensorCombination recollect(const TensorCombination& lifted);
    HopfBasis& ambient() { return *ambient_; }
    std::optional<Label> key(const Label& ambient_label) const;

protected:
    LinearCombination do_product(const Label& x, const Label& y) override;
    TensorCombination do_coproduct(const Label& x) override;

private:
    const std::map<Label, std::vector<Label>>& index(unsigned degree);

    BasisId id_;
    std::shared_ptr<HopfBasis> ambient_;
    ClassKey key_;
    std::function<unsigned(const Label&)> degree_;
    std::map<unsigned, std::map<Label, std::vector<Label>>> index_;
};

// Quotient of a base basis by a class map; operations use representatives.
class QuotientBasis : public HopfBasis {
public:
    QuotientBasis(BasisId id, std::shared_ptr<HopfBasis> base, ClassKey key,
                  std::function<unsigned(const Label&)> degree);

    BasisId id() const override { return id_; }
    unsigned degree(const Label& l) const override { return is_unit(l) ? 0 : degree_(l); }
    std::vector<Label> labels(unsigned degree) override;
    Label normalize(const Label& l) override;

    const std::vector<Label>& members(const Label& l);
    Label representative(const Label& l) { return members(l).front(); }
    LinearCombination project(const LinearCombination& x) const;
    TensorCombination project(const TensorCombination& x) const;
    HopfBasis& base() { return *base_; }
    std::optional<Label> key(const Label& base_label) const;

    // Product / coproduct computed from arbitrary members of the classes.
    LinearCombination product_via(const Label& x_member, const Label& y_member);
    TensorCombination coproduct_via(const Label& x_member);

protected:
    LinearCombination do_product(const Label& x, const Label& y) override;
    TensorCombination do_coproduct(const Label& x) override;

private:
    const std::map<Label, std::vector<Label>>& index(unsigned degree);

    BasisId id_;
    std::shared_ptr<HopfBasis> base_;
    ClassKey key_;
    std::function<unsigned(const Label&)> degree_;
    std::map<unsigned, std::map<Label, std::vector<Label>>> index_;
};

std::shared_ptr<HopfBasis> make_basis(const BasisId& id);
// Class sums of a congruence over m-permutations (mFQSym F) or m-parking
// functions (mPQSym F), labelled by canonical class elements.
std::shared_ptr<ClassSumBasis> make_congruence_basis(Algebra ambient, Congruence c, unsigned m);

// Hyposylvester class code of an m-permutation (letters 0..m).
Word gd_word(const Word& sigma);
// R_w R_w' = sum_k R_{w k w'}.
LinearCombination ncsf_product_formula(const Word& w, const Word& w2, unsigned m);

Integer pairing(const LinearCombination& x, const LinearCombination& y);
Integer pairing(const TensorCombination& x, const TensorCombination& y);

struct BialgebraReport {
    bool passed = true;
    std::size_t checks = 0;
    std::string failure;
};

BialgebraReport check_bialgebra(HopfBasis& b, unsigned maxdeg);

bool commutative_image_check(const Word& alpha, unsigned m, unsigned k);

std::string combination_text(const HopfBasis& b, const LinearCombination& x);
std::string combination_text(const HopfBasis& b, const TensorCombination& x);

}  // namespace mhopf

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folcoh/polynomial.hpp"

namespace folcoh {

enum class GenType { Untyped, Holo, Anti, Real };  // (1,0), (0,1)

struct Generator {
    std::string name;
    int degree = 1;
    GenType type = GenType::Untyped;
    int conj_partner = -1;  // index; -1 means self-conjugate (real/untyped)
};

struct Bidegree {
    int p = 0;
    int q = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Ordered generator list shared by every Form over one model. Forms carry a
/// pointer to their set so mixed-model arithmetic is a checked error.
class GeneratorSet {
  public:
    explicit GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {}

    size_t size() const { return gens_.size(); }
    const Generator& at(int index) const { return gens_[static_cast<size_t>(index)]; }
    const std::vector<Generator>& all() const { return gens_; }

    int index_of(const std::string& name) const {
        for (size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].name == name) return static_cast<int>(k);
        }
        return -1;
    }

    bool fully_typed() const {
        for (const auto& g : gens_) {
            if (g.type == GenType::Untyped) return false;
        }
        return true;
    }

    int total_degree() const {
        int sum = 0;
        for (const auto& g : gens_) sum += g.degree;
        return sum;
    }

    friend bool operator==(const GeneratorSet& lhs, const GeneratorSet& rhs) {
        if (lhs.gens_.size() != rhs.gens_.size()) return false;
        for (size_t k = 0; k < lhs.gens_.size(); ++k) {
            const Generator& a = lhs.gens_[k];
            const Generator& b = rhs.gens_[k];
            if (a.name != b.name || a.degree != b.degree || a.type != b.type ||
                a.conj_partner != b.conj_partner) {
                return false;
            }
        }
        return true;
    }

  private:
    std::vector<Generator> gens_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

/// Exterior monomial in canonical form: strictly increasing generator indices.
/// The empty sequence is the algebra unit.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> indices) : indices_(std::move(indices)) {}

    const std::vector<int>& indices() const { return indices_; }
    bool is_unit() const { return indices_.empty(); }
    size_t length() const { return indices_.size(); }
    bool contains(int index) const;

    int degree(const GeneratorSet& gens) const;
    std::optional<Bidegree> bidegree(const GeneratorSet& gens) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

  private:
    std::vector<int> indices_;
};

// Sorts an index sequence into canonical form; sign is the Koszul sign, 0 if an
// index repeats. Degrees come from the generator set.
std::pair<Monomial, int> koszul_sort(std::vector<int> indices, const GeneratorSet& gens);

// Canonical product of canonical monomials (merge with Koszul sign); sign 0 on overlap.
std::pair<Monomial, int> wedge_monomials(const Monomial& a, const Monomial& b,
                                         const GeneratorSet& gens);

/// Sparse linear combination of exterior monomials with ParamPoly coefficients.
/// No zero coefficient is ever stored.
class Form {
  public:
    Form() = default;
    explicit Form(GenSetPtr gens) : gens_(std::move(gens)) {}

    static Form zero(GenSetPtr gens) { return Form(std::move(gens)); }
    static Form unit(GenSetPtr gens, ParamPoly coefficient = ParamPoly(1));
    static Form generator(GenSetPtr gens, int index, ParamPoly coefficient = ParamPoly(1));
    static Form monomial(GenSetPtr gens, Monomial m, ParamPoly coefficient = ParamPoly(1));

    const GenSetPtr& generators() const { return gens_; }
    const std::map<Monomial, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const ParamPoly& coefficient);
    ParamPoly coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    // Degree of a homogeneous form; Purity error on mixed degrees. Unit is degree 0.
    int degree() const;
    bool is_parameter_free() const;

    Form operator-() const;
    Form& operator+=(const Form& rhs);
    Form& operator-=(const Form& rhs);
    Form& operator*=(const ParamPoly& scale);

    friend Form operator+(Form lhs, const Form& rhs) { lhs += rhs; return lhs; }
    friend Form operator-(Form lhs, const Form& rhs) { lhs -= rhs; return lhs; }
    friend Form operator*(const ParamPoly& scale, Form f) { f *= scale; return f; }
    friend bool operator==(const Form& lhs, const Form& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const Form& lhs, const Form& rhs) { return !(lhs == rhs); }

  private:
    GenSetPtr gens_;
    std::map<Monomial, ParamPoly> terms_;
};

// Graded-commutative associative product; ModelMismatch if the operands live
// over different generator sets.
Form wedge(const Form& a, const Form& b);

// Antilinear involution from the declared conjugation pairing; swaps (p,q)<->(q,p).
Form conjugate(const Form& x);

// Evaluates every coefficient at s0; the result is parameter-free.
Form evaluate_parameter(const Form& x, const Rational& s0);

std::string format_monomial(const Monomial& m, const GeneratorSet& gens);
std::string format_form(const Form& x, const std::string& param_name = "s");

/// Odd graded derivation determined by generator images: parity +1 raises
/// degree (d), parity -1 lowers it (contraction).
class Derivation {
  public:
    Derivation(GenSetPtr gens, int parity) : gens_(std::move(gens)), parity_(parity) {
        images_.resize(gens_->size());
    }

    void set_image(int generator, Form image);
    const GenSetPtr& generators() const { return gens_; }
    int parity() const { return parity_; }
    bool has_image(int generator) const {
        return images_[static_cast<size_t>(generator)].has_value();
    }
    const Form& image(int generator) const;

  private:
    GenSetPtr gens_;
    int parity_;
    std::vector<std::optional<Form>> images_;
};

// Graded Leibniz extension: D(x^y) = Dx^y + (-1)^{deg x} x^Dy, D(unit) = 0.
// IncompleteDerivation if some generator of x has no image.
Form apply_derivation(const Derivation& d, const Form& x);

}  // namespace folcoh

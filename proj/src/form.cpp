#include "folcoh/form.hpp"

#include <algorithm>

#include "folcoh/errors.hpp"

namespace folcoh {

std::string format_poly(const ParamPoly& poly, const std::string& param_name) {
    if (poly.is_zero()) return "0";
    if (poly.is_constant()) return format_scalar(poly.constant_value());
    std::string out;
    bool first = true;
    const auto& coeffs = poly.coefficients();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        GaussianRational c = coeffs[k];
        std::string piece;
        if (!first && c.is_real() && c.re() < 0) {
            out += "-";
            c = -c;
        } else if (!first) {
            out += "+";
        }
        std::string cs = format_scalar(c);
        if (k == 0) {
            piece = cs;
        } else {
            std::string power = param_name;
            if (k > 1) power += "^" + std::to_string(k);
            if (cs == "1") {
                piece = power;
            } else if (cs == "-1") {
                piece = "-" + power;
            } else {
                piece = cs + power;
            }
        }
        out += piece;
        first = false;
    }
    return out;
}

bool Monomial::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

int Monomial::degree(const GeneratorSet& gens) const {
    int sum = 0;
    for (int i : indices_) sum += gens.at(i).degree;
    return sum;
}

std::optional<Bidegree> Monomial::bidegree(const GeneratorSet& gens) const {
    Bidegree out;
    for (int i : indices_) {
        switch (gens.at(i).type) {
            case GenType::Holo: out.p += 1; break;
            case GenType::Anti: out.q += 1; break;
            case GenType::Real:
            case GenType::Untyped: return std::nullopt;
        }
    }
    return out;
}

std::pair<Monomial, int> koszul_sort(std::vector<int> indices, const GeneratorSet& gens) {
    // Insertion sort, accumulating the sign of each degree-weighted transposition.
    int sign = 1;
    for (size_t i = 1; i < indices.size(); ++i) {
        int value = indices[i];
        size_t j = i;
        while (j > 0 && indices[j - 1] > value) {
            if ((gens.at(indices[j - 1]).degree * gens.at(value).degree) % 2 != 0) sign = -sign;
            indices[j] = indices[j - 1];
            --j;
        }
        indices[j] = value;
    }
    for (size_t i = 1; i < indices.size(); ++i) {
        if (indices[i] == indices[i - 1]) return {Monomial(), 0};
    }
    return {Monomial(std::move(indices)), sign};
}

std::pair<Monomial, int> wedge_monomials(const Monomial& a, const Monomial& b,
                                         const GeneratorSet& gens) {
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    merged.insert(merged.end(), a.indices().begin(), a.indices().end());
    merged.insert(merged.end(), b.indices().begin(), b.indices().end());
    return koszul_sort(std::move(merged), gens);
}

Form Form::unit(GenSetPtr gens, ParamPoly coefficient) {
    return monomial(std::move(gens), Monomial(), std::move(coefficient));
}

Form Form::generator(GenSetPtr gens, int index, ParamPoly coefficient) {
    return monomial(std::move(gens), Monomial({index}), std::move(coefficient));
}

Form Form::monomial(GenSetPtr gens, Monomial m, ParamPoly coefficient) {
    Form out(std::move(gens));
    out.add_term(m, coefficient);
    return out;
}

void Form::add_term(const Monomial& m, const ParamPoly& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
}

bool Form::is_homogeneous() const {
    if (terms_.empty()) return true;
    int deg = terms_.begin()->first.degree(*gens_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(*gens_) != deg) return false;
    }
    return true;
}

int Form::degree() const {
    if (terms_.empty()) return 0;
    int deg = terms_.begin()->first.degree(*gens_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(*gens_) != deg) {
            throw Error(ErrorCode::Purity, "degree demanded of a mixed-degree form");
        }
    }
    return deg;
}

bool Form::is_parameter_free() const {
    for (const auto& [m, c] : terms_) {
        if (!c.is_constant()) return false;
    }
    return true;
}

Form Form::operator-() const {
    Form out(gens_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {

void require_same_generators(const Form& a, const Form& b) {
    if (a.generators() == b.generators()) return;
    if (a.generators() && b.generators() && *a.generators() == *b.generators()) return;
    throw Error(ErrorCode::ModelMismatch, "forms over different generator sets");
}

}  // namespace

Form& Form::operator+=(const Form& rhs) {
    if (!gens_) gens_ = rhs.gens_;
    if (!rhs.terms_.empty()) require_same_generators(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& rhs) {
    if (!gens_) gens_ = rhs.gens_;
    if (!rhs.terms_.empty()) require_same_generators(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const ParamPoly& scale) {
    if (scale.is_zero()) {
        *this = Form(gens_);
        return *this;
    }
    std::map<Monomial, ParamPoly> out;
    for (const auto& [m, c] : terms_) {
        ParamPoly scaled = c * scale;
        if (!scaled.is_zero()) out.emplace(m, std::move(scaled));
    }
    terms_ = std::move(out);
    return *this;
}

Form wedge(const Form& a, const Form& b) {
    require_same_generators(a, b);
    const GenSetPtr& gens = a.generators() ? a.generators() : b.generators();
    Form out(gens);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [m, sign] = wedge_monomials(ma, mb, *gens);
            if (sign == 0) continue;
            ParamPoly c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

Form conjugate(const Form& x) {
    const GenSetPtr& gens = x.generators();
    Form out(gens);
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> mapped;
        mapped.reserve(m.length());
        for (int i : m.indices()) {
            const Generator& g = gens->at(i);
            if (g.conj_partner < 0) {
                if (g.type == GenType::Holo || g.type == GenType::Anti) {
                    throw Error(ErrorCode::MissingConjugate,
                                "generator '" + g.name + "' has no declared conjugate");
                }
                mapped.push_back(i);
            } else {
                mapped.push_back(g.conj_partner);
            }
        }
        auto [cm, sign] = koszul_sort(std::move(mapped), *gens);
        if (sign == 0) {
            throw Error(ErrorCode::InternalConsistency,
                        "conjugation produced a degenerate monomial");
        }
        ParamPoly cc = c.conjugated();
        if (sign < 0) cc = -cc;
        out.add_term(cm, cc);
    }
    return out;
}

Form evaluate_parameter(const Form& x, const Rational& s0) {
    Form out(x.generators());
    for (const auto& [m, c] : x.terms()) {
        GaussianRational value = c.evaluate(s0);
        if (!value.is_zero()) out.add_term(m, ParamPoly(value));
    }
    return out;
}

std::string format_monomial(const Monomial& m, const GeneratorSet& gens) {
    if (m.is_unit()) return "1";
    std::string out;
    for (size_t k = 0; k < m.indices().size(); ++k) {
        if (k > 0) out += "^";
        out += gens.at(m.indices()[k]).name;
    }
    return out;
}

namespace {

// Whether the rendered coefficient has a '+'/'-' outside parentheses past
// position 0, i.e. would be ambiguous when juxtaposed with a monomial.
bool has_top_level_sign(const std::string& s) {
    int depth = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (k > 0 && depth == 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

}  // namespace

std::string format_form(const Form& x, const std::string& param_name) {
    if (x.is_zero()) return "0";
    const GeneratorSet& gens = *x.generators();
    // Display order: by degree, then lexicographically on index sequences.
    std::vector<const std::pair<const Monomial, ParamPoly>*> items;
    items.reserve(x.term_count());
    for (const auto& term : x.terms()) items.push_back(&term);
    std::stable_sort(items.begin(), items.end(), [&](const auto* a, const auto* b) {
        size_t la = a->first.length(), lb = b->first.length();
        if (la != lb) return la < lb;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* item : items) {
        std::string cs = format_poly(item->second, param_name);
        bool negated = false;
        if (!first && cs.size() > 1 && cs[0] == '-' && !has_top_level_sign(cs)) {
            cs = cs.substr(1);
            negated = true;
        }
        if (!first) out += negated ? " - " : " + ";
        if (has_top_level_sign(cs) && !item->first.is_unit()) cs = "(" + cs + ")";
        if (item->first.is_unit()) {
            out += cs;
        } else if (cs == "1") {
            out += format_monomial(item->first, gens);
        } else if (cs == "-1") {
            out += "-" + format_monomial(item->first, gens);
        } else {
            out += cs + " " + format_monomial(item->first, gens);
        }
        first = false;
    }
    return out;
}

void Derivation::set_image(int generator, Form image) {
    int want = gens_->at(generator).degree + parity_;
    for (const auto& [m, c] : image.terms()) {
        if (m.degree(*gens_) != want) {
            throw Error(ErrorCode::DegreeMismatch,
                        "image of '" + gens_->at(generator).name +
                            "' must be homogeneous of degree " + std::to_string(want));
        }
    }
    images_[static_cast<size_t>(generator)] = std::move(image);
}

const Form& Derivation::image(int generator) const {
    const auto& slot = images_[static_cast<size_t>(generator)];
    if (!slot.has_value()) {
        throw Error(ErrorCode::IncompleteDerivation,
                    "no image declared for generator '" + gens_->at(generator).name + "'");
    }
    return *slot;
}

Form apply_derivation(const Derivation& d, const Form& x) {
    const GenSetPtr& gens = d.generators();
    if (x.generators() && !(x.generators() == gens || *x.generators() == *gens)) {
        throw Error(ErrorCode::ModelMismatch, "form over a different generator set");
    }
    Form out(gens);
    for (const auto& [m, c] : x.terms()) {
        // D(e_{i1}^...^e_{ik}) expands one factor at a time with the Koszul
        // sign of the degrees passed over.
        int passed_degree = 0;
        for (size_t j = 0; j < m.indices().size(); ++j) {
            int gen = m.indices()[j];
            const Form& img = d.image(gen);
            if (img.is_zero()) {
                passed_degree += gens->at(gen).degree;
                continue;
            }
            std::vector<int> prefix(m.indices().begin(), m.indices().begin() + static_cast<long>(j));
            std::vector<int> suffix(m.indices().begin() + static_cast<long>(j) + 1, m.indices().end());
            int sign = (passed_degree % 2 == 0) ? 1 : -1;
            for (const auto& [mi, ci] : img.terms()) {
                std::vector<int> assembled = prefix;
                assembled.insert(assembled.end(), mi.indices().begin(), mi.indices().end());
                assembled.insert(assembled.end(), suffix.begin(), suffix.end());
                auto [cm, ks] = koszul_sort(std::move(assembled), *gens);
                int total = sign * ks;
                if (total == 0) continue;
                ParamPoly coeff = c * ci;
                if (total < 0) coeff = -coeff;
                out.add_term(cm, coeff);
            }
            passed_degree += gens->at(gen).degree;
        }
    }
    return out;
}

}  // namespace folcoh

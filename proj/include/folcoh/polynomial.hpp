#pragma once

#include <string>
#include <vector>

#include "folcoh/scalar.hpp"

namespace folcoh {

/// Polynomial in the deformation parameter with GaussianRational coefficients,
/// ascending powers, no trailing zero coefficient. Evaluation at a rational
/// point is exact; the parameter itself is treated as real under conjugation.
class ParamPoly {
  public:
    ParamPoly() = default;
    ParamPoly(GaussianRational constant) {  // NOLINT: scalars promote freely
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    ParamPoly(Rational constant) : ParamPoly(GaussianRational(std::move(constant))) {}
    ParamPoly(int constant) : ParamPoly(GaussianRational(constant)) {}

    static ParamPoly parameter() {
        ParamPoly p;
        p.coeffs_ = {GaussianRational(0), GaussianRational(1)};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

    GaussianRational constant_value() const {
        return coeffs_.empty() ? GaussianRational(0) : coeffs_[0];
    }
    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }

    GaussianRational evaluate(const Rational& at) const {
        GaussianRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * GaussianRational(at) + *it;
        }
        return acc;
    }

    ParamPoly conjugated() const {
        ParamPoly out;
        out.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.coeffs_.push_back(conj(c));
        out.trim();
        return out;
    }

    ParamPoly operator-() const {
        ParamPoly out;
        out.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
        return out;
    }

    ParamPoly& operator+=(const ParamPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
        trim();
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
        trim();
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& rhs) {
        if (is_zero() || rhs.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<GaussianRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, GaussianRational(0));
        for (size_t a = 0; a < coeffs_.size(); ++a) {
            for (size_t b = 0; b < rhs.coeffs_.size(); ++b) {
                out[a + b] += coeffs_[a] * rhs.coeffs_[b];
            }
        }
        coeffs_ = std::move(out);
        trim();
        return *this;
    }

    friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { lhs += rhs; return lhs; }
    friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { lhs -= rhs; return lhs; }
    friend ParamPoly operator*(ParamPoly lhs, const ParamPoly& rhs) { lhs *= rhs; return lhs; }
    friend bool operator==(const ParamPoly& lhs, const ParamPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const ParamPoly& lhs, const ParamPoly& rhs) { return !(lhs == rhs); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
};

// "0", "2i", "s", "2s^2", "1-s", "(1+i)s"; used by reports and form formatting.
std::string format_poly(const ParamPoly& poly, const std::string& param_name = "s");

}  // namespace folcoh

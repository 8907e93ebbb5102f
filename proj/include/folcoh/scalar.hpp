#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "folcoh/errors.hpp"

namespace folcoh {

using Rational = mpq_class;

// Parses "a" or "a/b" (optionally signed). Throws MalformedScalar.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// Exact element of Q(i). The coefficient field of the whole engine:
/// every cohomology dimension downstream is computed over these.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int value) : re_(value), im_(0) {}  // NOLINT: Eigen needs Scalar(0)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& rhs) {
        Rational re = re_ * rhs.re_ - im_ * rhs.im_;
        Rational im = re_ * rhs.im_ + im_ * rhs.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
        lhs /= rhs;
        return lhs;
    }
    friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }
    friend bool operator!=(const GaussianRational& lhs, const GaussianRational& rhs) {
        return !(lhs == rhs);
    }

  private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) {
    return {z.re(), Rational(-z.im())};
}
inline Rational real(const GaussianRational& z) { return z.re(); }
inline Rational imag(const GaussianRational& z) { return z.im(); }
inline Rational abs2(const GaussianRational& z) { return z.re() * z.re() + z.im() * z.im(); }

// Canonical text form: "0", "2", "-1/2", "i", "-i", "3i", "(1+2i)", "(1/2-3i)".
std::string format_scalar(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace folcoh

namespace Eigen {

template <typename T>
struct NumTraits;

template <>
struct NumTraits<folcoh::GaussianRational> {
    using Real = folcoh::Rational;
    using NonInteger = folcoh::GaussianRational;
    using Nested = folcoh::GaussianRational;
    using Literal = folcoh::GaussianRational;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

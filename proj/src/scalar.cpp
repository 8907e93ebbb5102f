#include "folcoh/scalar.hpp"

#include <ostream>

namespace folcoh {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ModelMismatch: return "model-mismatch";
        case ErrorCode::IncompleteDerivation: return "incomplete-derivation";
        case ErrorCode::MissingConjugate: return "missing-conjugate";
        case ErrorCode::Purity: return "purity";
        case ErrorCode::NotASubspace: return "not-a-subspace";
        case ErrorCode::UnknownGenerator: return "unknown-generator";
        case ErrorCode::DuplicateGenerator: return "duplicate-generator";
        case ErrorCode::DegreeMismatch: return "degree-mismatch";
        case ErrorCode::MalformedScalar: return "malformed-scalar";
        case ErrorCode::MissingEnd: return "missing-end";
        case ErrorCode::UnknownSection: return "unknown-section";
        case ErrorCode::SyntaxError: return "syntax-error";
        case ErrorCode::InvalidModel: return "invalid-model";
        case ErrorCode::MissingFoliation: return "missing-foliation";
        case ErrorCode::NotBigraded: return "not-bigraded";
        case ErrorCode::MissingMetric: return "missing-metric";
        case ErrorCode::MissingOrientation: return "missing-orientation";
        case ErrorCode::Integrability: return "integrability";
        case ErrorCode::InternalConsistency: return "internal-consistency";
        case ErrorCode::Usage: return "usage";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::MalformedScalar, "empty rational literal");
    std::string body(text);
    for (char c : body) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
            throw Error(ErrorCode::MalformedScalar, "bad character in rational literal '" + body + "'");
        }
    }
    auto slash = body.find('/');
    if (slash != std::string::npos && body.find('/', slash + 1) != std::string::npos) {
        throw Error(ErrorCode::MalformedScalar, "multiple '/' in rational literal '" + body + "'");
    }
    if (slash == body.size() - 1 || slash == 0) {
        throw Error(ErrorCode::MalformedScalar, "dangling '/' in rational literal '" + body + "'");
    }
    try {
        Rational value(body, 10);
        if (value.get_den() == 0) throw Error(ErrorCode::MalformedScalar, "zero denominator in '" + body + "'");
        value.canonicalize();
        return value;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::MalformedScalar, "unparsable rational literal '" + body + "'");
    }
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::InternalConsistency, "division by zero scalar");
    Rational n = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
    Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string format_scalar(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    if (z.im() == 0) return format_rational(z.re());
    std::string im_part;
    if (z.im() == 1) {
        im_part = "i";
    } else if (z.im() == -1) {
        im_part = "-i";
    } else {
        im_part = format_rational(z.im()) + "i";
    }
    if (z.re() == 0) return im_part;
    std::string out = "(" + format_rational(z.re());
    if (im_part[0] != '-') out += "+";
    out += im_part + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_scalar(z);
}

}  // namespace folcoh

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folcoh/form.hpp"

namespace folcoh {

/// A finitely generated differential-algebra model: generators with degrees
/// and optional (1,0)/(0,1) types, a differential table, an optional
/// contraction table for the foliation direction, a declared orthonormal
/// metric and orientation, and an optional declared dbar table kept only for
/// cross-checking.
struct Model {
    std::string name;
    GenSetPtr gens;
    std::string param_name;  // empty when the model has no parameter
    std::vector<Form> d_images;
    std::vector<ParamPoly> iota_values;  // present iff has_iota
    bool has_iota = false;
    bool metric_orthonormal = false;
    std::optional<Monomial> orientation;  // canonical monomial
    int orientation_sign = 1;             // sign of the declared word vs canonical
    std::vector<std::optional<Form>> dbar_declared;

    bool has_param() const { return !param_name.empty(); }
    bool fully_typed() const { return gens->fully_typed(); }
    int generator_count() const { return static_cast<int>(gens->size()); }

    Derivation differential() const {
        Derivation d(gens, +1);
        for (size_t k = 0; k < d_images.size(); ++k) d.set_image(static_cast<int>(k), d_images[k]);
        return d;
    }

    // Contraction by the foliation field, coefficients still parameter-valued.
    Derivation contraction_derivation() const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    bool warning_only = false;
    std::string witness;  // empty when passed
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks) {
            if (!c.passed && !c.warning_only) return false;
        }
        return true;
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks) {
            if (!c.passed && !c.warning_only) out.push_back(c);
        }
        return out;
    }
    std::vector<CheckResult> warnings() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks) {
            if (!c.passed && c.warning_only) out.push_back(c);
        }
        return out;
    }
};

// Hard checks in order: d^2 = 0 per generator; conj(d x) = d(conj x); bigrading
// purity of d on typed generators; contraction is an antiderivation with
// iota^2 = 0. Declared dbar mismatches are warnings, never errors.
ValidationReport validate_model(const Model& m);

// Parses the model DSL; every diagnostic carries line and column.
Model parse_model(const std::string& text);
Model parse_model_file(const std::string& path);

// Canonical text form of a model, parse(serialize(parse(x))) == parse(x).
std::string serialize_model(const Model& m);

}  // namespace folcoh

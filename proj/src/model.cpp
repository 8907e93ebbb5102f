#include "folcoh/model.hpp"

#include "folcoh/errors.hpp"

namespace folcoh {

Derivation Model::contraction_derivation() const {
    if (!has_iota) {
        throw Error(ErrorCode::MissingFoliation, "model '" + name + "' has no contraction table");
    }
    Derivation iota(gens, -1);
    for (size_t k = 0; k < gens->size(); ++k) {
        iota.set_image(static_cast<int>(k), Form::unit(gens, iota_values[k]));
    }
    return iota;
}

namespace {

std::string witness_text(const Model& m, const Form& f) {
    return format_form(f, m.param_name.empty() ? "s" : m.param_name);
}

void check_d_squared(const Model& m, ValidationReport& report) {
    Derivation d = m.differential();
    for (size_t k = 0; k < m.gens->size(); ++k) {
        Form dd = apply_derivation(d, m.d_images[k]);
        CheckResult r;
        r.name = "d2-zero(" + m.gens->at(static_cast<int>(k)).name + ")";
        if (!dd.is_zero()) {
            r.passed = false;
            r.witness = "d^2(" + m.gens->at(static_cast<int>(k)).name + ") = " + witness_text(m, dd);
        }
        report.checks.push_back(std::move(r));
    }
}

void check_conjugation(const Model& m, ValidationReport& report) {
    // Typed generators must come in conjugate pairs before d-compatibility
    // makes sense.
    bool closed = true;
    for (const auto& g : m.gens->all()) {
        if ((g.type == GenType::Holo || g.type == GenType::Anti) && g.conj_partner < 0) {
            closed = false;
            report.checks.push_back({"conjugation-closure", false, false,
                                     "typed generator '" + g.name + "' has no conjugate"});
        }
    }
    if (!closed) return;
    report.checks.push_back({"conjugation-closure", true, false, ""});

    Derivation d = m.differential();
    for (size_t k = 0; k < m.gens->size(); ++k) {
        Form gen = Form::generator(m.gens, static_cast<int>(k));
        Form lhs = conjugate(apply_derivation(d, gen));
        Form rhs = apply_derivation(d, conjugate(gen));
        CheckResult r;
        r.name = "conj-d-compat(" + m.gens->at(static_cast<int>(k)).name + ")";
        if (lhs != rhs) {
            r.passed = false;
            r.witness = "conj(d x) = " + witness_text(m, lhs) + " but d(conj x) = " +
                        witness_text(m, rhs);
        }
        report.checks.push_back(std::move(r));
    }
}

void check_purity(const Model& m, ValidationReport& report) {
    if (!m.fully_typed()) return;
    for (size_t k = 0; k < m.gens->size(); ++k) {
        const Generator& g = m.gens->at(static_cast<int>(k));
        Bidegree own{g.type == GenType::Holo ? 1 : 0, g.type == GenType::Anti ? 1 : 0};
        CheckResult r;
        r.name = "bigrading-purity(" + g.name + ")";
        for (const auto& [mono, coeff] : m.d_images[k].terms()) {
            auto bd = mono.bidegree(*m.gens);
            bool ok = bd.has_value() &&
                      ((bd->p == own.p + 1 && bd->q == own.q) ||
                       (bd->p == own.p && bd->q == own.q + 1));
            if (!ok) {
                r.passed = false;
                r.witness = "component " + format_monomial(mono, *m.gens) +
                            " of d(" + g.name + ") has an illegal bidegree";
                break;
            }
        }
        report.checks.push_back(std::move(r));
    }
}

void check_contraction(const Model& m, ValidationReport& report) {
    if (!m.has_iota) return;
    Derivation iota = m.contraction_derivation();
    CheckResult r;
    r.name = "iota-squared-zero";
    for (size_t a = 0; a < m.gens->size() && r.passed; ++a) {
        for (size_t b = a + 1; b < m.gens->size() && r.passed; ++b) {
            Form pair = wedge(Form::generator(m.gens, static_cast<int>(a)),
                              Form::generator(m.gens, static_cast<int>(b)));
            Form twice = apply_derivation(iota, apply_derivation(iota, pair));
            if (!twice.is_zero()) {
                r.passed = false;
                r.witness = "iota^2 nonzero on " + witness_text(m, pair);
            }
        }
    }
    report.checks.push_back(std::move(r));
}

void check_declared_dbar(const Model& m, ValidationReport& report) {
    for (size_t k = 0; k < m.gens->size(); ++k) {
        if (!m.dbar_declared[k].has_value()) continue;
        const Generator& g = m.gens->at(static_cast<int>(k));
        CheckResult r;
        r.name = "declared-dbar(" + g.name + ")";
        r.warning_only = true;
        if (g.type != GenType::Holo && g.type != GenType::Anti) {
            r.passed = false;
            r.witness = "generator '" + g.name + "' is untyped; dbar line cannot be checked";
            report.checks.push_back(std::move(r));
            continue;
        }
        Bidegree own{g.type == GenType::Holo ? 1 : 0, g.type == GenType::Anti ? 1 : 0};
        Form derived(m.gens);
        for (const auto& [mono, coeff] : m.d_images[k].terms()) {
            auto bd = mono.bidegree(*m.gens);
            if (bd.has_value() && bd->p == own.p && bd->q == own.q + 1) {
                derived.add_term(mono, coeff);
            }
        }
        if (derived != *m.dbar_declared[k]) {
            r.passed = false;
            r.witness = "declared dbar(" + g.name + ") = " +
                        witness_text(m, *m.dbar_declared[k]) + " but the d-table gives " +
                        witness_text(m, derived);
        }
        report.checks.push_back(std::move(r));
    }
}

}  // namespace

ValidationReport validate_model(const Model& m) {
    ValidationReport report;
    check_d_squared(m, report);
    check_conjugation(m, report);
    check_purity(m, report);
    check_contraction(m, report);
    check_declared_dbar(m, report);
    return report;
}

}  // namespace folcoh

#pragma once

#include "folcoh/cohomology.hpp"

namespace folcoh {

/// Declared-orthonormal metric data: increasing-index monomials form an
/// orthonormal basis, the volume form is the declared orientation word.
struct MetricContext {
    GenSetPtr gens;
    Monomial volume;
    int orientation_sign = 1;
    int top_degree = 0;
};

MetricContext metric_context(const Model& m);

// Complex-linear star determined by the orthonormal coframe and orientation:
// e_I ^ star(e_I) = vol, so star(star(x)) = (-1)^{k(N-k)} x on k-forms.
Form hodge_star(const MetricContext& ctx, const Form& x);

// Exact conjugate transpose; in orthonormal monomial coordinates this is the
// metric adjoint.
MatrixQ adjoint_matrix(const MatrixQ& m);

enum class LaplacianKind { Dolbeault, BottChern, Aeppli };

// The operator matrix on (p,q): dbar*dbar + dbar dbar* for Dolbeault, the
// six-term formulas for Bott-Chern and Aeppli.
MatrixQ laplacian(const Bicomplex& b, LaplacianKind kind, int p, int q);

// Hermitian inner product matrix <rows of a, rows of b>.
MatrixQ gram(const MatrixQ& a, const MatrixQ& b);

struct HodgeCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct HodgeReport {
    std::vector<HodgeCheck> checks;
    bool ok() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

// Per bidegree and per theory: dim Ker(Laplacian) equals the quotient
// dimension, and the three-summand decomposition is orthogonal with dimensions
// summing to dim Lambda^{p,q}.
HodgeReport decomposition_check(const Bicomplex& b);

// h_BC(p,q) = h_A(n-p,n-q) and Delta_A = star Delta_BC star^{-1} as matrices.
// Requires homological orientability of the total complex.
HodgeReport duality_check(const Bicomplex& b, const MetricContext& ctx,
                          const GradedComplex& total);

// The pairing <L_xi x, y> on the iota-annihilated subspace of each degree is
// skew-Hermitian at s0.
HodgeReport lie_skewness_check(const Model& m, const Rational& s0);

}  // namespace folcoh

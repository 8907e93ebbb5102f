#pragma once

#include <map>
#include <optional>

#include "folcoh/model.hpp"
#include "folcoh/subspace.hpp"

namespace folcoh {

// Monomial bases of the full invariant exterior algebra, bucketed by degree
// and ordered lexicographically on index sequences.
std::vector<std::vector<Monomial>> degree_bases(const GeneratorSet& gens);

// Coordinates of a parameter-free homogeneous form in a monomial basis.
RowVectorQ coords_of(const Form& x, const std::vector<Monomial>& basis);
Form form_of(const GenSetPtr& gens, const RowVectorQ& coords, const std::vector<Monomial>& basis);

/// A differential-stable graded piece of the invariant algebra: per degree a
/// subspace of the ambient monomial space plus the restricted differential in
/// subspace coordinates.
struct GradedComplex {
    GenSetPtr gens;
    std::optional<Rational> param_value;
    std::vector<std::vector<Monomial>> ambient;
    std::vector<Subspace> piece;  // one per degree 0..top
    std::vector<MatrixQ> d;       // d[k]: piece k -> piece k+1, column action

    int top_degree() const { return static_cast<int>(piece.size()) - 1; }
    Index dim(int degree) const { return piece[static_cast<size_t>(degree)].dim(); }

    // Highest degree with a nonzero piece; -1 for the zero complex.
    int top_nonzero_degree() const {
        for (int k = top_degree(); k >= 0; --k) {
            if (dim(k) > 0) return k;
        }
        return -1;
    }

    Form form_at(int degree, const RowVectorQ& piece_coords) const;
};

// i_xi extended as an antiderivation and evaluated at s0.
Form contraction(const Model& m, const Form& x, const Rational& s0);

// Cartan formula d i_xi + i_xi d at s0.
Form lie_derivative(const Model& m, const Form& x, const Rational& s0);

// Per degree the subspace { x : i_xi x = 0 and i_xi dx = 0 } at s0, with the
// restricted differential; d-stability is checked, not assumed.
GradedComplex basic_subcomplex(const Model& m, const Rational& s0);

// The full invariant algebra as a complex (the zero-contraction case).
GradedComplex full_complex(const Model& m);

// basic_subcomplex when the model has a contraction table (s0 then required),
// full_complex otherwise.
GradedComplex invariant_complex(const Model& m, const std::optional<Rational>& s0);

/// The Dolbeault double complex of a fully typed model: monomial bases per
/// bidegree and the bigraded components of d between them.
struct Bicomplex {
    GenSetPtr gens;
    int max_p = 0;
    int max_q = 0;
    std::map<std::pair<int, int>, std::vector<Monomial>> basis;
    std::map<std::pair<int, int>, MatrixQ> del;   // (p,q) -> (p+1,q)
    std::map<std::pair<int, int>, MatrixQ> dbar;  // (p,q) -> (p,q+1)

    const std::vector<Monomial>& basis_at(int p, int q) const;
    Index dim(int p, int q) const { return static_cast<Index>(basis_at(p, q).size()); }
    // Zero-sized matrices outside the stored range.
    MatrixQ del_at(int p, int q) const;
    MatrixQ dbar_at(int p, int q) const;
};

// Splits d into (1,0) and (0,1) parts; any other component is an
// integrability error with the offending term as witness.
Bicomplex bigrade_split(const Model& m);

// Multiplies each (p,q)-component by i(p-q).
Form j_action(const Bicomplex& b, const Form& x);

// Throws InvalidModel carrying the first failing hard check.
void require_valid(const Model& m);

}  // namespace folcoh

#pragma once

#include "folcoh/cohomology.hpp"
#include "folcoh/hodge.hpp"

namespace folcoh {

struct DdbarVerdict {
    bool holds = true;
    // On failure: the lexicographically first failing bidegree, which space
    // equality broke, and an echelon witness in the difference.
    int p = -1;
    int q = -1;
    std::string failed_clause;
    std::optional<Form> witness;
};

// The three-space condition Ker(del) ∩ Im(dbar) = Ker(dbar) ∩ Im(del) =
// Im(del dbar), decided per bidegree.
DdbarVerdict ddbar_check(const Bicomplex& b);

struct FroelicherRow {
    int degree = 0;
    Index lhs = 0;  // sum of h_BC + h_A over p+q = degree
    Index rhs = 0;  // 2 dim H^degree
    Index slack() const { return lhs - rhs; }
};

struct FroelicherReport {
    std::vector<FroelicherRow> rows;
    bool inequality_holds = true;  // lhs >= rhs everywhere
    bool equality_everywhere = true;
};

FroelicherReport froelicher_inequality_report(const Bicomplex& b, const GradedComplex& total);

// True iff the top nonzero degree has one-dimensional cohomology.
bool homological_orientability_check(const GradedComplex& c);

struct KaehlerVerdict {
    enum class Kind { Witness, ImpossibleNondegenerate, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<Form> witness;
    int trials_used = 0;
};

// Searches the real d-closed (1,1) space for a transverse Kaehler form.
// Stage 1 decides nondegeneracy as a polynomial identity (randomized screen,
// symbolic expansion fallback); stage 2 samples rational combinations and
// tests positive definiteness of the Hermitian coefficient matrix exactly.
KaehlerVerdict kaehler_witness(const Bicomplex& b, int trials, uint64_t seed);

// Re-derives the four witness conditions independently of the search path.
bool verify_kaehler_witness(const Bicomplex& b, const MetricContext& ctx, const Form& omega);

struct SweepPoint {
    Rational value;
    std::vector<Index> dims;  // basic de Rham dimensions by degree
    std::vector<Index> subcomplex_dims;
    bool orientable = false;
    std::optional<Form> top_representative;
};

struct SweepReport {
    std::vector<SweepPoint> points;
    std::vector<std::pair<size_t, size_t>> jumps;  // adjacent grid indices with different dims
    std::optional<size_t> reference_index;
    // reference comparisons: for each point, whether dims <= dims(reference)
    std::vector<bool> dominated_by_reference;
};

// Evaluates the family on a strictly increasing rational grid; grid points are
// processed in parallel and collected in order.
SweepReport parameter_sweep(const Model& m, const std::vector<Rational>& grid,
                            std::optional<Rational> reference = std::nullopt);

}  // namespace folcoh

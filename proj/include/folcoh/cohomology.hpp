#pragma once

#include "folcoh/complexes.hpp"

namespace folcoh {

enum class Theory { DeRham, Dolbeault, DolbeaultConjugate, BottChern, Aeppli };

const char* theory_name(Theory theory);

struct CohEntry {
    int p = 0;
    int q = -1;  // -1 marks an ungraded (total-degree) entry
    Index dim = 0;
    std::vector<Form> representatives;
};

struct CohomologyTable {
    Theory theory;
    std::vector<CohEntry> entries;

    Index dim_at(int p, int q) const {
        for (const auto& e : entries) {
            if (e.p == p && e.q == q) return e.dim;
        }
        return 0;
    }
    Index total_in_degree(int k) const {
        Index sum = 0;
        for (const auto& e : entries) {
            int deg = e.q < 0 ? e.p : e.p + e.q;
            if (deg == k) sum += e.dim;
        }
        return sum;
    }
    std::vector<Index> dims_by_degree(int top) const {
        std::vector<Index> out;
        for (int k = 0; k <= top; ++k) out.push_back(total_in_degree(k));
        return out;
    }
};

// H^k = Ker d_k / Im d_{k-1}, representatives echelon-normalized against the
// image.
CohomologyTable de_rham(const GradedComplex& c);

CohomologyTable dolbeault(const Bicomplex& b, bool conjugate_theory = false);

// (Ker del ∩ Ker dbar) / Im(del dbar), containment verified.
CohomologyTable bott_chern(const Bicomplex& b);

// Ker(del dbar) / (Im del + Im dbar), containment verified.
CohomologyTable aeppli(const Bicomplex& b);

// Numerator/denominator pair for one bidegree of one theory, in (p,q)
// monomial coordinates; used by representative-membership checks.
struct TheorySpaces {
    Subspace numerator;
    Subspace denominator;
};
TheorySpaces theory_spaces(const Bicomplex& b, Theory theory, int p, int q);

struct SpectralPages {
    // pages[r-1] holds the dimension table of E_r.
    std::vector<std::map<std::pair<int, int>, Index>> pages;
    int degeneration_page = 1;  // smallest r with E_r = E_infinity

    const std::map<std::pair<int, int>, Index>& infinity() const { return pages.back(); }
};

// First-quadrant page recursion; E_1 is Dolbeault, pages are reported up to
// max(r_max, stabilization).
SpectralPages froelicher_pages(const Bicomplex& b, int r_max = 2);

}  // namespace folcoh

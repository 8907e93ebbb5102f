#include "folcoh/cohomology.hpp"

#include "folcoh/errors.hpp"

namespace folcoh {

const char* theory_name(Theory theory) {
    switch (theory) {
        case Theory::DeRham: return "deRham";
        case Theory::Dolbeault: return "dolbeault";
        case Theory::DolbeaultConjugate: return "dolbeault-conjugate";
        case Theory::BottChern: return "bottChern";
        case Theory::Aeppli: return "aeppli";
    }
    return "unknown";
}

CohomologyTable de_rham(const GradedComplex& c) {
    CohomologyTable out{Theory::DeRham, {}};
    for (int k = 0; k <= c.top_degree(); ++k) {
        const MatrixQ& dk = c.d[static_cast<size_t>(k)];
        Subspace numerator = Subspace::kernel_of(dk);
        Subspace denominator =
            k == 0 ? Subspace(c.dim(0)) : Subspace::image_of(c.d[static_cast<size_t>(k) - 1]);
        CohEntry entry;
        entry.p = k;
        entry.q = -1;
        entry.dim = quotient_dim(numerator, denominator);
        MatrixQ reps = quotient_representatives(numerator, denominator);
        for (Index r = 0; r < reps.rows(); ++r) {
            entry.representatives.push_back(c.form_at(k, reps.row(r)));
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

namespace {

CohomologyTable bigraded_table(const Bicomplex& b, Theory theory) {
    CohomologyTable out{theory, {}};
    for (int p = 0; p <= b.max_p; ++p) {
        for (int q = 0; q <= b.max_q; ++q) {
            TheorySpaces spaces = theory_spaces(b, theory, p, q);
            CohEntry entry;
            entry.p = p;
            entry.q = q;
            entry.dim = quotient_dim(spaces.numerator, spaces.denominator);
            MatrixQ reps = quotient_representatives(spaces.numerator, spaces.denominator);
            for (Index r = 0; r < reps.rows(); ++r) {
                entry.representatives.push_back(form_of(b.gens, reps.row(r), b.basis_at(p, q)));
            }
            out.entries.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace

TheorySpaces theory_spaces(const Bicomplex& b, Theory theory, int p, int q) {
    Index n = b.dim(p, q);
    switch (theory) {
        case Theory::Dolbeault:
            return {Subspace::kernel_of(b.dbar_at(p, q)), Subspace::image_of(b.dbar_at(p, q - 1))};
        case Theory::DolbeaultConjugate:
            return {Subspace::kernel_of(b.del_at(p, q)), Subspace::image_of(b.del_at(p - 1, q))};
        case Theory::BottChern: {
            MatrixQ stacked(b.dim(p + 1, q) + b.dim(p, q + 1), n);
            stacked.topRows(b.dim(p + 1, q)) = b.del_at(p, q);
            stacked.bottomRows(b.dim(p, q + 1)) = b.dbar_at(p, q);
            Subspace numerator = Subspace::kernel_of(stacked);
            MatrixQ deldbar = b.del_at(p - 1, q) * b.dbar_at(p - 1, q - 1);
            Subspace denominator = Subspace::image_of(deldbar);
            if (!numerator.contains(denominator)) {
                throw Error(ErrorCode::InternalConsistency,
                            "Im(del dbar) escapes Ker(del) ∩ Ker(dbar)");
            }
            return {std::move(numerator), std::move(denominator)};
        }
        case Theory::Aeppli: {
            MatrixQ deldbar_out = b.del_at(p, q + 1) * b.dbar_at(p, q);
            Subspace numerator = Subspace::kernel_of(deldbar_out);
            Subspace denominator =
                sum(Subspace::image_of(b.del_at(p - 1, q)), Subspace::image_of(b.dbar_at(p, q - 1)));
            if (!numerator.contains(denominator)) {
                throw Error(ErrorCode::InternalConsistency,
                            "Im(del) + Im(dbar) escapes Ker(del dbar)");
            }
            return {std::move(numerator), std::move(denominator)};
        }
        case Theory::DeRham: break;
    }
    throw Error(ErrorCode::Usage, "theory_spaces expects a bigraded theory");
}

CohomologyTable dolbeault(const Bicomplex& b, bool conjugate_theory) {
    return bigraded_table(b, conjugate_theory ? Theory::DolbeaultConjugate : Theory::Dolbeault);
}

CohomologyTable bott_chern(const Bicomplex& b) { return bigraded_table(b, Theory::BottChern); }

CohomologyTable aeppli(const Bicomplex& b) { return bigraded_table(b, Theory::Aeppli); }

namespace {

// Total-complex scaffolding for the page recursion: Tot^n concatenates the
// (p, n-p) bases with p ascending.
struct TotalComplex {
    std::vector<std::vector<Index>> block_offset;  // per n, per p
    std::vector<Index> total_dim;                  // per n
    std::vector<MatrixQ> d;                        // Tot^n -> Tot^{n+1}
    int top = 0;
    int max_p = 0;

    Index offset(int n, int p) const {
        return block_offset[static_cast<size_t>(n)][static_cast<size_t>(p)];
    }
};

TotalComplex build_total(const Bicomplex& b) {
    TotalComplex out;
    out.top = b.max_p + b.max_q;
    out.max_p = b.max_p;
    out.block_offset.resize(static_cast<size_t>(out.top) + 1);
    out.total_dim.resize(static_cast<size_t>(out.top) + 1, 0);
    for (int n = 0; n <= out.top; ++n) {
        auto& offsets = out.block_offset[static_cast<size_t>(n)];
        offsets.resize(static_cast<size_t>(b.max_p) + 2, 0);
        Index at = 0;
        for (int p = 0; p <= b.max_p; ++p) {
            offsets[static_cast<size_t>(p)] = at;
            int q = n - p;
            if (q >= 0 && q <= b.max_q) at += b.dim(p, q);
        }
        offsets[static_cast<size_t>(b.max_p) + 1] = at;
        out.total_dim[static_cast<size_t>(n)] = at;
    }
    for (int n = 0; n < out.top; ++n) {
        MatrixQ d = MatrixQ::Zero(out.total_dim[static_cast<size_t>(n) + 1],
                                  out.total_dim[static_cast<size_t>(n)]);
        for (int p = 0; p <= b.max_p; ++p) {
            int q = n - p;
            if (q < 0 || q > b.max_q || b.dim(p, q) == 0) continue;
            Index src = out.offset(n, p);
            MatrixQ del = b.del_at(p, q);
            if (del.rows() > 0) {
                d.block(out.offset(n + 1, p + 1), src, del.rows(), del.cols()) = del;
            }
            MatrixQ dbar = b.dbar_at(p, q);
            if (dbar.rows() > 0) {
                d.block(out.offset(n + 1, p), src, dbar.rows(), dbar.cols()) = dbar;
            }
        }
        out.d.push_back(std::move(d));
    }
    out.d.push_back(MatrixQ::Zero(0, out.total_dim[static_cast<size_t>(out.top)]));
    return out;
}

// Z_r^{p,q} = { x in F^p Tot^{p+q} : dx in F^{p+r} Tot^{p+q+1} } where
// F^p keeps the blocks with first index >= p.
Subspace z_space(const TotalComplex& tot, int p, int q, int r) {
    int n = p + q;
    if (n < 0 || n > tot.top) return Subspace(0);
    Index dim_n = tot.total_dim[static_cast<size_t>(n)];
    if (p > tot.max_p + 1) return Subspace(dim_n);  // F^p = 0 gives the zero space
    int p_low = std::max(p, 0);
    Index below = tot.offset(n, p_low);  // coordinates in blocks < p must vanish

    Index rows_filter = below;
    Index rows_d = 0;
    const MatrixQ& d = tot.d[static_cast<size_t>(n)];
    int target_cut = std::min(p + r, tot.max_p + 1);
    Index d_cut = 0;
    if (n + 1 <= tot.top && target_cut > 0) {
        d_cut = tot.offset(n + 1, target_cut);
        rows_d = d_cut;
    }
    MatrixQ system = MatrixQ::Zero(rows_filter + rows_d, dim_n);
    for (Index k = 0; k < below; ++k) system(k, k) = GaussianRational(1);
    if (rows_d > 0) system.bottomRows(rows_d) = d.topRows(d_cut);
    return Subspace::kernel_of(system);
}

}  // namespace

SpectralPages froelicher_pages(const Bicomplex& b, int r_max) {
    TotalComplex tot = build_total(b);
    int stabilize_at = std::max(b.max_p, b.max_q + 1) + 1;
    int last_page = std::max(r_max, stabilize_at);

    SpectralPages out;
    for (int r = 1; r <= last_page; ++r) {
        std::map<std::pair<int, int>, Index> table;
        for (int p = 0; p <= b.max_p; ++p) {
            for (int q = 0; q <= b.max_q; ++q) {
                Subspace z = z_space(tot, p, q, r);
                Subspace stay = z_space(tot, p + 1, q - 1, r - 1);
                Subspace incoming_src = z_space(tot, p - r + 1, q + r - 2, r - 1);
                Subspace denominator = stay;
                if (p + q >= 1 && incoming_src.dim() > 0) {
                    const MatrixQ& d_prev = tot.d[static_cast<size_t>(p + q) - 1];
                    Subspace image =
                        Subspace::span_of_rows(incoming_src.basis() * d_prev.transpose());
                    denominator = sum(denominator, image);
                }
                table[{p, q}] = quotient_dim(z, denominator);
            }
        }
        out.pages.push_back(std::move(table));
    }
    out.degeneration_page = last_page;
    for (int r = last_page; r >= 1; --r) {
        if (out.pages[static_cast<size_t>(r) - 1] == out.pages.back()) {
            out.degeneration_page = r;
        } else {
            break;
        }
    }
    return out;
}

}  // namespace folcoh

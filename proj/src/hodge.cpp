#include "folcoh/hodge.hpp"

#include "folcoh/errors.hpp"

namespace folcoh {

MetricContext metric_context(const Model& m) {
    if (!m.metric_orthonormal) {
        throw Error(ErrorCode::MissingMetric, "model '" + m.name + "' declares no metric");
    }
    if (!m.orientation.has_value()) {
        throw Error(ErrorCode::MissingOrientation, "model '" + m.name + "' declares no orientation");
    }
    MetricContext ctx;
    ctx.gens = m.gens;
    ctx.volume = *m.orientation;
    ctx.orientation_sign = m.orientation_sign;
    ctx.top_degree = m.gens->total_degree();
    return ctx;
}

Form hodge_star(const MetricContext& ctx, const Form& x) {
    if (!x.is_homogeneous()) {
        throw Error(ErrorCode::Purity, "hodge star demands a homogeneous form");
    }
    const GeneratorSet& gens = *ctx.gens;
    Form out(ctx.gens);
    for (const auto& [mono, coeff] : x.terms()) {
        std::vector<int> complement;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            if (!mono.contains(g)) complement.push_back(g);
        }
        // sign with e_I ^ e_{I^c} = sign * e_all
        std::vector<int> concat = mono.indices();
        concat.insert(concat.end(), complement.begin(), complement.end());
        auto [all, sign] = koszul_sort(std::move(concat), gens);
        if (sign == 0) {
            throw Error(ErrorCode::InternalConsistency, "degenerate monomial in hodge star");
        }
        ParamPoly c = coeff;
        if (sign * ctx.orientation_sign < 0) c = -c;
        out.add_term(Monomial(std::move(complement)), c);
    }
    return out;
}

MatrixQ adjoint_matrix(const MatrixQ& m) { return m.adjoint(); }

MatrixQ gram(const MatrixQ& a, const MatrixQ& b) { return a * b.adjoint(); }

namespace {

bool is_zero_matrix(const MatrixQ& m) {
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            if (m(r, c) != GaussianRational(0)) return false;
        }
    }
    return true;
}

}  // namespace

MatrixQ laplacian(const Bicomplex& b, LaplacianKind kind, int p, int q) {
    MatrixQ del_out = b.del_at(p, q);
    MatrixQ dbar_out = b.dbar_at(p, q);
    MatrixQ del_in = b.del_at(p - 1, q);
    MatrixQ dbar_in = b.dbar_at(p, q - 1);
    switch (kind) {
        case LaplacianKind::Dolbeault:
            return MatrixQ(adjoint_matrix(dbar_out) * dbar_out +
                           dbar_in * adjoint_matrix(dbar_in));
        case LaplacianKind::BottChern: {
            MatrixQ dd_in = b.del_at(p - 1, q) * b.dbar_at(p - 1, q - 1);
            MatrixQ dd_out = b.del_at(p, q + 1) * b.dbar_at(p, q);
            MatrixQ mixed_in = adjoint_matrix(b.dbar_at(p, q)) * b.del_at(p - 1, q + 1);
            MatrixQ mixed_out = adjoint_matrix(b.dbar_at(p + 1, q - 1)) * b.del_at(p, q);
            return MatrixQ(dd_in * adjoint_matrix(dd_in) + adjoint_matrix(dd_out) * dd_out +
                           mixed_in * adjoint_matrix(mixed_in) +
                           adjoint_matrix(mixed_out) * mixed_out +
                           adjoint_matrix(dbar_out) * dbar_out +
                           adjoint_matrix(del_out) * del_out);
        }
        case LaplacianKind::Aeppli: {
            MatrixQ dd_in = b.del_at(p - 1, q) * b.dbar_at(p - 1, q - 1);
            MatrixQ dd_out = b.del_at(p, q + 1) * b.dbar_at(p, q);
            MatrixQ mixed_out = b.dbar_at(p - 1, q) * adjoint_matrix(b.del_at(p - 1, q));
            MatrixQ mixed_in = b.dbar_at(p, q - 1) * adjoint_matrix(b.del_at(p, q - 1));
            return MatrixQ(del_in * adjoint_matrix(del_in) + dbar_in * adjoint_matrix(dbar_in) +
                           adjoint_matrix(dd_out) * dd_out + dd_in * adjoint_matrix(dd_in) +
                           adjoint_matrix(mixed_out) * mixed_out +
                           mixed_in * adjoint_matrix(mixed_in));
        }
    }
    throw Error(ErrorCode::Usage, "unknown laplacian kind");
}

namespace {

void check_one_decomposition(const Bicomplex& b, int p, int q, LaplacianKind kind,
                             Theory theory, HodgeReport& report) {
    std::string where = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const char* tag = kind == LaplacianKind::Dolbeault  ? "dolbeault"
                      : kind == LaplacianKind::BottChern ? "bottChern"
                                                         : "aeppli";
    MatrixQ lap = laplacian(b, kind, p, q);
    Subspace harmonic = Subspace::kernel_of(lap);
    TheorySpaces spaces = theory_spaces(b, theory, p, q);
    Index h = quotient_dim(spaces.numerator, spaces.denominator);

    HodgeCheck dim_check;
    dim_check.name = std::string("harmonic-dim-") + tag + where;
    if (harmonic.dim() != h) {
        dim_check.passed = false;
        dim_check.detail = "dim Ker = " + std::to_string(harmonic.dim()) +
                           " but h = " + std::to_string(h);
    }
    report.checks.push_back(std::move(dim_check));
    if (kind == LaplacianKind::Dolbeault) return;

    MatrixQ dd_in = b.del_at(p - 1, q) * b.dbar_at(p - 1, q - 1);
    MatrixQ dd_out = b.del_at(p, q + 1) * b.dbar_at(p, q);
    Subspace second(b.dim(p, q)), third(b.dim(p, q));
    if (kind == LaplacianKind::BottChern) {
        second = Subspace::image_of(dd_in);
        third = sum(Subspace::image_of(adjoint_matrix(b.del_at(p, q))),
                    Subspace::image_of(adjoint_matrix(b.dbar_at(p, q))));
    } else {
        second = sum(Subspace::image_of(b.del_at(p - 1, q)),
                     Subspace::image_of(b.dbar_at(p, q - 1)));
        third = Subspace::image_of(adjoint_matrix(dd_out));
    }

    HodgeCheck split;
    split.name = std::string("decomposition-") + tag + where;
    Index total = harmonic.dim() + second.dim() + third.dim();
    if (total != b.dim(p, q)) {
        split.passed = false;
        split.detail = "summand dimensions " + std::to_string(harmonic.dim()) + "+" +
                       std::to_string(second.dim()) + "+" + std::to_string(third.dim()) +
                       " != " + std::to_string(b.dim(p, q));
    } else {
        const Subspace* parts[3] = {&harmonic, &second, &third};
        for (int a = 0; a < 3 && split.passed; ++a) {
            for (int c = a + 1; c < 3 && split.passed; ++c) {
                if (!is_zero_matrix(gram(parts[a]->basis(), parts[c]->basis()))) {
                    split.passed = false;
                    split.detail = "summands " + std::to_string(a) + " and " + std::to_string(c) +
                                   " are not orthogonal";
                }
            }
        }
    }
    report.checks.push_back(std::move(split));
}

}  // namespace

HodgeReport decomposition_check(const Bicomplex& b) {
    HodgeReport report;
    for (int p = 0; p <= b.max_p; ++p) {
        for (int q = 0; q <= b.max_q; ++q) {
            check_one_decomposition(b, p, q, LaplacianKind::Dolbeault, Theory::Dolbeault, report);
            check_one_decomposition(b, p, q, LaplacianKind::BottChern, Theory::BottChern, report);
            check_one_decomposition(b, p, q, LaplacianKind::Aeppli, Theory::Aeppli, report);
        }
    }
    return report;
}

namespace {

// Matrix of the star operator from the (p,q) basis to the (n-p,n-q) basis.
MatrixQ star_matrix(const Bicomplex& b, const MetricContext& ctx, int p, int q) {
    const auto& from = b.basis_at(p, q);
    const auto& to = b.basis_at(b.max_p - p, b.max_q - q);
    MatrixQ out = MatrixQ::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
        Form starred = hodge_star(ctx, Form::monomial(b.gens, from[c]));
        out.col(static_cast<Index>(c)) = coords_of(starred, to).transpose();
    }
    return out;
}

}  // namespace

HodgeReport duality_check(const Bicomplex& b, const MetricContext& ctx,
                          const GradedComplex& total) {
    HodgeReport report;

    HodgeCheck orientable;
    orientable.name = "homological-orientability";
    int top = total.top_nonzero_degree();
    CohomologyTable dr = de_rham(total);
    if (top < 0 || dr.dim_at(top, -1) != 1) {
        orientable.passed = false;
        orientable.detail = "top cohomology is not one-dimensional";
    }
    report.checks.push_back(std::move(orientable));

    for (int p = 0; p <= b.max_p; ++p) {
        for (int q = 0; q <= b.max_q; ++q) {
            int dp = b.max_p - p;
            int dq = b.max_q - q;
            std::string where = "(" + std::to_string(p) + "," + std::to_string(q) + ")";

            TheorySpaces bc = theory_spaces(b, Theory::BottChern, p, q);
            TheorySpaces ae = theory_spaces(b, Theory::Aeppli, dp, dq);
            Index h_bc = quotient_dim(bc.numerator, bc.denominator);
            Index h_a = quotient_dim(ae.numerator, ae.denominator);
            HodgeCheck dims;
            dims.name = "duality-dims" + where;
            if (h_bc != h_a) {
                dims.passed = false;
                dims.detail = "h_BC" + where + " = " + std::to_string(h_bc) + " but h_A(" +
                              std::to_string(dp) + "," + std::to_string(dq) + ") = " +
                              std::to_string(h_a);
            }
            report.checks.push_back(std::move(dims));

            // Delta_A on the dual bidegree conjugates to Delta_BC through star:
            // Delta_A * S = S * Delta_BC avoids forming the inverse.
            MatrixQ star = star_matrix(b, ctx, p, q);
            MatrixQ lhs = laplacian(b, LaplacianKind::Aeppli, dp, dq) * star;
            MatrixQ rhs = star * laplacian(b, LaplacianKind::BottChern, p, q);
            HodgeCheck conjugation;
            conjugation.name = "duality-star-conjugation" + where;
            if (!is_zero_matrix(MatrixQ(lhs - rhs))) {
                conjugation.passed = false;
                conjugation.detail = "Delta_A != star Delta_BC star^{-1} at " + where;
            }
            report.checks.push_back(std::move(conjugation));
        }
    }
    return report;
}

HodgeReport lie_skewness_check(const Model& m, const Rational& s0) {
    if (!m.has_iota) {
        throw Error(ErrorCode::MissingFoliation, "model '" + m.name + "' has no contraction table");
    }
    if (!m.metric_orthonormal) {
        throw Error(ErrorCode::MissingMetric, "model '" + m.name + "' declares no metric");
    }
    HodgeReport report;
    auto ambient = degree_bases(*m.gens);
    for (size_t k = 0; k < ambient.size(); ++k) {
        const auto& basis = ambient[k];
        Index n = static_cast<Index>(basis.size());

        // iota matrix on degree k and the ambient Lie derivative matrix.
        MatrixQ iota_mat = MatrixQ::Zero(k == 0 ? 0 : static_cast<Index>(ambient[k - 1].size()), n);
        MatrixQ lie_mat = MatrixQ::Zero(n, n);
        for (Index c = 0; c < n; ++c) {
            Form mono = Form::monomial(m.gens, basis[static_cast<size_t>(c)]);
            if (k > 0) {
                iota_mat.col(c) = coords_of(contraction(m, mono, s0), ambient[k - 1]).transpose();
            }
            lie_mat.col(c) = coords_of(lie_derivative(m, mono, s0), basis).transpose();
        }
        Subspace annihilated = k == 0 ? Subspace::full(n) : Subspace::kernel_of(iota_mat);
        const MatrixQ& basis_rows = annihilated.basis();

        // pairing(i,j) = <L b_i, b_j> in the declared inner product
        MatrixQ pairing = basis_rows.conjugate() * lie_mat * basis_rows.transpose();
        HodgeCheck check;
        check.name = "lie-skew(degree " + std::to_string(k) + ")";
        MatrixQ defect = MatrixQ(pairing.adjoint() + pairing);
        if (!is_zero_matrix(defect)) {
            check.passed = false;
            for (Index r = 0; r < defect.rows() && check.detail.empty(); ++r) {
                for (Index c = 0; c < defect.cols() && check.detail.empty(); ++c) {
                    if (defect(r, c) != GaussianRational(0)) {
                        Form x = form_of(m.gens, basis_rows.row(r), basis);
                        Form y = form_of(m.gens, basis_rows.row(c), basis);
                        check.detail = "<Lx,y> + conj(<Ly,x>) != 0 for x = " + format_form(x) +
                                       ", y = " + format_form(y);
                    }
                }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace folcoh

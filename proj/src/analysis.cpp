#include "folcoh/analysis.hpp"

#include <future>
#include <random>

#include "folcoh/errors.hpp"

namespace folcoh {

DdbarVerdict ddbar_check(const Bicomplex& b) {
    DdbarVerdict verdict;
    for (int p = 0; p <= b.max_p && verdict.holds; ++p) {
        for (int q = 0; q <= b.max_q && verdict.holds; ++q) {
            Subspace ker_del = Subspace::kernel_of(b.del_at(p, q));
            Subspace ker_dbar = Subspace::kernel_of(b.dbar_at(p, q));
            Subspace im_del = Subspace::image_of(b.del_at(p - 1, q));
            Subspace im_dbar = Subspace::image_of(b.dbar_at(p, q - 1));
            Subspace im_deldbar =
                Subspace::image_of(MatrixQ(b.del_at(p - 1, q) * b.dbar_at(p - 1, q - 1)));

            Subspace dbar_closed_del_exact = intersect(ker_dbar, im_del);
            Subspace del_closed_dbar_exact = intersect(ker_del, im_dbar);

            auto fail = [&](const std::string& clause, const Subspace& space) {
                verdict.holds = false;
                verdict.p = p;
                verdict.q = q;
                verdict.failed_clause = clause;
                MatrixQ reps = quotient_representatives(space, im_deldbar);
                verdict.witness = form_of(b.gens, reps.row(0), b.basis_at(p, q));
            };
            if (!(dbar_closed_del_exact == im_deldbar)) {
                fail("Ker(dbar) ∩ Im(del) != Im(del dbar)", dbar_closed_del_exact);
            } else if (!(del_closed_dbar_exact == im_deldbar)) {
                fail("Ker(del) ∩ Im(dbar) != Im(del dbar)", del_closed_dbar_exact);
            }
        }
    }
    return verdict;
}

FroelicherReport froelicher_inequality_report(const Bicomplex& b, const GradedComplex& total) {
    FroelicherReport report;
    CohomologyTable bc = bott_chern(b);
    CohomologyTable ae = aeppli(b);
    CohomologyTable dr = de_rham(total);
    int top = b.max_p + b.max_q;
    for (int k = 0; k <= top; ++k) {
        FroelicherRow row;
        row.degree = k;
        for (int p = 0; p <= b.max_p; ++p) {
            int q = k - p;
            if (q < 0 || q > b.max_q) continue;
            row.lhs += bc.dim_at(p, q) + ae.dim_at(p, q);
        }
        row.rhs = 2 * dr.dim_at(k, -1);
        if (row.lhs < row.rhs) report.inequality_holds = false;
        if (row.lhs != row.rhs) report.equality_everywhere = false;
        report.rows.push_back(row);
    }
    return report;
}

bool homological_orientability_check(const GradedComplex& c) {
    int top = c.top_nonzero_degree();
    if (top < 0) return false;
    CohomologyTable dr = de_rham(c);
    return dr.dim_at(top, -1) == 1;
}

namespace {

// Rational basis of the conjugation-fixed part of a conjugation-stable
// subspace: echelon-reduce the real and imaginary parts of v and conj(v).
MatrixQ real_points_basis(const Bicomplex& b, const Subspace& space, int p, int q) {
    const auto& basis = b.basis_at(p, q);
    std::vector<RowVectorQ> candidates;
    GaussianRational half(Rational(1, 2));
    GaussianRational half_i(Rational(0), Rational(-1, 2));
    for (Index r = 0; r < space.dim(); ++r) {
        Form v = form_of(b.gens, space.basis().row(r), basis);
        Form vbar = conjugate(v);
        Form re = half * v;
        re += half * vbar;
        Form im = half_i * v;
        im -= half_i * vbar;
        candidates.push_back(coords_of(re, basis));
        candidates.push_back(coords_of(im, basis));
    }
    if (candidates.empty()) return MatrixQ::Zero(0, static_cast<Index>(basis.size()));
    MatrixQ rows(static_cast<Index>(candidates.size()), static_cast<Index>(basis.size()));
    for (size_t k = 0; k < candidates.size(); ++k) rows.row(static_cast<Index>(k)) = candidates[k];
    // Row reduction over Q(i) would remix real and imaginary parts; these rows
    // are real points, so reduce over the rationals by treating each entry's
    // real and imaginary components as separate columns.
    Index n = rows.cols();
    MatrixQ split(rows.rows(), 2 * n);
    for (Index r = 0; r < rows.rows(); ++r) {
        for (Index c = 0; c < n; ++c) {
            split(r, c) = GaussianRational(rows(r, c).re());
            split(r, n + c) = GaussianRational(rows(r, c).im());
        }
    }
    MatrixQ reduced = rref(split);
    MatrixQ out(reduced.rows(), n);
    for (Index r = 0; r < reduced.rows(); ++r) {
        for (Index c = 0; c < n; ++c) {
            out(r, c) = reduced(r, c) + GaussianRational::i() * reduced(r, n + c);
        }
    }
    return out;
}

// omega as i * sum H_jk beta_j ^ conj(beta_k); nullopt when omega has a
// component outside the (1,1) span of conjugate generator pairs.
std::optional<MatrixQ> hermitian_coefficients(const Bicomplex& b, const Form& omega) {
    std::vector<int> holo;
    for (int g = 0; g < static_cast<int>(b.gens->size()); ++g) {
        if (b.gens->at(g).type == GenType::Holo) holo.push_back(g);
    }
    Index n = static_cast<Index>(holo.size());
    MatrixQ h = MatrixQ::Zero(n, n);
    for (const auto& [mono, coeff] : omega.terms()) {
        if (!coeff.is_constant()) return std::nullopt;
        if (mono.length() != 2) return std::nullopt;
        int a = mono.indices()[0];
        int c = mono.indices()[1];
        if (b.gens->at(a).type == GenType::Anti) std::swap(a, c);
        if (b.gens->at(a).type != GenType::Holo || b.gens->at(c).type != GenType::Anti) {
            return std::nullopt;
        }
        int j = -1, k = -1;
        for (Index t = 0; t < n; ++t) {
            if (holo[static_cast<size_t>(t)] == a) j = static_cast<int>(t);
            if (b.gens->at(holo[static_cast<size_t>(t)]).conj_partner == c) k = static_cast<int>(t);
        }
        if (j < 0 || k < 0) return std::nullopt;
        // mono is stored index-sorted; recover the sign of beta_j ^ conj(beta_k).
        auto [sorted, sign] = koszul_sort({a, c}, *b.gens);
        GaussianRational value = coeff.constant_value();
        if (sign < 0) value = -value;
        // omega = i H_jk beta_j ^ betabar_k  =>  H_jk = -i * value
        h(j, k) = GaussianRational(Rational(0), Rational(-1)) * value;
    }
    return h;
}

bool is_positive_definite_hermitian(const MatrixQ& h) {
    Index n = h.rows();
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            if (h(r, c) != conj(h(c, r))) return false;
        }
    }
    // Sylvester: every leading principal minor is a positive rational.
    for (Index k = 1; k <= n; ++k) {
        MatrixQ minor = h.topLeftCorner(k, k);
        // exact determinant by fraction-free-ish elimination over Q(i)
        GaussianRational det(1);
        MatrixQ m = minor;
        for (Index col = 0; col < k; ++col) {
            Index pivot = -1;
            for (Index r = col; r < k; ++r) {
                if (m(r, col) != GaussianRational(0)) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return false;  // singular minor
            if (pivot != col) {
                m.row(pivot).swap(m.row(col));
                det = -det;
            }
            det *= m(col, col);
            GaussianRational inv = GaussianRational(1) / m(col, col);
            for (Index r = col + 1; r < k; ++r) {
                GaussianRational f = m(r, col) * inv;
                if (f == GaussianRational(0)) continue;
                for (Index c = col; c < k; ++c) m(r, c) -= f * m(col, c);
            }
        }
        if (!(det.im() == 0 && det.re() > 0)) return false;
    }
    return true;
}

Form real_combination(const GenSetPtr& gens, const MatrixQ& basis_rows,
                      const std::vector<Monomial>& monos, const std::vector<Rational>& t) {
    RowVectorQ coords = RowVectorQ::Zero(basis_rows.cols());
    for (Index r = 0; r < basis_rows.rows(); ++r) {
        coords += GaussianRational(t[static_cast<size_t>(r)]) * basis_rows.row(r);
    }
    return form_of(gens, coords, monos);
}

// Coefficient of omega^n on the top monomial; zero iff the power vanishes.
GaussianRational top_power_coefficient(const Form& omega, int n) {
    Form power = Form::unit(omega.generators());
    for (int k = 0; k < n; ++k) power = wedge(power, omega);
    if (power.is_zero()) return GaussianRational(0);
    return power.terms().begin()->second.constant_value();
}

}  // namespace

bool verify_kaehler_witness(const Bicomplex& b, const MetricContext& ctx, const Form& omega) {
    if (omega.is_zero()) return false;
    // real
    if (conjugate(omega) != omega) return false;
    // type (1,1)
    for (const auto& [mono, coeff] : omega.terms()) {
        auto bd = mono.bidegree(*b.gens);
        if (!bd.has_value() || bd->p != 1 || bd->q != 1) return false;
    }
    // d-closed, from the stored bigraded blocks
    const auto& basis = b.basis_at(1, 1);
    RowVectorQ coords = coords_of(omega, basis);
    MatrixQ del = b.del_at(1, 1);
    MatrixQ dbar = b.dbar_at(1, 1);
    VectorQ del_part = del * coords.transpose();
    VectorQ dbar_part = dbar * coords.transpose();
    for (Index k = 0; k < del_part.rows(); ++k) {
        if (del_part(k) != GaussianRational(0)) return false;
    }
    for (Index k = 0; k < dbar_part.rows(); ++k) {
        if (dbar_part(k) != GaussianRational(0)) return false;
    }
    // n-th power is a nonzero multiple of the volume monomial
    int n = b.max_p;
    Form power = Form::unit(omega.generators());
    for (int k = 0; k < n; ++k) power = wedge(power, omega);
    if (power.term_count() != 1) return false;
    const auto& [mono, coeff] = *power.terms().begin();
    if (!(mono == ctx.volume) || coeff.constant_value().is_zero()) return false;
    // positive-definite Hermitian coefficient matrix
    auto h = hermitian_coefficients(b, omega);
    return h.has_value() && is_positive_definite_hermitian(*h);
}

KaehlerVerdict kaehler_witness(const Bicomplex& b, int trials, uint64_t seed) {
    if (!b.gens->fully_typed()) {
        throw Error(ErrorCode::NotBigraded, "kaehler search requires a fully typed model");
    }
    int n = b.max_p;
    const auto& basis = b.basis_at(1, 1);

    // d-closed (1,1) forms: kernel of del and dbar jointly.
    MatrixQ stacked(b.dim(2, 1) + b.dim(1, 2), b.dim(1, 1));
    stacked.topRows(b.dim(2, 1)) = b.del_at(1, 1);
    stacked.bottomRows(b.dim(1, 2)) = b.dbar_at(1, 1);
    Subspace closed = Subspace::kernel_of(stacked);
    MatrixQ real_basis = real_points_basis(b, closed, 1, 1);
    Index m = real_basis.rows();

    KaehlerVerdict verdict;
    if (m == 0) {
        verdict.kind = KaehlerVerdict::Kind::ImpossibleNondegenerate;
        return verdict;
    }

    // Stage 1: decide whether omega^n vanishes identically on the space.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coefficient(-9, 9);
    bool nonzero_seen = false;
    for (int trial = 0; trial < 8 && !nonzero_seen; ++trial) {
        std::vector<Rational> t;
        for (Index k = 0; k < m; ++k) t.emplace_back(coefficient(rng));
        Form omega = real_combination(b.gens, real_basis, basis, t);
        nonzero_seen = !top_power_coefficient(omega, n).is_zero();
    }
    if (!nonzero_seen) {
        // Deterministic fallback: expand the multinomial coefficients of
        // (sum t_j u_j)^n; zero iff every multiset wedge power has zero top
        // coefficient. Wedge factors are even, so order is immaterial.
        bool identically_zero = true;
        std::vector<Form> gens_forms;
        for (Index r = 0; r < m; ++r) {
            gens_forms.push_back(form_of(b.gens, real_basis.row(r), basis));
        }
        std::vector<Index> pick(static_cast<size_t>(n), 0);
        while (identically_zero) {
            Form prod = Form::unit(b.gens);
            for (Index idx : pick) prod = wedge(prod, gens_forms[static_cast<size_t>(idx)]);
            if (!prod.is_zero()) identically_zero = false;
            // next nondecreasing multiset
            int pos = n - 1;
            while (pos >= 0 && pick[static_cast<size_t>(pos)] == m - 1) --pos;
            if (pos < 0) break;
            Index next = pick[static_cast<size_t>(pos)] + 1;
            for (size_t k = static_cast<size_t>(pos); k < pick.size(); ++k) pick[k] = next;
        }
        if (identically_zero) {
            verdict.kind = KaehlerVerdict::Kind::ImpossibleNondegenerate;
            return verdict;
        }
    }

    // Stage 2: search for a positive-definite combination. Small 0/1 vectors
    // by support size first, then seeded random rationals.
    std::vector<std::vector<Rational>> candidates;
    uint64_t limit = m < 16 ? (1ull << m) : 0;
    std::vector<uint64_t> masks;
    for (uint64_t mask = 1; mask < limit; ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (uint64_t mask : masks) {
        std::vector<Rational> t(static_cast<size_t>(m), Rational(0));
        for (Index k = 0; k < m; ++k) {
            if (mask & (1ull << k)) t[static_cast<size_t>(k)] = 1;
        }
        candidates.push_back(std::move(t));
    }
    while (candidates.size() < static_cast<size_t>(trials)) {
        std::vector<Rational> t;
        std::uniform_int_distribution<int> den(1, 3);
        for (Index k = 0; k < m; ++k) {
            Rational r(coefficient(rng), den(rng));
            r.canonicalize();
            t.push_back(r);
        }
        candidates.push_back(std::move(t));
    }

    for (size_t c = 0; c < candidates.size() && c < static_cast<size_t>(trials); ++c) {
        verdict.trials_used = static_cast<int>(c) + 1;
        Form omega = real_combination(b.gens, real_basis, basis, candidates[c]);
        if (omega.is_zero()) continue;
        auto h = hermitian_coefficients(b, omega);
        if (!h.has_value() || !is_positive_definite_hermitian(*h)) continue;
        if (top_power_coefficient(omega, n).is_zero()) continue;
        verdict.kind = KaehlerVerdict::Kind::Witness;
        verdict.witness = omega;
        return verdict;
    }
    verdict.kind = KaehlerVerdict::Kind::Inconclusive;
    verdict.trials_used = static_cast<int>(std::min<size_t>(candidates.size(), trials));
    return verdict;
}

SweepReport parameter_sweep(const Model& m, const std::vector<Rational>& grid,
                            std::optional<Rational> reference) {
    if (grid.empty()) {
        throw Error(ErrorCode::Usage, "sweep requires a nonempty grid");
    }
    for (size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k - 1] < grid[k])) {
            throw Error(ErrorCode::Usage, "sweep grid must be strictly increasing");
        }
    }
    if (!m.has_iota) {
        throw Error(ErrorCode::MissingFoliation, "model '" + m.name + "' has no contraction table");
    }

    auto evaluate_point = [&m](const Rational& s) {
        SweepPoint point;
        point.value = s;
        GradedComplex basic = basic_subcomplex(m, s);
        CohomologyTable dr = de_rham(basic);
        int top = std::max(basic.top_nonzero_degree(), 0);
        for (int k = 0; k <= top; ++k) {
            point.dims.push_back(dr.dim_at(k, -1));
            point.subcomplex_dims.push_back(basic.dim(k));
        }
        int top_nonzero = basic.top_nonzero_degree();
        point.orientable = top_nonzero >= 0 && dr.dim_at(top_nonzero, -1) == 1;
        if (point.orientable) {
            for (const auto& e : dr.entries) {
                if (e.p == top_nonzero && !e.representatives.empty()) {
                    point.top_representative = e.representatives.front();
                }
            }
        }
        return point;
    };

    // Grid points are independent; evaluate in parallel, collect in order.
    std::vector<std::future<SweepPoint>> futures;
    futures.reserve(grid.size());
    for (const Rational& s : grid) {
        futures.push_back(std::async(std::launch::async, evaluate_point, s));
    }
    SweepReport report;
    for (auto& f : futures) report.points.push_back(f.get());

    auto dim_at = [](const std::vector<Index>& dims, size_t k) {
        return k < dims.size() ? dims[k] : Index(0);
    };
    for (size_t k = 1; k < report.points.size(); ++k) {
        const auto& a = report.points[k - 1].dims;
        const auto& b = report.points[k].dims;
        bool equal = true;
        for (size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
            if (dim_at(a, j) != dim_at(b, j)) equal = false;
        }
        if (!equal) report.jumps.emplace_back(k - 1, k);
    }
    if (reference.has_value()) {
        for (size_t k = 0; k < report.points.size(); ++k) {
            if (report.points[k].value == *reference) report.reference_index = k;
        }
        if (!report.reference_index.has_value()) {
            throw Error(ErrorCode::Usage, "reference value is not a grid point");
        }
        const auto& ref_dims = report.points[*report.reference_index].dims;
        for (const auto& point : report.points) {
            bool dominated = true;
            for (size_t k = 0; k < std::max(point.dims.size(), ref_dims.size()); ++k) {
                if (dim_at(point.dims, k) > dim_at(ref_dims, k)) dominated = false;
            }
            report.dominated_by_reference.push_back(dominated);
        }
    }
    return report;
}

}  // namespace folcoh

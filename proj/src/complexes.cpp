#include "folcoh/complexes.hpp"

#include <algorithm>

#include "folcoh/errors.hpp"

namespace folcoh {

std::vector<std::vector<Monomial>> degree_bases(const GeneratorSet& gens) {
    int top = gens.total_degree();
    std::vector<std::vector<Monomial>> out(static_cast<size_t>(top) + 1);
    int n = static_cast<int>(gens.size());
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        int degree = 0;
        for (int b = 0; b < n; ++b) {
            if (mask & (1u << b)) {
                idx.push_back(b);
                degree += gens.at(b).degree;
            }
        }
        out[static_cast<size_t>(degree)].push_back(Monomial(std::move(idx)));
    }
    for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

RowVectorQ coords_of(const Form& x, const std::vector<Monomial>& basis) {
    RowVectorQ v = RowVectorQ::Zero(static_cast<Index>(basis.size()));
    std::map<Monomial, Index> where;
    for (size_t k = 0; k < basis.size(); ++k) where.emplace(basis[k], static_cast<Index>(k));
    for (const auto& [m, c] : x.terms()) {
        if (!c.is_constant()) {
            throw Error(ErrorCode::Purity, "coordinates demand a parameter-free form");
        }
        auto it = where.find(m);
        if (it == where.end()) {
            throw Error(ErrorCode::InternalConsistency, "monomial outside the coordinate basis");
        }
        v(it->second) = c.constant_value();
    }
    return v;
}

Form form_of(const GenSetPtr& gens, const RowVectorQ& coords,
             const std::vector<Monomial>& basis) {
    Form out(gens);
    for (Index k = 0; k < coords.cols(); ++k) {
        if (coords(k) != GaussianRational(0)) {
            out.add_term(basis[static_cast<size_t>(k)], ParamPoly(coords(k)));
        }
    }
    return out;
}

Form GradedComplex::form_at(int degree, const RowVectorQ& piece_coords) const {
    RowVectorQ ambient_coords = piece_coords * piece[static_cast<size_t>(degree)].basis();
    return form_of(gens, ambient_coords, ambient[static_cast<size_t>(degree)]);
}

Form contraction(const Model& m, const Form& x, const Rational& s0) {
    Derivation iota = m.contraction_derivation();
    return evaluate_parameter(apply_derivation(iota, x), s0);
}

Form lie_derivative(const Model& m, const Form& x, const Rational& s0) {
    Derivation iota = m.contraction_derivation();
    Derivation d = m.differential();
    Form cartan = apply_derivation(d, apply_derivation(iota, x)) +
                  apply_derivation(iota, apply_derivation(d, x));
    return evaluate_parameter(cartan, s0);
}

namespace {

// Ambient matrix of a derivation between consecutive degree bases, with the
// parameter evaluated.
MatrixQ ambient_matrix(const GenSetPtr& gens, const Derivation& op,
                       const std::vector<Monomial>& from, const std::vector<Monomial>& to,
                       const std::optional<Rational>& s0) {
    MatrixQ out = MatrixQ::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
        Form image = apply_derivation(op, Form::monomial(gens, from[c]));
        if (s0.has_value()) image = evaluate_parameter(image, *s0);
        out.col(static_cast<Index>(c)) = coords_of(image, to).transpose();
    }
    return out;
}

GradedComplex restrict_to_pieces(const Model& m, const std::optional<Rational>& s0,
                                 std::vector<Subspace> pieces,
                                 std::vector<std::vector<Monomial>> ambient,
                                 const std::vector<MatrixQ>& d_ambient) {
    GradedComplex out;
    out.gens = m.gens;
    out.param_value = s0;
    out.ambient = std::move(ambient);
    out.piece = std::move(pieces);
    int top = out.top_degree();
    for (int k = 0; k < top; ++k) {
        const Subspace& src = out.piece[static_cast<size_t>(k)];
        const Subspace& dst = out.piece[static_cast<size_t>(k) + 1];
        MatrixQ restricted(dst.dim(), src.dim());
        for (Index r = 0; r < src.dim(); ++r) {
            RowVectorQ image = src.basis().row(r) * d_ambient[static_cast<size_t>(k)].transpose();
            // Read coordinates off the echelon basis of the target piece.
            RowVectorQ rem = image;
            VectorQ coords = VectorQ::Zero(dst.dim());
            for (Index j = 0; j < dst.dim(); ++j) {
                GaussianRational lead = rem(dst.pivots()[static_cast<size_t>(j)]);
                if (lead != GaussianRational(0)) {
                    coords(j) = lead;
                    rem -= lead * dst.basis().row(j);
                }
            }
            for (Index c = 0; c < rem.cols(); ++c) {
                if (rem(c) != GaussianRational(0)) {
                    throw Error(ErrorCode::InternalConsistency,
                                "differential does not stabilize the extracted subcomplex");
                }
            }
            restricted.col(r) = coords;
        }
        out.d.push_back(std::move(restricted));
    }
    out.d.push_back(MatrixQ::Zero(0, out.piece.back().dim()));
    return out;
}

}  // namespace

GradedComplex full_complex(const Model& m) {
    auto ambient = degree_bases(*m.gens);
    Derivation d = m.differential();
    std::optional<Rational> s0;
    if (m.has_param()) {
        for (const auto& img : m.d_images) {
            if (!img.is_parameter_free()) {
                throw Error(ErrorCode::Usage,
                            "the differential depends on the parameter; evaluate it first");
            }
        }
    }
    std::vector<MatrixQ> d_ambient;
    std::vector<Subspace> pieces;
    for (size_t k = 0; k < ambient.size(); ++k) {
        pieces.push_back(Subspace::full(static_cast<Index>(ambient[k].size())));
        if (k + 1 < ambient.size()) {
            d_ambient.push_back(ambient_matrix(m.gens, d, ambient[k], ambient[k + 1], s0));
        }
    }
    return restrict_to_pieces(m, std::nullopt, std::move(pieces), std::move(ambient), d_ambient);
}

GradedComplex basic_subcomplex(const Model& m, const Rational& s0) {
    if (!m.has_iota) {
        throw Error(ErrorCode::MissingFoliation, "model '" + m.name + "' has no contraction table");
    }
    auto ambient = degree_bases(*m.gens);
    Derivation d = m.differential();
    Derivation iota = m.contraction_derivation();
    std::optional<Rational> at(s0);

    std::vector<MatrixQ> d_ambient;
    std::vector<MatrixQ> iota_ambient;  // degree k -> k-1, index k
    size_t top = ambient.size() - 1;
    for (size_t k = 0; k <= top; ++k) {
        if (k + 1 <= top) {
            d_ambient.push_back(ambient_matrix(m.gens, d, ambient[k], ambient[k + 1], at));
        }
        iota_ambient.push_back(
            k == 0 ? MatrixQ::Zero(0, static_cast<Index>(ambient[0].size()))
                   : ambient_matrix(m.gens, iota, ambient[k], ambient[k - 1], at));
    }

    std::vector<Subspace> pieces;
    for (size_t k = 0; k <= top; ++k) {
        Index cols = static_cast<Index>(ambient[k].size());
        MatrixQ iota_after_d =
            k + 1 <= top ? MatrixQ(iota_ambient[k + 1] * d_ambient[k]) : MatrixQ::Zero(0, cols);
        MatrixQ stacked(iota_ambient[k].rows() + iota_after_d.rows(), cols);
        stacked.topRows(iota_ambient[k].rows()) = iota_ambient[k];
        stacked.bottomRows(iota_after_d.rows()) = iota_after_d;
        pieces.push_back(Subspace::kernel_of(stacked));
    }
    return restrict_to_pieces(m, at, std::move(pieces), std::move(ambient), d_ambient);
}

GradedComplex invariant_complex(const Model& m, const std::optional<Rational>& s0) {
    if (m.has_iota) {
        if (!s0.has_value()) {
            throw Error(ErrorCode::Usage,
                        "model '" + m.name + "' is a family; a parameter value is required");
        }
        return basic_subcomplex(m, *s0);
    }
    return full_complex(m);
}

const std::vector<Monomial>& Bicomplex::basis_at(int p, int q) const {
    static const std::vector<Monomial> empty;
    auto it = basis.find({p, q});
    return it == basis.end() ? empty : it->second;
}

MatrixQ Bicomplex::del_at(int p, int q) const {
    auto it = del.find({p, q});
    if (it != del.end()) return it->second;
    return MatrixQ::Zero(dim(p + 1, q), dim(p, q));
}

MatrixQ Bicomplex::dbar_at(int p, int q) const {
    auto it = dbar.find({p, q});
    if (it != dbar.end()) return it->second;
    return MatrixQ::Zero(dim(p, q + 1), dim(p, q));
}

Bicomplex bigrade_split(const Model& m) {
    if (!m.fully_typed()) {
        throw Error(ErrorCode::NotBigraded, "model '" + m.name + "' has untyped generators");
    }
    for (const auto& img : m.d_images) {
        if (!img.is_parameter_free()) {
            throw Error(ErrorCode::Usage,
                        "the differential depends on the parameter; evaluate it first");
        }
    }
    Bicomplex out;
    out.gens = m.gens;
    for (const auto& g : m.gens->all()) {
        if (g.type == GenType::Holo) out.max_p += 1;
        if (g.type == GenType::Anti) out.max_q += 1;
    }
    auto buckets = degree_bases(*m.gens);
    for (const auto& bucket : buckets) {
        for (const auto& mono : bucket) {
            auto bd = mono.bidegree(*m.gens);
            out.basis[{bd->p, bd->q}].push_back(mono);
        }
    }
    Derivation d = m.differential();
    for (const auto& [pq, from] : out.basis) {
        auto [p, q] = pq;
        MatrixQ del = MatrixQ::Zero(out.dim(p + 1, q), static_cast<Index>(from.size()));
        MatrixQ dbar = MatrixQ::Zero(out.dim(p, q + 1), static_cast<Index>(from.size()));
        std::map<Monomial, Index> del_where, dbar_where;
        for (size_t k = 0; k < out.basis_at(p + 1, q).size(); ++k) {
            del_where.emplace(out.basis_at(p + 1, q)[k], static_cast<Index>(k));
        }
        for (size_t k = 0; k < out.basis_at(p, q + 1).size(); ++k) {
            dbar_where.emplace(out.basis_at(p, q + 1)[k], static_cast<Index>(k));
        }
        for (size_t c = 0; c < from.size(); ++c) {
            Form image = apply_derivation(d, Form::monomial(m.gens, from[c]));
            for (const auto& [mono, coeff] : image.terms()) {
                auto bd = mono.bidegree(*m.gens);
                if (auto it = del_where.find(mono); it != del_where.end()) {
                    del(it->second, static_cast<Index>(c)) = coeff.constant_value();
                } else if (auto jt = dbar_where.find(mono); jt != dbar_where.end()) {
                    dbar(jt->second, static_cast<Index>(c)) = coeff.constant_value();
                } else {
                    throw Error(ErrorCode::Integrability,
                                "d(" + format_monomial(from[c], *m.gens) + ") has a component " +
                                    format_monomial(mono, *m.gens) + " of type (" +
                                    std::to_string(bd->p) + "," + std::to_string(bd->q) +
                                    ") outside (" + std::to_string(p) + "+1," + std::to_string(q) +
                                    ") and (" + std::to_string(p) + "," + std::to_string(q) + "+1)");
                }
            }
        }
        out.del[{p, q}] = std::move(del);
        out.dbar[{p, q}] = std::move(dbar);
    }
    return out;
}

Form j_action(const Bicomplex& b, const Form& x) {
    if (!b.gens->fully_typed()) {
        throw Error(ErrorCode::NotBigraded, "J-action requires a fully typed model");
    }
    if (x.generators() && !(x.generators() == b.gens || *x.generators() == *b.gens)) {
        throw Error(ErrorCode::ModelMismatch, "form over a different generator set");
    }
    Form out(x.generators() ? x.generators() : b.gens);
    for (const auto& [mono, coeff] : x.terms()) {
        auto bd = mono.bidegree(*b.gens);
        if (!bd.has_value()) {
            throw Error(ErrorCode::NotBigraded, "form contains an untyped monomial");
        }
        GaussianRational eigen(Rational(0), Rational(bd->p - bd->q));
        if (!eigen.is_zero()) out.add_term(mono, coeff * ParamPoly(eigen));
    }
    return out;
}

void require_valid(const Model& m) {
    ValidationReport report = validate_model(m);
    if (report.ok()) return;
    auto failures = report.failures();
    throw Error(ErrorCode::InvalidModel,
                "model '" + m.name + "' fails " + failures[0].name + ": " + failures[0].witness);
}

}  // namespace folcoh

#pragma once

#include <vector>

#include "folcoh/errors.hpp"
#include "folcoh/linalg.hpp"

namespace folcoh {

/// Subspace of a fixed coordinate space, stored as a reduced-row-echelon basis
/// matrix. Two subspaces of the same ambient space are equal iff their echelon
/// matrices are identical.
class Subspace {
  public:
    explicit Subspace(Index ambient_dim)
        : ambient_(ambient_dim), basis_(MatrixQ::Zero(0, ambient_dim)) {}

    // Row span of an arbitrary spanning matrix.
    static Subspace span_of_rows(const MatrixQ& rows) {
        Subspace out(rows.cols());
        out.basis_ = rref(rows, &out.pivots_);
        return out;
    }

    // Column span of a linear map's matrix (the image of v -> m*v).
    static Subspace image_of(const MatrixQ& m) {
        return span_of_rows(m.transpose());
    }

    // Null space of v -> m*v.
    static Subspace kernel_of(const MatrixQ& m) {
        Subspace out(m.cols());
        out.basis_ = kernel_rows(m);
        out.pivots_.clear();
        for (Index r = 0; r < out.basis_.rows(); ++r) {
            for (Index c = 0; c < out.basis_.cols(); ++c) {
                if (out.basis_(r, c) != GaussianRational(0)) {
                    out.pivots_.push_back(c);
                    break;
                }
            }
        }
        return out;
    }

    static Subspace full(Index ambient_dim) {
        return span_of_rows(MatrixQ::Identity(ambient_dim, ambient_dim));
    }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    bool contains(const RowVectorQ& v) const {
        RowVectorQ rem = reduce(v);
        for (Index c = 0; c < rem.cols(); ++c) {
            if (rem(c) != GaussianRational(0)) return false;
        }
        return true;
    }

    bool contains(const Subspace& other) const {
        require_same_ambient(other);
        for (Index r = 0; r < other.basis_.rows(); ++r) {
            if (!contains(other.basis_.row(r))) return false;
        }
        return true;
    }

    // Remainder of v after elimination against the echelon basis.
    RowVectorQ reduce(RowVectorQ v) const {
        for (Index r = 0; r < basis_.rows(); ++r) {
            const GaussianRational& lead = v(pivots_[static_cast<size_t>(r)]);
            if (lead != GaussianRational(0)) {
                v -= lead * basis_.row(r);
            }
        }
        return v;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        a.require_same_ambient(b);
        MatrixQ stacked(a.dim() + b.dim(), a.ambient_);
        stacked.topRows(a.dim()) = a.basis_;
        stacked.bottomRows(b.dim()) = b.basis_;
        return span_of_rows(stacked);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.require_same_ambient(b);
        if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
        // Solve x = u^T A = v^T B: kernel of [A^T | -B^T] gives the (u, v).
        MatrixQ system(a.ambient_, a.dim() + b.dim());
        system.leftCols(a.dim()) = a.basis_.transpose();
        system.rightCols(b.dim()) = -b.basis_.transpose();
        MatrixQ ker = kernel_rows(system);
        MatrixQ vectors(ker.rows(), a.ambient_);
        for (Index r = 0; r < ker.rows(); ++r) {
            vectors.row(r) = ker.row(r).head(a.dim()) * a.basis_;
        }
        return span_of_rows(vectors);
    }

    // dim(a) - dim(b), defined only when b is a subspace of a.
    friend Index quotient_dim(const Subspace& a, const Subspace& b) {
        a.require_same_ambient(b);
        if (!a.contains(b)) {
            throw Error(ErrorCode::NotASubspace, "quotient denominator is not contained in numerator");
        }
        return a.dim() - b.dim();
    }

    // Echelon-normalized representatives of a/b (rows); requires b <= a.
    friend MatrixQ quotient_representatives(const Subspace& a, const Subspace& b) {
        a.require_same_ambient(b);
        if (!a.contains(b)) {
            throw Error(ErrorCode::NotASubspace, "quotient denominator is not contained in numerator");
        }
        MatrixQ reduced(a.dim(), a.ambient_);
        for (Index r = 0; r < a.dim(); ++r) reduced.row(r) = b.reduce(a.basis_.row(r));
        return rref(reduced);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    void require_same_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_) {
            throw Error(ErrorCode::ModelMismatch, "subspaces over different ambient bases");
        }
    }

    Index ambient_;
    MatrixQ basis_;
    std::vector<Index> pivots_;
};

}  // namespace folcoh

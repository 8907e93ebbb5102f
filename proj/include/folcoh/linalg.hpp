#pragma once

#include <Eigen/Core>

#include <vector>

#include "folcoh/scalar.hpp"

namespace folcoh {

using MatrixQ = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<GaussianRational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// In-place Gauss-Jordan over an exact field. Pivot choice is the first
/// nonzero entry per column, which together with full reduction yields the
/// (unique) reduced row echelon form. Returns the pivot columns in order.
template <typename Derived>
std::vector<Index> rref_in_place(Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index pivot = -1;
        for (Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != Scalar(0)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == Scalar(0)) continue;
            Scalar factor = m(r, col);
            for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> rref(
    const Eigen::MatrixBase<Derived>& m, std::vector<Index>* pivots_out = nullptr) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> copy = m;
    auto pivots = rref_in_place(copy);
    copy.conservativeResize(static_cast<Index>(pivots.size()), m.cols());
    if (pivots_out) *pivots_out = std::move(pivots);
    return copy;
}

template <typename Derived>
Index rank_of(const Eigen::MatrixBase<Derived>& m) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> copy = m;
    return static_cast<Index>(rref_in_place(copy).size());
}

/// Null space of the column action v -> m*v, returned as rows in reduced row
/// echelon form. Deterministic for fixed input.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_rows(
    const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat reduced = m;
    std::vector<Index> pivots = rref_in_place(reduced);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (Index col : pivots) is_pivot[static_cast<size_t>(col)] = true;

    Index nullity = m.cols() - static_cast<Index>(pivots.size());
    Mat basis = Mat::Zero(nullity, m.cols());
    Index out = 0;
    for (Index free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        basis(out, free_col) = Scalar(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            if (pivots[pr] < free_col) {
                basis(out, pivots[pr]) = -reduced(static_cast<Index>(pr), free_col);
            }
        }
        ++out;
    }
    rref_in_place(basis);  // canonical orientation of the basis
    return basis;
}

}  // namespace folcoh

#pragma once

#include <vector>

#include "skoszul/superpoly.hpp"

namespace skoszul {

/// Exact sparse matrix of an operator restricted to a strand: columns are
/// labeled by the domain basis monomials, rows by the codomain basis.
/// Entries are stored column-major, sorted by row.
class SparseMatrix {
public:
    SparseMatrix(RingSpec ring, std::vector<Monomial> row_labels,
                 std::vector<Monomial> col_labels);

    const RingSpec& ring() const { return ring_; }
    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<Monomial>& row_labels() const { return row_labels_; }
    const std::vector<Monomial>& col_labels() const { return col_labels_; }

    void set(std::size_t row, std::size_t col, const Scalar& value);
    Scalar at(std::size_t row, std::size_t col) const;
    const std::vector<std::pair<std::size_t, Scalar>>& column(std::size_t col) const
    {
        return cols_[col];
    }

    bool is_zero() const;
    std::size_t nonzero_count() const;

    /// Matrix product this * rhs (this.cols == rhs.rows).
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Scalar& c) const;

    static SparseMatrix identity(const RingSpec& ring, const std::vector<Monomial>& labels);

    bool operator==(const SparseMatrix& rhs) const;

private:
    RingSpec ring_;
    std::vector<Monomial> row_labels_;
    std::vector<Monomial> col_labels_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols_;
};

} // namespace skoszul

#pragma once

#include <optional>
#include <vector>

#include "skoszul/sparse_matrix.hpp"

namespace skoszul {

/// Sparse vector over a field, sorted by index, no zero entries.
using SpVec = std::vector<std::pair<std::size_t, FieldElem>>;

SpVec sp_axpy(const SpVec& y, const FieldElem& c, const SpVec& x); // y + c*x
FieldElem sp_at(const SpVec& v, std::size_t idx, const FieldSpec& f);

/// Column-sparse matrix over Q or F_p, extracted from a SparseMatrix whose
/// entries must be free of Grassmann generators.
struct FieldMatrix {
    FieldSpec field;
    std::size_t n_rows = 0;
    std::vector<SpVec> columns;

    static FieldMatrix from(const SparseMatrix& m);
    static FieldMatrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols);
};

/// Incremental exact Gaussian elimination over a field, column oriented.
/// Maintains mutually reduced pivot columns; over Q pivots are chosen by
/// smallest numerator magnitude to limit coefficient growth.
class ColumnSpace {
public:
    ColumnSpace(const FieldSpec& field, std::size_t n_rows);

    /// Reduce v against the pivots; returns the residue.
    SpVec reduce(SpVec v) const;
    /// Reduce and, if the residue is nonzero, absorb it as a new pivot.
    /// Returns true when the vector was absorbed (i.e. independent).
    bool add(SpVec v);
    /// True when v lies in the span.
    bool contains(const SpVec& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return pivots_.size(); }

private:
    struct Pivot {
        std::size_t row;
        SpVec column; // entry 1 at `row`, zero at other pivot rows
    };

    FieldSpec field_;
    std::size_t n_rows_;
    std::vector<Pivot> pivots_;
    std::vector<std::optional<std::size_t>> pivot_of_row_;
};

struct RankKernel {
    std::size_t rank = 0;
    /// Kernel basis vectors over the column index space, dense.
    std::vector<std::vector<FieldElem>> kernel;
    std::size_t kernel_dim() const { return kernel.size(); }
};

/// Exact rank and kernel basis. Throws RingMismatchError on matrices whose
/// ring has Grassmann generators.
RankKernel rank_and_kernel(const FieldMatrix& m);
RankKernel rank_and_kernel(const SparseMatrix& m);

} // namespace skoszul

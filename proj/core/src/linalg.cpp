#include "skoszul/linalg.hpp"

#include <algorithm>

namespace skoszul {

SpVec sp_axpy(const SpVec& y, const FieldElem& c, const SpVec& x)
{
    SpVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            FieldElem v = c * x[j].second;
            if (!v.is_zero())
                out.emplace_back(x[j].first, v);
            ++j;
        } else {
            FieldElem v = y[i].second + c * x[j].second;
            if (!v.is_zero())
                out.emplace_back(y[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

FieldElem sp_at(const SpVec& v, std::size_t idx, const FieldSpec& f)
{
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    if (it != v.end() && it->first == idx)
        return it->second;
    return FieldElem::zero(f);
}

FieldMatrix FieldMatrix::from(const SparseMatrix& m)
{
    if (!m.ring().is_field())
        throw RingMismatchError("rank/kernel requires field coefficients, got " + m.ring().str());
    FieldMatrix out;
    out.field = m.ring().field;
    out.n_rows = m.rows();
    out.columns.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.column(j))
            out.columns[j].emplace_back(i, v.field_value());
    return out;
}

FieldMatrix FieldMatrix::zero(const FieldSpec& f, std::size_t rows, std::size_t cols)
{
    FieldMatrix out;
    out.field = f;
    out.n_rows = rows;
    out.columns.resize(cols);
    return out;
}

ColumnSpace::ColumnSpace(const FieldSpec& field, std::size_t n_rows)
    : field_(field), n_rows_(n_rows), pivot_of_row_(n_rows)
{
}

SpVec ColumnSpace::reduce(SpVec v) const
{
    // pivot columns are mutually reduced, so one sweep suffices
    for (std::size_t k = 0; k < v.size();) {
        auto piv = pivot_of_row_[v[k].first];
        if (!piv) {
            ++k;
            continue;
        }
        FieldElem c = -v[k].second;
        v = sp_axpy(v, c, pivots_[*piv].column);
        // entries before position k are untouched (pivot column rows are
        // either this pivot row or non-pivot rows; restart scan from k)
    }
    return v;
}

bool ColumnSpace::add(SpVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    // pivot row: smallest numerator magnitude, ties to the lowest row index
    std::size_t best = 0;
    mpz_class best_w = v[0].second.pivot_weight();
    for (std::size_t k = 1; k < v.size(); ++k) {
        mpz_class w = v[k].second.pivot_weight();
        if (w < best_w) {
            best_w = w;
            best = k;
        }
    }
    std::size_t row = v[best].first;
    FieldElem inv = v[best].second.inverse();
    for (auto& e : v)
        e.second = e.second * inv;
    // keep existing pivot columns reduced at the new pivot row
    for (auto& p : pivots_) {
        FieldElem at = sp_at(p.column, row, field_);
        if (!at.is_zero())
            p.column = sp_axpy(p.column, -at, v);
    }
    pivot_of_row_[row] = pivots_.size();
    pivots_.push_back({row, std::move(v)});
    return true;
}

RankKernel rank_and_kernel(const FieldMatrix& m)
{
    ColumnSpace space(m.field, m.n_rows);
    RankKernel out;
    // track each working column as a combination of original columns
    struct Tracked {
        SpVec col;
        SpVec trace;
    };
    std::vector<Tracked> pivots;
    std::vector<std::optional<std::size_t>> pivot_of_row(m.n_rows);

    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        SpVec col = m.columns[j];
        SpVec trace = {{j, FieldElem::one(m.field)}};
        for (std::size_t k = 0; k < col.size();) {
            auto piv = pivot_of_row[col[k].first];
            if (!piv) {
                ++k;
                continue;
            }
            FieldElem c = -col[k].second;
            col = sp_axpy(col, c, pivots[*piv].col);
            trace = sp_axpy(trace, c, pivots[*piv].trace);
        }
        if (col.empty()) {
            std::vector<FieldElem> kv(m.columns.size(), FieldElem::zero(m.field));
            for (const auto& [idx, v] : trace)
                kv[idx] = v;
            out.kernel.push_back(std::move(kv));
            continue;
        }
        std::size_t best = 0;
        mpz_class best_w = col[0].second.pivot_weight();
        for (std::size_t k = 1; k < col.size(); ++k) {
            mpz_class w = col[k].second.pivot_weight();
            if (w < best_w) {
                best_w = w;
                best = k;
            }
        }
        std::size_t row = col[best].first;
        FieldElem inv = col[best].second.inverse();
        for (auto& e : col)
            e.second = e.second * inv;
        for (auto& e : trace)
            e.second = e.second * inv;
        for (auto& p : pivots) {
            FieldElem at = sp_at(p.col, row, m.field);
            if (!at.is_zero()) {
                p.col = sp_axpy(p.col, -at, col);
                p.trace = sp_axpy(p.trace, -at, trace);
            }
        }
        pivot_of_row[row] = pivots.size();
        pivots.push_back({std::move(col), std::move(trace)});
        ++out.rank;
    }
    return out;
}

RankKernel rank_and_kernel(const SparseMatrix& m)
{
    return rank_and_kernel(FieldMatrix::from(m));
}

} // namespace skoszul

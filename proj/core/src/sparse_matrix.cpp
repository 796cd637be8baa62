#include "skoszul/sparse_matrix.hpp"

#include <algorithm>
#include <map>

namespace skoszul {

SparseMatrix::SparseMatrix(RingSpec ring, std::vector<Monomial> row_labels,
                           std::vector<Monomial> col_labels)
    : ring_(std::move(ring)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      cols_(col_labels_.size())
{
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value)
{
    if (row >= rows() || col >= cols())
        throw std::out_of_range("matrix entry out of range");
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        if (value.is_zero())
            c.erase(it);
        else
            it->second = value;
    } else if (!value.is_zero()) {
        c.insert(it, {row, value});
    }
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = cols_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != c.end() && it->first == row)
        return it->second;
    return Scalar::zero(ring_);
}

bool SparseMatrix::is_zero() const
{
    for (const auto& c : cols_)
        if (!c.empty())
            return false;
    return true;
}

std::size_t SparseMatrix::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& c : cols_)
        n += c.size();
    return n;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw std::invalid_argument("matrix shape mismatch in product");
    SparseMatrix out(ring_, row_labels_, rhs.col_labels_);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [k, rv] : rhs.cols_[j]) {
            for (const auto& [i, lv] : cols_[k]) {
                Scalar prod = lv * rv;
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, prod);
                else
                    it->second = it->second + prod;
            }
        }
        for (const auto& [i, v] : acc)
            if (!v.is_zero())
                out.cols_[j].emplace_back(i, v);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const
{
    if (rows() != rhs.rows() || cols() != rhs.cols())
        throw std::invalid_argument("matrix shape mismatch in sum");
    SparseMatrix out(ring_, row_labels_, col_labels_);
    for (std::size_t j = 0; j < cols(); ++j) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [i, v] : cols_[j])
            acc.emplace(i, v);
        for (const auto& [i, v] : rhs.cols_[j]) {
            auto it = acc.find(i);
            if (it == acc.end())
                acc.emplace(i, v);
            else
                it->second = it->second + v;
        }
        for (const auto& [i, v] : acc)
            if (!v.is_zero())
                out.cols_[j].emplace_back(i, v);
    }
    return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const
{
    SparseMatrix out(ring_, row_labels_, col_labels_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) {
            Scalar sv = c * v;
            if (!sv.is_zero())
                out.cols_[j].emplace_back(i, sv);
        }
    return out;
}

SparseMatrix SparseMatrix::identity(const RingSpec& ring, const std::vector<Monomial>& labels)
{
    SparseMatrix out(ring, labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.cols_[i].emplace_back(i, Scalar::one(ring));
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const
{
    return ring_ == rhs.ring_ && row_labels_ == rhs.row_labels_ &&
           col_labels_ == rhs.col_labels_ && cols_ == rhs.cols_;
}

} // namespace skoszul

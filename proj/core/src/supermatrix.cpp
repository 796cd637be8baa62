#include "skoszul/supermatrix.hpp"

#include <sstream>

#include "skoszul/linalg.hpp"

namespace skoszul {

EvenMatrix::EvenMatrix(RingSpec ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), entries_(n * n, Scalar::zero(ring_))
{
}

EvenMatrix EvenMatrix::identity(const RingSpec& ring, std::size_t n)
{
    EvenMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(ring));
    return m;
}

void EvenMatrix::set(std::size_t i, std::size_t j, Scalar v)
{
    if (!v.is_homogeneous(Parity::even))
        throw std::invalid_argument("even matrix entry must be even-homogeneous");
    entries_[i * n_ + j] = std::move(v);
}

EvenMatrix EvenMatrix::operator*(const EvenMatrix& rhs) const
{
    if (n_ != rhs.n_)
        throw std::invalid_argument("even matrix size mismatch");
    EvenMatrix out(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (std::size_t k = 0; k < n_; ++k)
                acc = acc + at(i, k) * rhs.at(k, j);
            out.entries_[i * n_ + j] = std::move(acc);
        }
    return out;
}

EvenMatrix EvenMatrix::operator-(const EvenMatrix& rhs) const
{
    if (n_ != rhs.n_)
        throw std::invalid_argument("even matrix size mismatch");
    EvenMatrix out(ring_, n_);
    for (std::size_t i = 0; i < n_ * n_; ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

bool EvenMatrix::body_invertible() const
{
    SpVec unused;
    FieldMatrix body = FieldMatrix::zero(ring_.field, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) {
            FieldElem b = at(i, j).body();
            if (!b.is_zero())
                body.columns[j].emplace_back(i, b);
        }
    return rank_and_kernel(body).rank == n_;
}

EvenMatrix EvenMatrix::inverse() const
{
    // Gauss-Jordan on [M | I]; pivots must have invertible body
    std::vector<Scalar> work(entries_);
    std::vector<Scalar> aug(n_ * n_, Scalar::zero(ring_));
    for (std::size_t i = 0; i < n_; ++i)
        aug[i * n_ + i] = Scalar::one(ring_);
    auto w = [&](std::size_t i, std::size_t j) -> Scalar& { return work[i * n_ + j]; };
    auto v = [&](std::size_t i, std::size_t j) -> Scalar& { return aug[i * n_ + j]; };
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = n_;
        for (std::size_t r = col; r < n_; ++r)
            if (w(r, col).is_invertible()) {
                pivot = r;
                break;
            }
        if (pivot == n_)
            throw NonInvertibleError("even matrix has no invertible pivot in column " +
                                     std::to_string(col));
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(w(pivot, j), w(col, j));
                std::swap(v(pivot, j), v(col, j));
            }
        Scalar pinv = w(col, col).inverse();
        for (std::size_t j = 0; j < n_; ++j) {
            w(col, j) = pinv * w(col, j);
            v(col, j) = pinv * v(col, j);
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col || w(r, col).is_zero())
                continue;
            Scalar f = w(r, col);
            for (std::size_t j = 0; j < n_; ++j) {
                w(r, j) = w(r, j) - f * w(col, j);
                v(r, j) = v(r, j) - f * v(col, j);
            }
        }
    }
    EvenMatrix inv(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            inv.set(i, j, std::move(aug[i * n_ + j]));
    return inv;
}

namespace {

Scalar cofactor_det(const EvenMatrix& m, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols)
{
    const RingSpec& ring = m.ring();
    if (rows.empty())
        return Scalar::one(ring);
    if (rows.size() == 1)
        return m.at(rows[0], cols[0]);
    Scalar acc = Scalar::zero(ring);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Scalar& e = m.at(rows[0], cols[k]);
        if (e.is_zero())
            continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                sub_cols.push_back(cols[j]);
        Scalar minor = cofactor_det(m, sub_rows, sub_cols);
        Scalar term = e * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Scalar cofactor_det(const EvenMatrix& m)
{
    std::vector<std::size_t> all(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        all[i] = i;
    return cofactor_det(m, all, all);
}

} // namespace

Scalar even_det(const EvenMatrix& m)
{
    const std::size_t n = m.size();
    if (n <= 4)
        return cofactor_det(m);
    // elimination with invertible-body pivots; det = product of pivots
    std::vector<Scalar> work;
    work.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            work.push_back(m.at(i, j));
    auto w = [&](std::size_t i, std::size_t j) -> Scalar& { return work[i * n + j]; };
    Scalar det = Scalar::one(m.ring());
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (w(r, col).is_invertible()) {
                pivot = r;
                break;
            }
        if (pivot == n)
            return cofactor_det(m); // singular-bodied column: exact fallback
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w(pivot, j), w(col, j));
            negate = !negate;
        }
        det = det * w(col, col);
        Scalar pinv = w(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w(r, col).is_zero())
                continue;
            Scalar f = w(r, col) * pinv;
            for (std::size_t j = col; j < n; ++j)
                w(r, j) = w(r, j) - f * w(col, j);
        }
    }
    return negate ? -det : det;
}

SuperMatrix::SuperMatrix(RingSpec ring, int p, int q)
    : ring_(std::move(ring)),
      p_(p),
      q_(q),
      a_(static_cast<std::size_t>(p) * p, Scalar::zero(ring_)),
      b_(static_cast<std::size_t>(p) * q, Scalar::zero(ring_)),
      c_(static_cast<std::size_t>(q) * p, Scalar::zero(ring_)),
      d_(static_cast<std::size_t>(q) * q, Scalar::zero(ring_))
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("supermatrix needs p, q >= 0");
}

SuperMatrix SuperMatrix::identity(const RingSpec& ring, int p, int q)
{
    SuperMatrix m(ring, p, q);
    for (int i = 0; i < p; ++i)
        m.set_a(i, i, Scalar::one(ring));
    for (int i = 0; i < q; ++i)
        m.set_d(i, i, Scalar::one(ring));
    return m;
}

void SuperMatrix::set_a(int i, int j, Scalar v)
{
    if (!v.is_homogeneous(Parity::even))
        throw std::invalid_argument("A block entries must be even-homogeneous");
    a_[idx(i, j, p_)] = std::move(v);
}

void SuperMatrix::set_b(int i, int j, Scalar v)
{
    if (!v.is_homogeneous(Parity::odd))
        throw std::invalid_argument("B block entries must be odd-homogeneous");
    b_[idx(i, j, q_)] = std::move(v);
}

void SuperMatrix::set_c(int i, int j, Scalar v)
{
    if (!v.is_homogeneous(Parity::odd))
        throw std::invalid_argument("C block entries must be odd-homogeneous");
    c_[idx(i, j, p_)] = std::move(v);
}

void SuperMatrix::set_d(int i, int j, Scalar v)
{
    if (!v.is_homogeneous(Parity::even))
        throw std::invalid_argument("D block entries must be even-homogeneous");
    d_[idx(i, j, q_)] = std::move(v);
}

EvenMatrix SuperMatrix::block_a() const
{
    EvenMatrix m(ring_, static_cast<std::size_t>(p_));
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j)
            m.set(i, j, a(i, j));
    return m;
}

EvenMatrix SuperMatrix::block_d() const
{
    EvenMatrix m(ring_, static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < q_; ++j)
            m.set(i, j, d(i, j));
    return m;
}

const Scalar& SuperMatrix::entry(int i, int j) const
{
    if (i < p_)
        return j < p_ ? a(i, j) : b(i, j - p_);
    return j < p_ ? c(i - p_, j) : d(i - p_, j - p_);
}

void SuperMatrix::set_entry(int i, int j, Scalar v)
{
    if (i < p_) {
        if (j < p_)
            set_a(i, j, std::move(v));
        else
            set_b(i, j - p_, std::move(v));
    } else {
        if (j < p_)
            set_c(i - p_, j, std::move(v));
        else
            set_d(i - p_, j - p_, std::move(v));
    }
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& rhs) const
{
    if (p_ != rhs.p_ || q_ != rhs.q_ || !(ring_ == rhs.ring_))
        throw std::invalid_argument("supermatrix shape or ring mismatch");
    const int n = p_ + q_;
    SuperMatrix out(ring_, p_, q_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < n; ++k)
                acc = acc + entry(i, k) * rhs.entry(k, j);
            out.set_entry(i, j, std::move(acc));
        }
    return out;
}

bool SuperMatrix::is_invertible() const
{
    return block_a().body_invertible() && block_d().body_invertible();
}

SuperMatrix SuperMatrix::inverse() const
{
    if (!is_invertible())
        throw NonInvertibleError("supermatrix has singular body");
    UdlFactors f = decompose_udl(*this);
    // M = U * core * L, so M^-1 = L^-1 * core^-1 * U^-1
    EvenMatrix s_inv = f.core.block_a().inverse();
    EvenMatrix d_inv = f.core.block_d().inverse();

    SuperMatrix out(ring_, p_, q_);
    // L^-1 has -D^-1 C in the lower-left, U^-1 has -B D^-1 upper-right
    // assemble the standard block inverse directly:
    //   [[S^-1, -S^-1 B D^-1], [-D^-1 C S^-1, D^-1 + D^-1 C S^-1 B D^-1]]
    std::vector<Scalar> bd(static_cast<std::size_t>(p_) * q_, Scalar::zero(ring_));
    std::vector<Scalar> dc(static_cast<std::size_t>(q_) * p_, Scalar::zero(ring_));
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < q_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < q_; ++k)
                acc = acc + b(i, k) * d_inv.at(k, j);
            bd[idx(i, j, q_)] = std::move(acc); // B D^-1
        }
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < p_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < q_; ++k)
                acc = acc + d_inv.at(i, k) * c(k, j);
            dc[idx(i, j, p_)] = std::move(acc); // D^-1 C
        }
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j)
            out.set_a(i, j, s_inv.at(i, j));
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < q_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < p_; ++k)
                acc = acc + s_inv.at(i, k) * bd[idx(k, j, q_)];
            out.set_b(i, j, -acc);
        }
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < p_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < p_; ++k)
                acc = acc + dc[idx(i, k, p_)] * s_inv.at(k, j);
            out.set_c(i, j, -acc);
        }
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < q_; ++j) {
            Scalar acc = d_inv.at(i, j);
            for (int k = 0; k < p_; ++k) {
                Scalar inner = Scalar::zero(ring_);
                for (int l = 0; l < p_; ++l)
                    inner = inner + s_inv.at(k, l) * bd[idx(l, j, q_)];
                acc = acc + dc[idx(i, k, p_)] * inner;
            }
            out.set_d(i, j, std::move(acc));
        }
    return out;
}

std::string SuperMatrix::str() const
{
    std::ostringstream out;
    const int n = p_ + q_;
    out << "[";
    for (int i = 0; i < n; ++i) {
        out << (i ? " [" : "[");
        for (int j = 0; j < n; ++j)
            out << (j ? ", " : "") << entry(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

UdlFactors decompose_udl(const SuperMatrix& m)
{
    if (!m.is_invertible())
        throw NonInvertibleError("decomposition requires an invertible supermatrix");
    const RingSpec& ring = m.ring();
    const int p = m.p(), q = m.q();
    EvenMatrix d_inv = m.block_d().inverse();

    SuperMatrix upper = SuperMatrix::identity(ring, p, q);
    SuperMatrix lower = SuperMatrix::identity(ring, p, q);
    SuperMatrix core = SuperMatrix::identity(ring, p, q);

    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            Scalar acc = Scalar::zero(ring);
            for (int k = 0; k < q; ++k)
                acc = acc + m.b(i, k) * d_inv.at(k, j);
            upper.set_b(i, j, std::move(acc));
        }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) {
            Scalar acc = Scalar::zero(ring);
            for (int k = 0; k < q; ++k)
                acc = acc + d_inv.at(i, k) * m.c(k, j);
            lower.set_c(i, j, std::move(acc));
        }
    // core A block: A - B D^-1 C = A - upper.B * C
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            Scalar acc = m.a(i, j);
            for (int k = 0; k < q; ++k)
                acc = acc - upper.b(i, k) * m.c(k, j);
            core.set_a(i, j, std::move(acc));
        }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            core.set_d(i, j, m.d(i, j));
    return {std::move(upper), std::move(core), std::move(lower)};
}

Scalar ber(const SuperMatrix& m)
{
    if (!m.is_invertible())
        throw NonInvertibleError("Berezinian requires an invertible supermatrix");
    UdlFactors f = decompose_udl(m);
    Scalar schur_det = even_det(f.core.block_a());
    Scalar d_det = even_det(m.block_d());
    return schur_det * d_det.inverse();
}

} // namespace skoszul

#pragma once

#include <vector>

#include "skoszul/scalar.hpp"

namespace skoszul {

/// Square matrix of even-homogeneous Grassmann elements (entries commute).
class EvenMatrix {
public:
    EvenMatrix(RingSpec ring, std::size_t n);
    static EvenMatrix identity(const RingSpec& ring, std::size_t n);

    std::size_t size() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v);

    EvenMatrix operator*(const EvenMatrix& rhs) const;
    EvenMatrix operator-(const EvenMatrix& rhs) const;

    /// Inverse by Gauss-Jordan with invertible-body pivots; throws
    /// NonInvertibleError when the body matrix is singular.
    EvenMatrix inverse() const;
    /// True when the body matrix is invertible over the ground field.
    bool body_invertible() const;

    bool operator==(const EvenMatrix& rhs) const = default;

private:
    RingSpec ring_;
    std::size_t n_;
    std::vector<Scalar> entries_;
};

/// Exact determinant: cofactor expansion for n <= 4, elimination with
/// invertible-body pivots for larger matrices, falling back to cofactor
/// expansion when no invertible pivot is available.
Scalar even_det(const EvenMatrix& m);

/// Block matrix [[A, B], [C, D]] over a Grassmann ring: A (pxp) and D (qxq)
/// even-homogeneous, B (pxq) and C (qxp) odd-homogeneous. Represents an
/// endomorphism of the free module A^{p|q}; invertible iff the bodies of A
/// and D are invertible.
class SuperMatrix {
public:
    SuperMatrix(RingSpec ring, int p, int q);
    static SuperMatrix identity(const RingSpec& ring, int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    const RingSpec& ring() const { return ring_; }

    const Scalar& a(int i, int j) const { return a_[idx(i, j, p_)]; }
    const Scalar& b(int i, int j) const { return b_[idx(i, j, q_)]; }
    const Scalar& c(int i, int j) const { return c_[idx(i, j, p_)]; }
    const Scalar& d(int i, int j) const { return d_[idx(i, j, q_)]; }

    void set_a(int i, int j, Scalar v);
    void set_b(int i, int j, Scalar v);
    void set_c(int i, int j, Scalar v);
    void set_d(int i, int j, Scalar v);

    EvenMatrix block_a() const;
    EvenMatrix block_d() const;

    SuperMatrix operator*(const SuperMatrix& rhs) const;
    bool operator==(const SuperMatrix& rhs) const = default;

    bool is_invertible() const;
    SuperMatrix inverse() const;

    std::string str() const;

private:
    static std::size_t idx(int i, int j, int cols)
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(j);
    }
    const Scalar& entry(int i, int j) const;
    void set_entry(int i, int j, Scalar v);

    RingSpec ring_;
    int p_, q_;
    std::vector<Scalar> a_, b_, c_, d_;
};

struct UdlFactors {
    SuperMatrix upper; // [[1, B D^-1], [0, 1]]
    SuperMatrix core;  // [[A - B D^-1 C, 0], [0, D]]
    SuperMatrix lower; // [[1, 0], [D^-1 C, 1]]
};

/// The block factorization M = upper * core * lower; requires M invertible.
UdlFactors decompose_udl(const SuperMatrix& m);

/// Berezinian det(A - B D^-1 C) * det(D)^-1; exact, even, invertible.
Scalar ber(const SuperMatrix& m);

} // namespace skoszul

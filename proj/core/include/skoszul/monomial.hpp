#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "skoszul/variables.hpp"

namespace skoszul {

/// Normal-form supercommutative monomial: exponents for the even variables
/// plus a set of odd variables (bitmask in registry order; the normal form
/// lists odd factors ascending).
struct Monomial {
    std::vector<std::uint32_t> even_exp;
    std::uint64_t odd_mask = 0;

    static Monomial unit(const VarRegistry& reg);
    static Monomial variable(const VarRegistry& reg, VarRef v);

    unsigned total_degree() const;
    Parity parity() const;
    bool is_unit() const;

    /// Degree contributed by variables of one (factor, parity) class.
    long class_degree(const VarRegistry& reg, Factor f, Parity p) const;

    std::string str(const VarRegistry& reg) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: graded, then lexicographic on even exponents, then
/// on the odd mask. Fixes all matrix row/column and report orders.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Product with the Koszul sign rule: 0 when odd sets intersect, otherwise
/// +-1 from interleaving odd factors into ascending order.
struct SignedMonomial {
    int sign; // -1, 0, +1
    Monomial mono;
};
SignedMonomial mono_mul(const Monomial& a, const Monomial& b);

} // namespace skoszul

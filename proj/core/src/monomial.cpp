#include "skoszul/monomial.hpp"

#include <bit>
#include <sstream>

namespace skoszul {

Monomial Monomial::unit(const VarRegistry& reg)
{
    Monomial m;
    m.even_exp.assign(reg.even_count(), 0);
    return m;
}

Monomial Monomial::variable(const VarRegistry& reg, VarRef v)
{
    Monomial m = unit(reg);
    if (v.parity == Parity::even)
        m.even_exp[v.pos] = 1;
    else
        m.odd_mask = std::uint64_t{1} << v.pos;
    return m;
}

unsigned Monomial::total_degree() const
{
    unsigned d = static_cast<unsigned>(std::popcount(odd_mask));
    for (auto e : even_exp)
        d += e;
    return d;
}

Parity Monomial::parity() const
{
    return (std::popcount(odd_mask) % 2 == 0) ? Parity::even : Parity::odd;
}

bool Monomial::is_unit() const
{
    if (odd_mask)
        return false;
    for (auto e : even_exp)
        if (e)
            return false;
    return true;
}

long Monomial::class_degree(const VarRegistry& reg, Factor f, Parity p) const
{
    long d = 0;
    if (p == Parity::even) {
        for (std::size_t i = 0; i < even_exp.size(); ++i)
            if (reg.even_var(i).factor == f)
                d += even_exp[i];
    } else {
        std::uint64_t m = odd_mask;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            if (reg.odd_var(static_cast<std::size_t>(i)).factor == f)
                ++d;
        }
    }
    return d;
}

std::string Monomial::str(const VarRegistry& reg) const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < even_exp.size(); ++i) {
        if (even_exp[i] == 0)
            continue;
        if (!first)
            out << "*";
        first = false;
        out << reg.even_var(i).name;
        if (even_exp[i] > 1)
            out << "^" << even_exp[i];
    }
    std::uint64_t m = odd_mask;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (!first)
            out << "*";
        first = false;
        out << reg.odd_var(static_cast<std::size_t>(i)).name;
    }
    if (first)
        out << "1";
    return out.str();
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    if (a.even_exp != b.even_exp)
        return a.even_exp < b.even_exp;
    return a.odd_mask < b.odd_mask;
}

SignedMonomial mono_mul(const Monomial& a, const Monomial& b)
{
    if (a.odd_mask & b.odd_mask)
        return {0, {}};
    int inversions = 0;
    std::uint64_t bb = b.odd_mask;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a.odd_mask >> (j + 1));
    }
    Monomial prod;
    prod.even_exp.resize(a.even_exp.size());
    for (std::size_t i = 0; i < a.even_exp.size(); ++i)
        prod.even_exp[i] = a.even_exp[i] + b.even_exp[i];
    prod.odd_mask = a.odd_mask | b.odd_mask;
    return {(inversions & 1) ? -1 : 1, std::move(prod)};
}

} // namespace skoszul

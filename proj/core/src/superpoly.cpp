#include "skoszul/superpoly.hpp"

#include <bit>
#include <sstream>

namespace skoszul {

SuperPoly::SuperPoly(Registry reg, RingSpec ring)
    : reg_(std::move(reg)), ring_(std::move(ring))
{
    if (!reg_)
        throw std::invalid_argument("null variable registry");
}

SuperPoly SuperPoly::one(Registry reg, const RingSpec& ring)
{
    return constant(std::move(reg), ring, Scalar::one(ring));
}

SuperPoly SuperPoly::constant(Registry reg, const RingSpec& ring, const Scalar& c)
{
    SuperPoly f(std::move(reg), ring);
    f.add_term(Monomial::unit(*f.reg_), c);
    return f;
}

SuperPoly SuperPoly::variable(Registry reg, const RingSpec& ring, const std::string& name)
{
    VarRef v = reg->ref(name);
    return variable(std::move(reg), ring, v);
}

SuperPoly SuperPoly::variable(Registry reg, const RingSpec& ring, VarRef v)
{
    SuperPoly f(std::move(reg), ring);
    f.add_term(Monomial::variable(*f.reg_, v), Scalar::one(ring));
    return f;
}

SuperPoly SuperPoly::from_term(Registry reg, const RingSpec& ring, const Monomial& m,
                               const Scalar& c)
{
    SuperPoly f(std::move(reg), ring);
    f.add_term(m, c);
    return f;
}

void check_same_context(const SuperPoly& a, const SuperPoly& b)
{
    if (!(a.ring() == b.ring()))
        throw RingMismatchError("ring mismatch: " + a.ring().str() + " vs " + b.ring().str());
    if (a.registry() != b.registry() && !(*a.registry() == *b.registry()))
        throw RingMismatchError("variable registry mismatch");
}

void SuperPoly::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Scalar sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

SuperPoly SuperPoly::operator+(const SuperPoly& rhs) const
{
    check_same_context(*this, rhs);
    SuperPoly out = *this;
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, c);
    return out;
}

SuperPoly SuperPoly::operator-(const SuperPoly& rhs) const
{
    return *this + (-rhs);
}

SuperPoly SuperPoly::operator-() const
{
    SuperPoly out(reg_, ring_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

SuperPoly SuperPoly::operator*(const SuperPoly& rhs) const
{
    check_same_context(*this, rhs);
    SuperPoly out(reg_, ring_);
    for (const auto& [ma, ca] : terms_) {
        bool mu_odd = ma.parity() == Parity::odd;
        for (const auto& [mb, cb] : rhs.terms_) {
            auto [sign, prod] = mono_mul(ma, mb);
            if (sign == 0)
                continue;
            // (ca * ma)(cb * mb): cb's odd part crosses ma
            Scalar coeff = ca * cb.even_part();
            Scalar odd = ca * cb.odd_part();
            coeff = mu_odd ? coeff - odd : coeff + odd;
            if (sign < 0)
                coeff = -coeff;
            out.add_term(prod, coeff);
        }
    }
    return out;
}

bool SuperPoly::operator==(const SuperPoly& rhs) const
{
    if (!(ring_ == rhs.ring_))
        return false;
    if (reg_ != rhs.reg_ && !(*reg_ == *rhs.reg_))
        return false;
    return terms_ == rhs.terms_;
}

SuperPoly SuperPoly::scaled(const Scalar& c) const
{
    SuperPoly out(reg_, ring_);
    for (const auto& [m, coef] : terms_)
        out.add_term(m, c * coef);
    return out;
}

SuperPoly SuperPoly::scaled(const FieldElem& c) const
{
    return scaled(Scalar::from_field(ring_, c));
}

Scalar SuperPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

std::optional<Parity> SuperPoly::homogeneous_parity() const
{
    std::optional<Parity> result;
    for (const auto& [m, c] : terms_) {
        ParityClass cp = c.parity();
        if (cp == ParityClass::mixed)
            return std::nullopt;
        bool odd = (m.parity() == Parity::odd) != (cp == ParityClass::odd);
        Parity p = odd ? Parity::odd : Parity::even;
        if (result && *result != p)
            return std::nullopt;
        result = p;
    }
    return result ? result : std::optional<Parity>(Parity::even);
}

std::string SuperPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool wrap = c.terms().size() > 1;
        bool negative = !wrap && !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            out << (negative ? " - " : " + ");
            if (negative)
                cs = cs.substr(1);
        }
        std::string ms = m.str(*reg_);
        if (m.is_unit()) {
            out << (wrap ? "(" + cs + ")" : cs);
        } else if (!wrap && cs == "1") {
            out << ms;
        } else {
            out << (wrap ? "(" + cs + ")" : cs) << "*" << ms;
        }
    }
    return out.str();
}

SuperPoly partial(VarRef v, const SuperPoly& f)
{
    SuperPoly out(f.reg_, f.ring_);
    if (v.parity == Parity::even) {
        for (const auto& [m, c] : f.terms_) {
            std::uint32_t e = m.even_exp[v.pos];
            if (e == 0)
                continue;
            Monomial d = m;
            d.even_exp[v.pos] = e - 1;
            out.add_term(d, c * Scalar::from_int(f.ring_, static_cast<long>(e)));
        }
        return out;
    }
    std::uint64_t bit = std::uint64_t{1} << v.pos;
    for (const auto& [m, c] : f.terms_) {
        if (!(m.odd_mask & bit))
            continue;
        // sign from odd factors preceding v, and from crossing the odd part
        // of the coefficient
        int preceding = std::popcount(m.odd_mask & (bit - 1));
        Scalar coeff = c.even_part() - c.odd_part();
        if (preceding & 1)
            coeff = -coeff;
        Monomial d = m;
        d.odd_mask &= ~bit;
        out.add_term(d, coeff);
    }
    return out;
}

SuperPoly partial(const std::string& name, const SuperPoly& f)
{
    return partial(f.registry()->ref(name), f);
}

SuperPoly euler(const SuperPoly& f, const std::vector<Factor>& factors)
{
    auto in = [&](Factor x) {
        for (Factor y : factors)
            if (x == y)
                return true;
        return false;
    };
    const VarRegistry& reg = *f.registry();
    SuperPoly out = SuperPoly::zero(f.registry(), f.ring());
    for (std::size_t i = 0; i < reg.even_count(); ++i) {
        if (!in(reg.even_var(i).factor))
            continue;
        VarRef v{Parity::even, i};
        out = out + SuperPoly::variable(f.registry(), f.ring(), v) * partial(v, f);
    }
    for (std::size_t i = 0; i < reg.odd_count(); ++i) {
        if (!in(reg.odd_var(i).factor))
            continue;
        VarRef v{Parity::odd, i};
        out = out + SuperPoly::variable(f.registry(), f.ring(), v) * partial(v, f);
    }
    return out;
}

SuperPoly euler(const SuperPoly& f, std::initializer_list<Factor> factors)
{
    return euler(f, std::vector<Factor>(factors));
}

} // namespace skoszul

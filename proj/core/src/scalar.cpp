#include "skoszul/scalar.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace skoszul {

RingSpec RingSpec::grassmann(const FieldSpec& f, unsigned m)
{
    if (m > 16)
        throw std::invalid_argument("at most 16 Grassmann generators supported");
    return {f, m};
}

RingSpec RingSpec::parse(const std::string& text)
{
    const std::string prefix = "Grassmann(";
    if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        auto comma = inner.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad ring spec: " + text);
        FieldSpec f = FieldSpec::parse(inner.substr(0, comma));
        unsigned m = static_cast<unsigned>(std::stoul(inner.substr(comma + 1)));
        return grassmann(f, m);
    }
    return {FieldSpec::parse(text), 0};
}

std::string RingSpec::str() const
{
    if (generators == 0)
        return field.str();
    return "Grassmann(" + field.str() + "," + std::to_string(generators) + ")";
}

int subset_merge_sign(std::uint32_t a, std::uint32_t b)
{
    if (a & b)
        return 0;
    // inversions: pairs (i in a, j in b) with i > j
    int inversions = 0;
    std::uint32_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

Scalar Scalar::one(const RingSpec& r)
{
    return term(r, 0, FieldElem::one(r.field));
}

Scalar Scalar::from_int(const RingSpec& r, long n)
{
    return term(r, 0, FieldElem::from_int(r.field, n));
}

Scalar Scalar::from_field(const RingSpec& r, const FieldElem& c)
{
    if (!(c.spec() == r.field))
        throw RingMismatchError("field element does not match ring " + r.str());
    return term(r, 0, c);
}

Scalar Scalar::from_rational(const RingSpec& r, const mpq_class& q)
{
    return term(r, 0, FieldElem::from_rational(r.field, q));
}

Scalar Scalar::generator(const RingSpec& r, unsigned i)
{
    if (i < 1 || i > r.generators)
        throw std::out_of_range("Grassmann generator index " + std::to_string(i) +
                                " out of range for " + r.str());
    return term(r, std::uint32_t{1} << (i - 1), FieldElem::one(r.field));
}

Scalar Scalar::term(const RingSpec& r, std::uint32_t mask, const FieldElem& c)
{
    if (mask >> r.generators)
        throw std::out_of_range("generator subset out of range for " + r.str());
    Scalar s(r);
    if (!c.is_zero())
        s.terms_.emplace_back(mask, c);
    return s;
}

void Scalar::check_same_ring(const Scalar& rhs) const
{
    if (!(ring_ == rhs.ring_))
        throw RingMismatchError("ring mismatch: " + ring_.str() + " vs " + rhs.ring_.str());
}

void Scalar::add_term(std::uint32_t mask, const FieldElem& c)
{
    if (c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const auto& t, std::uint32_t m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) {
        FieldElem sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    } else {
        terms_.insert(it, {mask, c});
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const
{
    check_same_ring(rhs);
    Scalar out = *this;
    for (const auto& [mask, c] : rhs.terms_)
        out.add_term(mask, c);
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const
{
    return *this + (-rhs);
}

Scalar Scalar::operator-() const
{
    Scalar out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& [mask, c] : terms_)
        out.terms_.emplace_back(mask, -c);
    return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const
{
    check_same_ring(rhs);
    Scalar out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            int sign = subset_merge_sign(ma, mb);
            if (sign == 0)
                continue;
            FieldElem c = ca * cb;
            out.add_term(ma | mb, sign > 0 ? c : -c);
        }
    }
    return out;
}

Scalar Scalar::inverse() const
{
    if (!is_homogeneous(Parity::even))
        throw NonInvertibleError("inverse requires an even-homogeneous element");
    FieldElem b = body();
    if (b.is_zero())
        throw NonInvertibleError("inverse of element with zero body");
    FieldElem binv = b.inverse();
    // a = b(1 + n) with n = soul/b nilpotent: a^{-1} = b^{-1} sum (-n)^k
    Scalar n = soul() * from_field(ring_, binv);
    Scalar acc = one(ring_);
    Scalar power = one(ring_);
    for (unsigned k = 1; k <= ring_.generators; ++k) {
        power = power * n;
        if (power.is_zero())
            break;
        acc = (k & 1) ? acc - power : acc + power;
    }
    return acc * from_field(ring_, binv);
}

bool Scalar::operator==(const Scalar& rhs) const
{
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

FieldElem Scalar::body() const
{
    return coefficient(0);
}

FieldElem Scalar::coefficient(std::uint32_t mask) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const auto& t, std::uint32_t m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask)
        return it->second;
    return FieldElem::zero(ring_.field);
}

Scalar Scalar::soul() const
{
    Scalar out(ring_);
    for (const auto& t : terms_)
        if (t.first != 0)
            out.terms_.push_back(t);
    return out;
}

Scalar Scalar::even_part() const
{
    Scalar out(ring_);
    for (const auto& t : terms_)
        if (std::popcount(t.first) % 2 == 0)
            out.terms_.push_back(t);
    return out;
}

Scalar Scalar::odd_part() const
{
    Scalar out(ring_);
    for (const auto& t : terms_)
        if (std::popcount(t.first) % 2 == 1)
            out.terms_.push_back(t);
    return out;
}

ParityClass Scalar::parity() const
{
    bool has_even = false, has_odd = false;
    for (const auto& t : terms_)
        (std::popcount(t.first) % 2 == 0 ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return ParityClass::mixed;
    if (has_odd)
        return ParityClass::odd;
    return ParityClass::even;
}

bool Scalar::is_homogeneous(Parity p) const
{
    ParityClass c = parity();
    if (c == ParityClass::mixed)
        return false;
    if (is_zero())
        return true;
    return (c == ParityClass::even) == (p == Parity::even);
}

bool Scalar::is_field_valued() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

FieldElem Scalar::field_value() const
{
    if (!is_field_valued())
        throw std::logic_error("scalar has Grassmann terms, not a field value");
    return body();
}

bool Scalar::is_invertible() const
{
    return is_homogeneous(Parity::even) && !body().is_zero();
}

std::string Scalar::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
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
        std::string gens;
        std::uint32_t m = mask;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            if (!gens.empty())
                gens += "*";
            gens += "e" + std::to_string(i + 1);
        }
        if (gens.empty()) {
            out << cs;
        } else if (cs == "1") {
            out << gens;
        } else {
            out << cs << "*" << gens;
        }
    }
    return out.str();
}

} // namespace skoszul

#include "skoszul/field.hpp"

namespace skoszul {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("F_p requires a prime modulus, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("prime modulus too large");
    return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "Q")
        return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument("bad field spec: " + text);
            p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (p > (std::uint64_t{1} << 31))
                throw std::invalid_argument("prime modulus too large: " + text);
        }
        return prime_field(p);
    }
    throw std::invalid_argument("bad field spec: " + text + " (expected Q or F<p>)");
}

std::string FieldSpec::str() const
{
    return is_rationals() ? "Q" : "F" + std::to_string(p);
}

FieldElem FieldElem::zero(const FieldSpec& f)
{
    return f.is_rationals() ? FieldElem(mpq_class(0)) : FieldElem(0, f.p);
}

FieldElem FieldElem::one(const FieldSpec& f)
{
    return f.is_rationals() ? FieldElem(mpq_class(1)) : FieldElem(1 % f.p, f.p);
}

FieldElem FieldElem::from_int(const FieldSpec& f, long n)
{
    if (f.is_rationals())
        return FieldElem(mpq_class(n));
    long r = n % static_cast<long>(f.p);
    if (r < 0)
        r += static_cast<long>(f.p);
    return FieldElem(static_cast<std::uint64_t>(r), f.p);
}

FieldElem FieldElem::from_rational(const FieldSpec& f, const mpq_class& q)
{
    if (f.is_rationals()) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElem(c);
    }
    // numerator * denominator^{-1} mod p
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(f.p));
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(f.p));
    long n = num.get_si();
    long d = den.get_si();
    FieldElem nd = from_int(f, n);
    FieldElem dd = from_int(f, d);
    return nd * dd.inverse();
}

FieldSpec FieldElem::spec() const
{
    if (std::holds_alternative<mpq_class>(v_))
        return FieldSpec::rationals();
    return FieldSpec{FieldSpec::Kind::prime, std::get<Fp>(v_).p};
}

bool FieldElem::is_zero() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return sgn(*q) == 0;
    return std::get<Fp>(v_).v == 0;
}

void FieldElem::check_same(const FieldElem& rhs) const
{
    if (!(spec() == rhs.spec()))
        throw RingMismatchError("field mismatch: " + spec().str() + " vs " + rhs.spec().str());
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const
{
    check_same(rhs);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(*q + std::get<mpq_class>(rhs.v_)));
    const Fp& a = std::get<Fp>(v_);
    const Fp& b = std::get<Fp>(rhs.v_);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p)
        s -= a.p;
    return FieldElem(s, a.p);
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const
{
    return *this + (-rhs);
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const
{
    check_same(rhs);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(*q * std::get<mpq_class>(rhs.v_)));
    const Fp& a = std::get<Fp>(v_);
    const Fp& b = std::get<Fp>(rhs.v_);
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v) * b.v;
    return FieldElem(static_cast<std::uint64_t>(prod % a.p), a.p);
}

FieldElem FieldElem::operator-() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(-*q));
    const Fp& a = std::get<Fp>(v_);
    return FieldElem(a.v == 0 ? 0 : a.p - a.v, a.p);
}

FieldElem FieldElem::inverse() const
{
    if (is_zero())
        throw NonInvertibleError("division by zero in " + spec().str());
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(1 / *q));
    // extended Euclid on (v, p)
    const Fp& a = std::get<Fp>(v_);
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(a.p), new_r = static_cast<std::int64_t>(a.v);
    while (new_r != 0) {
        std::int64_t qt = r / new_r;
        std::int64_t tmp = t - qt * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - qt * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += static_cast<std::int64_t>(a.p);
    return FieldElem(static_cast<std::uint64_t>(t), a.p);
}

bool FieldElem::operator==(const FieldElem& rhs) const
{
    if (!(spec() == rhs.spec()))
        return false;
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return *q == std::get<mpq_class>(rhs.v_);
    return std::get<Fp>(v_) == std::get<Fp>(rhs.v_);
}

const mpq_class& FieldElem::rational() const
{
    return std::get<mpq_class>(v_);
}

std::uint64_t FieldElem::residue() const
{
    return std::get<Fp>(v_).v;
}

mpz_class FieldElem::pivot_weight() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return abs(q->get_num());
    return mpz_class(static_cast<unsigned long>(std::get<Fp>(v_).v));
}

std::string FieldElem::str() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return q->get_str();
    return std::to_string(std::get<Fp>(v_).v);
}

} // namespace skoszul

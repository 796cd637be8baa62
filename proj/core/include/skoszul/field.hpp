#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "skoszul/errors.hpp"

namespace skoszul {

/// Ground field of the coefficient ring: Q or F_p for a prime p.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint64_t p = 0; // only meaningful for Kind::prime

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    /// Accepts "Q" or "F<p>" with p prime, e.g. "F3".
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return kind == Kind::rationals; }
    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact element of Q (GMP rational) or of F_p. Rationals are kept
/// canonical (lowest terms, positive denominator) by GMP; F_p values are
/// reduced representatives in [0, p).
class FieldElem {
public:
    FieldElem() : v_(mpq_class(0)) {}

    static FieldElem zero(const FieldSpec& f);
    static FieldElem one(const FieldSpec& f);
    static FieldElem from_int(const FieldSpec& f, long n);
    static FieldElem from_rational(const FieldSpec& f, const mpq_class& q);

    FieldSpec spec() const;
    bool is_zero() const;

    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

    bool operator==(const FieldElem& rhs) const;
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

    /// Rational value; only valid over Q.
    const mpq_class& rational() const;
    /// Residue in [0, p); only valid over F_p.
    std::uint64_t residue() const;

    /// Pivoting weight: |numerator| over Q, the residue over F_p.
    mpz_class pivot_weight() const;

    std::string str() const;

private:
    struct Fp {
        std::uint64_t v;
        std::uint64_t p;
        bool operator==(const Fp&) const = default;
    };

    explicit FieldElem(mpq_class q) : v_(std::move(q)) {}
    FieldElem(std::uint64_t v, std::uint64_t p) : v_(Fp{v, p}) {}

    void check_same(const FieldElem& rhs) const;

    std::variant<mpq_class, Fp> v_;
};

bool is_prime(std::uint64_t n);

} // namespace skoszul

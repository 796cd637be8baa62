#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skoszul/field.hpp"

namespace skoszul {

/// Coefficient ring: the ground field extended by `generators` Grassmann
/// (odd, anticommuting) generators eta_1..eta_m. generators == 0 gives the
/// plain field.
struct RingSpec {
    FieldSpec field;
    unsigned generators = 0;

    static RingSpec rationals() { return {FieldSpec::rationals(), 0}; }
    static RingSpec prime_field(std::uint64_t p) { return {FieldSpec::prime_field(p), 0}; }
    static RingSpec grassmann(const FieldSpec& f, unsigned m);

    /// Accepts "Q", "F<p>", or "Grassmann(<field>,<m>)".
    static RingSpec parse(const std::string& text);

    bool is_field() const { return generators == 0; }
    std::string str() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Homogeneity classification of a ring element under the Z_2 grading.
/// Zero counts as even (and as odd), reported here as `even`.
enum class ParityClass : unsigned char { even, odd, mixed };

/// Exact element of Lambda_F[eta_1..eta_m]: a map from generator subsets
/// (bitmasks) to nonzero field coefficients. Values are immutable in spirit:
/// all operations return fresh scalars.
class Scalar {
public:
    explicit Scalar(RingSpec ring) : ring_(std::move(ring)) {}

    static Scalar zero(const RingSpec& r) { return Scalar(r); }
    static Scalar one(const RingSpec& r);
    static Scalar from_int(const RingSpec& r, long n);
    static Scalar from_field(const RingSpec& r, const FieldElem& c);
    static Scalar from_rational(const RingSpec& r, const mpq_class& q);
    /// eta_i, 1-based.
    static Scalar generator(const RingSpec& r, unsigned i);
    /// coefficient * product of the generators in `mask` (ascending order).
    static Scalar term(const RingSpec& r, std::uint32_t mask, const FieldElem& c);

    const RingSpec& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;

    /// Inverse of an even-homogeneous element with invertible body; the
    /// nilpotent part is handled by the truncated geometric series.
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Coefficient of the empty subset.
    FieldElem body() const;
    /// The element minus its body; nilpotent.
    Scalar soul() const;
    Scalar even_part() const;
    Scalar odd_part() const;
    ParityClass parity() const;
    bool is_homogeneous(Parity p) const;

    /// True when no term involves a Grassmann generator.
    bool is_field_valued() const;
    /// Value as a field element; requires is_field_valued().
    FieldElem field_value() const;

    /// Even-homogeneous with invertible body.
    bool is_invertible() const;

    const std::vector<std::pair<std::uint32_t, FieldElem>>& terms() const { return terms_; }
    FieldElem coefficient(std::uint32_t mask) const;

    std::string str() const;

private:
    void check_same_ring(const Scalar& rhs) const;
    void add_term(std::uint32_t mask, const FieldElem& c);

    RingSpec ring_;
    // sorted by mask, no zero coefficients
    std::vector<std::pair<std::uint32_t, FieldElem>> terms_;
};

/// Koszul sign for merging two ascending generator subsets; 0 when they
/// intersect, otherwise (-1)^inversions.
int subset_merge_sign(std::uint32_t a, std::uint32_t b);

} // namespace skoszul

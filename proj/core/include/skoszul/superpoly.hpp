#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>

#include "skoszul/monomial.hpp"

namespace skoszul {

/// Supercommutative polynomial over a registered alphabet with exact Scalar
/// coefficients. Coefficients are stored on the left of the monomial; the
/// arithmetic tracks the parity of Grassmann coefficients when they move
/// past odd variables.
class SuperPoly {
public:
    using Registry = std::shared_ptr<const VarRegistry>;
    using TermMap = std::map<Monomial, Scalar, MonoOrder>;

    SuperPoly(Registry reg, RingSpec ring);

    static SuperPoly zero(Registry reg, const RingSpec& ring) { return {std::move(reg), ring}; }
    static SuperPoly one(Registry reg, const RingSpec& ring);
    static SuperPoly constant(Registry reg, const RingSpec& ring, const Scalar& c);
    static SuperPoly variable(Registry reg, const RingSpec& ring, const std::string& name);
    static SuperPoly variable(Registry reg, const RingSpec& ring, VarRef v);
    static SuperPoly from_term(Registry reg, const RingSpec& ring, const Monomial& m,
                               const Scalar& c);

    const Registry& registry() const { return reg_; }
    const RingSpec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    SuperPoly operator+(const SuperPoly& rhs) const;
    SuperPoly operator-(const SuperPoly& rhs) const;
    SuperPoly operator*(const SuperPoly& rhs) const;
    SuperPoly operator-() const;
    bool operator==(const SuperPoly& rhs) const;
    bool operator!=(const SuperPoly& rhs) const { return !(*this == rhs); }

    /// Left multiplication by a ring element.
    SuperPoly scaled(const Scalar& c) const;
    SuperPoly scaled(const FieldElem& c) const;

    Scalar coefficient(const Monomial& m) const;

    /// Z_2 parity of the poly including coefficient parity; nullopt if mixed.
    std::optional<Parity> homogeneous_parity() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    friend SuperPoly partial(VarRef v, const SuperPoly& f);

    Registry reg_;
    RingSpec ring_;
    TermMap terms_;
};

/// Left partial derivative. Even variables: the usual derivative. Odd
/// variables: the coefficient picks up (-1)^(odd factors preceding v in the
/// normal form), and (-1)^|c| for the coefficient's own odd part.
SuperPoly partial(VarRef v, const SuperPoly& f);
SuperPoly partial(const std::string& name, const SuperPoly& f);

/// Euler operator sum_v v * d/dv over the variables of the given factors;
/// multiplies each monomial by its degree in those factors.
SuperPoly euler(const SuperPoly& f, std::initializer_list<Factor> factors);
SuperPoly euler(const SuperPoly& f, const std::vector<Factor>& factors);

void check_same_context(const SuperPoly& a, const SuperPoly& b);

} // namespace skoszul

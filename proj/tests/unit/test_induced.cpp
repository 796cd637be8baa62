#include <doctest.h>

#include "../common/generators.hpp"
#include "../common/oracles.hpp"
#include "skoszul/induced.hpp"
#include "skoszul/parser.hpp"
#include "skoszul/random_gen.hpp"

using namespace skoszul;

namespace {

const RingSpec kRing = RingSpec::grassmann(FieldSpec::rationals(), 4);

Scalar sc(const std::string& text)
{
    return parse_scalar(kRing, text);
}

/// sum x_i dch_i + th_j dl_j, the multiplication element of the dual
/// differential.
SuperPoly delta_element_of(const ComplexSpec& spec)
{
    SuperPoly t = SuperPoly::zero(spec.registry, spec.ring);
    for (int i = 1; i <= spec.p; ++i)
        t = t + SuperPoly::variable(spec.registry, spec.ring,
                                    spec.registry->ref(Factor::r, Parity::even, i)) *
                    SuperPoly::variable(spec.registry, spec.ring,
                                        spec.registry->ref(Factor::pi_dual, Parity::odd, i));
    for (int j = 1; j <= spec.q; ++j)
        t = t + SuperPoly::variable(spec.registry, spec.ring,
                                    spec.registry->ref(Factor::r, Parity::odd, j)) *
                    SuperPoly::variable(spec.registry, spec.ring,
                                        spec.registry->ref(Factor::pi_dual, Parity::even, j));
    return t;
}

} // namespace

TEST_CASE("identity acts trivially")
{
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 0}, {0, 1}}) {
        InducedActionResult r =
            induced_action_on_generator(SuperMatrix::identity(kRing, p, q));
        CHECK(r.coefficient == Scalar::one(kRing));
        CHECK(r.berezinian == Scalar::one(kRing));
        CHECK(r.matches_inverse_ber);
    }
}

TEST_CASE("diagonal action scales by det(D) det(A)^-1")
{
    SuperMatrix m(kRing, 1, 1);
    m.set_a(0, 0, sc("2"));
    m.set_d(0, 0, sc("3"));
    InducedActionResult r = induced_action_on_generator(m);
    CHECK(r.coefficient == sc("3/2"));
    CHECK(r.berezinian == sc("2/3"));
    CHECK(r.matches_inverse_ber);
}

TEST_CASE("shears leave the generator fixed")
{
    // lower block shear: x' = x + alpha th
    SuperMatrix lower = SuperMatrix::identity(kRing, 1, 1);
    lower.set_c(0, 0, sc("e1"));
    InducedActionResult r = induced_action_on_generator(lower);
    CHECK(r.coefficient == Scalar::one(kRing));
    CHECK(r.matches_inverse_ber);

    // upper block shear: th' = th + beta x, generator moves by a boundary
    SuperMatrix upper = SuperMatrix::identity(kRing, 1, 1);
    upper.set_b(0, 0, sc("e2"));
    r = induced_action_on_generator(upper);
    CHECK(r.coefficient == Scalar::one(kRing));
    CHECK(r.matches_inverse_ber);
    CHECK(r.transformed != dual_generator(ComplexSpec::dual_super_koszul(1, 1, kRing)));
}

TEST_CASE("substitution preserves the differential element")
{
    Rng rng(211);
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (int t = 0; t < 15; ++t) {
            SuperMatrix m = random_invertible_supermatrix(rng, kRing, p, q);
            DualSubstitution sub = dual_substitution(m);
            SuperPoly element = delta_element_of(sub.spec);
            CHECK(sub.apply(element) == element);
        }
    }
}

TEST_CASE("substitution is a ring map on random polynomials")
{
    Rng rng(223);
    SuperMatrix m = random_invertible_supermatrix(rng, kRing, 2, 1);
    DualSubstitution sub = dual_substitution(m);
    for (int t = 0; t < 20; ++t) {
        SuperPoly f = testing::random_poly(rng, sub.spec.registry, kRing, 3, 2);
        SuperPoly g = testing::random_poly(rng, sub.spec.registry, kRing, 3, 2);
        CHECK(sub.apply(f * g) == sub.apply(f) * sub.apply(g));
        CHECK(sub.apply(f + g) == sub.apply(f) + sub.apply(g));
    }
}

TEST_CASE("induced action equals the inverse berezinian")
{
    Rng rng(227);
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (int t = 0; t < 10; ++t) {
            SuperMatrix m = random_invertible_supermatrix(rng, kRing, p, q);
            InducedActionResult r = induced_action_on_generator(m);
            CHECK(r.matches_inverse_ber);
            CHECK(r.coefficient == r.berezinian.inverse());
            CHECK(r.coefficient_inverse == r.berezinian);
        }
    }
}

TEST_CASE("purely even and purely odd ranks")
{
    // q = 0: action is det(A)^-1; p = 0: action is det(D)
    SuperMatrix a(kRing, 2, 0);
    a.set_a(0, 0, sc("1"));
    a.set_a(0, 1, sc("2"));
    a.set_a(1, 0, sc("1"));
    a.set_a(1, 1, sc("3"));
    InducedActionResult ra = induced_action_on_generator(a);
    CHECK(ra.coefficient == even_det(a.block_a()).inverse());
    CHECK(ra.matches_inverse_ber);

    SuperMatrix d(kRing, 0, 2);
    d.set_d(0, 0, sc("2"));
    d.set_d(0, 1, sc("1 + e1*e2"));
    d.set_d(1, 0, sc("0"));
    d.set_d(1, 1, sc("5"));
    InducedActionResult rd = induced_action_on_generator(d);
    CHECK(rd.coefficient == even_det(d.block_d()));
    CHECK(rd.matches_inverse_ber);
}

TEST_CASE("contravariance: products act in reverse order")
{
    Rng rng(229);
    for (int t = 0; t < 15; ++t) {
        SuperMatrix m1 = random_invertible_supermatrix(rng, kRing, 2, 2);
        SuperMatrix m2 = random_invertible_supermatrix(rng, kRing, 2, 2);
        Scalar lhs = induced_action_on_generator(m1 * m2).coefficient;
        Scalar rhs = induced_action_on_generator(m2).coefficient *
                     induced_action_on_generator(m1).coefficient;
        CHECK(lhs == rhs);
    }
}

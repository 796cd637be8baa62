#include <doctest.h>

#include "../common/generators.hpp"
#include "skoszul/superpoly.hpp"

using namespace skoszul;

namespace {

const RingSpec kQ = RingSpec::rationals();

SuperPoly var(const SuperPoly::Registry& reg, const std::string& name)
{
    return SuperPoly::variable(reg, kQ, name);
}

} // namespace

TEST_CASE("monomial product signs")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    SuperPoly th1 = var(reg, "th1"), th2 = var(reg, "th2"), x1 = var(reg, "x1");

    CHECK(th1 * th2 == -(th2 * th1));
    CHECK((th1 * th1).is_zero());
    // (x1 th2)(x1 th1) = -x1^2 th1 th2: one transposition of th2 past th1
    SuperPoly lhs = (x1 * th2) * (x1 * th1);
    SuperPoly rhs = -(x1 * x1 * th1 * th2);
    CHECK(lhs == rhs);
    CHECK(lhs.str() == "-x1^2*th1*th2");
}

TEST_CASE("mono_mul zero on repeated odd variable")
{
    auto reg = VarRegistry::super_koszul(1, 1);
    Monomial th = Monomial::variable(*reg, reg->ref("th1"));
    auto [sign, prod] = mono_mul(th, th);
    CHECK(sign == 0);
}

TEST_CASE("left partial derivatives")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    SuperPoly th1 = var(reg, "th1"), th2 = var(reg, "th2"), x1 = var(reg, "x1");

    CHECK(partial("th1", th1 * th2) == th2);
    CHECK(partial("th2", th1 * th2) == -th1);
    CHECK(partial("x1", x1 * x1 * th1) == (x1 * th1).scaled(Scalar::from_int(kQ, 2)));
    CHECK(partial("th1", x1).is_zero());
    CHECK_THROWS_AS(partial("z9", x1), std::invalid_argument);
}

TEST_CASE("registry mismatch is rejected")
{
    auto reg_a = VarRegistry::super_koszul(1, 1);
    auto reg_b = VarRegistry::super_koszul(2, 1);
    CHECK_THROWS_AS(var(reg_a, "x1") * var(reg_b, "x1"), RingMismatchError);
    CHECK_THROWS_AS(var(reg_a, "x1") + var(reg_b, "x1"), RingMismatchError);
}

TEST_CASE("euler operators")
{
    auto reg = VarRegistry::super_koszul(1, 1);
    SuperPoly x1 = var(reg, "x1"), th1 = var(reg, "th1"), l1 = var(reg, "l1"),
              ch1 = var(reg, "ch1");

    // degree times the monomial, counting only the selected factor
    SuperPoly f = x1 * x1 * th1;
    CHECK(euler(f, {Factor::r}) == f.scaled(Scalar::from_int(kQ, 3)));
    CHECK(euler(SuperPoly::one(reg, kQ), {Factor::r}).is_zero());
    SuperPoly g = x1 * l1 * ch1;
    CHECK(euler(g, {Factor::pi}) == g.scaled(Scalar::from_int(kQ, 2)));
    CHECK(euler(g, {Factor::r}) == g);
    CHECK(euler(g, {Factor::r, Factor::pi}) == g.scaled(Scalar::from_int(kQ, 3)));
}

TEST_CASE("euler equals degree on all bihomogeneous monomials up to degree 5")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    Rng rng(0);
    // exhaustive over exponent vectors (x1,x2,l1,l2) and odd masks
    for (std::uint32_t a = 0; a <= 5; ++a)
        for (std::uint32_t b = 0; a + b <= 5; ++b)
            for (std::uint32_t c = 0; a + b + c <= 5; ++c)
                for (std::uint32_t d = 0; a + b + c + d <= 5; ++d)
                    for (std::uint64_t mask = 0; mask < 16; ++mask) {
                        Monomial m = Monomial::unit(*reg);
                        m.even_exp = {a, b, c, d};
                        m.odd_mask = mask;
                        if (m.total_degree() > 5)
                            continue;
                        SuperPoly f = SuperPoly::from_term(reg, kQ, m, Scalar::one(kQ));
                        long deg = static_cast<long>(m.total_degree());
                        CHECK(euler(f, {Factor::r, Factor::pi}) ==
                              f.scaled(Scalar::from_int(kQ, deg)));
                    }
}

TEST_CASE("parity of monomials")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    CHECK((var(reg, "th1") * var(reg, "th2")).homogeneous_parity() == Parity::even);
    CHECK((var(reg, "x1") * var(reg, "th1")).homogeneous_parity() == Parity::odd);
    CHECK(SuperPoly::one(reg, kQ).homogeneous_parity() == Parity::even);
    CHECK((var(reg, "x1") + var(reg, "th1")).homogeneous_parity() == std::nullopt);
}

TEST_CASE("supercommutativity of random homogeneous polynomials")
{
    const RingSpec ring = RingSpec::grassmann(FieldSpec::rationals(), 3);
    auto reg = VarRegistry::super_koszul(2, 2);
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        Parity pa = rng.chance(1, 2) ? Parity::even : Parity::odd;
        Parity pb = rng.chance(1, 2) ? Parity::even : Parity::odd;
        SuperPoly f = testing::random_homogeneous_poly(rng, reg, ring, pa, 3, 2);
        SuperPoly g = testing::random_homogeneous_poly(rng, reg, ring, pb, 3, 2);
        if (pa == Parity::odd && pb == Parity::odd)
            CHECK(f * g == -(g * f));
        else
            CHECK(f * g == g * f);
    }
}

TEST_CASE("odd partials anticommute, even partials commute")
{
    const RingSpec ring = RingSpec::rationals();
    auto reg = VarRegistry::super_koszul(2, 2);
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        SuperPoly f = testing::random_poly(rng, reg, ring, 4, 3);
        CHECK(partial("th1", partial("th2", f)) == -partial("th2", partial("th1", f)));
        CHECK(partial("ch1", partial("th1", f)) == -partial("th1", partial("ch1", f)));
        CHECK(partial("x1", partial("l1", f)) == partial("l1", partial("x1", f)));
        CHECK(partial("x1", partial("th1", f)) == partial("th1", partial("x1", f)));
    }
}

TEST_CASE("left derivative satisfies the graded Leibniz rule")
{
    const RingSpec ring = RingSpec::grassmann(FieldSpec::rationals(), 3);
    auto reg = VarRegistry::super_koszul(2, 2);
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        Parity pf = rng.chance(1, 2) ? Parity::even : Parity::odd;
        SuperPoly f = testing::random_homogeneous_poly(rng, reg, ring, pf, 3, 2);
        SuperPoly g = testing::random_poly(rng, reg, ring, 3, 2);
        for (const std::string v : {"th1", "ch2"}) {
            SuperPoly lhs = partial(v, f * g);
            SuperPoly rhs = partial(v, f) * g +
                            (pf == Parity::odd ? -(f * partial(v, g)) : f * partial(v, g));
            CHECK(lhs == rhs);
        }
        for (const std::string v : {"x1", "l2"}) {
            CHECK(partial(v, f * g) == partial(v, f) * g + f * partial(v, g));
        }
    }
}

TEST_CASE("rendering matches the documented scheme")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    SuperPoly f = (var(reg, "x1") * var(reg, "x1") * var(reg, "th1") * var(reg, "ch2"))
                      .scaled(Scalar::from_int(kQ, 2)) -
                  var(reg, "l1");
    CHECK(f.str() == "2*x1^2*th1*ch2 - l1");
    CHECK(SuperPoly::zero(reg, kQ).str() == "0");
}

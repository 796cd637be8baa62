#include <doctest.h>

#include "../common/generators.hpp"
#include "skoszul/parser.hpp"

using namespace skoszul;

TEST_CASE("parses the documented grammar")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    const RingSpec ring = RingSpec::rationals();

    SuperPoly f = parse_poly(reg, ring, "2*x1^2*th1*ch2 - l1");
    CHECK(f.str() == "2*x1^2*th1*ch2 - l1");
    CHECK(parse_poly(reg, ring, "x1*th1 - th1*x1").is_zero());
    CHECK(parse_poly(reg, ring, "th1*th2 + th2*th1").is_zero());
    CHECK(parse_poly(reg, ring, "(x1 + l1)^2").str() ==
          parse_poly(reg, ring, "x1^2 + 2*x1*l1 + l1^2").str());
    CHECK(parse_poly(reg, ring, "-x1 + 1/2").str() == "-x1 + 1/2");
    CHECK(parse_poly(reg, ring, "th1^2").is_zero());
    CHECK(parse_poly(reg, ring, "0").is_zero());
}

TEST_CASE("parses prime field coefficients")
{
    auto reg = VarRegistry::classical(2);
    const RingSpec ring = RingSpec::prime_field(3);
    CHECK(parse_poly(reg, ring, "4*x1").str() == "x1");
    CHECK(parse_poly(reg, ring, "3*x1").is_zero());
    CHECK(parse_poly(reg, ring, "1/2*y1").str() == "2*y1"); // 2^-1 = 2 in F3
}

TEST_CASE("parses Grassmann coefficients in polynomials")
{
    auto reg = VarRegistry::dual_super_koszul(1, 1);
    const RingSpec ring = RingSpec::grassmann(FieldSpec::rationals(), 2);
    SuperPoly f = parse_poly(reg, ring, "(1 + e1*e2)*th1*dch1 - e1*x1");
    CHECK(f.coefficient(Monomial::variable(*reg, reg->ref("x1"))) ==
          -Scalar::generator(ring, 1));
    CHECK(parse_poly(reg, ring, f.str()) == f);
}

TEST_CASE("round trips random polynomials")
{
    auto reg = VarRegistry::super_koszul(2, 2);
    const RingSpec ring = RingSpec::grassmann(FieldSpec::rationals(), 3);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        SuperPoly f = testing::random_poly(rng, reg, ring, 4, 3);
        CHECK(parse_poly(reg, ring, f.str()) == f);
    }
}

TEST_CASE("rejects malformed input")
{
    auto reg = VarRegistry::super_koszul(1, 1);
    const RingSpec ring = RingSpec::rationals();
    CHECK_THROWS_AS(parse_poly(reg, ring, "x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(reg, ring, "y1"), std::invalid_argument);  // wrong registry
    CHECK_THROWS_AS(parse_poly(reg, ring, "e1"), std::invalid_argument);  // no generators in Q
    CHECK_THROWS_AS(parse_poly(reg, ring, "(x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(reg, ring, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(reg, ring, "x1 x1"), std::invalid_argument);
}

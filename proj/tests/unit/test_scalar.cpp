#include <doctest.h>

#include "../common/generators.hpp"
#include "skoszul/parser.hpp"
#include "skoszul/scalar.hpp"

using namespace skoszul;

namespace {
const RingSpec kRing = RingSpec::grassmann(FieldSpec::rationals(), 4);
}

TEST_CASE("ring spec parsing")
{
    CHECK(RingSpec::parse("Q") == RingSpec::rationals());
    CHECK(RingSpec::parse("F5") == RingSpec::prime_field(5));
    CHECK(RingSpec::parse("Grassmann(Q,4)") == kRing);
    CHECK(RingSpec::parse("Grassmann(F3,2)") ==
          RingSpec::grassmann(FieldSpec::prime_field(3), 2));
    CHECK(RingSpec::parse("Grassmann(Q,4)").str() == "Grassmann(Q,4)");
    CHECK_THROWS_AS(RingSpec::parse("Grassmann(Q)"), std::invalid_argument);
}

TEST_CASE("generators anticommute")
{
    Scalar e1 = Scalar::generator(kRing, 1);
    Scalar e2 = Scalar::generator(kRing, 2);
    CHECK((e1 * e2).str() == "e1*e2");
    CHECK((e2 * e1) == -(e1 * e2));
    CHECK((e1 * e1).is_zero());
}

TEST_CASE("distributivity on units")
{
    Scalar one = Scalar::one(kRing);
    Scalar e1 = Scalar::generator(kRing, 1);
    Scalar e2 = Scalar::generator(kRing, 2);
    Scalar lhs = (one + e1) * (one + e2);
    Scalar rhs = one + e1 + e2 + e1 * e2;
    CHECK(lhs == rhs);
}

TEST_CASE("inverses with nilpotent part")
{
    Scalar e12 = Scalar::generator(kRing, 1) * Scalar::generator(kRing, 2);
    Scalar a = Scalar::one(kRing) + e12;
    CHECK(a.inverse() == Scalar::one(kRing) - e12); // (1+n)^-1 = 1-n for n^2 = 0

    // (2 + 2 e1 e2)^-1 = 1/2 - (1/2) e1 e2; check against the product
    Scalar b = Scalar::from_int(kRing, 2) + e12 + e12;
    Scalar binv = b.inverse();
    CHECK(b * binv == Scalar::one(kRing));
    Scalar expected = Scalar::from_rational(kRing, mpq_class(1, 2)) -
                      Scalar::term(kRing, 0b11, FieldElem::from_rational(kRing.field, mpq_class(1, 2)));
    CHECK(binv == expected);
}

TEST_CASE("inverse preconditions")
{
    Scalar e1 = Scalar::generator(kRing, 1);
    Scalar e12 = e1 * Scalar::generator(kRing, 2);
    CHECK_THROWS_AS(e12.inverse(), NonInvertibleError);               // zero body
    CHECK_THROWS_AS(e1.inverse(), NonInvertibleError);                // odd
    CHECK_THROWS_AS((Scalar::one(kRing) + e1).inverse(), NonInvertibleError); // mixed parity
    CHECK_THROWS_AS(Scalar::zero(kRing).inverse(), NonInvertibleError);
}

TEST_CASE("ring mismatch")
{
    Scalar a = Scalar::one(kRing);
    Scalar b = Scalar::one(RingSpec::grassmann(FieldSpec::rationals(), 2));
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
}

TEST_CASE("parity classification")
{
    Scalar e1 = Scalar::generator(kRing, 1);
    Scalar e2 = Scalar::generator(kRing, 2);
    CHECK(Scalar::one(kRing).parity() == ParityClass::even);
    CHECK(e1.parity() == ParityClass::odd);
    CHECK((e1 * e2).parity() == ParityClass::even);
    CHECK((Scalar::one(kRing) + e1).parity() == ParityClass::mixed);
    CHECK(Scalar::zero(kRing).is_homogeneous(Parity::even));
    CHECK(Scalar::zero(kRing).is_homogeneous(Parity::odd));
}

TEST_CASE("ring axioms on random elements")
{
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        Scalar a = testing::random_scalar(rng, kRing);
        Scalar b = testing::random_scalar(rng, kRing);
        Scalar c = testing::random_scalar(rng, kRing);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("supercommutativity of homogeneous elements")
{
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        Parity pa = rng.chance(1, 2) ? Parity::even : Parity::odd;
        Parity pb = rng.chance(1, 2) ? Parity::even : Parity::odd;
        Scalar a = random_homogeneous_scalar(rng, kRing, pa);
        Scalar b = random_homogeneous_scalar(rng, kRing, pb);
        Scalar ab = a * b;
        Scalar ba = b * a;
        if (pa == Parity::odd && pb == Parity::odd)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
    }
}

TEST_CASE("random invertible elements invert exactly")
{
    Rng rng(5);
    for (int t = 0; t < 120; ++t) {
        Scalar a = random_homogeneous_scalar(rng, kRing, Parity::even);
        REQUIRE(a.is_invertible());
        CHECK(a.inverse() * a == Scalar::one(kRing));
    }
}

TEST_CASE("soul is nilpotent")
{
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        Scalar s = testing::random_scalar(rng, kRing).soul();
        Scalar power = Scalar::one(kRing);
        for (unsigned k = 0; k <= kRing.generators; ++k)
            power = power * s;
        CHECK(power.is_zero());
    }
}

TEST_CASE("scalar rendering and parsing round trip")
{
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        Scalar a = testing::random_scalar(rng, kRing);
        CHECK(parse_scalar(kRing, a.str()) == a);
    }
    CHECK(parse_scalar(kRing, "1/2 - 1/2*e1*e2").str() == "1/2 - 1/2*e1*e2");
}

#include <doctest.h>

#include "skoszul/field.hpp"

using namespace skoszul;

TEST_CASE("field spec parsing")
{
    CHECK(FieldSpec::parse("Q").is_rationals());
    CHECK(FieldSpec::parse("F3").p == 3);
    CHECK(FieldSpec::parse("F2").p == 2);
    CHECK(FieldSpec::parse("F101").p == 101);
    CHECK_THROWS_AS(FieldSpec::parse("F4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("F1"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("R"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Fx"), std::invalid_argument);
}

TEST_CASE("rationals stay canonical")
{
    FieldSpec f = FieldSpec::rationals();
    FieldElem a = FieldElem::from_rational(f, mpq_class(2, 4));
    CHECK(a.str() == "1/2");
    FieldElem b = FieldElem::from_rational(f, mpq_class(1, -2));
    CHECK(b.str() == "-1/2");
    CHECK((a + b).is_zero());
    CHECK((a * FieldElem::from_int(f, 2)) == FieldElem::one(f));
}

TEST_CASE("prime field arithmetic")
{
    FieldSpec f3 = FieldSpec::prime_field(3);
    FieldElem two = FieldElem::from_int(f3, 2);
    CHECK((two * two) == FieldElem::one(f3)); // 2*2 = 1 in F3
    CHECK(two.inverse() == two);              // 2^-1 = 2 in F3
    CHECK((-FieldElem::one(f3)) == two);
    CHECK(FieldElem::from_int(f3, 5) == two);
    CHECK(FieldElem::from_int(f3, -1) == two);
    CHECK_THROWS_AS(FieldElem::zero(f3).inverse(), NonInvertibleError);

    FieldSpec f101 = FieldSpec::prime_field(101);
    for (long v = 1; v < 101; ++v) {
        FieldElem x = FieldElem::from_int(f101, v);
        CHECK(x * x.inverse() == FieldElem::one(f101));
    }
}

TEST_CASE("field mismatch is rejected")
{
    FieldElem a = FieldElem::one(FieldSpec::rationals());
    FieldElem b = FieldElem::one(FieldSpec::prime_field(3));
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
    CHECK(a != b);
}

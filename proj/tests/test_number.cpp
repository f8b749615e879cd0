#include "mbi/number.hpp"

#include <doctest.h>

#include <limits>

using mbi::Number;
using mbi::NumberError;

TEST_CASE("integer arithmetic stays exact") {
    CHECK(Number(3) + Number(4) == Number(7));
    CHECK((Number(3) * Number(-4)).rep() == Number::Rep::Int);
    CHECK((Number(7) / Number(2)) == Number::ratio(7, 2));
    CHECK((Number(8) / Number(2)).rep() == Number::Rep::Int);
}

TEST_CASE("integer overflow throws") {
    const Number big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Number(1), NumberError);
    CHECK_THROWS_AS(big * Number(2), NumberError);
}

TEST_CASE("promotion int -> rational -> float") {
    CHECK((Number(1) + Number::ratio(1, 2)).rep() == Number::Rep::Rational);
    CHECK((Number::ratio(1, 2) + Number(0.25)).rep() == Number::Rep::Float);
    CHECK(Number(1) == Number::ratio(2, 2));
    CHECK(Number::ratio(1, 3) < Number::ratio(1, 2));
}

TEST_CASE("parse") {
    CHECK(Number::parse("4/5") == Number::ratio(4, 5));
    CHECK(Number::parse("0.8") == Number::ratio(4, 5));
    CHECK(Number::parse("-1.25e1") == Number::ratio(-25, 2));
    CHECK(Number::parse("12").rep() == Number::Rep::Int);
    CHECK(Number::parse("0.8", true).rep() == Number::Rep::Float);
    CHECK_THROWS_AS(Number::parse("1/0"), NumberError);
    CHECK_THROWS_AS(Number::parse("abc"), NumberError);
    CHECK_THROWS_AS(Number::parse(""), NumberError);
}

TEST_CASE("formatting") {
    CHECK(Number(13).str() == "13");
    CHECK(Number::ratio(4, 5).str() == "4/5");
    CHECK(Number::ratio(6, 3).str() == "2");
    CHECK(Number(2.69).str() == "2.69");
    CHECK(Number(1.0 / 3).str() == "0.333333333");
}

TEST_CASE("approx_equal is exact for exact operands") {
    CHECK(mbi::approx_equal(Number(0.1 + 0.2), Number(0.3), 1e-9));
    CHECK_FALSE(mbi::approx_equal(Number::ratio(1, 3), Number::ratio(333333333, 1000000000), 1e-9));
}

#include "mbi/algebra.hpp"
#include "mbi/generators.hpp"

#include <doctest.h>

using namespace mbi;

TEST_CASE("numeric algebras") {
    auto add = ValueAlgebra::numeric(Carrier::Integer, "add");
    CHECK(add.combine(2, 3) == Number(5));
    CHECK(add.le(2, 3));
    CHECK(add.eq_tolerance == 0);
    auto mul = ValueAlgebra::numeric(Carrier::Rational, "mul", Number(1));
    CHECK(mul.combine(Number::ratio(1, 2), 4) == Number(2));
    auto fl = ValueAlgebra::numeric(Carrier::Float, "add", Number(0.0));
    CHECK(fl.eq_tolerance == doctest::Approx(1e-9));
    CHECK(fl.equal(Number(0.1 + 0.2), Number(0.3)));
    CHECK_THROWS(ValueAlgebra::numeric(Carrier::Integer, "max"));
}

TEST_CASE("coerce respects the carrier") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    CHECK_THROWS_AS(ints.coerce(Number::ratio(1, 2)), NumberError);
    auto floats = ValueAlgebra::numeric(Carrier::Float, "add", Number(0.0));
    CHECK(floats.coerce(Number(3)).rep() == Number::Rep::Float);
}

TEST_CASE("total preorder and plusMonSpec on numeric carriers") {
    auto samples = int_grid(0, 3);
    for (auto plus : {"add", "mul"}) {
        auto alg = ValueAlgebra::numeric(Carrier::Integer, plus);
        CHECK(check_total_preorder(alg, samples).passed());
        CHECK(check_plus_mon(alg, samples).passed());
    }
}

TEST_CASE("mul is not monotone on negative values") {
    auto alg = ValueAlgebra::numeric(Carrier::Integer, "mul");
    auto samples = int_grid(-2, 1);
    auto r = check_plus_mon(alg, samples);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.laws.front().counterexample.empty());
}

TEST_CASE("a non-total relation is reported") {
    auto alg = ValueAlgebra::numeric(Carrier::Integer);
    alg.leq = [](const Number& a, const Number& b) { return a == b; };
    auto r = check_total_preorder(alg, int_grid(0, 2));
    CHECK(r.find("reflexivity")->passed());
    CHECK(r.find("totality")->failed());
}

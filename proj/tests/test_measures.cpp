#include "mbi/measures.hpp"

#include <doctest.h>

#include <set>

using namespace mbi;

namespace {

MStruct<Number> nd(std::vector<Number> v) { return MStruct<Number>::nondet(std::move(v)); }

ConditionConfig grid_0_3() {
    ConditionConfig c;
    c.values = int_grid(0, 3);
    return c;
}

std::set<std::string> failing(const LawReport& r) {
    auto f = r.failed_laws();
    return {f.begin(), f.end()};
}

}  // namespace

TEST_CASE("catalog values") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto rats = ValueAlgebra::numeric(Carrier::Rational);
    CHECK(make_measure("min", ints)(nd({})) == Number(0));
    CHECK(make_measure("min", ints)(nd({7, 5, 5, 3, 1})) == Number(1));
    CHECK(make_measure("max", ints)(nd({7, 5, 5, 3, 1})) == Number(7));
    CHECK(make_measure("sum", ints)(nd({7, 5, 5, 3, 1})) == Number(21));
    CHECK(make_measure("length", ints)(nd({7, 5, 5, 3, 1})) == Number(5));
    CHECK(make_measure("max_var", ints)(nd({2, 0})) == Number(3));
    CHECK(make_measure("avg", rats)(nd({1, 2})) == Number::ratio(3, 2));
    CHECK(make_measure("avg", rats)(nd({})) == Number(0));
    auto e = make_measure("expected", rats);
    CHECK(e(MStruct<Number>::stoch({{1, Number::ratio(1, 4)}, {3, Number::ratio(3, 4)}})) == Number::ratio(5, 2));
    CHECK(make_measure("identity", ints)(MStruct<Number>::identity(4)) == Number(4));
}

TEST_CASE("catalog rejects unsupported combinations") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    CHECK_THROWS_AS(make_measure("avg", ints), MeasureError);
    CHECK_THROWS_AS(make_measure("expected", ints), MeasureError);
    CHECK_THROWS_AS(make_measure("median", ints), MeasureError);
    CHECK_THROWS_AS(make_measure("min", ints)(MStruct<Number>::identity(1)), StructureError);
}

TEST_CASE("condition matrix on NonDet structures up to size 3 over 0..3") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto rats = ValueAlgebra::numeric(Carrier::Rational);
    struct Row {
        const char* name;
        const ValueAlgebra* alg;
        std::set<std::string> expected_fail;
    };
    const std::vector<Row> rows = {
        {"min", &ints, {}},
        {"max", &ints, {}},
        {"sum", &ints, {"measPlusSpec"}},
        {"avg", &rats, {"measJoinSpec"}},
        {"max_var", &ints, {"measPureSpec", "measJoinSpec"}},
        {"length", &ints, {"measPureSpec", "measJoinSpec", "measPlusSpec"}},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        auto meas = make_measure(row.name, *row.alg);
        auto r = check_conditions(meas, *row.alg, grid_0_3());
        CHECK(failing(r) == row.expected_fail);
        for (const auto& law : r.laws) {
            CHECK(law.exhaustive);
            CHECK(law.failed() == !law.counterexample.empty());
            auto doc = meas.documented_status.at(law.name);
            CHECK(doc == (law.failed() ? Expectation::Fail : Expectation::Pass));
        }
    }
}

TEST_CASE("max_var fails measJoinSpec on a pure-of-pure nest") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto m = make_measure("max_var", ints);
    auto nested = MStruct<MStruct<Number>>::nondet({nd({0})});
    CHECK(m(join(nested)) == Number(1));
    CHECK(m(map([&](const MStruct<Number>& s) { return m(s); }, nested)) == Number(2));
}

TEST_CASE("avg counter-example is concrete") {
    auto rats = ValueAlgebra::numeric(Carrier::Rational);
    auto m = make_measure("avg", rats);
    auto nested = MStruct<MStruct<Number>>::nondet({nd({1}), nd({2, 3})});
    CHECK(m(join(nested)) == Number(2));
    CHECK(m(map([&](const MStruct<Number>& s) { return m(s); }, nested)) == Number::ratio(7, 4));
}

TEST_CASE("min fails measJoinSpec once empty inner structures are allowed") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto m = make_measure("min", ints);
    auto inner = value_structures(Kind::NonDet, int_grid(0, 3), 2, true);
    auto r = check_meas_join(m, ints, nest(inner, 2, true), 1'000'000, 0);
    CHECK(r.laws.front().failed());
}

TEST_CASE("measPlusSpec NotEmpty form refuses generators with empty structures") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto values = int_grid(0, 3);
    auto with_empty = value_structures(Kind::NonDet, values, 2, true);
    CHECK_THROWS_AS(check_meas_plus(make_measure("max", ints), ints, values, with_empty, 1000, 0), std::invalid_argument);
    auto r = check_meas_plus(make_measure("max", ints), ints, values, with_empty, 1'000'000, 0, PlusVariant::Unrestricted);
    CHECK(r.laws.front().failed());  // max [] = 0 but v + 0 != 0
}

TEST_CASE("expected value on Stoch with dyadic weights passes all four") {
    auto rats = ValueAlgebra::numeric(Carrier::Rational);
    ConditionConfig c;
    c.values = int_grid(0, 2);
    c.max_size = 2;
    auto r = check_conditions(make_measure("expected", rats), rats, c);
    CHECK(r.passed());
    CHECK(r.laws.size() == 4);
}

TEST_CASE("identity measure passes all four") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    auto r = check_conditions(make_measure("identity", ints), ints, grid_0_3());
    CHECK(r.passed());
}

TEST_CASE("monoid fold preconditions") {
    auto values = int_grid(0, 3);
    auto add = ValueAlgebra::numeric(Carrier::Integer, "add");
    auto mul = ValueAlgebra::numeric(Carrier::Integer, "mul");

    auto max0 = MonoidSpec::named("max", 0);
    CHECK(check_monoid_preconditions(max0, add, values, 1'000'000, 0).passed());
    CHECK(check_conditions(monoid_fold_measure(max0), add, grid_0_3()).passed());

    auto plus0 = MonoidSpec::named("add", 0);
    auto pre = check_monoid_preconditions(plus0, add, values, 1'000'000, 0);
    CHECK(failing(pre) == std::set<std::string>{"oplusOdotDistrLeft"});
    CHECK(check_conditions(monoid_fold_measure(plus0), add, grid_0_3()).failed_laws() ==
          std::vector<std::string>{"measPlusSpec"});

    CHECK(check_monoid_preconditions(plus0, mul, values, 1'000'000, 0).passed());
    CHECK(check_conditions(monoid_fold_measure(plus0), mul, grid_0_3()).passed());
}

TEST_CASE("sampling is deterministic per seed") {
    auto ints = ValueAlgebra::numeric(Carrier::Integer);
    ConditionConfig c = grid_0_3();
    c.budget = 500;
    c.seed = 42;
    auto a = check_conditions(make_measure("sum", ints), ints, c);
    auto b = check_conditions(make_measure("sum", ints), ints, c);
    for (std::size_t i = 0; i < a.laws.size(); ++i) {
        CHECK(a.laws[i].cases == b.laws[i].cases);
        CHECK(a.laws[i].counterexample == b.laws[i].counterexample);
    }
    CHECK_FALSE(a.find("measJoinSpec")->exhaustive);
}

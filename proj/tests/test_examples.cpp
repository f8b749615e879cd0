#include "mbi/examples.hpp"
#include "mbi/solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mbi;

TEST_CASE("feasible orders match brute force") {
    CHECK(examples::feasible_orders() == oracle::scheduling_orders());
}

TEST_CASE("committed cost table has CABD as strict optimum") {
    std::map<std::string, int> totals;
    for (const auto& o : examples::feasible_orders()) totals[o] = examples::scheduling_order_cost(o);
    CHECK(totals == std::map<std::string, int>{
                        {"ABCD", 16}, {"ACBD", 13}, {"ACDB", 17}, {"CABD", 10}, {"CADB", 14}, {"CDAB", 14}});
    for (const auto& [o, c] : totals) {
        if (o != "CABD") CHECK(c > totals.at("CABD"));
    }
}

TEST_CASE("scheduling: backward induction finds CABD") {
    Problem p(examples::scheduling_spec());
    auto ps = bi(p, 0, 3);
    CHECK(examples::scheduling_order(p, ps) == "CABD");
    CHECK(val(p, ps, "") == Number(-10));
    CHECK(check_optimality(p, ps, ValueFn::Val).passed);
    // Every policy sequence realises one feasible order, valued at minus its cost.
    for (const auto& other : enumerate_policy_seqs(p, 0, 3)) {
        auto order = examples::scheduling_order(p, other);
        CHECK(val(p, other, "") == Number(-examples::scheduling_order_cost(order)));
    }
}

TEST_CASE("stochastic climate weights") {
    auto spec = examples::stochastic_climate_spec();
    const auto& gh = spec.steps[0].next.at("Good").at("High");
    REQUIRE(gh.size() == 2);
    CHECK(gh.outcomes()[0].value == "Good");
    CHECK(gh.outcomes()[0].weight == Number::ratio(4, 5));
    CHECK(spec.steps[0].next.at("Good").at("Low").size() == 1);
}

TEST_CASE("climate rejects measures of another kind") {
    CHECK_THROWS_AS(examples::climate_spec("identity"), MeasureError);
    CHECK_THROWS_AS(examples::climate_spec("avg"), MeasureError);
}

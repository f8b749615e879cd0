#include "mbi/examples.hpp"
#include "mbi/solver.hpp"
#include "mbi/trajectories.hpp"

#include <doctest.h>

using namespace mbi;

TEST_CASE("trajectories under High, Low, High from Good") {
    Problem p(examples::climate_spec("sum"));
    std::vector<ControlId> cs = {"High", "Low", "High"};
    auto ps = constant_policy_seq(p, 0, cs);
    auto m = trj(p, ps, "Good");
    REQUIRE(m.size() == 5);
    std::vector<Number> sums;
    for (const auto& o : m.outcomes()) sums.push_back(sum_r(p, o.value));
    CHECK(sums == std::vector<Number>{7, 5, 5, 3, 1});
    CHECK(describe(m.outcomes()[0].value) == "Good/High -> Good/Low -> Good/High -> Good");
    CHECK(describe(m.outcomes()[4].value) == "Good/High -> Bad/Low -> Bad/High -> Bad");
}

TEST_CASE("empty policy sequence gives the trivial trajectory") {
    Problem p(examples::climate_spec("min"));
    auto m = trj(p, PolicySeq{2, {}}, "Bad");
    REQUIRE(m.size() == 1);
    CHECK(describe(m.outcomes()[0].value) == "Last Bad");
    CHECK(sum_r(p, m.outcomes()[0].value) == Number(0));
    CHECK(val_prime(p, PolicySeq{2, {}}, "Bad") == Number(0));
}

TEST_CASE("stochastic trajectories carry weights") {
    Problem p(examples::stochastic_climate_spec());
    std::vector<ControlId> high = {"High"};
    auto m = trj(p, constant_policy_seq(p, 0, high), "Good");
    REQUIRE(m.size() == 2);
    CHECK(m.outcomes()[0].weight == Number::ratio(4, 5));
    CHECK(m.outcomes()[1].weight == Number::ratio(1, 5));
    CHECK(m.total_weight() == Number(1));
}

TEST_CASE("val equivalence counts") {
    Problem p(examples::climate_spec("min"));
    auto r = check_val_equivalence(p, 0, 3);
    CHECK(r.passed);
    CHECK(r.sequences == 85);
    CHECK(r.cases == 170);
    auto sum = check_val_equivalence(Problem(examples::climate_spec("sum")), 0, 3);
    CHECK_FALSE(sum.passed);
    CHECK(sum.witness.has_value());
}

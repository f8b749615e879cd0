#include "mbi/examples.hpp"
#include "mbi/solver.hpp"
#include "mbi/trajectories.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace mbi;

namespace {

oracle::Meas oracle_measure(const std::string& name) {
    if (name == "min") return oracle::meas_min;
    if (name == "max") return oracle::meas_max;
    if (name == "sum") return oracle::meas_sum;
    if (name == "max_var") return oracle::meas_max_var;
    return oracle::meas_length;
}

oracle::Seq to_oracle(const PolicySeq& ps) {
    oracle::Seq s;
    for (const auto& p : ps.policies) {
        s.push_back({p("Good") == "Low" ? 0 : 1, p("Bad") == "Low" ? 0 : 1});
    }
    return s;
}

PolicySeq hlh(const Problem& p) {
    std::vector<ControlId> cs = {"High", "Low", "High"};
    return constant_policy_seq(p, 0, cs);
}

}  // namespace

TEST_CASE("val and val' agree with the reference implementation on every sequence") {
    for (const std::string m : {"min", "max", "sum", "max_var", "length"}) {
        CAPTURE(m);
        Problem p(examples::climate_spec(m));
        auto om = oracle_measure(m);
        for (std::size_t n = 0; n <= 3; ++n) {
            for (const auto& ps : enumerate_policy_seqs(p, 0, n)) {
                auto s = to_oracle(ps);
                for (int x = 0; x < 2; ++x) {
                    CHECK(val(p, ps, oracle::state_name(x)) == Number(oracle::val(s, 0, x, om)));
                    CHECK(val_prime(p, ps, oracle::state_name(x)) == Number(oracle::val_prime(s, x, om)));
                }
            }
        }
    }
}

TEST_CASE("sum measure: val 13, val' 21") {
    Problem p(examples::climate_spec("sum"));
    auto ps = hlh(p);
    CHECK(val(p, ps, "Good") == Number(13));
    CHECK(val_prime(p, ps, "Good") == Number(21));
}

TEST_CASE("cval and opt_ext") {
    Problem p(examples::climate_spec("min"));
    std::vector<ControlId> low = {"Low"};
    auto tail = constant_policy_seq(p, 2, low);
    CHECK(cval(p, tail, "Good", "Low") == Number(6));
    CHECK(cval(p, tail, "Good", "High") == Number(1));
    CHECK(cval(p, tail, "Bad", "Low") == Number(2));
    CHECK(cval(p, tail, "Bad", "High") == Number(1));
    auto pol = opt_ext(p, tail);
    CHECK(pol.step == 1);
    CHECK(pol("Good") == "Low");
    CHECK(pol("Bad") == "Low");
    CHECK_THROWS_AS(opt_ext(p, PolicySeq{0, {}}), LookupError);
    CHECK_THROWS_AS(cval(p, tail, "Good", "Medium"), LookupError);
}

TEST_CASE("ties keep the first declared control") {
    auto spec = examples::climate_spec("min", 1);
    for (auto& [x, by_y] : spec.steps[0].reward) {
        for (auto& [y, by_next] : by_y) {
            for (auto& [x2, r] : by_next) r = Number(1);
        }
    }
    Problem p(spec);
    auto ps = bi(p, 0, 1);
    CHECK(ps.policies[0]("Good") == "Low");
    CHECK(ps.policies[0]("Bad") == "Low");
}

TEST_CASE("backward induction with min: Low everywhere") {
    Problem p(examples::climate_spec("min"));
    auto ps = bi(p, 0, 3);
    REQUIRE(ps.size() == 3);
    for (const auto& pol : ps.policies) {
        CHECK(pol("Good") == "Low");
        CHECK(pol("Bad") == "Low");
    }
    CHECK(val(p, ps, "Good") == Number(9));
    CHECK(val(p, ps, "Bad") == Number(3));
    CHECK(val(p, ps.tail(), "Good") == Number(6));
    CHECK(val(p, ps.tail(), "Bad") == Number(2));
    CHECK(val(p, ps.tail().tail(), "Good") == Number(3));
    CHECK(val(p, ps.tail().tail(), "Bad") == Number(1));
}

TEST_CASE("memoized and naive backward induction coincide") {
    for (const std::string m : {"min", "max", "sum", "max_var", "length"}) {
        Problem p(examples::climate_spec(m));
        for (std::size_t t = 0; t <= 3; ++t) {
            for (std::size_t n = 0; t + n <= 3; ++n) CHECK(bi(p, t, n) == bi(p, t, n, BiMode::Naive));
        }
    }
    Problem s(examples::stochastic_climate_spec());
    CHECK(bi(s, 0, 3) == bi(s, 0, 3, BiMode::Naive));
}

TEST_CASE("bi attains the brute-force optimum in every state") {
    for (const std::string m : {"min", "max", "sum", "max_var", "length"}) {
        CAPTURE(m);
        Problem p(examples::climate_spec(m));
        for (std::size_t n = 0; n <= 3; ++n) {
            auto best = oracle::best_values(n, oracle_measure(m));
            auto ps = bi(p, 0, n);
            for (int x = 0; x < 2; ++x) CHECK(val(p, ps, oracle::state_name(x)) == Number(best[x]));
        }
    }
}

TEST_CASE("enumeration order and counts") {
    Problem p(examples::climate_spec("min"));
    CHECK(count_policy_seqs(p, 0, 3) == 64);
    CHECK(count_policy_seqs(p, 0, 0) == 1);
    auto all = enumerate_policy_seqs(p, 0, 2);
    REQUIRE(all.size() == 16);
    CHECK(describe(p, all.front()) == "t0{Good:Low, Bad:Low} t1{Good:Low, Bad:Low}");
    CHECK(describe(p, all[1]) == "t0{Good:Low, Bad:Low} t1{Good:Low, Bad:High}");
    CHECK(describe(p, all.back()) == "t0{Good:High, Bad:High} t1{Good:High, Bad:High}");
    CHECK_THROWS_AS(enumerate_policy_seqs(p, 0, 3, 10), CapExceeded);
}

TEST_CASE("optimality oracle") {
    for (const std::string m : {"min", "max"}) {
        Problem p(examples::climate_spec(m));
        auto ps = bi(p, 0, 3);
        auto rv = check_optimality(p, ps, ValueFn::Val);
        auto rp = check_optimality(p, ps, ValueFn::ValPrime);
        CHECK(rv.passed);
        CHECK(rp.passed);
        CHECK(rv.sequences == 64);
        CHECK(rv.cases == 128);
    }
    Problem p(examples::climate_spec("min"));
    std::vector<ControlId> high = {"High", "High", "High"};
    auto r = check_optimality(p, constant_policy_seq(p, 0, high), ValueFn::Val);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness);
    CHECK(r.witness->state == "Good");
    CHECK(r.witness->candidate == Number(9));
}

TEST_CASE("sum measure: bi is val-optimal but not val'-optimal") {
    Problem p(examples::climate_spec("sum"));
    auto ps = bi(p, 0, 3);
    CHECK(check_optimality(p, ps, ValueFn::Val).passed);
    auto r = check_optimality(p, ps, ValueFn::ValPrime);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness);
    CHECK(r.witness->reference < r.witness->candidate);
}

TEST_CASE("Bellman instances") {
    for (const std::string m : {"min", "max", "sum"}) {
        Problem p(examples::climate_spec(m));
        for (std::size_t t : {0, 1}) {
            for (std::size_t n = 0; n <= 2; ++n) {
                CAPTURE(m);
                CAPTURE(t);
                CAPTURE(n);
                CHECK(check_bellman(p, t, n).passed);
            }
        }
    }
}

TEST_CASE("stochastic climate") {
    Problem p(examples::stochastic_climate_spec());
    auto ps = bi(p, 0, 3);
    for (const auto& x : p.states(0)) CHECK(val(p, ps, x) == val_prime(p, ps, x));
    CHECK(check_optimality(p, ps, ValueFn::Val).passed);
    CHECK(check_optimality(p, ps, ValueFn::ValPrime).passed);
    CHECK(check_bellman(p, 0, 2).passed);
    CHECK(check_val_equivalence(p, 0, 3).passed);
}

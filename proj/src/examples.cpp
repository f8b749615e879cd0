#include "mbi/examples.hpp"

#include "mbi/trajectories.hpp"

#include <algorithm>

namespace mbi::examples {

namespace {

const std::vector<StateId> kClimateStates = {"Good", "Bad"};
const std::vector<ControlId> kClimateControls = {"Low", "High"};

int climate_reward(const ControlId& y, const StateId& x_next) {
    if (y == "Low") return x_next == "Good" ? 3 : 1;
    return x_next == "Good" ? 2 : 0;
}

template <class MakeNext>
SdpSpec climate_like(std::string name, Kind kind, ValueAlgebra alg, Measure measure, std::size_t horizon,
                     MakeNext make_next) {
    SdpSpec spec;
    spec.name = std::move(name);
    spec.kind = kind;
    spec.alg = std::move(alg);
    spec.measure = std::move(measure);
    spec.start_step = 0;
    spec.horizon_max = horizon;
    for (std::size_t t = 0; t <= horizon; ++t) {
        StepTable st;
        st.states = kClimateStates;
        if (t < horizon) {
            for (const auto& x : kClimateStates) {
                st.controls.emplace(x, kClimateControls);
                for (const auto& y : kClimateControls) {
                    st.next[x].emplace(y, make_next(x, y));
                    for (const auto& x_next : kClimateStates) {
                        st.reward[x][y][x_next] = spec.alg.coerce(Number(climate_reward(y, x_next)));
                    }
                }
            }
        }
        spec.steps.push_back(std::move(st));
    }
    return spec;
}

const std::string kOperations = "ABCD";

bool admissible_prefix(std::string_view prefix) {
    auto pos = [&](char c) { return prefix.find(c); };
    if (pos('B') != std::string_view::npos && (pos('A') == std::string_view::npos || pos('A') > pos('B'))) return false;
    if (pos('D') != std::string_view::npos && (pos('C') == std::string_view::npos || pos('C') > pos('D'))) return false;
    std::string sorted(prefix);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

char missing_operation(std::string_view prefix) {
    for (char c : kOperations) {
        if (prefix.find(c) == std::string_view::npos) return c;
    }
    return '?';
}

int setup_cost(std::string_view prefix, char op) {
    const std::string prev = prefix.empty() ? std::string() : std::string(1, prefix.back());
    return scheduling_costs().at(prev).at(op);
}

}  // namespace

SdpSpec climate_spec(std::string_view measure_name, std::size_t horizon) {
    auto alg = ValueAlgebra::numeric(Carrier::Integer, "add", Number(0));
    Measure measure = make_measure(measure_name, alg);
    if (measure.kind != Kind::NonDet) {
        throw MeasureError("climate problem needs a nondet measure, \"" + std::string(measure_name) + "\" is " +
                           std::string(to_string(measure.kind)));
    }
    return climate_like("climate", Kind::NonDet, alg, std::move(measure), horizon,
                        [](const StateId& x, const ControlId& y) {
                            if (x == "Good" && y == "Low") return MStruct<StateId>::nondet({"Good"});
                            if (x == "Bad" && y == "High") return MStruct<StateId>::nondet({"Bad"});
                            return MStruct<StateId>::nondet({"Good", "Bad"});
                        });
}

SdpSpec stochastic_climate_spec(std::size_t horizon) {
    auto alg = ValueAlgebra::numeric(Carrier::Rational, "add", Number(0));
    const Number stay = Number::ratio(4, 5);
    const Number leave = Number::ratio(1, 5);
    return climate_like("stochastic_climate", Kind::Stoch, alg, make_measure("expected", alg), horizon,
                        [&](const StateId& x, const ControlId& y) {
                            if (x == "Good" && y == "Low") return MStruct<StateId>::stoch({{"Good", Number(1)}});
                            if (x == "Bad" && y == "High") return MStruct<StateId>::stoch({{"Bad", Number(1)}});
                            if (x == "Good") return MStruct<StateId>::stoch({{"Good", stay}, {"Bad", leave}});
                            return MStruct<StateId>::stoch({{"Good", leave}, {"Bad", stay}});
                        });
}

const std::map<std::string, std::map<char, int>>& scheduling_costs() {
    static const std::map<std::string, std::map<char, int>> costs = {
        {"", {{'A', 5}, {'C', 3}}},
        {"A", {{'B', 2}, {'C', 3}, {'D', 4}}},
        {"B", {{'C', 3}, {'D', 1}}},
        {"C", {{'A', 4}, {'B', 4}, {'D', 6}}},
        {"D", {{'A', 3}, {'B', 3}}},
    };
    return costs;
}

int scheduling_order_cost(std::string_view order) {
    int total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) total += setup_cost(order.substr(0, i), order[i]);
    return total;
}

std::vector<std::string> feasible_orders() {
    std::vector<std::string> out;
    std::string perm = kOperations;
    do {
        if (admissible_prefix(perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SdpSpec scheduling_spec() {
    auto alg = ValueAlgebra::numeric(Carrier::Integer, "add", Number(0));
    SdpSpec spec;
    spec.name = "scheduling";
    spec.kind = Kind::Identity;
    spec.alg = alg;
    spec.measure = make_measure("identity", alg);
    spec.start_step = 0;
    spec.horizon_max = 3;
    spec.states_encode_actions = true;

    std::vector<std::vector<StateId>> layers = {{""}};
    for (std::size_t t = 0; t < 3; ++t) {
        std::vector<StateId> next_layer;
        for (const auto& s : layers[t]) {
            for (char op : kOperations) {
                StateId longer = s + op;
                if (admissible_prefix(longer)) next_layer.push_back(longer);
            }
        }
        layers.push_back(std::move(next_layer));
    }

    for (std::size_t t = 0; t <= 3; ++t) {
        StepTable st;
        st.states = layers[t];
        if (t < 3) {
            for (const auto& s : layers[t]) {
                std::vector<ControlId> ys;
                for (char op : kOperations) {
                    StateId longer = s + op;
                    if (!admissible_prefix(longer)) continue;
                    ControlId y(1, op);
                    ys.push_back(y);
                    st.next[s].emplace(y, MStruct<StateId>::identity(longer));
                    int cost = setup_cost(s, op);
                    if (t == 2) cost += setup_cost(longer, missing_operation(longer));
                    st.reward[s][y][longer] = Number(-cost);
                }
                st.controls.emplace(s, std::move(ys));
            }
        }
        spec.steps.push_back(std::move(st));
    }
    return spec;
}

std::string scheduling_order(const Problem& problem, const PolicySeq& ps) {
    auto trajectories = trj(problem, ps, "");
    const StateId& last = trajectories.outcomes()[0].value.final_state;
    return last + missing_operation(last);
}

}  // namespace mbi::examples

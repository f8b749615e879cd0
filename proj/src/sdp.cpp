#include "mbi/sdp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mbi {

bool equivalent(const SdpSpec& a, const SdpSpec& b) {
    return a.name == b.name && a.kind == b.kind && a.alg.same_structure(b.alg) &&
           a.measure.same_definition(b.measure) && a.start_step == b.start_step &&
           a.horizon_max == b.horizon_max && a.states_encode_actions == b.states_encode_actions &&
           a.steps == b.steps;
}

std::string Violation::where() const {
    std::string out = "(t=" + std::to_string(step);
    if (!state.empty() || !control.empty()) out += ", x=" + state;
    if (!control.empty()) out += ", y=" + control;
    if (!next_state.empty()) out += ", x'=" + next_state;
    return out + ")";
}

bool ValidationReport::has(std::string_view rule) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.rule << " at " << v.where() << ": " << v.message << "\n";
    return os.str();
}

namespace {

class Validator {
public:
    explicit Validator(const SdpSpec& spec) : spec_(spec) {}

    ValidationReport run() {
        if (spec_.steps.size() != spec_.horizon_max + 1) {
            add("stepCount", spec_.start_step, {}, {}, {},
                "expected " + std::to_string(spec_.horizon_max + 1) + " step tables, found " +
                    std::to_string(spec_.steps.size()));
            return std::move(report_);
        }
        if (spec_.measure.kind != spec_.kind) {
            add("measureKind", spec_.start_step, {}, {}, {},
                "measure " + spec_.measure.label() + " accepts " + std::string(to_string(spec_.measure.kind)) +
                    " structures but the problem is " + std::string(to_string(spec_.kind)));
        }
        collect_actions();
        for (std::size_t i = 0; i < spec_.steps.size(); ++i) check_step(i);
        return std::move(report_);
    }

private:
    void add(std::string rule, std::size_t t, StateId x, ControlId y, StateId x2, std::string message) {
        report_.violations.push_back(
            {std::move(rule), t, std::move(x), std::move(y), std::move(x2), std::move(message)});
    }

    void collect_actions() {
        for (const auto& st : spec_.steps) {
            for (const auto& [x, ys] : st.controls) actions_.insert(ys.begin(), ys.end());
        }
    }

    void check_step(std::size_t i) {
        const StepTable& st = spec_.steps[i];
        const std::size_t t = spec_.start_step + i;
        const bool terminal = i + 1 == spec_.steps.size();

        std::set<StateId> seen;
        for (const auto& x : st.states) {
            if (!seen.insert(x).second) add("duplicateState", t, x, {}, {}, "state declared twice");
        }

        if (terminal) {
            if (!st.controls.empty() || !st.next.empty() || !st.reward.empty()) {
                add("terminalStep", t, {}, {}, {}, "the terminal step declares states only");
            }
            return;
        }

        const StepTable& nst = spec_.steps[i + 1];
        std::set<StateId> next_states(nst.states.begin(), nst.states.end());

        for (const auto& [x, ys] : st.controls) {
            if (!seen.count(x)) add("unknownState", t, x, {}, {}, "controls declared for an undeclared state");
        }
        for (const auto& [x, by_y] : st.next) {
            if (!seen.count(x)) add("unknownState", t, x, {}, {}, "transitions declared for an undeclared state");
        }
        for (const auto& [x, by_y] : st.reward) {
            if (!seen.count(x)) add("unknownState", t, x, {}, {}, "rewards declared for an undeclared state");
        }

        for (const auto& x : st.states) {
            auto cit = st.controls.find(x);
            if (cit == st.controls.end() || cit->second.empty()) {
                add("notEmptyY", t, x, {}, {}, "no controls available");
                continue;
            }
            const auto& ys = cit->second;
            std::set<ControlId> yset;
            for (const auto& y : ys) {
                if (!yset.insert(y).second) add("duplicateControl", t, x, y, {}, "control declared twice");
            }

            auto nx = st.next.find(x);
            if (nx != st.next.end()) {
                for (const auto& [y, m] : nx->second) {
                    if (!yset.count(y)) add("unknownControl", t, x, y, {}, "transition for an undeclared control");
                }
            }
            auto rx = st.reward.find(x);
            if (rx != st.reward.end()) {
                for (const auto& [y, m] : rx->second) {
                    if (!yset.count(y)) add("unknownControl", t, x, y, {}, "reward for an undeclared control");
                }
            }

            for (const auto& y : ys) check_transition(t, st, x, y, next_states);
        }

        if (spec_.states_encode_actions) check_admissibility(t, st, nst);
    }

    void check_transition(std::size_t t, const StepTable& st, const StateId& x, const ControlId& y,
                          const std::set<StateId>& next_states) {
        const MStruct<StateId>* mx = nullptr;
        if (auto nx = st.next.find(x); nx != st.next.end()) {
            if (auto ny = nx->second.find(y); ny != nx->second.end()) mx = &ny->second;
        }
        if (!mx) {
            add("missingNext", t, x, y, {}, "no transition declared");
            return;
        }
        if (mx->kind() != spec_.kind) {
            add("kindMismatch", t, x, y, {},
                "transition is " + std::string(to_string(mx->kind())) + ", problem is " +
                    std::string(to_string(spec_.kind)));
        }
        if (mx->empty()) {
            add("nextNotEmpty", t, x, y, {}, "transition has no outcomes");
            return;
        }
        if (auto problem = mx->weight_problem(spec_.alg.eq_tolerance > 0 ? spec_.alg.eq_tolerance : 1e-9)) {
            add("weightSum", t, x, y, {}, *problem);
        }

        const std::map<StateId, Number>* rewards = nullptr;
        if (auto rx = st.reward.find(x); rx != st.reward.end()) {
            if (auto ry = rx->second.find(y); ry != rx->second.end()) rewards = &ry->second;
        }
        for (const auto& o : mx->outcomes()) {
            if (!next_states.count(o.value)) {
                add("nextOutcome", t, x, y, o.value,
                    "outcome " + o.value + " is not a state of step " + std::to_string(t + 1));
            }
            if (!rewards || !rewards->count(o.value)) {
                add("missingReward", t, x, y, o.value, "no reward for a reachable transition");
            }
        }
    }

    void check_admissibility(std::size_t t, const StepTable& st, const StepTable& nst) {
        std::set<StateId> next_states(nst.states.begin(), nst.states.end());
        for (const auto& x : st.states) {
            auto cit = st.controls.find(x);
            std::set<ControlId> offered;
            if (cit != st.controls.end()) offered.insert(cit->second.begin(), cit->second.end());
            for (const auto& y : offered) {
                if (!next_states.count(x + y)) {
                    add("admissibility", t, x, y, x + y, "control offered but " + x + y + " is not admissible");
                }
            }
            for (const auto& s : nst.states) {
                if (s.size() <= x.size() || s.compare(0, x.size(), x) != 0) continue;
                ControlId y = s.substr(x.size());
                if (actions_.count(y) && !offered.count(y)) {
                    add("admissibility", t, x, y, s, s + " is admissible but " + y + " is not offered");
                }
            }
        }
    }

    const SdpSpec& spec_;
    ValidationReport report_;
    std::set<ControlId> actions_;
};

}  // namespace

ValidationReport validate_spec(const SdpSpec& spec) { return Validator(spec).run(); }

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid problem:\n" + report.summary()), report_(std::move(report)) {}

Problem::Problem(SdpSpec spec) : spec_(std::move(spec)) {
    auto report = validate_spec(spec_);
    if (!report.valid()) throw ValidationError(std::move(report));
}

const StepTable& Problem::step(std::size_t t) const {
    if (t < spec_.start_step || t > spec_.end_step()) {
        throw LookupError("step " + std::to_string(t) + " outside [" + std::to_string(spec_.start_step) + ", " +
                          std::to_string(spec_.end_step()) + "]");
    }
    return spec_.steps[t - spec_.start_step];
}

const std::vector<StateId>& Problem::states(std::size_t t) const { return step(t).states; }

bool Problem::has_state(std::size_t t, const StateId& x) const {
    if (t < spec_.start_step || t > spec_.end_step()) return false;
    const auto& xs = step(t).states;
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

const std::vector<ControlId>& Problem::controls(std::size_t t, const StateId& x) const {
    const auto& st = step(t);
    auto it = st.controls.find(x);
    if (it == st.controls.end()) throw LookupError("no state " + x + " with controls at step " + std::to_string(t));
    return it->second;
}

bool Problem::has_control(std::size_t t, const StateId& x, const ControlId& y) const {
    if (t < spec_.start_step || t >= spec_.end_step()) return false;
    const auto& st = step(t);
    auto it = st.controls.find(x);
    return it != st.controls.end() && std::find(it->second.begin(), it->second.end(), y) != it->second.end();
}

const MStruct<StateId>& Problem::next(std::size_t t, const StateId& x, const ControlId& y) const {
    const auto& st = step(t);
    auto nx = st.next.find(x);
    if (nx != st.next.end()) {
        if (auto ny = nx->second.find(y); ny != nx->second.end()) return ny->second;
    }
    throw LookupError("no transition for (t=" + std::to_string(t) + ", x=" + x + ", y=" + y + ")");
}

const Number& Problem::reward(std::size_t t, const StateId& x, const ControlId& y, const StateId& x_next) const {
    const auto& st = step(t);
    if (auto rx = st.reward.find(x); rx != st.reward.end()) {
        if (auto ry = rx->second.find(y); ry != rx->second.end()) {
            if (auto rz = ry->second.find(x_next); rz != ry->second.end()) return rz->second;
        }
    }
    throw LookupError("no reward for (t=" + std::to_string(t) + ", x=" + x + ", y=" + y + ", x'=" + x_next + ")");
}

bool Problem::solvable(std::size_t t, std::size_t n) const {
    return spec_.start_step <= t && t + n <= spec_.end_step();
}

void Problem::require_solvable(std::size_t t, std::size_t n) const {
    if (!solvable(t, n)) {
        throw LookupError("horizon (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ") outside steps [" +
                          std::to_string(spec_.start_step) + ", " + std::to_string(spec_.end_step()) + "]");
    }
}

}  // namespace mbi

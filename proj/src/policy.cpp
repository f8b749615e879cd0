#include "mbi/policy.hpp"

namespace mbi {

const ControlId& Policy::operator()(const StateId& x) const {
    auto it = choice.find(x);
    if (it == choice.end()) throw LookupError("policy for step " + std::to_string(step) + " has no choice for " + x);
    return it->second;
}

PolicySeq PolicySeq::tail() const {
    PolicySeq out;
    out.start_step = start_step + 1;
    out.policies.assign(policies.begin() + 1, policies.end());
    return out;
}

PolicySeq PolicySeq::prepend(Policy p) const {
    if (start_step == 0 || p.step + 1 != start_step) {
        throw LookupError("cannot prepend a policy for step " + std::to_string(p.step) + " to a sequence starting at " +
                          std::to_string(start_step));
    }
    PolicySeq out;
    out.start_step = p.step;
    out.policies.reserve(policies.size() + 1);
    out.policies.push_back(std::move(p));
    out.policies.insert(out.policies.end(), policies.begin(), policies.end());
    return out;
}

void check_policy_seq(const Problem& problem, const PolicySeq& ps) {
    problem.require_solvable(ps.start_step, ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Policy& p = ps.policies[i];
        const std::size_t t = ps.start_step + i;
        if (p.step != t) {
            throw LookupError("policy " + std::to_string(i) + " is for step " + std::to_string(p.step) +
                              ", expected " + std::to_string(t));
        }
        for (const auto& x : problem.states(t)) {
            const ControlId& y = p(x);
            if (!problem.has_control(t, x, y)) {
                throw LookupError("control " + y + " is not admissible at (t=" + std::to_string(t) + ", x=" + x + ")");
            }
        }
    }
}

PolicySeq constant_policy_seq(const Problem& problem, std::size_t t, std::span<const ControlId> controls) {
    PolicySeq ps;
    ps.start_step = t;
    for (std::size_t i = 0; i < controls.size(); ++i) {
        Policy p;
        p.step = t + i;
        for (const auto& x : problem.states(t + i)) p.choice.emplace(x, controls[i]);
        ps.policies.push_back(std::move(p));
    }
    check_policy_seq(problem, ps);
    return ps;
}

std::string describe(const Problem& problem, const PolicySeq& ps) {
    if (ps.empty()) return "[]@t" + std::to_string(ps.start_step);
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::size_t t = ps.start_step + i;
        if (i) out += " ";
        out += "t" + std::to_string(t) + "{";
        bool first = true;
        for (const auto& x : problem.states(t)) {
            if (!first) out += ", ";
            first = false;
            out += x + ":" + ps.policies[i](x);
        }
        out += "}";
    }
    return out;
}

}  // namespace mbi

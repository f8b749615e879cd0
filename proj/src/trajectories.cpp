#include "mbi/trajectories.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbi {

namespace {

MStruct<StateCtrlSeq> trj_from(const Problem& problem, const PolicySeq& ps, std::size_t i, const StateId& x) {
    const std::size_t t = ps.start_step + i;
    if (i == ps.size()) return pure(problem.kind(), StateCtrlSeq{t, {}, x});
    const ControlId& y = ps.policies[i](x);
    auto rest = bind(problem.next(t, x, y), [&](const StateId& x_next) { return trj_from(problem, ps, i + 1, x_next); });
    auto out = map(
        [&](const StateCtrlSeq& s) {
            StateCtrlSeq longer;
            longer.start_step = t;
            longer.steps.reserve(s.steps.size() + 1);
            longer.steps.emplace_back(x, y);
            longer.steps.insert(longer.steps.end(), s.steps.begin(), s.steps.end());
            longer.final_state = s.final_state;
            return longer;
        },
        rest);
    if (out.empty()) throw std::logic_error("trj produced an empty structure at step " + std::to_string(t));
    return out;
}

bool in_support(const MStruct<StateId>& m, const StateId& x) {
    auto o = m.outcomes();
    return std::any_of(o.begin(), o.end(), [&](const auto& e) { return e.value == x; });
}

}  // namespace

std::string describe(const StateCtrlSeq& s) {
    if (s.steps.empty()) return "Last " + s.final_state;
    std::string out;
    for (const auto& [x, y] : s.steps) out += x + "/" + y + " -> ";
    return out + s.final_state;
}

MStruct<StateCtrlSeq> trj(const Problem& problem, const PolicySeq& ps, const StateId& x) {
    check_policy_seq(problem, ps);
    if (!problem.has_state(ps.start_step, x)) {
        throw LookupError("unknown state " + x + " at step " + std::to_string(ps.start_step));
    }
    return trj_from(problem, ps, 0, x);
}

Number sum_r(const Problem& problem, const StateCtrlSeq& traj) {
    if (traj.start_step + traj.steps.size() > problem.end_step() || traj.start_step < problem.start_step()) {
        throw LookupError("trajectory leaves the problem's steps");
    }
    Number acc = problem.alg().zero;
    for (std::size_t i = traj.steps.size(); i-- > 0;) {
        const std::size_t t = traj.start_step + i;
        const auto& [x, y] = traj.steps[i];
        const StateId& x_next = i + 1 < traj.steps.size() ? traj.steps[i + 1].first : traj.final_state;
        if (!problem.has_control(t, x, y) || !in_support(problem.next(t, x, y), x_next)) {
            throw LookupError("inconsistent trajectory at (t=" + std::to_string(t) + ", x=" + x + ", y=" + y +
                              ", x'=" + x_next + ")");
        }
        acc = problem.alg().combine(problem.reward(t, x, y, x_next), acc);
    }
    return acc;
}

Number val_prime(const Problem& problem, const PolicySeq& ps, const StateId& x) {
    auto trajectories = trj(problem, ps, x);
    return problem.measure()(map([&](const StateCtrlSeq& s) { return sum_r(problem, s); }, trajectories));
}

OracleReport check_val_equivalence(const Problem& problem, std::size_t t, std::size_t n_max, std::uint64_t cap,
                                   bool collect_all) {
    problem.require_solvable(t, n_max);
    OracleReport report;
    report.name = "val == val'";
    for (std::size_t n = 0; n <= n_max && (report.passed || collect_all); ++n) {
        for_each_policy_seq(problem, t, n, cap, [&](const PolicySeq& ps, std::uint64_t) {
            ++report.sequences;
            for (const auto& x : problem.states(t)) {
                ++report.cases;
                Number v = val(problem, ps, x);
                Number vp = val_prime(problem, ps, x);
                if (!problem.alg().equal(v, vp)) {
                    Witness w{describe(problem, ps), x, v, vp};
                    if (report.passed) {
                        report.passed = false;
                        report.witness = w;
                        report.detail = "val = " + v.str() + ", val' = " + vp.str();
                    }
                    if (!collect_all) return false;
                    report.disagreements.push_back(std::move(w));
                }
            }
            return true;
        });
    }
    return report;
}

}  // namespace mbi

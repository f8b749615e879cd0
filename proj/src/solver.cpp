#include "mbi/solver.hpp"

#include "mbi/trajectories.hpp"

#include <map>

namespace mbi {

namespace {

Number val_from(const Problem& problem, const PolicySeq& ps, std::size_t i, const StateId& x) {
    if (i == ps.size()) return problem.alg().zero;
    const std::size_t t = ps.start_step + i;
    const ControlId& y = ps.policies[i](x);
    const auto& alg = problem.alg();
    return problem.measure()(map(
        [&](const StateId& x_next) { return alg.combine(problem.reward(t, x, y, x_next), val_from(problem, ps, i + 1, x_next)); },
        problem.next(t, x, y)));
}

// cval at step t given the value of every state at t + 1.
template <class ValueOf>
Number local_value(const Problem& problem, std::size_t t, const StateId& x, const ControlId& y, ValueOf&& value_of) {
    const auto& alg = problem.alg();
    return problem.measure()(map(
        [&](const StateId& x_next) { return alg.combine(problem.reward(t, x, y, x_next), value_of(x_next)); },
        problem.next(t, x, y)));
}

// First control whose value is maximal under the preorder: a later control
// replaces the incumbent only when strictly better.
template <class ValueOfControl>
std::pair<ControlId, Number> argmax(const Problem& problem, std::size_t t, const StateId& x,
                                    ValueOfControl&& value_of) {
    const auto& ys = problem.controls(t, x);
    ControlId best = ys.front();
    Number best_value = value_of(best);
    for (std::size_t k = 1; k < ys.size(); ++k) {
        Number v = value_of(ys[k]);
        if (!problem.alg().le(v, best_value)) {
            best = ys[k];
            best_value = std::move(v);
        }
    }
    return {best, best_value};
}

void require_extensible(const Problem& problem, const PolicySeq& ps) {
    check_policy_seq(problem, ps);
    if (ps.start_step <= problem.start_step()) {
        throw LookupError("no decision step precedes step " + std::to_string(ps.start_step));
    }
}

struct Position {
    std::size_t step;
    const StateId* state;
    const std::vector<ControlId>* controls;
};

std::vector<Position> positions(const Problem& problem, std::size_t t, std::size_t n) {
    std::vector<Position> out;
    for (std::size_t s = t; s < t + n; ++s) {
        for (const auto& x : problem.states(s)) out.push_back({s, &x, &problem.controls(s, x)});
    }
    return out;
}

}  // namespace

Number val(const Problem& problem, const PolicySeq& ps, const StateId& x) {
    check_policy_seq(problem, ps);
    if (!problem.has_state(ps.start_step, x)) {
        throw LookupError("unknown state " + x + " at step " + std::to_string(ps.start_step));
    }
    return val_from(problem, ps, 0, x);
}

Number cval(const Problem& problem, const PolicySeq& ps, const StateId& x, const ControlId& y) {
    require_extensible(problem, ps);
    const std::size_t t = ps.start_step - 1;
    if (!problem.has_control(t, x, y)) {
        throw LookupError("control " + y + " is not admissible at (t=" + std::to_string(t) + ", x=" + x + ")");
    }
    return local_value(problem, t, x, y, [&](const StateId& x_next) { return val_from(problem, ps, 0, x_next); });
}

Policy opt_ext(const Problem& problem, const PolicySeq& ps) {
    require_extensible(problem, ps);
    Policy p;
    p.step = ps.start_step - 1;
    for (const auto& x : problem.states(p.step)) {
        auto [y, v] = argmax(problem, p.step, x, [&](const ControlId& c) {
            return local_value(problem, p.step, x, c,
                               [&](const StateId& x_next) { return val_from(problem, ps, 0, x_next); });
        });
        p.choice.emplace(x, std::move(y));
    }
    return p;
}

PolicySeq bi(const Problem& problem, std::size_t t, std::size_t n, BiMode mode) {
    problem.require_solvable(t, n);
    if (mode == BiMode::Naive) {
        if (n == 0) return PolicySeq{t, {}};
        PolicySeq ps = bi(problem, t + 1, n - 1, mode);
        return ps.prepend(opt_ext(problem, ps));
    }

    PolicySeq ps{t + n, {}};
    std::map<StateId, Number> values;
    for (const auto& x : problem.states(t + n)) values.emplace(x, problem.alg().zero);

    for (std::size_t s = t + n; s-- > t;) {
        Policy p;
        p.step = s;
        std::map<StateId, Number> current;
        for (const auto& x : problem.states(s)) {
            auto [y, v] = argmax(problem, s, x, [&](const ControlId& c) {
                return local_value(problem, s, x, c, [&](const StateId& x_next) { return values.at(x_next); });
            });
            p.choice.emplace(x, std::move(y));
            current.emplace(x, std::move(v));
        }
        values = std::move(current);
        ps = ps.prepend(std::move(p));
    }
    return ps;
}

std::uint64_t count_policy_seqs(const Problem& problem, std::size_t t, std::size_t n) {
    problem.require_solvable(t, n);
    std::uint64_t count = 1;
    for (const auto& pos : positions(problem, t, n)) count = sat_mul(count, pos.controls->size());
    return count;
}

void for_each_policy_seq(const Problem& problem, std::size_t t, std::size_t n, std::uint64_t cap,
                         const std::function<bool(const PolicySeq&, std::uint64_t)>& visit) {
    const std::uint64_t count = count_policy_seqs(problem, t, n);
    if (count > cap) {
        throw CapExceeded(std::to_string(count) + " policy sequences of length " + std::to_string(n) + " from step " +
                          std::to_string(t) + " exceed the enumeration cap " + std::to_string(cap));
    }
    auto pos = positions(problem, t, n);
    std::vector<std::size_t> digits(pos.size(), 0);

    PolicySeq ps{t, {}};
    for (std::size_t s = t; s < t + n; ++s) ps.policies.push_back(Policy{s, {}});
    auto assign = [&](std::size_t k) {
        ps.policies[pos[k].step - t].choice[*pos[k].state] = (*pos[k].controls)[digits[k]];
    };
    for (std::size_t k = 0; k < pos.size(); ++k) assign(k);

    for (std::uint64_t index = 0; index < count; ++index) {
        if (!visit(ps, index)) return;
        // Odometer increment, last position fastest.
        for (std::size_t k = pos.size(); k-- > 0;) {
            if (++digits[k] < pos[k].controls->size()) {
                assign(k);
                break;
            }
            digits[k] = 0;
            assign(k);
        }
    }
}

std::vector<PolicySeq> enumerate_policy_seqs(const Problem& problem, std::size_t t, std::size_t n,
                                             std::uint64_t cap) {
    std::vector<PolicySeq> out;
    for_each_policy_seq(problem, t, n, cap, [&](const PolicySeq& ps, std::uint64_t) {
        out.push_back(ps);
        return true;
    });
    return out;
}

std::string_view to_string(ValueFn f) { return f == ValueFn::Val ? "val" : "val'"; }

Number evaluate(const Problem& problem, ValueFn f, const PolicySeq& ps, const StateId& x) {
    return f == ValueFn::Val ? val(problem, ps, x) : val_prime(problem, ps, x);
}

OracleReport check_optimality(const Problem& problem, const PolicySeq& ps, ValueFn value_fn, std::uint64_t cap) {
    check_policy_seq(problem, ps);
    const std::size_t t = ps.start_step;
    OracleReport report;
    report.name = "optimality w.r.t. " + std::string(to_string(value_fn));

    std::map<StateId, Number> reference;
    for (const auto& x : problem.states(t)) reference.emplace(x, evaluate(problem, value_fn, ps, x));

    for_each_policy_seq(problem, t, ps.size(), cap, [&](const PolicySeq& other, std::uint64_t) {
        ++report.sequences;
        for (const auto& x : problem.states(t)) {
            ++report.cases;
            Number v = evaluate(problem, value_fn, other, x);
            if (!problem.alg().le(v, reference.at(x))) {
                report.passed = false;
                report.witness = Witness{describe(problem, other), x, reference.at(x), v};
                report.detail = describe(problem, other) + " beats the candidate at " + x + ": " + v.str() + " vs " +
                                reference.at(x).str();
                return false;
            }
        }
        return true;
    });
    return report;
}

OracleReport check_bellman(const Problem& problem, std::size_t t, std::size_t n, std::uint64_t cap) {
    problem.require_solvable(t, n);
    if (n == 0) {
        OracleReport report = check_optimality(problem, PolicySeq{t, {}}, ValueFn::Val, cap);
        report.name = "Bellman (empty sequence)";
        return report;
    }

    // Brute-force optimum of every state at t+1, then the first sequence
    // attaining all of them at once.
    const auto& tail_states = problem.states(t + 1);
    std::map<StateId, Number> best;
    std::uint64_t tail_cases = 0;
    for_each_policy_seq(problem, t + 1, n - 1, cap, [&](const PolicySeq& ps, std::uint64_t) {
        for (const auto& x : tail_states) {
            ++tail_cases;
            Number v = val(problem, ps, x);
            auto it = best.find(x);
            if (it == best.end()) {
                best.emplace(x, std::move(v));
            } else if (!problem.alg().le(v, it->second)) {
                it->second = std::move(v);
            }
        }
        return true;
    });

    std::optional<PolicySeq> optimal_tail;
    for_each_policy_seq(problem, t + 1, n - 1, cap, [&](const PolicySeq& ps, std::uint64_t) {
        for (const auto& x : tail_states) {
            if (!problem.alg().le(best.at(x), val(problem, ps, x))) return true;
        }
        optimal_tail = ps;
        return false;
    });

    OracleReport report;
    report.name = "Bellman";
    if (!optimal_tail) {
        report.passed = false;
        report.cases = tail_cases;
        report.detail = "no policy sequence from step " + std::to_string(t + 1) + " is optimal in every state";
        return report;
    }

    PolicySeq extended = optimal_tail->prepend(opt_ext(problem, *optimal_tail));
    OracleReport inner = check_optimality(problem, extended, ValueFn::Val, cap);
    report.passed = inner.passed;
    report.cases = tail_cases + inner.cases;
    report.sequences = inner.sequences;
    report.witness = inner.witness;
    report.detail = "extension of " + describe(problem, *optimal_tail) + (inner.passed ? " is optimal" : ": " + inner.detail);
    return report;
}

}  // namespace mbi

#pragma once

#include "mbi/sdp.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mbi {

/// Decision rule for one step: a control for every state of that step.
struct Policy {
    std::size_t step = 0;
    std::map<StateId, ControlId> choice;

    /// Throws LookupError for a state without a choice.
    const ControlId& operator()(const StateId& x) const;

    friend bool operator==(const Policy&, const Policy&) = default;
};

/// Policies for consecutive steps start_step, start_step + 1, ...
struct PolicySeq {
    std::size_t start_step = 0;
    std::vector<Policy> policies;

    std::size_t size() const { return policies.size(); }
    bool empty() const { return policies.empty(); }
    std::size_t end_step() const { return start_step + policies.size(); }

    /// Drops the first policy.
    PolicySeq tail() const;
    /// Prepends p, which must be for step start_step - 1.
    PolicySeq prepend(Policy p) const;

    friend bool operator==(const PolicySeq&, const PolicySeq&) = default;
};

/// Throws LookupError unless ps lies within the problem's steps, its step
/// indices are consecutive, and every policy picks an admissible control for
/// every state of its step.
void check_policy_seq(const Problem& problem, const PolicySeq& ps);

/// Policy sequence from t whose i-th policy picks controls[i] in every state.
PolicySeq constant_policy_seq(const Problem& problem, std::size_t t, std::span<const ControlId> controls);

/// "t0{Good:Low, Bad:Low} t1{...}", states in declared order; "[]" when empty.
std::string describe(const Problem& problem, const PolicySeq& ps);

}  // namespace mbi

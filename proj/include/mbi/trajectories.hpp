#pragma once

// Trajectory semantics: the M-structure of state/control sequences a policy
// sequence can produce, and the measured total reward val' computed by
// summing each trajectory and measuring once.

#include "mbi/checking.hpp"
#include "mbi/policy.hpp"
#include "mbi/sdp.hpp"
#include "mbi/solver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mbi {

/// (state, control) pairs for steps start_step, start_step + 1, ... followed
/// by the final state. Never empty: a trajectory without steps is "Last x".
struct StateCtrlSeq {
    std::size_t start_step = 0;
    std::vector<std::pair<StateId, ControlId>> steps;
    StateId final_state;

    /// First state of the trajectory.
    const StateId& head() const { return steps.empty() ? final_state : steps.front().first; }

    friend bool operator==(const StateCtrlSeq&, const StateCtrlSeq&) = default;
};

/// "Good/High -> Good/Low -> Good", or "Last Good".
std::string describe(const StateCtrlSeq& s);

/// pure (Last x) for the empty sequence; otherwise binds next(t, x, p(x))
/// with the trajectories of the tail and prepends (x, p(x)). Stoch weights
/// multiply along each trajectory. Never returns an empty structure on a
/// valid problem.
MStruct<StateCtrlSeq> trj(const Problem& problem, const PolicySeq& ps, const StateId& x);

/// zero for Last x; reward t x y (head rest) (+) sum_r rest otherwise.
/// Throws LookupError for a trajectory the problem cannot produce.
Number sum_r(const Problem& problem, const StateCtrlSeq& traj);

/// meas (map sum_r (trj ps x)).
Number val_prime(const Problem& problem, const PolicySeq& ps, const StateId& x);

/// Compares val and val' for every policy sequence of length 0..n_max from t
/// and every start state. The witness carries val as reference and val' as
/// candidate. With `collect_all` the check runs to the end and keeps every
/// disagreement in `disagreements`; otherwise it stops at the first.
OracleReport check_val_equivalence(const Problem& problem, std::size_t t, std::size_t n_max,
                                   std::uint64_t cap = kDefaultEnumerationCap, bool collect_all = false);

}  // namespace mbi

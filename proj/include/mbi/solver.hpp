#pragma once

// Backward induction over a validated problem, plus brute-force optimality
// oracles that enumerate every policy sequence.

#include "mbi/checking.hpp"
#include "mbi/policy.hpp"
#include "mbi/sdp.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mbi {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Value of ps from x: zero for the empty sequence, otherwise
///   meas (map (x' -> reward t x y x' (+) val tail x') (next t x y))
/// with y = ps[0](x). Recomputes recursively on every call.
Number val(const Problem& problem, const PolicySeq& ps, const StateId& x);

/// Local objective of choosing y in x at step ps.start_step - 1 and then
/// following ps. val(p :: ps, x) == cval(ps, x, p(x)).
Number cval(const Problem& problem, const PolicySeq& ps, const StateId& x, const ControlId& y);

/// Per-state argmax of cval for the step before ps. Among controls with
/// maximal cval (up to the preorder) the first in declared order wins.
Policy opt_ext(const Problem& problem, const PolicySeq& ps);

enum class BiMode {
    /// One value table per step, reused by the step before.
    Memoized,
    /// opt_ext over the recursive val; for differential testing.
    Naive,
};

/// Backward induction: the empty sequence for n = 0, else
/// opt_ext(bi(t+1, n-1)) prepended to bi(t+1, n-1).
PolicySeq bi(const Problem& problem, std::size_t t, std::size_t n, BiMode mode = BiMode::Memoized);

/// Number of policy sequences of length n from t (saturating).
std::uint64_t count_policy_seqs(const Problem& problem, std::size_t t, std::size_t n);

/// Visits every policy sequence of length n from t in lexicographic order of
/// control indices (first step, first declared state most significant).
/// Stops when the visitor returns false. Throws CapExceeded if the count
/// exceeds cap.
void for_each_policy_seq(const Problem& problem, std::size_t t, std::size_t n, std::uint64_t cap,
                         const std::function<bool(const PolicySeq&, std::uint64_t)>& visit);

std::vector<PolicySeq> enumerate_policy_seqs(const Problem& problem, std::size_t t, std::size_t n,
                                             std::uint64_t cap = kDefaultEnumerationCap);

enum class ValueFn { Val, ValPrime };

std::string_view to_string(ValueFn f);

Number evaluate(const Problem& problem, ValueFn f, const PolicySeq& ps, const StateId& x);

/// Checks value_fn(ps', x) <= value_fn(ps, x) for every enumerated ps' of the
/// same start and length and every start state. The witness is the first
/// violation in enumeration order.
OracleReport check_optimality(const Problem& problem, const PolicySeq& ps, ValueFn value_fn,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// Picks a pointwise-optimal tail at t+1 by brute force, prepends its
/// optimal extension, and checks the result is optimal at t by enumeration.
OracleReport check_bellman(const Problem& problem, std::size_t t, std::size_t n,
                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mbi

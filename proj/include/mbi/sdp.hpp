#pragma once

// Finite sequential decision problems: per-step state and control tables,
// transitions as M-structures of next states, and rewards per transition.

#include "mbi/algebra.hpp"
#include "mbi/measures.hpp"
#include "mbi/uncertainty.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbi {

using StateId = std::string;
using ControlId = std::string;

/// Tables for one decision step. The terminal step only declares states.
struct StepTable {
    std::vector<StateId> states;
    std::map<StateId, std::vector<ControlId>> controls;
    std::map<StateId, std::map<ControlId, MStruct<StateId>>> next;
    std::map<StateId, std::map<ControlId, std::map<StateId, Number>>> reward;

    friend bool operator==(const StepTable&, const StepTable&) = default;
};

struct SdpSpec {
    std::string name;
    Kind kind = Kind::NonDet;
    ValueAlgebra alg;
    Measure measure;
    std::size_t start_step = 0;
    std::size_t horizon_max = 0;
    /// steps[i] describes step start_step + i; horizon_max + 1 entries.
    std::vector<StepTable> steps;
    /// States are strings of performed actions; enables the admissibility
    /// closure check (control c offered at s iff s + c is a next-step state).
    bool states_encode_actions = false;

    std::size_t end_step() const { return start_step + horizon_max; }
};

/// Equal tables, algebra and measure definition.
bool equivalent(const SdpSpec& a, const SdpSpec& b);

struct Violation {
    std::string rule;
    std::size_t step = 0;
    StateId state;
    ControlId control;
    StateId next_state;
    std::string message;

    /// "(t, x, y, x')" with absent components omitted.
    std::string where() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    bool has(std::string_view rule) const;
    std::string summary() const;
};

/// Checks non-empty controls and transitions, membership of every outcome in
/// the next step's states, reward coverage of every reachable transition,
/// Stoch weight sums, kind consistency and (when declared) the action-string
/// admissibility closure. Never throws on a malformed spec.
ValidationReport validate_spec(const SdpSpec& spec);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Unknown step, state or control, or a horizon outside the problem.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A validated, immutable problem. Solvers only accept this type.
class Problem {
public:
    /// Throws ValidationError with the full report if the spec is invalid.
    explicit Problem(SdpSpec spec);

    const SdpSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    Kind kind() const { return spec_.kind; }
    const ValueAlgebra& alg() const { return spec_.alg; }
    const Measure& measure() const { return spec_.measure; }
    std::size_t start_step() const { return spec_.start_step; }
    std::size_t end_step() const { return spec_.end_step(); }

    const std::vector<StateId>& states(std::size_t t) const;
    bool has_state(std::size_t t, const StateId& x) const;
    const std::vector<ControlId>& controls(std::size_t t, const StateId& x) const;
    bool has_control(std::size_t t, const StateId& x, const ControlId& y) const;
    const MStruct<StateId>& next(std::size_t t, const StateId& x, const ControlId& y) const;
    const Number& reward(std::size_t t, const StateId& x, const ControlId& y, const StateId& x_next) const;

    /// Valid by construction; true when start_step <= t and t + n <= end_step.
    bool solvable(std::size_t t, std::size_t n) const;

    /// Throws LookupError unless solvable(t, n).
    void require_solvable(std::size_t t, std::size_t n) const;

private:
    const StepTable& step(std::size_t t) const;

    SdpSpec spec_;
};

}  // namespace mbi

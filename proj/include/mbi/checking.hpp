#pragma once

// Shared machinery for executable law checks: outcome records and the
// exhaustive-or-sampled case driver.

#include "mbi/number.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mbi {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct CheckResult {
    std::string name;
    Status status = Status::Pass;
    std::uint64_t cases = 0;
    bool exhaustive = true;
    /// First counter-example by generation index (empty when passing).
    std::string counterexample;
    /// Reason for a skip, or extra context.
    std::string note;

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

struct LawReport {
    std::string subject;
    std::vector<CheckResult> laws;

    bool passed() const;
    const CheckResult* find(std::string_view law) const;
    std::vector<std::string> failed_laws() const;
};

/// Value pair that exhibits an oracle violation.
struct Witness {
    std::string policy;
    std::string state;
    Number reference;
    Number candidate;
};

struct OracleReport {
    std::string name;
    bool passed = true;
    /// (policy sequence, state) pairs evaluated.
    std::uint64_t cases = 0;
    std::uint64_t sequences = 0;
    std::optional<Witness> witness;
    std::vector<Witness> disagreements;
    std::string detail;
};

/// Saturating arithmetic for search-space sizes.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp);

/// Visits indices of a case space of size `space`: all of them in order when
/// space <= budget, else `budget` indices drawn from a generator seeded with
/// `seed`. The visitor returns a counter-example description to stop early.
/// The first failing case in visiting order is reported, so results depend
/// only on (space, budget, seed).
CheckResult run_cases(std::string name, std::uint64_t space, std::uint64_t budget, std::uint64_t seed,
                      const std::function<std::optional<std::string>(std::uint64_t)>& visit);

/// Decodes a flat index into digits of a mixed-radix number, last digit
/// varying fastest.
std::vector<std::uint64_t> mixed_radix(std::uint64_t index, const std::vector<std::uint64_t>& radices);

}  // namespace mbi

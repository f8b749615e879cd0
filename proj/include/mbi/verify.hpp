#pragma once

#include "mbi/checking.hpp"
#include "mbi/measures.hpp"
#include "mbi/sdp.hpp"
#include "mbi/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mbi {

/// One line of a verification report. Grouped checks (monad laws, preorder)
/// keep their individual laws in `laws`.
struct VerificationEntry {
    std::string name;
    Status status = Status::Pass;
    std::uint64_t cases = 0;
    bool exhaustive = true;
    std::string counterexample;
    std::string note;
    std::vector<CheckResult> laws;
    std::optional<Witness> witness;
    /// Every disagreement found by the val/val' comparison.
    std::vector<Witness> disagreements;
};

struct VerificationReport {
    std::string problem;
    std::string measure;
    Kind kind = Kind::NonDet;
    std::size_t step = 0;
    std::size_t horizon = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::uint64_t enumeration_cap = 0;
    std::vector<VerificationEntry> checks;
    /// All four measure conditions and both optimality oracles pass, and no
    /// check fails.
    bool certified = false;
    /// The three conditions passed yet val and val' disagree.
    bool harness_defect = false;

    const VerificationEntry* find(std::string_view name) const;
};

struct VerifyOptions {
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    PlusVariant plus_variant = PlusVariant::NotEmpty;
};

/// Check names in report order.
const std::vector<std::string>& verification_check_names();

/// Runs every check in a fixed order; nothing short-circuits. Checks whose
/// enumeration exceeds the cap are marked skipped.
VerificationReport run_verification(const Problem& problem, std::size_t t, std::size_t n,
                                    const VerifyOptions& options = {});

/// Values used by the value-level checks: zero, every reward, and 0..3,
/// in the problem's carrier, sorted and deduplicated.
std::vector<Number> value_samples(const Problem& problem);

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace mbi

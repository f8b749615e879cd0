#pragma once

#include "mbi/policy.hpp"
#include "mbi/sdp.hpp"
#include "mbi/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace sdp_cli {

enum class Format { Text, Json };

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Bad flag values or combinations detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    std::optional<std::size_t> step;
    std::optional<std::size_t> horizon;
};

struct SolveOptions {
    std::string file;
    Range range;
    std::string value_fn = "both";
    Format format = Format::Text;
};

struct VerifyCliOptions {
    std::string file;
    Range range;
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;
    Format format = Format::Text;
};

struct TrajectoryOptions {
    std::string file;
    Range range;
    std::optional<std::string> state;
    std::string policy = "optimal";
    Format format = Format::Text;
};

struct OracleOptions {
    std::string file;
    Range range;
    std::string value_fn = "both";
    Format format = Format::Text;
};

struct ExportOptions {
    std::string example;
    std::string measure = "min";
    std::size_t horizon = 3;
};

int cmd_solve(const SolveOptions& o, std::ostream& out);
int cmd_verify(const VerifyCliOptions& o, std::ostream& out);
int cmd_trajectories(const TrajectoryOptions& o, std::ostream& out);
int cmd_oracle(const OracleOptions& o, std::ostream& out);
int cmd_export(const ExportOptions& o, std::ostream& out);

/// Reads a policy sequence file:
///   {"schema_version": 1, "start_step": 0, "policies": [{"Good": "High", "Bad": "Low"}, "Low", ...]}
/// A string entry applies one control to every state of that step.
mbi::PolicySeq read_policy_file(const mbi::Problem& problem, const std::string& path);

/// For problems whose states are strings of performed actions: the actions
/// taken from x under ps followed by the remaining ones in sorted order.
std::optional<std::string> action_order(const mbi::Problem& problem, const mbi::PolicySeq& ps, const mbi::StateId& x);

void report_error(std::ostream& err, const std::exception& e);

/// Runs a command, mapping library exceptions to exit code 2 with a message
/// on `err`.
template <class F>
int guarded(std::ostream& err, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        report_error(err, e);
        return kUsage;
    }
}

}  // namespace sdp_cli

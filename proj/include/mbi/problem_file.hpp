#pragma once

// JSON problem files (schema_version 1).
//
//   {
//     "schema_version": 1,
//     "name": "climate",
//     "uncertainty": "nondet",
//     "value": {"carrier": "int", "plus": "add", "zero": 0},
//     "measure": "min",                  or {"monoid_fold": {"odot": "max", "neutr": 0}}
//     "start_step": 0,
//     "horizon": 3,
//     "steps": [
//       {"states": ["Good", "Bad"],
//        "controls": {"Good": ["Low", "High"], ...},
//        "next": {"Good": {"Low": "Good", "High": ["Good", "Bad"]}, ...},
//        "reward": {"Good": {"Low": {"Good": 3}, ...}, ...}},
//       ...
//       {"states": ["Good", "Bad"]}
//     ]
//   }
//
// A next entry is a single outcome, an array of outcomes (nondet) or an
// array of [outcome, weight] pairs (stoch). Numbers may be JSON numbers or
// strings such as "4/5" and "0.25", which stay exact on the rational carrier.

#include "mbi/sdp.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mbi {

class ProblemFileError : public std::runtime_error {
public:
    enum class Category { Io, Json, Schema, Validation };

    ProblemFileError(Category category, std::string location, std::string message,
                     std::optional<ValidationReport> report = std::nullopt);

    Category category() const { return category_; }
    /// JSON pointer, "byte N" for syntax errors, or the path for I/O errors.
    const std::string& location() const { return location_; }
    const std::optional<ValidationReport>& report() const { return report_; }
    const std::string& message() const { return message_; }

private:
    Category category_;
    std::string location_;
    std::string message_;
    std::optional<ValidationReport> report_;
};

std::string_view to_string(ProblemFileError::Category c);

/// Parses and validates. Throws ProblemFileError.
SdpSpec parse_problem_json(const nlohmann::json& doc);
SdpSpec parse_problem_text(std::string_view text);
SdpSpec parse_problem_file(const std::filesystem::path& path);

/// Inverse of parse_problem_json for specs whose measure and algebra are
/// expressible in the file format.
nlohmann::ordered_json to_problem_json(const SdpSpec& spec);
std::string serialize_problem(const SdpSpec& spec);

/// JSON pointer of a violation inside a problem file.
std::string violation_pointer(const SdpSpec& spec, const Violation& v);

/// A number in a problem file or report: integers as JSON integers, other
/// exact values as "p/q" strings, floats as JSON numbers.
nlohmann::ordered_json number_to_json(const Number& n);

}  // namespace mbi

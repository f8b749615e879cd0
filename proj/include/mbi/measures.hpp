#pragma once

// Measures reduce an M-structure of values to a single value. This header
// holds the measure catalog, folds over a monoid, and refutation checks for
// the conditions under which backward induction computes the measured total
// reward:
//   measPureSpec  meas . pure == id
//   measJoinSpec  meas . join == meas . map meas
//   measPlusSpec  meas . map (v +) == (v +) . meas   on non-empty structures
//   measMonSpec   f <= g pointwise  implies  meas (map f) <= meas (map g)

#include "mbi/algebra.hpp"
#include "mbi/checking.hpp"
#include "mbi/generators.hpp"
#include "mbi/uncertainty.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbi {

class MeasureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Expectation { Pass, Fail, Unknown };

inline constexpr std::string_view kMeasPure = "measPureSpec";
inline constexpr std::string_view kMeasJoin = "measJoinSpec";
inline constexpr std::string_view kMeasPlus = "measPlusSpec";
inline constexpr std::string_view kMeasMon = "measMonSpec";

/// A monoid (Val, odot, neutr) whose right fold is a candidate measure for
/// NonDet structures.
struct MonoidSpec {
    std::string odot_name;
    BinaryOp odot;
    Number neutr;

    /// odot_name in {"add", "mul", "max", "min"}.
    static MonoidSpec named(std::string_view odot_name, Number neutr);
};

struct Measure {
    /// Catalog name, or "monoid_fold" for folds.
    std::string name;
    Kind kind = Kind::NonDet;
    std::function<Number(const MStruct<Number>&)> apply;
    /// Expected outcome per condition name, for regression tests.
    std::map<std::string, Expectation, std::less<>> documented_status;
    std::optional<MonoidSpec> monoid;

    /// Applies the measure; throws StructureError on a structure of another
    /// kind.
    Number operator()(const MStruct<Number>& m) const;

    /// Same catalog entry (or same monoid), ignoring the function object.
    bool same_definition(const Measure& other) const;

    std::string label() const;
};

/// Catalog names accepted by make_measure.
std::span<const std::string_view> measure_names();

/// Builds a catalog measure:
///   identity  (Identity) the single value
///   min       (NonDet)   0 on [], x on [x], running minimum otherwise
///   max       (NonDet)   foldr max 0
///   sum       (NonDet)   foldr (+) 0
///   avg       (NonDet)   sum / length, 0 on []
///   max_var   (NonDet)   foldr (x, v -> max (x + 1) v) 0
///   length    (NonDet)   number of entries
///   expected  (Stoch)    sum of value * weight
/// avg and expected need a rational or float carrier.
Measure make_measure(std::string_view name, const ValueAlgebra& alg);

/// NonDet measure foldr odot neutr.
Measure monoid_fold_measure(const MonoidSpec& m);

enum class PlusVariant {
    /// Only non-empty structures (the form used by the correctness proof).
    NotEmpty,
    /// Also empty structures; for experimentation.
    Unrestricted,
};

LawReport check_meas_pure(const Measure& meas, const ValueAlgebra& alg, std::span<const Number> values,
                          std::uint64_t budget, std::uint64_t seed);

LawReport check_meas_join(const Measure& meas, const ValueAlgebra& alg,
                          const StructureGenerator<MStruct<Number>>& nested, std::uint64_t budget,
                          std::uint64_t seed);

/// Throws std::invalid_argument if the variant is NotEmpty and `structs` can
/// produce an empty structure.
LawReport check_meas_plus(const Measure& meas, const ValueAlgebra& alg, std::span<const Number> values,
                          const StructureGenerator<Number>& structs, std::uint64_t budget, std::uint64_t seed,
                          PlusVariant variant = PlusVariant::NotEmpty);

/// Pairs of value tables f, g over the domain {0, ..., domain-1} with
/// f(i) <= g(i), each entry drawn from `grid`.
struct TablePairs {
    std::size_t domain = 2;
    std::vector<Number> grid;
};

/// `structs` ranges over structures of domain indices (values 0..domain-1).
LawReport check_meas_mon(const Measure& meas, const ValueAlgebra& alg, const TablePairs& tables,
                         const StructureGenerator<Number>& structs, std::uint64_t budget, std::uint64_t seed);

/// odotNeutrRight, odotNeutrLeft, odotAssociative, oplusOdotDistrLeft,
/// odotMon. Together they imply that the fold measure satisfies all four
/// conditions.
LawReport check_monoid_preconditions(const MonoidSpec& m, const ValueAlgebra& alg, std::span<const Number> values,
                                     std::uint64_t budget, std::uint64_t seed);

/// Default inputs for running all four condition checks on one measure.
/// Structures are non-empty at every level, as produced by a valid problem.
struct ConditionConfig {
    std::vector<Number> values;
    std::size_t max_size = 3;
    WeightScheme weights;
    std::size_t mon_domain = 2;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    PlusVariant plus_variant = PlusVariant::NotEmpty;
};

/// measPureSpec, measJoinSpec, measPlusSpec, measMonSpec in that order.
LawReport check_conditions(const Measure& meas, const ValueAlgebra& alg, const ConditionConfig& config);

}  // namespace mbi

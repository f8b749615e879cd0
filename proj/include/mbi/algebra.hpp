#pragma once

#include "mbi/checking.hpp"
#include "mbi/number.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mbi {

enum class Carrier { Integer, Rational, Float };

std::string_view to_string(Carrier c);
std::optional<Carrier> carrier_from_string(std::string_view s);

using BinaryOp = std::function<Number(const Number&, const Number&)>;
using Preorder = std::function<bool(const Number&, const Number&)>;

/// Reward values: a carrier with combination (plus), reference value zero
/// and a total preorder (leq). zero is not required to be neutral for plus.
struct ValueAlgebra {
    Carrier carrier = Carrier::Integer;
    std::string plus_name = "add";
    BinaryOp plus;
    Number zero = Number(0);
    std::string leq_name = "le";
    Preorder leq;
    /// 0 for exact carriers.
    double eq_tolerance = 0;

    /// Numeric carrier with plus in {"add", "mul"} and leq = numeric <=.
    /// `eq_tolerance` is ignored (forced to 0) for exact carriers.
    static ValueAlgebra numeric(Carrier carrier, std::string_view plus_name = "add", Number zero = Number(0),
                                double eq_tolerance = 1e-9);

    Number combine(const Number& a, const Number& b) const { return plus(a, b); }
    bool le(const Number& a, const Number& b) const { return leq(a, b); }
    bool equal(const Number& a, const Number& b) const { return approx_equal(a, b, eq_tolerance); }

    /// Brings a number into the carrier's representation. Throws NumberError
    /// for a non-integral value on the integer carrier.
    Number coerce(const Number& n) const;

    bool same_structure(const ValueAlgebra& other) const;
};

/// Named binary operations shared by the algebra and monoid measures:
/// "add", "mul", "max", "min".
std::optional<BinaryOp> binary_op(std::string_view name);

/// Reflexivity, transitivity (all triples) and totality (all pairs) of leq.
LawReport check_total_preorder(const ValueAlgebra& alg, std::span<const Number> samples,
                               std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(),
                               std::uint64_t seed = 0);

/// plusMonSpec: v1 <= v2 and v3 <= v4 imply v1 + v3 <= v2 + v4, over all
/// quadruples of samples.
LawReport check_plus_mon(const ValueAlgebra& alg, std::span<const Number> samples,
                         std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(), std::uint64_t seed = 0);

}  // namespace mbi

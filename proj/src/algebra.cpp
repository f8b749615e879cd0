#include "mbi/algebra.hpp"

#include <stdexcept>

namespace mbi {

std::string_view to_string(Carrier c) {
    switch (c) {
        case Carrier::Integer:
            return "int";
        case Carrier::Rational:
            return "rational";
        case Carrier::Float:
            return "float";
    }
    return "?";
}

std::optional<Carrier> carrier_from_string(std::string_view s) {
    if (s == "int") return Carrier::Integer;
    if (s == "rational") return Carrier::Rational;
    if (s == "float") return Carrier::Float;
    return std::nullopt;
}

std::optional<BinaryOp> binary_op(std::string_view name) {
    if (name == "add") return BinaryOp([](const Number& a, const Number& b) { return a + b; });
    if (name == "mul") return BinaryOp([](const Number& a, const Number& b) { return a * b; });
    if (name == "max") return BinaryOp([](const Number& a, const Number& b) { return a < b ? b : a; });
    if (name == "min") return BinaryOp([](const Number& a, const Number& b) { return b < a ? b : a; });
    return std::nullopt;
}

ValueAlgebra ValueAlgebra::numeric(Carrier carrier, std::string_view plus_name, Number zero, double eq_tolerance) {
    if (plus_name != "add" && plus_name != "mul") {
        throw std::invalid_argument("plus must be \"add\" or \"mul\", got \"" + std::string(plus_name) + "\"");
    }
    ValueAlgebra alg;
    alg.carrier = carrier;
    alg.plus_name = std::string(plus_name);
    alg.plus = *binary_op(plus_name);
    alg.leq_name = "le";
    alg.leq = [](const Number& a, const Number& b) { return a <= b; };
    alg.eq_tolerance = carrier == Carrier::Float ? eq_tolerance : 0.0;
    alg.zero = alg.coerce(zero);
    return alg;
}

Number ValueAlgebra::coerce(const Number& n) const {
    switch (carrier) {
        case Carrier::Integer:
            return n.to(Number::Rep::Int);
        case Carrier::Rational:
            return n.is_exact() ? n : n.to(Number::Rep::Rational);
        case Carrier::Float:
            return n.to(Number::Rep::Float);
    }
    return n;
}

bool ValueAlgebra::same_structure(const ValueAlgebra& other) const {
    return carrier == other.carrier && plus_name == other.plus_name && zero == other.zero &&
           leq_name == other.leq_name && eq_tolerance == other.eq_tolerance;
}

LawReport check_total_preorder(const ValueAlgebra& alg, std::span<const Number> samples, std::uint64_t budget,
                               std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("check_total_preorder needs at least one sample");
    LawReport report;
    report.subject = "total preorder (" + alg.leq_name + ")";
    const std::uint64_t n = samples.size();

    report.laws.push_back(run_cases("reflexivity", n, budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        if (alg.le(samples[i], samples[i])) return std::nullopt;
        return "not " + samples[i].str() + " <= " + samples[i].str();
    }));

    report.laws.push_back(run_cases("transitivity", sat_pow(n, 3), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n, n});
        const Number &a = samples[d[0]], &b = samples[d[1]], &c = samples[d[2]];
        if (!alg.le(a, b) || !alg.le(b, c) || alg.le(a, c)) return std::nullopt;
        return a.str() + " <= " + b.str() + " <= " + c.str() + " but not " + a.str() + " <= " + c.str();
    }));

    report.laws.push_back(run_cases("totality", sat_pow(n, 2), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n});
        const Number &a = samples[d[0]], &b = samples[d[1]];
        if (alg.le(a, b) || alg.le(b, a)) return std::nullopt;
        return "(" + a.str() + ", " + b.str() + ") incomparable";
    }));

    return report;
}

LawReport check_plus_mon(const ValueAlgebra& alg, std::span<const Number> samples, std::uint64_t budget,
                         std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("check_plus_mon needs at least one sample");
    LawReport report;
    report.subject = "plus monotonicity (" + alg.plus_name + ")";
    const std::uint64_t n = samples.size();

    report.laws.push_back(run_cases("plusMonSpec", sat_pow(n, 4), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n, n, n});
        const Number &v1 = samples[d[0]], &v2 = samples[d[1]], &v3 = samples[d[2]], &v4 = samples[d[3]];
        if (!alg.le(v1, v2) || !alg.le(v3, v4)) return std::nullopt;
        Number lhs = alg.combine(v1, v3);
        Number rhs = alg.combine(v2, v4);
        if (alg.le(lhs, rhs)) return std::nullopt;
        return v1.str() + " <= " + v2.str() + ", " + v3.str() + " <= " + v4.str() + " but " + lhs.str() +
               " not <= " + rhs.str();
    }));

    return report;
}

}  // namespace mbi

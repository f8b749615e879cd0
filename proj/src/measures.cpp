#include "mbi/measures.hpp"

#include <array>

namespace mbi {

namespace {

constexpr std::array<std::string_view, 8> kCatalog = {"identity", "min", "max", "expected",
                                                      "sum",      "avg", "max_var", "length"};

using Status4 = std::array<Expectation, 4>;

std::map<std::string, Expectation, std::less<>> status(Status4 s) {
    return {{std::string(kMeasPure), s[0]},
            {std::string(kMeasJoin), s[1]},
            {std::string(kMeasPlus), s[2]},
            {std::string(kMeasMon), s[3]}};
}

constexpr auto P = Expectation::Pass;
constexpr auto F = Expectation::Fail;
constexpr auto U = Expectation::Unknown;

// Right fold over the entry values.
Number foldr(const MStruct<Number>& m, const BinaryOp& op, Number base) {
    auto entries = m.outcomes();
    for (std::size_t i = entries.size(); i-- > 0;) base = op(entries[i].value, base);
    return base;
}

std::string kind_name(Kind k) { return std::string(to_string(k)); }

std::string op_symbol(const std::string& name) {
    if (name == "add") return "+";
    if (name == "mul") return "*";
    return "`" + name + "`";
}

}  // namespace

MonoidSpec MonoidSpec::named(std::string_view odot_name, Number neutr) {
    auto op = binary_op(odot_name);
    if (!op) throw MeasureError("unknown monoid operation \"" + std::string(odot_name) + "\"");
    return MonoidSpec{std::string(odot_name), *op, std::move(neutr)};
}

Number Measure::operator()(const MStruct<Number>& m) const {
    if (m.kind() != kind) {
        throw StructureError("measure " + name + " expects " + kind_name(kind) + " structures, got " +
                             kind_name(m.kind()));
    }
    return apply(m);
}

bool Measure::same_definition(const Measure& other) const {
    if (name != other.name || kind != other.kind) return false;
    if (monoid.has_value() != other.monoid.has_value()) return false;
    if (monoid) return monoid->odot_name == other.monoid->odot_name && monoid->neutr == other.monoid->neutr;
    return true;
}

std::string Measure::label() const {
    if (monoid) return "foldr " + monoid->odot_name + " " + monoid->neutr.str();
    return name;
}

std::span<const std::string_view> measure_names() { return kCatalog; }

Measure make_measure(std::string_view name, const ValueAlgebra& alg) {
    Measure m;
    m.name = std::string(name);
    const Number zero = alg.coerce(Number(0));
    const bool additive = alg.plus_name == "add";
    const bool exact_division = alg.carrier != Carrier::Integer;

    if (name == "identity") {
        m.kind = Kind::Identity;
        m.apply = [](const MStruct<Number>& s) { return s.outcomes()[0].value; };
        m.documented_status = status({P, P, P, P});
    } else if (name == "min") {
        m.kind = Kind::NonDet;
        m.apply = [zero](const MStruct<Number>& s) {
            if (s.empty()) return zero;
            auto e = s.outcomes();
            Number acc = e.back().value;
            for (std::size_t i = e.size() - 1; i-- > 0;) acc = e[i].value < acc ? e[i].value : acc;
            return acc;
        };
        m.documented_status = status({P, P, additive ? P : U, P});
    } else if (name == "max") {
        m.kind = Kind::NonDet;
        auto op = *binary_op("max");
        m.apply = [op, zero](const MStruct<Number>& s) { return foldr(s, op, zero); };
        m.documented_status = status({P, P, additive ? P : U, P});
    } else if (name == "sum") {
        m.kind = Kind::NonDet;
        auto op = *binary_op("add");
        m.apply = [op, zero](const MStruct<Number>& s) { return foldr(s, op, zero); };
        m.documented_status = status({P, P, additive ? F : P, P});
    } else if (name == "avg") {
        if (!exact_division) throw MeasureError("avg needs a rational or float carrier");
        m.kind = Kind::NonDet;
        Carrier carrier = alg.carrier;
        m.apply = [zero, carrier](const MStruct<Number>& s) {
            if (s.empty()) return zero;
            Number total(0);
            for (const auto& o : s.outcomes()) total += o.value;
            Number n = carrier == Carrier::Float ? Number(static_cast<double>(s.size()))
                                                 : Number(static_cast<std::int64_t>(s.size()));
            return total / n;
        };
        m.documented_status = status({P, F, additive ? P : U, P});
    } else if (name == "max_var") {
        m.kind = Kind::NonDet;
        BinaryOp step = [](const Number& x, const Number& v) {
            Number bumped = x + Number(1);
            return bumped < v ? v : bumped;
        };
        m.apply = [step, zero](const MStruct<Number>& s) { return foldr(s, step, zero); };
        m.documented_status = status({F, F, additive ? P : U, P});
    } else if (name == "length") {
        m.kind = Kind::NonDet;
        m.apply = [carrier = alg.carrier](const MStruct<Number>& s) {
            Number n(static_cast<std::int64_t>(s.size()));
            return carrier == Carrier::Float ? Number(n.as_double()) : n;
        };
        m.documented_status = status({F, F, F, P});
    } else if (name == "expected") {
        if (!exact_division) throw MeasureError("expected needs a rational or float carrier");
        m.kind = Kind::Stoch;
        m.apply = [zero](const MStruct<Number>& s) {
            Number total = zero;
            for (const auto& o : s.outcomes()) total += o.value * o.weight;
            return total;
        };
        m.documented_status = status({P, P, P, P});
    } else {
        throw MeasureError("unknown measure \"" + std::string(name) + "\"");
    }
    return m;
}

Measure monoid_fold_measure(const MonoidSpec& spec) {
    Measure m;
    m.name = "monoid_fold";
    m.kind = Kind::NonDet;
    m.monoid = spec;
    m.apply = [op = spec.odot, base = spec.neutr](const MStruct<Number>& s) { return foldr(s, op, base); };
    m.documented_status = status({U, U, U, U});
    return m;
}

LawReport check_meas_pure(const Measure& meas, const ValueAlgebra& alg, std::span<const Number> values,
                          std::uint64_t budget, std::uint64_t seed) {
    LawReport report;
    report.subject = meas.label();
    report.laws.push_back(run_cases(std::string(kMeasPure), values.size(), budget, seed,
                                    [&](std::uint64_t i) -> std::optional<std::string> {
                                        const Number& v = values[i];
                                        Number lhs = meas(pure(meas.kind, v));
                                        if (alg.equal(lhs, v)) return std::nullopt;
                                        return "meas (pure " + v.str() + ") = " + lhs.str() + " != " + v.str();
                                    }));
    return report;
}

LawReport check_meas_join(const Measure& meas, const ValueAlgebra& alg,
                          const StructureGenerator<MStruct<Number>>& nested, std::uint64_t budget,
                          std::uint64_t seed) {
    if (nested.kind() != meas.kind) throw std::invalid_argument("nested generator kind differs from measure kind");
    LawReport report;
    report.subject = meas.label();
    report.laws.push_back(run_cases(std::string(kMeasJoin), nested.count(), budget, seed,
                                    [&](std::uint64_t i) -> std::optional<std::string> {
                                        auto mmv = nested.at(i);
                                        Number lhs = meas(join(mmv));
                                        Number rhs = meas(map(meas, mmv));
                                        if (alg.equal(lhs, rhs)) return std::nullopt;
                                        return "nest " + describe(mmv) + ": meas (join) = " + lhs.str() +
                                               " != meas (map meas) = " + rhs.str();
                                    }));
    return report;
}

LawReport check_meas_plus(const Measure& meas, const ValueAlgebra& alg, std::span<const Number> values,
                          const StructureGenerator<Number>& structs, std::uint64_t budget, std::uint64_t seed,
                          PlusVariant variant) {
    if (structs.kind() != meas.kind) throw std::invalid_argument("structure generator kind differs from measure kind");
    if (variant == PlusVariant::NotEmpty && structs.allow_empty()) {
        throw std::invalid_argument("measPlusSpec precondition: structure generator may produce empty structures");
    }
    LawReport report;
    report.subject = meas.label();
    const std::uint64_t nv = values.size();
    std::string name(kMeasPlus);
    if (variant == PlusVariant::Unrestricted) name += " (unrestricted)";
    report.laws.push_back(run_cases(name, sat_mul(nv, structs.count()), budget, seed,
                                    [&](std::uint64_t i) -> std::optional<std::string> {
                                        const Number& v = values[i % nv];
                                        auto mv = structs.at(i / nv);
                                        Number lhs = meas(map([&](const Number& x) { return alg.combine(v, x); }, mv));
                                        Number rhs = alg.combine(v, meas(mv));
                                        if (alg.equal(lhs, rhs)) return std::nullopt;
                                        const std::string op = v.str() + " " + op_symbol(alg.plus_name);
                                        return "mv = " + describe(mv) + ": meas (map (" + op + ") mv) = " + lhs.str() +
                                               " != " + op + " meas mv = " + rhs.str();
                                    }));
    return report;
}

LawReport check_meas_mon(const Measure& meas, const ValueAlgebra& alg, const TablePairs& tables,
                         const StructureGenerator<Number>& structs, std::uint64_t budget, std::uint64_t seed) {
    if (structs.kind() != meas.kind) throw std::invalid_argument("structure generator kind differs from measure kind");
    std::vector<std::pair<Number, Number>> point_pairs;
    for (const auto& a : tables.grid) {
        for (const auto& b : tables.grid) {
            if (alg.le(a, b)) point_pairs.emplace_back(a, b);
        }
    }
    const std::uint64_t np = point_pairs.size();
    const std::uint64_t table_space = sat_pow(np, tables.domain);
    std::vector<std::uint64_t> radices(tables.domain, np);

    LawReport report;
    report.subject = meas.label();
    report.laws.push_back(run_cases(
        std::string(kMeasMon), sat_mul(table_space, structs.count()), budget, seed,
        [&](std::uint64_t i) -> std::optional<std::string> {
            auto digits = mixed_radix(i % table_space, radices);
            auto ma = structs.at(i / table_space);
            auto f = [&](const Number& x) { return point_pairs[digits.at(x.as_int())].first; };
            auto g = [&](const Number& x) { return point_pairs[digits.at(x.as_int())].second; };
            Number lhs = meas(map(f, ma));
            Number rhs = meas(map(g, ma));
            if (alg.le(lhs, rhs)) return std::nullopt;
            std::string table = "f/g = {";
            for (std::size_t d = 0; d < digits.size(); ++d) {
                if (d) table += ", ";
                table += std::to_string(d) + ": " + point_pairs[digits[d]].first.str() + "/" +
                         point_pairs[digits[d]].second.str();
            }
            return table + "}, ma = " + describe(ma) + ": " + lhs.str() + " not <= " + rhs.str();
        }));
    return report;
}

LawReport check_monoid_preconditions(const MonoidSpec& m, const ValueAlgebra& alg, std::span<const Number> values,
                                     std::uint64_t budget, std::uint64_t seed) {
    LawReport report;
    report.subject = "monoid (" + m.odot_name + ", " + m.neutr.str() + ") with plus " + alg.plus_name;
    const std::uint64_t n = values.size();
    const Number& e = m.neutr;

    report.laws.push_back(run_cases("odotNeutrRight", n, budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        const Number& l = values[i];
        Number lhs = m.odot(l, e);
        if (alg.equal(lhs, l)) return std::nullopt;
        return l.str() + " odot " + e.str() + " = " + lhs.str() + " != " + l.str();
    }));

    report.laws.push_back(run_cases("odotNeutrLeft", n, budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        const Number& r = values[i];
        Number lhs = m.odot(e, r);
        if (alg.equal(lhs, r)) return std::nullopt;
        return e.str() + " odot " + r.str() + " = " + lhs.str() + " != " + r.str();
    }));

    report.laws.push_back(run_cases("odotAssociative", sat_pow(n, 3), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n, n});
        const Number &l = values[d[0]], &v = values[d[1]], &r = values[d[2]];
        Number lhs = m.odot(l, m.odot(v, r));
        Number rhs = m.odot(m.odot(l, v), r);
        if (alg.equal(lhs, rhs)) return std::nullopt;
        return "(" + l.str() + ", " + v.str() + ", " + r.str() + "): " + lhs.str() + " != " + rhs.str();
    }));

    report.laws.push_back(run_cases("oplusOdotDistrLeft", sat_pow(n, 3), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n, n});
        const Number &a = values[d[0]], &l = values[d[1]], &r = values[d[2]];
        Number lhs = alg.combine(a, m.odot(l, r));
        Number rhs = m.odot(alg.combine(a, l), alg.combine(a, r));
        if (alg.equal(lhs, rhs)) return std::nullopt;
        return "(n, l, r) = (" + a.str() + ", " + l.str() + ", " + r.str() + "): " + lhs.str() + " != " + rhs.str();
    }));

    report.laws.push_back(run_cases("odotMon", sat_pow(n, 4), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto d = mixed_radix(i, {n, n, n, n});
        const Number &a = values[d[0]], &b = values[d[1]], &c = values[d[2]], &dd = values[d[3]];
        if (!alg.le(a, b) || !alg.le(c, dd)) return std::nullopt;
        Number lhs = m.odot(a, c);
        Number rhs = m.odot(b, dd);
        if (alg.le(lhs, rhs)) return std::nullopt;
        return a.str() + " <= " + b.str() + ", " + c.str() + " <= " + dd.str() + " but " + lhs.str() + " not <= " +
               rhs.str();
    }));

    return report;
}

LawReport check_conditions(const Measure& meas, const ValueAlgebra& alg, const ConditionConfig& config) {
    auto structs = value_structures(meas.kind, config.values, config.max_size, false, config.weights);
    auto nested = nest(structs, config.max_size, false);
    auto domain = value_structures(meas.kind, int_grid(0, static_cast<std::int64_t>(config.mon_domain) - 1),
                                   config.max_size, false, config.weights);
    auto plus_structs = config.plus_variant == PlusVariant::Unrestricted && meas.kind == Kind::NonDet
                            ? value_structures(meas.kind, config.values, config.max_size, true, config.weights)
                            : structs;

    LawReport report;
    report.subject = meas.label();
    auto take = [&report](LawReport r) { report.laws.push_back(std::move(r.laws.front())); };
    take(check_meas_pure(meas, alg, config.values, config.budget, config.seed));
    take(check_meas_join(meas, alg, nested, config.budget, config.seed));
    take(check_meas_plus(meas, alg, config.values, plus_structs, config.budget, config.seed, config.plus_variant));
    take(check_meas_mon(meas, alg, TablePairs{config.mon_domain, config.values}, domain, config.budget, config.seed));
    return report;
}

}  // namespace mbi

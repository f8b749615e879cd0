#include "mbi/monad_laws.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mbi {

namespace {

Number law_f(const Number& x) { return x * Number(2) + Number(1); }
Number law_g(const Number& x) { return x * x; }

// Deterministic pseudo-random choice of a structure for value x, so that the
// continuation is a function of x alone.
std::uint64_t index_for(const Number& x, std::uint64_t count) {
    return std::hash<std::string>{}(x.str()) % count;
}

std::string mismatch(const std::string& input, const std::string& lhs, const std::string& rhs) {
    return "input " + input + ": lhs " + lhs + " != rhs " + rhs;
}

void require_kind(Kind kind, const StructureGenerator<Number>& gen) {
    if (gen.kind() != kind) {
        throw std::invalid_argument("generator produces " + std::string(to_string(gen.kind())) +
                                    " structures, expected " + std::string(to_string(kind)));
    }
}

}  // namespace

LawReport check_monad_laws(Kind kind, const StructureGenerator<Number>& gen, std::uint64_t budget,
                           std::uint64_t seed, double tolerance) {
    require_kind(kind, gen);
    LawReport report;
    report.subject = "monad laws (" + std::string(to_string(kind)) + ")";

    auto eq = [tolerance](const auto& a, const auto& b) { return equal_within(a, b, tolerance); };
    auto nested = nest(gen, gen.max_size(), gen.allow_empty());
    // Three levels multiply quickly; halves keep Stoch nests enumerable.
    WeightScheme halves{2, gen.weights().as_float};
    StructureGenerator<Number> small(
        kind, [&gen](std::uint64_t i) { return gen.atom(i); }, gen.atom_count(),
        std::min<std::size_t>(gen.max_size(), 2), gen.allow_empty(), kind == Kind::Stoch ? halves : gen.weights());
    auto deep = nest(nest(small, 2, gen.allow_empty()), 2, gen.allow_empty());
    auto k = [&gen](const Number& x) { return gen.at(index_for(x, gen.count())); };

    report.laws.push_back(run_cases("mapPresId", gen.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = gen.at(i);
        auto lhs = map([](const Number& x) { return x; }, ma);
        if (eq(lhs, ma)) return std::nullopt;
        return mismatch(describe(ma), describe(lhs), describe(ma));
    }));

    report.laws.push_back(run_cases("mapPresComp", gen.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = gen.at(i);
        auto lhs = map([](const Number& x) { return law_g(law_f(x)); }, ma);
        auto rhs = map(law_g, map(law_f, ma));
        if (eq(lhs, rhs)) return std::nullopt;
        return mismatch(describe(ma), describe(lhs), describe(rhs));
    }));

    report.laws.push_back(run_cases("pureNatTrans", gen.atom_count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        Number a = gen.atom(i);
        auto lhs = map(law_f, pure(kind, a));
        auto rhs = pure(kind, law_f(a));
        if (eq(lhs, rhs)) return std::nullopt;
        return mismatch(a.str(), describe(lhs), describe(rhs));
    }));

    report.laws.push_back(run_cases("joinNatTrans", nested.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto mma = nested.at(i);
        auto lhs = map(law_f, join(mma));
        auto rhs = join(map([](const MStruct<Number>& ma) { return map(law_f, ma); }, mma));
        if (eq(lhs, rhs)) return std::nullopt;
        return mismatch(describe(mma), describe(lhs), describe(rhs));
    }));

    report.laws.push_back(run_cases("pureNeutralLeft", gen.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = gen.at(i);
        auto lhs = join(pure(kind, ma));
        if (eq(lhs, ma)) return std::nullopt;
        return mismatch(describe(ma), describe(lhs), describe(ma));
    }));

    report.laws.push_back(run_cases("pureNeutralRight", gen.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = gen.at(i);
        auto lhs = join(map([kind](const Number& x) { return pure(kind, x); }, ma));
        if (eq(lhs, ma)) return std::nullopt;
        return mismatch(describe(ma), describe(lhs), describe(ma));
    }));

    report.laws.push_back(run_cases("joinAssoc", deep.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto mmma = deep.at(i);
        auto lhs = join(map([](const MStruct<MStruct<Number>>& mma) { return join(mma); }, mmma));
        auto rhs = join(join(mmma));
        if (eq(lhs, rhs)) return std::nullopt;
        return mismatch(describe(mmma), describe(lhs), describe(rhs));
    }));

    report.laws.push_back(run_cases("bindJoinSpec", gen.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = gen.at(i);
        auto lhs = bind(ma, k);
        auto rhs = join(map(k, ma));
        if (eq(lhs, rhs)) return std::nullopt;
        return mismatch(describe(ma), describe(lhs), describe(rhs));
    }));

    return report;
}

LawReport check_nonempty_preservation(Kind kind, const StructureGenerator<Number>& gen, std::uint64_t budget,
                                      std::uint64_t seed) {
    require_kind(kind, gen);
    LawReport report;
    report.subject = "non-emptiness preservation (" + std::string(to_string(kind)) + ")";
    auto ne = gen.nonempty();

    report.laws.push_back(run_cases("pureNotEmpty", gen.atom_count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        Number a = gen.atom(i);
        if (is_not_empty(pure(kind, a))) return std::nullopt;
        return "pure " + a.str() + " is empty";
    }));

    report.laws.push_back(run_cases("mapPresNotEmpty", ne.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = ne.at(i);
        if (is_not_empty(map(law_f, ma))) return std::nullopt;
        return "map f " + describe(ma) + " is empty";
    }));

    report.laws.push_back(run_cases("bindPresNotEmpty", ne.count(), budget, seed, [&](std::uint64_t i) -> std::optional<std::string> {
        auto ma = ne.at(i);
        auto k = [&ne](const Number& x) { return ne.at(index_for(x, ne.count())); };
        if (is_not_empty(bind(ma, k))) return std::nullopt;
        return "bind " + describe(ma) + " k is empty";
    }));

    return report;
}

}  // namespace mbi

#include "mbi/verify.hpp"

#include "mbi/monad_laws.hpp"
#include "mbi/problem_file.hpp"
#include "mbi/trajectories.hpp"

#include <algorithm>
#include <sstream>

namespace mbi {

namespace {

const char* const kCertified = "backward induction certified at desk scale";
const char* const kNotCertified = "not certified";

VerificationEntry from_laws(std::string name, LawReport laws) {
    VerificationEntry e;
    e.name = std::move(name);
    for (const auto& l : laws.laws) {
        e.cases += l.cases;
        e.exhaustive = e.exhaustive && l.exhaustive;
        if (l.failed() && e.status != Status::Fail) {
            e.status = Status::Fail;
            e.counterexample = l.name + ": " + l.counterexample;
        }
    }
    e.laws = std::move(laws.laws);
    return e;
}

VerificationEntry from_law(const CheckResult& l) {
    VerificationEntry e;
    e.name = l.name;
    e.status = l.status;
    e.cases = l.cases;
    e.exhaustive = l.exhaustive;
    e.counterexample = l.counterexample;
    e.note = l.note;
    return e;
}

VerificationEntry from_oracle(std::string name, const OracleReport& r, const std::string& reference = "bi",
                              const std::string& candidate = "enumerated") {
    VerificationEntry e;
    e.name = std::move(name);
    e.status = r.passed ? Status::Pass : Status::Fail;
    e.cases = r.cases;
    e.witness = r.witness;
    e.disagreements = r.disagreements;
    e.note = r.detail;
    if (r.witness) {
        e.counterexample = r.witness->policy + " at " + r.witness->state + ": " + reference + " " +
                           r.witness->reference.str() + ", " + candidate + " " + r.witness->candidate.str();
    }
    return e;
}

VerificationEntry skipped(std::string name, std::string reason) {
    VerificationEntry e;
    e.name = std::move(name);
    e.status = Status::Skipped;
    e.exhaustive = false;
    e.note = std::move(reason);
    return e;
}

template <class F>
VerificationEntry guarded(std::string name, F&& f) {
    try {
        return f();
    } catch (const CapExceeded& ex) {
        return skipped(std::move(name), ex.what());
    }
}

VerificationEntry check_trj_nonempty(const Problem& problem, std::size_t t, std::size_t n, std::uint64_t cap) {
    VerificationEntry e;
    e.name = "trjNotEmpty";
    for (std::size_t len = 0; len <= n && e.status == Status::Pass; ++len) {
        for_each_policy_seq(problem, t, len, cap, [&](const PolicySeq& ps, std::uint64_t) {
            for (const auto& x : problem.states(t)) {
                ++e.cases;
                auto m = trj(problem, ps, x);
                const bool heads_ok = std::all_of(m.outcomes().begin(), m.outcomes().end(),
                                                  [&](const auto& o) { return o.value.head() == x; });
                if (m.empty() || !heads_ok) {
                    e.status = Status::Fail;
                    e.counterexample = describe(problem, ps) + " from " + x +
                                       (m.empty() ? " has no trajectories" : " has a trajectory not starting at x");
                    return false;
                }
            }
            return true;
        });
    }
    return e;
}

nlohmann::ordered_json witness_json(const Witness& w) {
    return {{"policy", w.policy},
            {"state", w.state},
            {"reference", number_to_json(w.reference)},
            {"candidate", number_to_json(w.candidate)}};
}

nlohmann::ordered_json law_json(const CheckResult& l) {
    nlohmann::ordered_json j;
    j["name"] = l.name;
    j["status"] = std::string(to_string(l.status));
    j["cases"] = l.cases;
    j["exhaustive"] = l.exhaustive;
    j["counterexample"] = l.counterexample.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(l.counterexample);
    return j;
}

}  // namespace

const VerificationEntry* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names = {
        "monadLaws",      "nonEmptyPreservation", "totalPreorder", "plusMonSpec",    "measPureSpec",
        "measJoinSpec",   "measPlusSpec",         "measMonSpec",   "trjNotEmpty",    "valEquivalence",
        "optimalityVal",  "optimalityValPrime",   "bellman",
    };
    return names;
}

std::vector<Number> value_samples(const Problem& problem) {
    const auto& alg = problem.alg();
    std::vector<Number> out{alg.zero};
    for (std::int64_t i = 0; i <= 3; ++i) out.push_back(alg.coerce(Number(i)));
    for (const auto& st : problem.spec().steps) {
        for (const auto& [x, by_y] : st.reward) {
            for (const auto& [y, by_next] : by_y) {
                for (const auto& [x_next, r] : by_next) out.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Number& a, const Number& b) { return a < b; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerificationReport run_verification(const Problem& problem, std::size_t t, std::size_t n,
                                    const VerifyOptions& options) {
    problem.require_solvable(t, n);
    const auto& alg = problem.alg();
    const auto& meas = problem.measure();

    VerificationReport report;
    report.problem = problem.name();
    report.measure = meas.label();
    report.kind = problem.kind();
    report.step = t;
    report.horizon = n;
    report.budget = options.budget;
    report.seed = options.seed;
    report.enumeration_cap = options.enumeration_cap;

    WeightScheme weights;
    weights.as_float = alg.carrier == Carrier::Float;
    auto law_gen = value_structures(problem.kind(), int_grid(0, 2), 3, problem.kind() == Kind::NonDet, weights);
    report.checks.push_back(
        from_laws("monadLaws", check_monad_laws(problem.kind(), law_gen, options.budget, options.seed, 1e-9)));
    report.checks.push_back(from_laws("nonEmptyPreservation", check_nonempty_preservation(problem.kind(), law_gen,
                                                                                           options.budget, options.seed)));

    const auto samples = value_samples(problem);
    report.checks.push_back(
        from_laws("totalPreorder", check_total_preorder(alg, samples, options.budget, options.seed)));
    report.checks.push_back(from_law(check_plus_mon(alg, samples, options.budget, options.seed).laws.front()));

    ConditionConfig config;
    config.values = samples;
    config.max_size = 3;
    config.weights = weights;
    config.budget = options.budget;
    config.seed = options.seed;
    config.plus_variant = options.plus_variant;
    auto conditions = check_conditions(meas, alg, config);
    for (const auto& law : conditions.laws) {
        VerificationEntry e = from_law(law);
        e.name = law.name.substr(0, law.name.find(' '));
        if (e.name != law.name) e.note = "unrestricted variant";
        report.checks.push_back(std::move(e));
    }

    const std::uint64_t cap = options.enumeration_cap;
    report.checks.push_back(guarded("trjNotEmpty", [&] { return check_trj_nonempty(problem, t, n, cap); }));
    report.checks.push_back(guarded("valEquivalence", [&] {
        return from_oracle("valEquivalence", check_val_equivalence(problem, t, n, cap, true), "val", "val'");
    }));

    PolicySeq solution = bi(problem, t, n);
    report.checks.push_back(guarded("optimalityVal", [&] {
        return from_oracle("optimalityVal", check_optimality(problem, solution, ValueFn::Val, cap));
    }));
    report.checks.push_back(guarded("optimalityValPrime", [&] {
        return from_oracle("optimalityValPrime", check_optimality(problem, solution, ValueFn::ValPrime, cap));
    }));
    report.checks.push_back(guarded("bellman", [&] { return from_oracle("bellman", check_bellman(problem, t, n, cap)); }));

    auto status_of = [&](std::string_view name) { return report.find(name)->status; };
    bool any_failed = std::any_of(report.checks.begin(), report.checks.end(),
                                  [](const VerificationEntry& e) { return e.status == Status::Fail; });
    bool core_pass = true;
    for (std::string_view name : {"measPureSpec", "measJoinSpec", "measPlusSpec", "measMonSpec", "optimalityVal",
                                  "optimalityValPrime"}) {
        core_pass = core_pass && status_of(name) == Status::Pass;
    }
    report.certified = core_pass && !any_failed;
    report.harness_defect = status_of("measPureSpec") == Status::Pass && status_of("measJoinSpec") == Status::Pass &&
                            status_of("measPlusSpec") == Status::Pass && status_of("valEquivalence") == Status::Fail;
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["problem"] = report.problem;
    j["measure"] = report.measure;
    j["uncertainty"] = std::string(to_string(report.kind));
    j["step"] = report.step;
    j["horizon"] = report.horizon;
    j["budget"] = report.budget;
    j["seed"] = report.seed;
    j["enumeration_cap"] = report.enumeration_cap;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = std::string(to_string(c.status));
        e["cases"] = c.cases;
        e["exhaustive"] = c.exhaustive;
        e["counterexample"] = c.counterexample.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.counterexample);
        e["note"] = c.note.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.note);
        e["witness"] = c.witness ? witness_json(*c.witness) : nlohmann::ordered_json();
        auto disagreements = nlohmann::ordered_json::array();
        for (const auto& w : c.disagreements) disagreements.push_back(witness_json(w));
        e["disagreements"] = std::move(disagreements);
        auto laws = nlohmann::ordered_json::array();
        for (const auto& l : c.laws) laws.push_back(law_json(l));
        e["laws"] = std::move(laws);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["certified"] = report.certified;
    j["verdict"] = report.certified ? kCertified : kNotCertified;
    j["harness_defect"] = report.harness_defect;
    return j;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "problem " << report.problem << "  measure " << report.measure << "  uncertainty "
       << to_string(report.kind) << "\n";
    os << "step " << report.step << "  horizon " << report.horizon << "  budget " << report.budget << "  seed "
       << report.seed << "\n";
    for (const auto& c : report.checks) {
        os << "  " << to_string(c.status) << "  " << c.name << "  (" << c.cases << " cases"
           << (c.exhaustive ? ", exhaustive" : ", sampled") << ")";
        if (!c.counterexample.empty()) os << "\n        counter-example: " << c.counterexample;
        if (c.disagreements.size() > 1) {
            os << "\n        " << c.disagreements.size() << " disagreements in total (listed in the JSON report)";
        }
        if (c.status == Status::Skipped && !c.note.empty()) os << "\n        " << c.note;
        os << "\n";
    }
    if (report.harness_defect) os << "harness defect: conditions hold but val and val' disagree\n";
    os << "verdict: " << (report.certified ? kCertified : kNotCertified) << "\n";
    return os.str();
}

}  // namespace mbi

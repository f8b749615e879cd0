#include "commands.hpp"

#include "mbi/examples.hpp"
#include "mbi/problem_file.hpp"
#include "mbi/trajectories.hpp"
#include "mbi/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <set>

namespace sdp_cli {

namespace {

using mbi::Number;
using mbi::PolicySeq;
using mbi::Problem;
using ojson = nlohmann::ordered_json;

struct Resolved {
    std::size_t step;
    std::size_t horizon;
};

Resolved resolve(const Problem& p, const Range& r) {
    const std::size_t t = r.step.value_or(p.start_step());
    std::size_t n = 0;
    if (r.horizon) {
        n = *r.horizon;
    } else if (t <= p.end_step()) {
        n = p.end_step() - t;
    }
    p.require_solvable(t, n);
    return {t, n};
}

std::string show_state(const mbi::StateId& x) { return x.empty() ? "\"\"" : x; }

bool wants(const std::string& value_fn, mbi::ValueFn f) {
    if (value_fn == "both") return true;
    return f == mbi::ValueFn::Val ? value_fn == "val" : value_fn == "val-prime";
}

void check_value_fn(const std::string& value_fn) {
    if (value_fn != "val" && value_fn != "val-prime" && value_fn != "both") {
        throw UsageError("--value-fn must be val, val-prime or both");
    }
}

ojson header(const std::string& command, const Problem& p, const Resolved& r) {
    ojson j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["problem"] = p.name();
    j["measure"] = p.measure().label();
    j["uncertainty"] = std::string(mbi::to_string(p.kind()));
    j["step"] = r.step;
    j["horizon"] = r.horizon;
    return j;
}

void text_header(std::ostream& out, const Problem& p, const Resolved& r) {
    out << "problem " << p.name() << "  measure " << p.measure().label() << "  uncertainty "
        << mbi::to_string(p.kind()) << "\n";
    out << "step " << r.step << "  horizon " << r.horizon << "\n";
}

ojson policy_json(const Problem& p, const PolicySeq& ps) {
    auto arr = ojson::array();
    for (const auto& pol : ps.policies) {
        ojson choice = ojson::object();
        for (const auto& x : p.states(pol.step)) choice[x] = pol(x);
        arr.push_back({{"step", pol.step}, {"choice", std::move(choice)}});
    }
    return arr;
}

void policy_text(std::ostream& out, const Problem& p, const PolicySeq& ps) {
    out << "policy\n";
    if (ps.empty()) out << "  (empty)\n";
    for (const auto& pol : ps.policies) {
        out << "  t" << pol.step << " ";
        bool first = true;
        for (const auto& x : p.states(pol.step)) {
            out << (first ? " " : ", ") << show_state(x) << ": " << pol(x);
            first = false;
        }
        out << "\n";
    }
}

ojson witness_json(const std::optional<mbi::Witness>& w) {
    if (!w) return nullptr;
    return {{"policy", w->policy},
            {"state", w->state},
            {"reference", mbi::number_to_json(w->reference)},
            {"candidate", mbi::number_to_json(w->candidate)}};
}

ojson nullable(const std::optional<Number>& n) { return n ? mbi::number_to_json(*n) : ojson(); }

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

const ojson& require_key(const ojson& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw UsageError(path + ": missing key \"" + key + "\"");
    return *it;
}

}  // namespace

std::optional<std::string> action_order(const Problem& problem, const PolicySeq& ps, const mbi::StateId& x) {
    if (!problem.spec().states_encode_actions) return std::nullopt;
    auto trajectories = mbi::trj(problem, ps, x);
    if (trajectories.size() != 1) return std::nullopt;
    std::string order = trajectories.outcomes()[0].value.final_state;
    std::set<mbi::ControlId> actions;
    for (std::size_t t = problem.start_step(); t < problem.end_step(); ++t) {
        for (const auto& s : problem.states(t)) {
            for (const auto& y : problem.controls(t, s)) actions.insert(y);
        }
    }
    const std::string done = order;
    for (const auto& a : actions) {
        if (done.find(a) == std::string::npos) order += a;
    }
    return order;
}

mbi::PolicySeq read_policy_file(const Problem& problem, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mbi::ProblemFileError(mbi::ProblemFileError::Category::Io, path, "cannot open policy file");
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const ojson::parse_error& e) {
        throw mbi::ProblemFileError(mbi::ProblemFileError::Category::Json, "byte " + std::to_string(e.byte), e.what());
    }
    if (!j.is_object()) throw UsageError(path + ": expected an object");
    const auto& version = require_key(j, "schema_version", path);
    if (version != 1) throw UsageError(path + ": unsupported schema_version");
    const auto& start = require_key(j, "start_step", path);
    if (!start.is_number_unsigned()) throw UsageError(path + ": start_step must be a non-negative integer");
    const auto& policies = require_key(j, "policies", path);
    if (!policies.is_array()) throw UsageError(path + ": policies must be an array");

    PolicySeq ps{start.get<std::size_t>(), {}};
    problem.require_solvable(ps.start_step, policies.size());
    for (std::size_t i = 0; i < policies.size(); ++i) {
        const std::size_t t = ps.start_step + i;
        mbi::Policy pol;
        pol.step = t;
        const auto& entry = policies[i];
        for (const auto& x : problem.states(t)) {
            if (entry.is_string()) {
                pol.choice[x] = entry.get<std::string>();
            } else if (entry.is_object() && entry.contains(x) && entry.at(x).is_string()) {
                pol.choice[x] = entry.at(x).get<std::string>();
            } else {
                throw UsageError(path + ": policies/" + std::to_string(i) + " gives no control for state " +
                                 show_state(x));
            }
        }
        ps.policies.push_back(std::move(pol));
    }
    mbi::check_policy_seq(problem, ps);
    return ps;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    check_value_fn(o.value_fn);
    Problem p(mbi::parse_problem_file(o.file));
    const Resolved r = resolve(p, o.range);
    const PolicySeq ps = mbi::bi(p, r.step, r.horizon);
    const bool want_val = wants(o.value_fn, mbi::ValueFn::Val);
    const bool want_prime = wants(o.value_fn, mbi::ValueFn::ValPrime);

    struct Row {
        mbi::StateId state;
        std::optional<Number> v, vp;
        std::optional<std::string> order;
    };
    std::vector<Row> rows;
    for (const auto& x : p.states(r.step)) {
        Row row{x, {}, {}, action_order(p, ps, x)};
        if (want_val) row.v = mbi::val(p, ps, x);
        if (want_prime) row.vp = mbi::val_prime(p, ps, x);
        rows.push_back(std::move(row));
    }

    if (o.format == Format::Json) {
        ojson j = header("solve", p, r);
        j["value_fn"] = o.value_fn;
        j["policy"] = policy_json(p, ps);
        auto values = ojson::array();
        for (const auto& row : rows) {
            values.push_back({{"state", row.state},
                              {"val", nullable(row.v)},
                              {"val_prime", nullable(row.vp)},
                              {"order", row.order ? ojson(*row.order) : ojson()}});
        }
        j["values"] = std::move(values);
        emit(out, j);
        return kOk;
    }

    text_header(out, p, r);
    policy_text(out, p, ps);
    out << "values\n";
    for (const auto& row : rows) {
        out << "  " << show_state(row.state);
        if (row.v) out << "  val " << row.v->str();
        if (row.vp) out << "  val' " << row.vp->str();
        if (row.order) out << "  order " << *row.order;
        out << "\n";
    }
    return kOk;
}

int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
    Problem p(mbi::parse_problem_file(o.file));
    const Resolved r = resolve(p, o.range);
    mbi::VerifyOptions vo;
    vo.budget = o.budget;
    vo.seed = o.seed;
    auto report = mbi::run_verification(p, r.step, r.horizon, vo);
    if (o.format == Format::Json) {
        emit(out, mbi::to_json(report));
    } else {
        out << mbi::to_text(report);
    }
    return report.certified ? kOk : kCheckFailed;
}

int cmd_trajectories(const TrajectoryOptions& o, std::ostream& out) {
    Problem p(mbi::parse_problem_file(o.file));

    std::vector<PolicySeq> seqs;
    Resolved r{};
    if (o.policy == "optimal" || o.policy == "all") {
        r = resolve(p, o.range);
        if (o.policy == "optimal") {
            seqs.push_back(mbi::bi(p, r.step, r.horizon));
        } else {
            seqs = mbi::enumerate_policy_seqs(p, r.step, r.horizon);
        }
    } else {
        PolicySeq ps = read_policy_file(p, o.policy);
        if (o.range.step && *o.range.step != ps.start_step) {
            throw UsageError("--step " + std::to_string(*o.range.step) + " differs from the policy file's start_step " +
                             std::to_string(ps.start_step));
        }
        if (o.range.horizon && *o.range.horizon != ps.size()) {
            throw UsageError("--horizon " + std::to_string(*o.range.horizon) + " differs from the policy file's " +
                             std::to_string(ps.size()) + " policies");
        }
        r = {ps.start_step, ps.size()};
        seqs.push_back(std::move(ps));
    }

    std::vector<mbi::StateId> states;
    if (o.state) {
        if (!p.has_state(r.step, *o.state)) {
            throw mbi::LookupError("unknown state " + show_state(*o.state) + " at step " + std::to_string(r.step));
        }
        states.push_back(*o.state);
    } else {
        states = p.states(r.step);
    }
    const bool weighted = p.kind() == mbi::Kind::Stoch;

    ojson runs = ojson::array();
    std::ostringstream text;
    for (const auto& ps : seqs) {
        for (const auto& x : states) {
            auto m = mbi::trj(p, ps, x);
            Number measured = mbi::val_prime(p, ps, x);
            ojson trajectories = ojson::array();
            text << "policy " << mbi::describe(p, ps) << "\n";
            text << "from " << show_state(x) << "\n";
            for (const auto& outcome : m.outcomes()) {
                const auto& traj = outcome.value;
                Number sum = mbi::sum_r(p, traj);
                ojson path = ojson::array();
                for (const auto& [s, y] : traj.steps) path.push_back({{"state", s}, {"control", y}});
                trajectories.push_back({{"path", std::move(path)},
                                        {"final", traj.final_state},
                                        {"sum", mbi::number_to_json(sum)},
                                        {"weight", weighted ? mbi::number_to_json(outcome.weight) : ojson()}});
                text << "  " << mbi::describe(traj) << "  sum " << sum.str();
                if (weighted) text << "  weight " << outcome.weight.str();
                text << "\n";
            }
            text << "  measured total reward " << measured.str() << "\n";
            runs.push_back({{"policy", policy_json(p, ps)},
                            {"state", x},
                            {"trajectories", std::move(trajectories)},
                            {"measured", mbi::number_to_json(measured)}});
        }
    }

    if (o.format == Format::Json) {
        ojson j = header("trajectories", p, r);
        j["policy_source"] = o.policy == "optimal" || o.policy == "all" ? o.policy : "file";
        j["runs"] = std::move(runs);
        emit(out, j);
    } else {
        text_header(out, p, r);
        out << text.str();
    }
    return kOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
    check_value_fn(o.value_fn);
    Problem p(mbi::parse_problem_file(o.file));
    const Resolved r = resolve(p, o.range);
    const PolicySeq ps = mbi::bi(p, r.step, r.horizon);

    bool all_passed = true;
    ojson results = ojson::array();
    std::ostringstream text;
    for (auto f : {mbi::ValueFn::Val, mbi::ValueFn::ValPrime}) {
        if (!wants(o.value_fn, f)) continue;
        auto rep = mbi::check_optimality(p, ps, f);
        all_passed = all_passed && rep.passed;
        results.push_back({{"value_fn", std::string(mbi::to_string(f))},
                           {"passed", rep.passed},
                           {"sequences", rep.sequences},
                           {"cases", rep.cases},
                           {"witness", witness_json(rep.witness)}});
        text << "  " << (rep.passed ? "PASS" : "FAIL") << "  optimal w.r.t. " << mbi::to_string(f) << "  ("
             << rep.sequences << " sequences, " << rep.cases << " cases)\n";
        if (rep.witness) {
            text << "        " << rep.witness->policy << " at " << show_state(rep.witness->state) << ": enumerated "
                 << rep.witness->candidate.str() << ", bi " << rep.witness->reference.str() << "\n";
        }
    }

    if (o.format == Format::Json) {
        ojson j = header("oracle", p, r);
        j["policy"] = policy_json(p, ps);
        j["results"] = std::move(results);
        j["passed"] = all_passed;
        emit(out, j);
    } else {
        text_header(out, p, r);
        policy_text(out, p, ps);
        out << "oracle\n" << text.str();
    }
    return all_passed ? kOk : kCheckFailed;
}

int cmd_export(const ExportOptions& o, std::ostream& out) {
    mbi::SdpSpec spec;
    if (o.example == "climate") {
        spec = mbi::examples::climate_spec(o.measure, o.horizon);
    } else if (o.example == "stochastic_climate") {
        spec = mbi::examples::stochastic_climate_spec(o.horizon);
    } else if (o.example == "scheduling") {
        spec = mbi::examples::scheduling_spec();
    } else {
        throw UsageError("unknown example \"" + o.example + "\" (climate, stochastic_climate, scheduling)");
    }
    out << mbi::serialize_problem(spec);
    return kOk;
}

void report_error(std::ostream& err, const std::exception& e) {
    if (const auto* pf = dynamic_cast<const mbi::ProblemFileError*>(&e)) {
        err << "error: " << mbi::to_string(pf->category()) << " error at " << pf->location();
        if (!pf->report()) {
            err << ": " << pf->message() << "\n";
            return;
        }
        err << "\n";
        for (const auto& v : pf->report()->violations) err << "  " << v.rule << " " << v.where() << ": " << v.message << "\n";
        return;
    }
    if (const auto* ve = dynamic_cast<const mbi::ValidationError*>(&e)) {
        err << "error: invalid problem\n";
        for (const auto& v : ve->report().violations) err << "  " << v.rule << " " << v.where() << ": " << v.message << "\n";
        return;
    }
    err << "error: " << e.what() << "\n";
}

}  // namespace sdp_cli

#include "mbi/problem_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace mbi {

namespace {

using json = nlohmann::json;
using Category = ProblemFileError::Category;

std::string escape_token(std::string_view token) {
    std::string out;
    for (char c : token) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

std::string join_pointer(const std::string& base, std::string_view token) { return base + "/" + escape_token(token); }

[[noreturn]] void schema_error(const std::string& where, const std::string& message) {
    throw ProblemFileError(Category::Schema, where.empty() ? "/" : where, message);
}

const char* type_name(const json& j) { return j.type_name(); }

const json& member(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, std::string("missing key \"") + key + "\"");
    return *it;
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> keys) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (auto key : keys) known = known || k == key;
        if (!known) schema_error(join_pointer(where, k), "unknown key \"" + k + "\"");
    }
}

const json& require_object(const json& j, const std::string& where) {
    if (!j.is_object()) schema_error(where, std::string("expected an object, found ") + type_name(j));
    return j;
}

const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where, std::string("expected an array, found ") + type_name(j));
    return j;
}

std::string require_string(const json& j, const std::string& where) {
    if (!j.is_string()) schema_error(where, std::string("expected a string, found ") + type_name(j));
    return j.get<std::string>();
}

std::size_t require_index(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        schema_error(where, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

// Shortest decimal that reads back as d, so 0.8 stays 4/5 on exact carriers.
std::string shortest(double d) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, ptr);
}

Number read_number(const json& j, const std::string& where, Carrier carrier) {
    const bool as_float = carrier == Carrier::Float;
    Number n;
    try {
        if (j.is_number_integer()) {
            n = j.is_number_unsigned() ? Number::parse(std::to_string(j.get<std::uint64_t>()), as_float)
                                       : Number(j.get<std::int64_t>());
        } else if (j.is_number_float()) {
            n = as_float ? Number(j.get<double>()) : Number::parse(shortest(j.get<double>()));
        } else if (j.is_string()) {
            n = Number::parse(j.get<std::string>(), as_float);
        } else {
            schema_error(where, std::string("expected a number, found ") + type_name(j));
        }
        if (carrier == Carrier::Float) return n.to(Number::Rep::Float);
        if (carrier == Carrier::Integer && n.rep() != Number::Rep::Int) {
            schema_error(where, "value " + n.str() + " is not an integer");
        }
        return n;
    } catch (const NumberError& e) {
        schema_error(where, e.what());
    }
}

Number read_weight(const json& j, const std::string& where, Carrier carrier) {
    return read_number(j, where, carrier == Carrier::Rational ? Carrier::Rational : Carrier::Float);
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
    require_array(j, where);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_string(j[i], join_pointer(where, std::to_string(i))));
    return out;
}

MStruct<StateId> read_next(const json& j, const std::string& where, Kind kind, Carrier carrier) {
    if (j.is_string()) {
        if (kind == Kind::Stoch) return MStruct<StateId>::stoch_unchecked({{j.get<std::string>(), Number(1)}});
        return MStruct<StateId>(kind, {Outcome<StateId>{j.get<std::string>(), Number(1)}});
    }
    require_array(j, where);
    if (kind == Kind::Stoch) {
        std::vector<std::pair<StateId, Number>> entries;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string at = join_pointer(where, std::to_string(i));
            const json& e = j[i];
            if (!e.is_array() || e.size() != 2) schema_error(at, "expected an [outcome, weight] pair");
            entries.emplace_back(require_string(e[0], join_pointer(at, "0")),
                                 read_weight(e[1], join_pointer(at, "1"), carrier));
        }
        return MStruct<StateId>::stoch_unchecked(std::move(entries));
    }
    auto values = string_array(j, where);
    if (kind == Kind::Identity) {
        if (values.size() != 1) schema_error(where, "an identity transition has exactly one outcome");
        return MStruct<StateId>::identity(values.front());
    }
    return MStruct<StateId>::nondet(std::move(values));
}

StepTable read_step(const json& j, const std::string& where, Kind kind, Carrier carrier) {
    require_object(j, where);
    allow_keys(j, where, {"states", "controls", "next", "reward"});
    StepTable st;
    st.states = string_array(member(j, where, "states"), join_pointer(where, "states"));

    if (auto it = j.find("controls"); it != j.end()) {
        const std::string at = join_pointer(where, "controls");
        for (const auto& [x, ys] : require_object(*it, at).items()) {
            st.controls.emplace(x, string_array(ys, join_pointer(at, x)));
        }
    }
    if (auto it = j.find("next"); it != j.end()) {
        const std::string at = join_pointer(where, "next");
        for (const auto& [x, by_y] : require_object(*it, at).items()) {
            const std::string at_x = join_pointer(at, x);
            for (const auto& [y, m] : require_object(by_y, at_x).items()) {
                st.next[x].emplace(y, read_next(m, join_pointer(at_x, y), kind, carrier));
            }
        }
    }
    if (auto it = j.find("reward"); it != j.end()) {
        const std::string at = join_pointer(where, "reward");
        for (const auto& [x, by_y] : require_object(*it, at).items()) {
            const std::string at_x = join_pointer(at, x);
            for (const auto& [y, by_next] : require_object(by_y, at_x).items()) {
                const std::string at_y = join_pointer(at_x, y);
                for (const auto& [x_next, r] : require_object(by_next, at_y).items()) {
                    st.reward[x][y][x_next] = read_number(r, join_pointer(at_y, x_next), carrier);
                }
            }
        }
    }
    return st;
}

ValueAlgebra read_value(const json& j, const std::string& where) {
    require_object(j, where);
    allow_keys(j, where, {"carrier", "plus", "zero", "eq_tolerance"});
    const std::string carrier_name = require_string(member(j, where, "carrier"), join_pointer(where, "carrier"));
    auto carrier = carrier_from_string(carrier_name);
    if (!carrier) schema_error(join_pointer(where, "carrier"), "unknown carrier \"" + carrier_name + "\"");
    const std::string plus = require_string(member(j, where, "plus"), join_pointer(where, "plus"));
    if (plus != "add" && plus != "mul") schema_error(join_pointer(where, "plus"), "plus must be \"add\" or \"mul\"");
    Number zero = read_number(member(j, where, "zero"), join_pointer(where, "zero"), *carrier);
    double tol = 1e-9;
    if (auto it = j.find("eq_tolerance"); it != j.end()) {
        if (!it->is_number() || it->get<double>() < 0) {
            schema_error(join_pointer(where, "eq_tolerance"), "expected a non-negative number");
        }
        tol = it->get<double>();
    }
    return ValueAlgebra::numeric(*carrier, plus, zero, tol);
}

Measure read_measure(const json& j, const std::string& where, const ValueAlgebra& alg) {
    if (j.is_string()) {
        try {
            return make_measure(j.get<std::string>(), alg);
        } catch (const MeasureError& e) {
            schema_error(where, e.what());
        }
    }
    require_object(j, where);
    allow_keys(j, where, {"monoid_fold"});
    const std::string at = join_pointer(where, "monoid_fold");
    const json& fold = require_object(member(j, where, "monoid_fold"), at);
    allow_keys(fold, at, {"odot", "neutr"});
    const std::string odot = require_string(member(fold, at, "odot"), join_pointer(at, "odot"));
    if (!binary_op(odot)) schema_error(join_pointer(at, "odot"), "unknown operation \"" + odot + "\"");
    Number neutr = read_number(member(fold, at, "neutr"), join_pointer(at, "neutr"), alg.carrier);
    return monoid_fold_measure(MonoidSpec::named(odot, neutr));
}

nlohmann::ordered_json next_to_json(const MStruct<StateId>& m) {
    if (m.kind() == Kind::Identity) return m.outcomes()[0].value;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& o : m.outcomes()) {
        if (m.kind() == Kind::Stoch) {
            arr.push_back(nlohmann::ordered_json::array({o.value, number_to_json(o.weight)}));
        } else {
            arr.push_back(o.value);
        }
    }
    return arr;
}

}  // namespace

ProblemFileError::ProblemFileError(Category category, std::string location, std::string message,
                                   std::optional<ValidationReport> report)
    : std::runtime_error(location + ": " + message),
      category_(category),
      location_(std::move(location)),
      message_(std::move(message)),
      report_(std::move(report)) {}

std::string_view to_string(ProblemFileError::Category c) {
    switch (c) {
        case Category::Io: return "io";
        case Category::Json: return "json";
        case Category::Schema: return "schema";
        case Category::Validation: return "validation";
    }
    return "unknown";
}

SdpSpec parse_problem_json(const json& doc) {
    const std::string root;
    require_object(doc, root);
    allow_keys(doc, root,
               {"schema_version", "name", "uncertainty", "value", "measure", "start_step", "horizon", "steps",
                "states_encode_actions"});
    const json& version = member(doc, root, "schema_version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
        schema_error("/schema_version", "unsupported schema_version (expected 1)");
    }

    SdpSpec spec;
    spec.name = require_string(member(doc, root, "name"), "/name");
    const std::string kind_name = require_string(member(doc, root, "uncertainty"), "/uncertainty");
    auto kind = kind_from_string(kind_name);
    if (!kind) schema_error("/uncertainty", "unknown uncertainty \"" + kind_name + "\"");
    spec.kind = *kind;
    spec.alg = read_value(member(doc, root, "value"), "/value");
    spec.measure = read_measure(member(doc, root, "measure"), "/measure", spec.alg);
    spec.start_step = require_index(member(doc, root, "start_step"), "/start_step");
    spec.horizon_max = require_index(member(doc, root, "horizon"), "/horizon");
    if (auto it = doc.find("states_encode_actions"); it != doc.end()) {
        if (!it->is_boolean()) schema_error("/states_encode_actions", "expected a boolean");
        spec.states_encode_actions = it->get<bool>();
    }
    const json& steps = require_array(member(doc, root, "steps"), "/steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        spec.steps.push_back(read_step(steps[i], "/steps/" + std::to_string(i), spec.kind, spec.alg.carrier));
    }

    ValidationReport report = validate_spec(spec);
    if (!report.valid()) {
        const Violation& first = report.violations.front();
        std::string message = first.rule + " at " + first.where() + ": " + first.message;
        if (report.violations.size() > 1) {
            message += " (and " + std::to_string(report.violations.size() - 1) + " more)";
        }
        throw ProblemFileError(Category::Validation, violation_pointer(spec, first), message, std::move(report));
    }
    return spec;
}

SdpSpec parse_problem_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProblemFileError(Category::Json, "byte " + std::to_string(e.byte), e.what());
    }
    return parse_problem_json(doc);
}

SdpSpec parse_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProblemFileError(Category::Io, path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ProblemFileError(Category::Io, path.string(), "read failed");
    return parse_problem_text(buf.str());
}

nlohmann::ordered_json number_to_json(const Number& n) {
    switch (n.rep()) {
        case Number::Rep::Int: return n.as_int();
        case Number::Rep::Float: return n.as_double();
        case Number::Rep::Rational: return n.str();
    }
    return nullptr;
}

nlohmann::ordered_json to_problem_json(const SdpSpec& spec) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["name"] = spec.name;
    j["uncertainty"] = std::string(to_string(spec.kind));

    nlohmann::ordered_json value;
    value["carrier"] = std::string(to_string(spec.alg.carrier));
    value["plus"] = spec.alg.plus_name;
    value["zero"] = number_to_json(spec.alg.zero);
    if (spec.alg.carrier == Carrier::Float) value["eq_tolerance"] = spec.alg.eq_tolerance;
    j["value"] = std::move(value);

    if (spec.measure.monoid) {
        j["measure"]["monoid_fold"] = {{"odot", spec.measure.monoid->odot_name},
                                       {"neutr", number_to_json(spec.measure.monoid->neutr)}};
    } else {
        j["measure"] = spec.measure.name;
    }
    j["start_step"] = spec.start_step;
    j["horizon"] = spec.horizon_max;
    if (spec.states_encode_actions) j["states_encode_actions"] = true;

    auto steps = nlohmann::ordered_json::array();
    for (const auto& st : spec.steps) {
        nlohmann::ordered_json s;
        s["states"] = st.states;
        if (!st.controls.empty()) {
            nlohmann::ordered_json controls = nlohmann::ordered_json::object();
            nlohmann::ordered_json next = nlohmann::ordered_json::object();
            nlohmann::ordered_json reward = nlohmann::ordered_json::object();
            for (const auto& x : st.states) {
                auto cit = st.controls.find(x);
                if (cit == st.controls.end()) continue;
                controls[x] = cit->second;
                for (const auto& y : cit->second) {
                    if (auto nx = st.next.find(x); nx != st.next.end()) {
                        if (auto ny = nx->second.find(y); ny != nx->second.end()) next[x][y] = next_to_json(ny->second);
                    }
                    if (auto rx = st.reward.find(x); rx != st.reward.end()) {
                        if (auto ry = rx->second.find(y); ry != rx->second.end()) {
                            nlohmann::ordered_json by_next = nlohmann::ordered_json::object();
                            for (const auto& [x_next, r] : ry->second) by_next[x_next] = number_to_json(r);
                            reward[x][y] = std::move(by_next);
                        }
                    }
                }
            }
            s["controls"] = std::move(controls);
            s["next"] = std::move(next);
            s["reward"] = std::move(reward);
        }
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

std::string serialize_problem(const SdpSpec& spec) { return to_problem_json(spec).dump(2) + "\n"; }

std::string violation_pointer(const SdpSpec& spec, const Violation& v) {
    if (v.rule == "stepCount") return "/steps";
    if (v.rule == "measureKind") return "/measure";
    if (v.step < spec.start_step) return "/steps";
    std::string base = "/steps/" + std::to_string(v.step - spec.start_step);
    if (v.rule == "duplicateState" || v.rule == "terminalStep") return join_pointer(base, "states");
    if (v.rule == "missingReward") {
        return join_pointer(join_pointer(join_pointer(join_pointer(base, "reward"), v.state), v.control), v.next_state);
    }
    if (v.rule == "notEmptyY" || v.rule == "duplicateControl" || v.rule == "admissibility" ||
        (v.rule == "unknownState" && v.control.empty())) {
        return join_pointer(join_pointer(base, "controls"), v.state);
    }
    return join_pointer(join_pointer(join_pointer(base, "next"), v.state), v.control);
}

}  // namespace mbi

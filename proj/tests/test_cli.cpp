#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kSdp = SDP_BINARY;
const std::filesystem::path kProblems = MBI_PROBLEMS_DIR;

struct Run {
    int exit = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kSdp + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string problem(const char* name) { return "'" + (kProblems / name).string() + "'"; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("sdp_cli_test_" + name);
    std::ofstream(path) << content;
    return path;
}

int count_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) n += line.find(needle) != std::string::npos;
    return n;
}

}  // namespace

TEST_CASE("solve climate (min): Low everywhere, val(Good) = 9") {
    auto r = run("solve " + problem("climate.json") + " --step 0 --horizon 3 --format json");
    REQUIRE(r.exit == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "solve");
    REQUIRE(j["policy"].size() == 3);
    for (const auto& pol : j["policy"]) {
        CHECK(pol["choice"]["Good"] == "Low");
        CHECK(pol["choice"]["Bad"] == "Low");
    }
    CHECK(j["values"][0]["state"] == "Good");
    CHECK(j["values"][0]["val"] == 9);
    CHECK(j["values"][0]["val_prime"] == 9);
}

TEST_CASE("solve scheduling traces CABD") {
    auto r = run("solve " + problem("scheduling.json") + " --step 0 --horizon 3");
    CHECK(r.exit == 0);
    CHECK(r.out.find("order CABD") != std::string::npos);
}

TEST_CASE("solve with horizon 0") {
    auto r = run("solve " + problem("climate.json") + " --step 0 --horizon 0 --format json");
    REQUIRE(r.exit == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["policy"].empty());
    for (const auto& v : j["values"]) CHECK(v["val"] == 0);
}

TEST_CASE("solve --value-fn selects the reported values") {
    auto r = run("solve " + problem("climate_sum.json") + " --value-fn val --format json");
    REQUIRE(r.exit == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"][0]["val_prime"].is_null());
    CHECK(run("solve " + problem("climate.json") + " --value-fn nope").exit == 2);
}

TEST_CASE("verify: sum fails with counter-examples, min is certified") {
    auto sum = run("verify " + problem("climate_sum.json") + " --step 0 --horizon 3 --format json");
    CHECK(sum.exit == 1);
    auto j = nlohmann::json::parse(sum.out);
    bool plus_cx = false, witness = false;
    for (const auto& c : j["checks"]) {
        if (c["name"] == "measPlusSpec") plus_cx = c["status"] == "fail" && c["counterexample"].is_string();
        if (c["name"] == "valEquivalence") {
            for (const auto& w : c["disagreements"]) {
                witness = witness || (w["state"] == "Good" && w["reference"] == 13 && w["candidate"] == 21);
            }
        }
    }
    CHECK(plus_cx);
    CHECK(witness);
    CHECK(j["certified"] == false);

    auto min = run("verify " + problem("climate.json") + " --step 0 --horizon 3");
    CHECK(min.exit == 0);
    CHECK(min.out.find("verdict: backward induction certified at desk scale") != std::string::npos);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
    const std::string args = "verify " + problem("climate_sum.json") + " --budget 2000 --seed 11 --format json";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("SDP_SEED is the fallback for --seed") {
    auto env = nlohmann::json::parse(run("verify " + problem("climate.json") + " --format json", "SDP_SEED=5").out);
    CHECK(env["seed"] == 5);
    auto flag = nlohmann::json::parse(run("verify " + problem("climate.json") + " --seed 9 --format json", "SDP_SEED=5").out);
    CHECK(flag["seed"] == 9);
    CHECK(run("verify " + problem("climate.json"), "SDP_SEED=abc").exit == 2);
}

TEST_CASE("trajectories under High, Low, High") {
    auto policy = (kProblems / "policies" / "high_low_high.json").string();
    auto r = run("trajectories " + problem("climate_sum.json") + " --state Good --policy '" + policy + "'");
    REQUIRE(r.exit == 0);
    CHECK(count_lines_with(r.out, "  sum ") == 5);
    auto j = nlohmann::json::parse(
        run("trajectories " + problem("climate_sum.json") + " --state Good --policy '" + policy + "' --format json").out);
    std::vector<int> sums;
    for (const auto& t : j["runs"][0]["trajectories"]) sums.push_back(t["sum"]);
    CHECK(sums == std::vector<int>{7, 5, 5, 3, 1});
    CHECK(j["runs"][0]["measured"] == 21);
}

TEST_CASE("trajectories with horizon 0") {
    auto r = run("trajectories " + problem("climate.json") + " --step 0 --horizon 0 --state Good");
    REQUIRE(r.exit == 0);
    CHECK(count_lines_with(r.out, "  sum ") == 1);
    CHECK(r.out.find("Last Good  sum 0") != std::string::npos);
}

TEST_CASE("stochastic trajectories show weights") {
    auto policy = temp_file("high.json", R"({"schema_version": 1, "start_step": 0, "policies": ["High"]})");
    auto r = run("trajectories " + problem("stochastic_climate.json") + " --state Good --policy '" + policy.string() +
                 "' --format json");
    REQUIRE(r.exit == 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& ts = j["runs"][0]["trajectories"];
    REQUIRE(ts.size() == 2);
    CHECK(ts[0]["weight"] == "4/5");
    CHECK(ts[1]["weight"] == "1/5");
}

TEST_CASE("trajectories --policy all") {
    auto j = nlohmann::json::parse(
        run("trajectories " + problem("climate.json") + " --horizon 2 --state Bad --policy all --format json").out);
    CHECK(j["runs"].size() == 16);
}

TEST_CASE("oracle exit codes") {
    CHECK(run("oracle " + problem("climate.json")).exit == 0);
    CHECK(run("oracle " + problem("climate_max.json")).exit == 0);
    CHECK(run("oracle " + problem("climate_sum.json") + " --value-fn val").exit == 0);
    CHECK(run("oracle " + problem("climate_sum.json")).exit == 1);
}

TEST_CASE("usage, parse and validation errors exit with 2") {
    CHECK(run("").exit == 2);
    CHECK(run("solve").exit == 2);
    CHECK(run("solve " + problem("climate.json") + " --horizon 7").exit == 2);
    CHECK(run("solve " + problem("climate.json") + " --format yaml").exit == 2);
    CHECK(run("solve /nonexistent/problem.json").exit == 2);
    auto broken = temp_file("broken.json", "{\"schema_version\": 1,");
    CHECK(run("solve '" + broken.string() + "'").exit == 2);
    auto doc = nlohmann::json::parse(std::ifstream(kProblems / "stochastic_climate.json"));
    doc["steps"][0]["next"]["Good"]["High"] = nlohmann::json::array({{"Good", "0.7"}, {"Bad", "0.2"}});
    auto invalid = temp_file("invalid.json", doc.dump());
    CHECK(run("verify '" + invalid.string() + "'").exit == 2);
    CHECK(run("trajectories " + problem("climate.json") + " --state Ugly").exit == 2);
}

TEST_CASE("help exits with 0") { CHECK(run("--help").exit == 0); }

TEST_CASE("export reproduces the shipped problem files") {
    auto read = [](const std::filesystem::path& p) {
        std::ostringstream s;
        s << std::ifstream(p).rdbuf();
        return s.str();
    };
    CHECK(run("export climate --measure min").out == read(kProblems / "climate.json"));
    CHECK(run("export climate --measure sum").out == read(kProblems / "climate_sum.json"));
    CHECK(run("export stochastic_climate").out == read(kProblems / "stochastic_climate.json"));
    CHECK(run("export scheduling").out == read(kProblems / "scheduling.json"));
    CHECK(run("export nothing").exit == 2);
}

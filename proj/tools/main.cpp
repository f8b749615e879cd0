#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using sdp_cli::Format;

const std::map<std::string, Format> kFormats = {{"text", Format::Text}, {"json", Format::Json}};

void add_range(CLI::App* cmd, sdp_cli::Range& range) {
    cmd->add_option("--step", range.step, "Start step (default: the problem's first step)");
    cmd->add_option("--horizon", range.horizon, "Number of decision steps (default: up to the last step)");
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option_function<std::string>(
           "--format", [&format](const std::string& s) { format = kFormats.at(s); }, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve and verify finite-horizon monadic sequential decision problems"};
    app.require_subcommand(1);

    sdp_cli::SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Backward induction: policy table and values");
    solve_cmd->add_option("file", solve.file, "Problem file")->required();
    add_range(solve_cmd, solve.range);
    solve_cmd->add_option("--value-fn", solve.value_fn, "Values to report")
        ->check(CLI::IsMember({"val", "val-prime", "both"}))
        ->capture_default_str();
    add_format(solve_cmd, solve.format);

    sdp_cli::VerifyCliOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run every property check and oracle");
    verify_cmd->add_option("file", verify.file, "Problem file")->required();
    add_range(verify_cmd, verify.range);
    verify_cmd->add_option("--budget", verify.budget, "Cases per check before sampling")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->envname("SDP_SEED")->capture_default_str();
    add_format(verify_cmd, verify.format);

    sdp_cli::TrajectoryOptions traj;
    auto* traj_cmd = app.add_subcommand("trajectories", "List possible trajectories with their reward sums");
    traj_cmd->add_option("file", traj.file, "Problem file")->required();
    add_range(traj_cmd, traj.range);
    traj_cmd->add_option("--state", traj.state, "Start state (default: every state)");
    traj_cmd->add_option("--policy", traj.policy, "optimal, all, or a policy file")->capture_default_str();
    add_format(traj_cmd, traj.format);

    sdp_cli::OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Check the backward-induction result against brute force");
    oracle_cmd->add_option("file", oracle.file, "Problem file")->required();
    add_range(oracle_cmd, oracle.range);
    oracle_cmd->add_option("--value-fn", oracle.value_fn, "Value functions to check against")
        ->check(CLI::IsMember({"val", "val-prime", "both"}))
        ->capture_default_str();
    add_format(oracle_cmd, oracle.format);

    sdp_cli::ExportOptions exp;
    auto* export_cmd = app.add_subcommand("export", "Write a built-in example as a problem file");
    export_cmd->add_option("example", exp.example, "climate, stochastic_climate or scheduling")->required();
    export_cmd->add_option("--measure", exp.measure, "Measure for the climate example")->capture_default_str();
    export_cmd->add_option("--horizon", exp.horizon, "Number of decision steps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? sdp_cli::kOk : sdp_cli::kUsage;
    }

    return sdp_cli::guarded(std::cerr, [&] {
        if (*solve_cmd) return sdp_cli::cmd_solve(solve, std::cout);
        if (*verify_cmd) return sdp_cli::cmd_verify(verify, std::cout);
        if (*traj_cmd) return sdp_cli::cmd_trajectories(traj, std::cout);
        if (*oracle_cmd) return sdp_cli::cmd_oracle(oracle, std::cout);
        return sdp_cli::cmd_export(exp, std::cout);
    });
}

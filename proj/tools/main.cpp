#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swarmgrid/errors.hpp"
#include "swarmgrid/report.hpp"
#include "swarmgrid/scenario.hpp"
#include "swarmgrid/sizing.hpp"
#include "swarmgrid/storage.hpp"

namespace {

namespace fs = std::filesystem;
using namespace swarmgrid;

constexpr int kExitFeasible = 0;
constexpr int kExitCoverage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

struct CommonOptions {
    std::string scenario_file;
    std::string out_dir;
    std::string format = "json";
    std::optional<double> budget_eur;
    std::optional<double> aeff;
    std::optional<std::string> env;
    std::optional<double> d_lb;
    std::optional<double> d_ub;
    std::optional<double> step;
    std::optional<double> provision_level;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--scenario", opt.scenario_file, "scenario file ([section] key = value)");
    cmd->add_option("--budget", opt.budget_eur, "budget override, EUR");
    cmd->add_option("--aeff", opt.aeff, "antenna efficiency override, (0, 1]");
    cmd->add_option("--env", opt.env, "environment override")
        ->check(CLI::IsMember({"suburban", "urban"}));
    cmd->add_option("--dlb", opt.d_lb, "sweep lower bound, m");
    cmd->add_option("--dub", opt.d_ub, "sweep upper bound, m");
    cmd->add_option("--step", opt.step, "sweep step, m");
    cmd->add_option("--provision-level", opt.provision_level, "traffic quantile level, (0, 1)");
    cmd->add_option("--out", opt.out_dir, "directory for report and diagnostic files");
    cmd->add_option("--format", opt.format, "stdout format when --out is not given")
        ->check(CLI::IsMember({"json", "csv"}));
}

scenario::Scenario build_scenario(const CommonOptions& opt) {
    scenario::Scenario s;
    if (!opt.scenario_file.empty()) s = scenario::load_scenario(opt.scenario_file);
    if (opt.budget_eur) s.budget = Money::from_eur(*opt.budget_eur);
    if (opt.aeff) s.radio.antenna_efficiency = *opt.aeff;
    if (opt.env) s.environment = *opt.env;
    if (opt.d_lb) s.d_lb_m = *opt.d_lb;
    if (opt.d_ub) s.d_ub_m = *opt.d_ub;
    if (opt.step) s.step_m = *opt.step;
    if (opt.provision_level) s.provision_level = *opt.provision_level;
    return s;
}

int exit_code(const sizing::GssResult& result) {
    if (!result.records.empty()) return kExitFeasible;
    return result.budget_infeasible ? kExitBudget : kExitCoverage;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << content;
}

std::vector<double> config_generation_w(const sizing::GenerationBasis& basis,
                                        const sizing::SystemConfig& c) {
    std::vector<double> gen(basis.pv_unit_w.size());
    for (std::size_t h = 0; h < gen.size(); ++h) {
        gen[h] = c.n_pv * basis.pv_unit_w[h] + c.n_w500 * basis.w500_unit_w[h] +
                 c.n_w1000 * basis.w1000_unit_w[h];
    }
    return gen;
}

void write_best_diagnostics(const fs::path& dir, const sizing::SizingInputs& in,
                            const sizing::SolutionRecord& best) {
    const sizing::LoadProfile load =
        sizing::mel_profile(best.config.d_max_m, in.traffic, in.trace, in.env, in.radio,
                            in.airframe, in.wind, in.prices);
    const sizing::GenerationBasis basis =
        sizing::generation_basis(in.trace, in.pv, in.w500, in.w1000);
    storage::GroundBattery bank = in.cell;
    bank.cell_count = best.config.n_cell;
    const storage::SimulationResult sim =
        storage::simulate_horizon(load.energy_wh, config_generation_w(basis, best.config), bank);
    {
        std::ofstream out(dir / "battery_trajectory.csv", std::ios::binary);
        report::write_battery_trajectory_csv(out, in.trace.timestamps, sim.trajectory_wh);
    }
    {
        std::ofstream out(dir / "swarm_profile.csv", std::ios::binary);
        report::write_swarm_profile_csv(out, in.trace.timestamps, load);
    }
}

sizing::GssResult solve(const scenario::Scenario& s, sizing::SizingInputs& inputs) {
    inputs = scenario::resolve_inputs(s);
    for (const std::string& notice : inputs.trace.notices) std::cerr << "notice: " << notice << '\n';
    return sizing::gss_optimize(inputs, s.d_lb_m, s.d_ub_m, s.step_m, s.budget);
}

int run_size(const CommonOptions& opt, const scenario::Scenario& s) {
    sizing::SizingInputs inputs;
    const sizing::GssResult result = solve(s, inputs);
    const std::string json = report::report_json(s, result);
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        write_file(fs::path(opt.out_dir) / "report.json", json);
        std::ofstream sweep(fs::path(opt.out_dir) / "sweep.csv", std::ios::binary);
        report::write_sweep_csv(sweep, result);
        if (!result.records.empty()) {
            write_best_diagnostics(opt.out_dir, inputs, result.records.front());
        }
    } else if (opt.format == "json") {
        std::cout << json;
    } else {
        report::write_sweep_csv(std::cout, result);
    }
    if (result.records.empty()) std::cerr << result.diagnostic << '\n';
    return exit_code(result);
}

int run_sweep(const CommonOptions& opt, const scenario::Scenario& s) {
    sizing::SizingInputs inputs;
    const sizing::GssResult result = solve(s, inputs);
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::ofstream sweep(fs::path(opt.out_dir) / "sweep.csv", std::ios::binary);
        report::write_sweep_csv(sweep, result);
    } else if (opt.format == "json") {
        std::cout << report::report_json(s, result);
    } else {
        report::write_sweep_csv(std::cout, result);
    }
    if (result.records.empty()) std::cerr << result.diagnostic << '\n';
    return exit_code(result);
}

int run_validate(const scenario::Scenario& s) {
    const std::vector<scenario::Finding> findings = scenario::validate_scenario(s);
    bool errors = false;
    for (const scenario::Finding& f : findings) {
        if (f.severity == "error") errors = true;
        std::cout << f.severity << ": " << f.message << '\n';
    }
    std::cout << (errors ? "findings above need attention" : "ok") << '\n';
    std::cout << "resolved parameters:\n";
    for (const auto& [key, value] : scenario::resolved_parameters(s)) {
        std::cout << "  " << key << " = " << value << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV swarm coverage and renewable ground-station sizing"};
    app.require_subcommand(1);
    CommonOptions size_opt;
    CommonOptions sweep_opt;
    sweep_opt.format = "csv";
    CommonOptions validate_opt;
    CLI::App* size = app.add_subcommand("size", "solve the sizing problem and report the best system");
    add_common(size, size_opt);
    CLI::App* sweep = app.add_subcommand("sweep", "emit the per-radius efficiency and cost series");
    add_common(sweep, sweep_opt);
    CLI::App* validate = app.add_subcommand("validate", "check inputs and echo the resolved parameters");
    add_common(validate, validate_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitInput;
    }

    if (validate->parsed()) {
        // validate reports problems as findings and always exits 0
        try {
            return run_validate(build_scenario(validate_opt));
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << '\n';
            return 0;
        }
    }
    try {
        if (size->parsed()) return run_size(size_opt, build_scenario(size_opt));
        return run_sweep(sweep_opt, build_scenario(sweep_opt));
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

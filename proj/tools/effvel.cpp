// Command-line runner for effective-velocity experiments.
//
// Subcommands:
//   run              solve a config, write series CSVs, norms.json, manifest
//   convergence      mesh-refinement study (h, h/2, ...), write convergence.csv
//   oracle-compare   finite-difference solve vs the Picard mild-solution oracle
//   norms            caloric norms of a stored x,value field CSV
//   validate-config  parse and echo the canonical form of a config
//
// Exit codes: 0 success, 2 config error, 3 solver abort, 4 oracle
// non-convergence.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "effvel/runner.hpp"
#include "effvel/solver.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitSolverAbort = 3;
constexpr int kExitOracleDiverged = 4;

std::string config_stem(const std::string& path) {
    const auto stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? "run" : stem;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effvel: effective-velocity shallow-water laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string field_path;
    int levels = 3;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress progress output");

    auto add_common = [&](CLI::App* sub, bool needs_out) {
        sub->add_option("--config", config_path, "path to the JSON config")->required();
        if (needs_out) sub->add_option("--out", out_dir, "output directory");
    };

    CLI::App* cmd_run = app.add_subcommand("run", "run an experiment");
    add_common(cmd_run, true);
    CLI::App* cmd_conv = app.add_subcommand("convergence", "mesh refinement study");
    add_common(cmd_conv, true);
    cmd_conv->add_option("--levels", levels, "number of refinement levels (>= 3)");
    CLI::App* cmd_oracle =
        app.add_subcommand("oracle-compare", "solver vs Picard mild-solution oracle");
    add_common(cmd_oracle, true);
    CLI::App* cmd_norms = app.add_subcommand("norms", "caloric norms of a stored field");
    add_common(cmd_norms, true);
    cmd_norms->add_option("--field", field_path, "x,value CSV of the field")->required();
    CLI::App* cmd_validate = app.add_subcommand("validate-config", "parse and echo a config");
    add_common(cmd_validate, false);

    CLI11_PARSE(app, argc, argv);

    try {
        const effvel::ExperimentConfig cfg = effvel::load_config(config_path);
        const std::string dir =
            effvel::resolve_output_dir(out_dir, cfg, config_stem(config_path));

        if (cmd_validate->parsed()) {
            std::cout << effvel::serialize_config(cfg) << "\n";
            return 0;
        }
        if (cmd_run->parsed()) {
            const effvel::RunManifest manifest = effvel::run(cfg, dir);
            if (!quiet) {
                std::cout << "wrote " << manifest.files.size() << " files to " << dir
                          << " in " << manifest.wall_time_seconds << " s\n";
            }
            return 0;
        }
        if (cmd_conv->parsed()) {
            const auto rows = effvel::convergence_study(cfg, levels, dir);
            if (!quiet) {
                for (const auto& r : rows) {
                    std::cout << "level " << r.level << "  n=" << r.n_cells;
                    if (r.has_diff) std::cout << "  diff_rho=" << r.diff_rho;
                    if (r.order_rho.known)
                        std::cout << "  order_rho="
                                  << (r.order_rho.exact ? std::string("exact")
                                                        : std::to_string(r.order_rho.value));
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (cmd_oracle->parsed()) {
            const effvel::OracleReport report = effvel::oracle_compare(cfg, dir);
            if (!report.converged) {
                std::cerr << "oracle: " << report.error << "\n";
                return kExitOracleDiverged;
            }
            if (!quiet) {
                std::cout << "picard converged in " << report.iterations
                          << " iterations; sup diffs rho=" << report.rho_sup_diff
                          << " v=" << report.v_sup_diff << " m=" << report.m_sup_diff
                          << "\n";
            }
            return 0;
        }
        if (cmd_norms->parsed()) {
            effvel::compute_field_norms(cfg, field_path, dir);
            if (!quiet) std::cout << "wrote norms.json to " << dir << "\n";
            return 0;
        }
    } catch (const effvel::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const effvel::SolverAbort& e) {
        std::cerr << "solver abort: " << e.what() << "\n";
        return kExitSolverAbort;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

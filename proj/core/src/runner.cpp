#include "effvel/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "effvel/diagnostics.hpp"
#include "effvel/picard.hpp"

namespace effvel {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class OutputSet {
public:
    explicit OutputSet(std::string dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& content) {
        const fs::path path = fs::path(dir_) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("runner: cannot write " + path.string());
        out << content;
        out.close();
        ManifestEntry e;
        e.name = name;
        e.bytes = content.size();
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(content)));
        e.fnv1a64 = buf;
        entries_.push_back(std::move(e));
    }

    void write_series_csv(const std::string& name,
                          const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& rows) {
        std::ostringstream out;
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << columns[c];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << format_value(row[c]);
            out << "\n";
        }
        write(name, out.str());
    }

    const std::vector<ManifestEntry>& entries() const { return entries_; }
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    std::vector<ManifestEntry> entries_;
};

json norm_report_json(const NormReport& report) {
    json j;
    j["name"] = report.name;
    j["value"] = report.value;
    if (!report.components.empty()) j["components"] = report.components;
    j["config"] = {{"horizon", report.config.horizon},
                   {"ladder_ratio", report.config.ladder_ratio},
                   {"ladder_rungs", report.config.ladder_rungs},
                   {"s_extra_rungs", report.config.s_extra_rungs},
                   {"s_substeps", report.config.s_substeps}};
    return j;
}

bool wants(const std::vector<std::string>& list, const char* name) {
    return std::find(list.begin(), list.end(), name) != list.end();
}

void write_diagnostics(OutputSet& out, const ExperimentConfig& cfg, const Trajectory& traj) {
    const auto& toggles = cfg.diagnostics;
    if (wants(toggles, "energy")) {
        const FunctionalSeries e = energy_series(traj, cfg.law);
        const FunctionalSeries d = energy_dissipation_series(traj, cfg.law);
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < e.times.size(); ++k)
            rows.push_back({e.times[k], e.values[k], d.values[k]});
        out.write_series_csv("series_energy.csv", {"t", "energy", "dissipation_rate"}, rows);
    }
    if (wants(toggles, "bd_entropy")) {
        const FunctionalSeries e = bd_entropy_series(traj, cfg.law);
        const FunctionalSeries d = bd_dissipation_series(traj, cfg.law);
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < e.times.size(); ++k)
            rows.push_back({e.times[k], e.values[k], d.values[k]});
        out.write_series_csv("series_bd_entropy.csv", {"t", "bd_entropy", "dissipation_rate"},
                             rows);
    }
    if (wants(toggles, "lipschitz")) {
        const FunctionalSeries s = lipschitz_diagnostic(traj, cfg.mu);
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < s.times.size(); ++k)
            rows.push_back({s.times[k], s.values[k]});
        out.write_series_csv("series_lipschitz.csv", {"t", "lipschitz"}, rows);
    }
    if (wants(toggles, "sup_norms")) {
        const SupNormSeries s = sup_norm_series(traj);
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < s.rho_max.times.size(); ++k)
            rows.push_back({s.rho_max.times[k], s.rho_max.values[k], s.inv_rho_max.values[k],
                            s.v_max.values[k], s.sqrt_t_m_max.values[k],
                            s.sqrt_t_u_max.values[k]});
        out.write_series_csv(
            "series_sup_norms.csv",
            {"t", "rho_max", "inv_rho_max", "v_max", "sqrt_t_m_max", "sqrt_t_u_max"}, rows);
    }
    if (wants(toggles, "mass")) {
        std::vector<std::vector<double>> rows;
        for (const auto& s : traj.samples) {
            double dev = 0.0;
            for (std::size_t i = 0; i < s.rho.size(); ++i)
                dev += (s.rho[i] - kFarDensity) * s.rho.grid().quadrature_weight(i);
            rows.push_back({s.t, dev});
        }
        out.write_series_csv("series_mass.csv", {"t", "mass_deviation"}, rows);
    }
    if (wants(toggles, "steps")) {
        std::vector<std::vector<double>> rows;
        for (const auto& r : traj.steps)
            rows.push_back({r.t, r.dt, r.rho_min, r.rho_max, r.v_max, r.u_max});
        out.write_series_csv("series_steps.csv",
                             {"t", "dt", "rho_min", "rho_max", "v_max", "u_max"}, rows);
    }

    // Monotonicity verdicts for the dissipating functionals.
    const double mono_tol = 1e-6;
    json mono;
    auto mono_json = [&](const FunctionalSeries& s) {
        const MonotonicityReport r = monotonicity_check(s, mono_tol);
        json j;
        j["series"] = r.series;
        j["max_relative_increase"] = r.max_relative_increase;
        j["total_increase"] = r.total_increase;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        j["worst_time"] = r.worst_time;
        return j;
    };
    if (wants(toggles, "energy")) mono["energy"] = mono_json(energy_series(traj, cfg.law));
    if (wants(toggles, "bd_entropy"))
        mono["bd_entropy"] = mono_json(bd_entropy_series(traj, cfg.law));
    if (!mono.empty()) out.write("monotonicity.json", mono.dump(2) + "\n");
}

void write_norms(OutputSet& out, const ExperimentConfig& cfg, const Trajectory& traj) {
    if (cfg.norms.empty()) return;
    json j;
    const ScalarField& m0 = traj.initial().m;
    if (wants(cfg.norms, "bmo_inv"))
        j["bmo_inv"] = norm_report_json(bmo_inv_norm(m0, cfg.caloric));
    if (wants(cfg.norms, "koch_tataru"))
        j["koch_tataru"] = norm_report_json(koch_tataru_norm(traj, cfg.solver.final_time));
    if (wants(cfg.norms, "besov_minus1"))
        j["besov_minus1"] = norm_report_json(caloric_besov_proxy(m0, -1, cfg.caloric));
    if (wants(cfg.norms, "besov_plus1"))
        j["besov_plus1"] = norm_report_json(caloric_besov_proxy(m0, +1, cfg.caloric));
    out.write("norms.json", j.dump(2) + "\n");
}

void write_final_fields(OutputSet& out, const Trajectory& traj) {
    const AugmentedState& s = traj.final();
    const ScalarField u = s.velocity();
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < s.rho.size(); ++i)
        rows.push_back({s.grid().node(i), s.rho[i], s.v[i], s.m[i], u[i]});
    out.write_series_csv("fields_final.csv", {"x", "rho", "v", "m", "u"}, rows);
}

Trajectory solve_config(const ExperimentConfig& cfg) {
    const AugmentedState init = build_initial_state(cfg.initial_data, cfg.grid, cfg.mu);
    if (cfg.solver.scheme == Scheme::classical1d)
        return solve_classical_1d(init.rho, init.velocity(cfg.solver.density_floor), cfg.law,
                                  cfg.mu, cfg.solver);
    return solve_augmented(init, cfg.law, cfg.solver);
}

void write_manifest(OutputSet& out, const ExperimentConfig& cfg, double wall_seconds) {
    json j;
    j["artifact_version"] = kArtifactVersion;
    j["wall_time_seconds"] = wall_seconds;
    j["config"] = json::parse(serialize_config(cfg));
    j["files"] = json::array();
    for (const auto& e : out.entries())
        j["files"].push_back({{"name", e.name}, {"bytes", e.bytes}, {"fnv1a64", e.fnv1a64}});
    const std::string text = j.dump(2) + "\n";
    std::ofstream f(fs::path(out.dir()) / "manifest.json", std::ios::binary);
    f << text;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

RunManifest run(const ExperimentConfig& cfg, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    OutputSet out(out_dir);
    Trajectory traj;
    try {
        traj = solve_config(cfg);
    } catch (const SolverAbort& e) {
        json err;
        err["error"] = e.what();
        err["time"] = e.time();
        err["node"] = e.node();
        out.write("error.json", err.dump(2) + "\n");
        throw;
    }
    write_diagnostics(out, cfg, traj);
    write_norms(out, cfg, traj);
    write_final_fields(out, traj);

    RunManifest manifest;
    manifest.version = kArtifactVersion;
    manifest.files = out.entries();
    manifest.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(out, cfg, manifest.wall_time_seconds);
    return manifest;
}

std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& cfg, int levels,
                                              const std::string& out_dir) {
    if (levels < 3) throw ConfigError("convergence_study: need at least 3 levels");
    OutputSet out(out_dir);

    std::vector<Trajectory> runs;
    std::vector<ConvergenceRow> rows(static_cast<std::size_t>(levels));
    for (int k = 0; k < levels; ++k) {
        ExperimentConfig level_cfg = cfg;
        const std::size_t cells = cfg.grid.n_cells() << k;
        if (cfg.grid.kind() == GridKind::line1d)
            level_cfg.grid = Grid::line(cfg.grid.x_min(), cfg.grid.x_max(), cells,
                                        cfg.grid.boundary());
        else
            level_cfg.grid = Grid::radial(cfg.grid.r_max(), cells, cfg.grid.dimension());
        if (cfg.solver.dt_max > 0.0)
            level_cfg.solver.dt_max = cfg.solver.dt_max / static_cast<double>(1 << k);
        runs.push_back(solve_config(level_cfg));
        rows[static_cast<std::size_t>(k)].level = k;
        rows[static_cast<std::size_t>(k)].n_cells = cells;
        rows[static_cast<std::size_t>(k)].h = level_cfg.grid.spacing();
    }

    auto restricted_sup_diff = [](const ScalarField& coarse, const ScalarField& fine) {
        double m = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i)
            m = std::max(m, std::abs(fine[2 * i] - coarse[i]));
        return m;
    };
    for (int k = 0; k + 1 < levels; ++k) {
        const AugmentedState& coarse = runs[static_cast<std::size_t>(k)].final();
        const AugmentedState& fine = runs[static_cast<std::size_t>(k) + 1].final();
        auto& row = rows[static_cast<std::size_t>(k)];
        row.has_diff = true;
        row.diff_rho = restricted_sup_diff(coarse.rho, fine.rho);
        row.diff_v = restricted_sup_diff(coarse.v, fine.v);
    }
    auto observed = [](double coarse, double fine) {
        ConvergenceOrder o;
        o.known = true;
        if (coarse == 0.0 && fine == 0.0) {
            o.exact = true;
        } else if (fine > 0.0) {
            o.value = std::log2(coarse / fine);
        } else {
            o.known = false;
        }
        return o;
    };
    for (int k = 0; k + 2 < levels; ++k) {
        auto& row = rows[static_cast<std::size_t>(k)];
        const auto& next = rows[static_cast<std::size_t>(k) + 1];
        row.order_rho = observed(row.diff_rho, next.diff_rho);
        row.order_v = observed(row.diff_v, next.diff_v);
    }

    auto order_cell = [](const ConvergenceOrder& o) -> std::string {
        if (!o.known) return "";
        if (o.exact) return "exact";
        return format_value(o.value);
    };
    std::ostringstream csv;
    csv << "level,n_cells,h,diff_rho,order_rho,diff_v,order_v\n";
    for (const auto& row : rows) {
        csv << row.level << "," << row.n_cells << "," << format_value(row.h) << ",";
        if (row.has_diff) csv << format_value(row.diff_rho);
        csv << "," << order_cell(row.order_rho) << ",";
        if (row.has_diff) csv << format_value(row.diff_v);
        csv << "," << order_cell(row.order_v) << "\n";
    }
    out.write("convergence.csv", csv.str());
    return rows;
}

OracleReport oracle_compare(const ExperimentConfig& cfg, const std::string& out_dir) {
    OutputSet out(out_dir);
    const AugmentedState init = build_initial_state(cfg.initial_data, cfg.grid, cfg.mu);
    const Trajectory fd = solve_augmented(init, cfg.law, cfg.solver);

    OracleReport report;
    json j;
    try {
        const PicardResult picard =
            picard_mild_solve(init, cfg.law, cfg.solver.final_time,
                              cfg.oracle.max_iterations, cfg.oracle.tolerance,
                              cfg.oracle.time_samples);
        report.converged = true;
        report.iterations = picard.iterations;
        const AugmentedState& a = fd.final();
        const AugmentedState& b = picard.trajectory.final();
        report.rho_sup_diff = sup_distance(a.rho, b.rho);
        report.v_sup_diff = sup_distance(a.v, b.v);
        report.m_sup_diff = sup_distance(a.m, b.m);
        j["converged"] = true;
        j["iterations"] = report.iterations;
        j["rho_sup_diff"] = report.rho_sup_diff;
        j["v_sup_diff"] = report.v_sup_diff;
        j["m_sup_diff"] = report.m_sup_diff;
    } catch (const PicardDivergence& e) {
        report.converged = false;
        report.iterations = e.iterations();
        report.error = e.what();
        j["converged"] = false;
        j["iterations"] = report.iterations;
        j["error"] = report.error;
    }
    out.write("oracle.json", j.dump(2) + "\n");
    return report;
}

void compute_field_norms(const ExperimentConfig& cfg, const std::string& field_csv,
                         const std::string& out_dir) {
    std::ifstream in(field_csv);
    if (!in) throw ConfigError("norms: cannot open field file '" + field_csv + "'");
    std::vector<double> values;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("norms: field file must have x,value columns");
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (values.size() != cfg.grid.node_count())
        throw ConfigError("norms: field sample count does not match the config grid");
    const ScalarField f(cfg.grid, std::move(values));

    OutputSet out(out_dir);
    json j;
    if (cfg.norms.empty() || wants(cfg.norms, "bmo_inv"))
        j["bmo_inv"] = norm_report_json(bmo_inv_norm(f, cfg.caloric));
    if (cfg.norms.empty() || wants(cfg.norms, "besov_minus1"))
        j["besov_minus1"] = norm_report_json(caloric_besov_proxy(f, -1, cfg.caloric));
    if (cfg.norms.empty() || wants(cfg.norms, "besov_plus1"))
        j["besov_plus1"] = norm_report_json(caloric_besov_proxy(f, +1, cfg.caloric));
    out.write("norms.json", j.dump(2) + "\n");
}

std::string resolve_output_dir(const std::string& cli_out, const ExperimentConfig& cfg,
                               const std::string& fallback_name) {
    if (!cli_out.empty()) return cli_out;
    fs::path base = ".";
    if (const char* env = std::getenv("EFFVEL_OUT"); env && *env) base = env;
    const std::string leaf = !cfg.output_dir.empty() ? cfg.output_dir : fallback_name;
    return (base / leaf).string();
}

}  // namespace effvel

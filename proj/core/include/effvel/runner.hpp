// Config-driven experiment runner: builds initial data, runs the configured
// solver, evaluates diagnostics and caloric norms, and writes CSV/JSON
// outputs plus a manifest with per-file checksums. Reruns of the same config
// produce byte-identical data files (the manifest additionally records wall
// time, which is the one non-reproducible field).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effvel/config.hpp"

namespace effvel {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct ManifestEntry {
    std::string name;
    std::uint64_t bytes = 0;
    std::string fnv1a64;
};

struct RunManifest {
    std::string version;
    double wall_time_seconds = 0.0;
    std::vector<ManifestEntry> files;
};

RunManifest run(const ExperimentConfig& cfg, const std::string& out_dir);

struct ConvergenceOrder {
    bool known = false;
    bool exact = false;  // differences vanished; order reported as "exact"
    double value = 0.0;
};

struct ConvergenceRow {
    int level = 0;
    std::size_t n_cells = 0;
    double h = 0.0;
    bool has_diff = false;
    double diff_rho = 0.0;
    double diff_v = 0.0;
    ConvergenceOrder order_rho;
    ConvergenceOrder order_v;
};

// Runs the config at h, h/2, ..., h/2^{levels-1} (dt_max scaled along),
// comparing final-time fields on the shared coarse nodes; writes
// convergence.csv under out_dir.
std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& cfg, int levels,
                                              const std::string& out_dir);

struct OracleReport {
    bool converged = false;
    int iterations = 0;
    std::string error;
    double rho_sup_diff = 0.0;
    double v_sup_diff = 0.0;
    double m_sup_diff = 0.0;
};

// Runs solve_augmented against the Picard mild-solution oracle and reports
// final-time sup-norm discrepancies; writes oracle.json under out_dir.
// Picard non-convergence is reported in the returned struct, not thrown.
OracleReport oracle_compare(const ExperimentConfig& cfg, const std::string& out_dir);

// Computes the configured caloric norms of a field stored as an x,value CSV
// sampled on the config's grid; writes norms.json under out_dir.
void compute_field_norms(const ExperimentConfig& cfg, const std::string& field_csv,
                         const std::string& out_dir);

// Resolves the output directory: an explicit CLI path wins; otherwise the
// config's output_dir (or `fallback_name`) under $EFFVEL_OUT or the current
// directory.
std::string resolve_output_dir(const std::string& cli_out, const ExperimentConfig& cfg,
                               const std::string& fallback_name);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace effvel

// Experiment configuration: a single JSON document describing grid, initial
// data, pressure law, solver, diagnostics and norm computations. Everything
// is deterministic; there is no randomness to seed.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "effvel/caloric.hpp"
#include "effvel/initial_data.hpp"
#include "effvel/solver.hpp"

namespace effvel {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleOptions {
    int max_iterations = 25;
    double tolerance = 1e-10;
    std::size_t time_samples = 64;
};

struct ExperimentConfig {
    Grid grid = Grid::line(0.0, 1.0, 64, BoundaryKind::periodic);
    PressureLaw law{1.0, 2.0};
    double mu = 1.0;
    InitialDataSpec initial_data;
    SolverConfig solver;
    std::vector<std::string> diagnostics;  // energy, bd_entropy, lipschitz,
                                           // sup_norms, mass, steps
    std::vector<std::string> norms;  // bmo_inv, koch_tataru, besov_minus1, besov_plus1
    CaloricConfig caloric;
    OracleOptions oracle;
    std::string output_dir;  // optional; resolved by the runner
};

ExperimentConfig parse_config_text(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// Canonical serialization (sorted keys, two-space indent); parsing it back
// reproduces the configuration exactly.
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace effvel

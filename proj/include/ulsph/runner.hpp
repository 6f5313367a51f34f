#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ulsph/diagnostics.hpp"
#include "ulsph/io.hpp"
#include "ulsph/material.hpp"

namespace ulsph {

// One built-in benchmark scenario with its default parameters.
struct ScenarioInfo {
    std::string name;
    int dimension;
    std::string description;
    double default_hdp;      // 0 when the scenario is dp-based
    double default_dp;       // 0 when the scenario is H/dp-based
    double default_speed;    // v_f or v0 as a fraction of c0 (0 = none)
    double default_end_time;
    double rho0, young_modulus, poisson_ratio;
};

const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo& scenario_info(const std::string& name);

// Everything a caller needs to assert on after a run. Disorder metrics and
// momentum are sampled at every advection-window boundary.
struct RunResult {
    int dimension = 2;
    int particle_count = 0;
    double dp = 0.0;
    double final_time = 0.0;
    double wall_seconds = 0.0;
    long long advection_steps = 0;
    long long substeps = 0;
    long long rebuilds = 0;

    // probe displacement history (empty when the scenario has no probe)
    std::vector<double> probe_time;
    std::vector<std::array<double, 3>> probe_displacement;
    int probe_component = 1;
    double extracted_period = std::numeric_limits<double>::quiet_NaN();

    double min_pair_gap = std::numeric_limits<double>::infinity();
    double max_nn_gap = 0.0;
    double disorder_breach_time = std::numeric_limits<double>::quiet_NaN();

    double total_mass = 0.0;
    double sound_speed = 0.0;
    double max_momentum_drift = 0.0;  // |total momentum - initial| over samples

    bool fatal = false;
    std::string fatal_message;
    double fatal_time = std::numeric_limits<double>::quiet_NaN();

    double max_abs_probe_displacement = 0.0;  // transverse component

    bool disorder_healthy(double min_gap = 0.6, double max_gap = 1.6) const {
        return min_pair_gap >= min_gap && max_nn_gap <= max_gap && !fatal;
    }
};

// Builds the scenario named by the config, runs it to end_time, writes files
// when output_dir is set (probe.csv, meta.json, snapshot_*.csv[,.vtk]), and
// returns the collected metrics. A numerical fatal is caught and reported in
// the result so callers can still inspect the partial run.
RunResult run_simulation(const RunConfig& cfg);

// Effective solver config (scenario defaults merged with overrides); exposed
// for the CLI to echo and for tests.
RunConfig resolve_defaults(const RunConfig& cfg);

}  // namespace ulsph

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulsph/config.hpp"
#include "ulsph/diagnostics.hpp"
#include "ulsph/particles.hpp"

namespace ulsph {

// User-facing run configuration: scenario selection plus solver options.
// Parsed from a key = value file and/or CLI flag overrides.
struct RunConfig {
    std::string scenario;

    // Scenario parameters; NaN/0 selects the per-scenario default.
    double hdp = 0.0;      // resolution as H/dp (plate scenarios)
    double dp = 0.0;       // resolution as explicit spacing (collision scenarios)
    double v_f = 0.0;      // plate2d tip speed as a fraction of c0
    double v0_frac = 0.0;  // collision speed as a fraction of c0
    int mode_m = 0;        // plate3d mode numbers
    int mode_n = 0;

    // Optional material overrides.
    double rho0 = 0.0;
    double young_modulus = 0.0;
    double poisson_ratio = -1.0;

    SimConfig sim;               // end_time/output_interval/formulation/...
    bool end_time_set = false;   // defaults come from the scenario unless set
    std::string output_dir;
    bool write_vtk = false;
};

// Parses `key = value` lines ('#' comments, blank lines allowed). Unknown keys
// are rejected by name; `seed` is accepted and ignored (reserved).
RunConfig parse_run_config_text(const std::string& text);
RunConfig parse_run_config_file(const std::string& path);

// Applies a single key/value pair (shared by file parsing and CLI overrides).
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Comma-separated snapshot with a three-line header (time/N/dimension line,
// values line, column names) and one row per particle. Scientific notation
// with 12 significant digits so a round trip preserves values to 1e-9.
template <int D>
void write_snapshot(const ParticleSet<D>& ps, double time, const std::string& path);

// Legacy-VTK point cloud variant (ASCII): POINTS plus density / von Mises
// scalars and the velocity vector field.
template <int D>
void write_snapshot_vtk(const ParticleSet<D>& ps, double time, const std::string& path);

// Minimal reader for round-trip checks: returns (time, rows) where each row is
// the numeric columns of one particle.
struct SnapshotData {
    double time = 0.0;
    int dimension = 0;
    std::vector<std::vector<double>> rows;
};
SnapshotData read_snapshot(const std::string& path);

template <int D>
void write_probe_csv(const ProbeSeries<D>& series, const std::string& path);

std::string format_sci(double v);

}  // namespace ulsph

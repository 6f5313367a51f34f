#pragma once

#include <string>
#include <vector>

namespace ulsph {

// One experiment row: a measured value checked against an expectation. Rows
// with `relative` set compare |measured - expected| / |expected| against tol;
// otherwise `pass` is filled by the experiment itself (threshold or predicate
// checks) and expected/tol document the bound.
struct BenchRow {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool relative = true;
    bool pass = false;
    std::string note;
};

BenchRow make_relative_row(const std::string& name, double measured, double expected, double tol,
                           const std::string& note = "");

// Oscillation-period table for the 2D plate at one resolution across tip
// speeds, checked against the reference periods; also emits the analytical
// oracle row.
std::vector<BenchRow> bench_plate2d_periods(double hdp, double end_time = 0.5);

// Period convergence across resolutions: successive differences must shrink.
std::vector<BenchRow> bench_plate2d_convergence(double end_time = 0.6);

// Dual- vs single-criteria wall-time ratio for one case, identical worker
// counts. The ratio is a steady-state per-substep cost ratio, so a horizon of
// about one oscillation is representative. When the horizon covers a full
// period, also checks that both modes agree on the extracted first period.
std::vector<BenchRow> bench_speedup_plate2d(double hdp, double ratio_bound, double end_time = 0.3,
                                            bool check_period_agreement = false);
std::vector<BenchRow> bench_speedup_plate3d(double hdp, double ratio_bound,
                                            double end_time = 0.03);

// The nested baseline breaches the disorder thresholds early; the laplacian
// formulation stays healthy through the full run.
std::vector<BenchRow> bench_instability_contrast();

// Swapping the unprojected laplacian into the shear update suppresses the
// oscillation (rigid rotation produces spurious shear forces).
BenchRow bench_laplacian_contrast();

// Long single-stepping run: late-cycle amplitude retention plus healthy
// disorder metrics.
std::vector<BenchRow> bench_longrun(double end_time = 2.5);

// 3D plate period table at one resolution with analytical oracle rows.
std::vector<BenchRow> bench_plate3d_periods(double hdp, double period_tol);

// Collision property suite: healthy disorder metrics, no fatal, and (for the
// free-flying pairs) bounded total-momentum drift.
std::vector<BenchRow> bench_collisions(bool include_3d = true);

// Bitwise-identical probe output across repeated identical runs.
BenchRow bench_determinism(double end_time = 0.5);

void print_rows(const std::vector<BenchRow>& rows);
bool all_pass(const std::vector<BenchRow>& rows);

}  // namespace ulsph

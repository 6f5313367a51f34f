#include "ulsph/bench.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ulsph/runner.hpp"
#include "ulsph/scenarios.hpp"

namespace ulsph {

BenchRow make_relative_row(const std::string& name, double measured, double expected, double tol,
                           const std::string& note) {
    BenchRow row;
    row.name = name;
    row.measured = measured;
    row.expected = expected;
    row.tol = tol;
    row.relative = true;
    row.pass = std::isfinite(measured) && std::abs(measured - expected) <= tol * std::abs(expected);
    row.note = note;
    return row;
}

namespace {

RunConfig plate2d_config(double hdp, double v_f, double end_time) {
    RunConfig cfg;
    cfg.scenario = "plate2d";
    cfg.hdp = hdp;
    cfg.v_f = v_f;
    cfg.sim.end_time = end_time;
    cfg.end_time_set = true;
    cfg.sim.track_stress = false;  // diagnostics only; period runs skip the bookkeeping
    return cfg;
}

constexpr double kPlate2dReference[4][2] = {
    {0.001, 0.262}, {0.01, 0.263}, {0.03, 0.268}, {0.05, 0.279}};

}  // namespace

std::vector<BenchRow> bench_plate2d_periods(double hdp, double end_time) {
    std::vector<BenchRow> rows;
    Material mat = make_material(1000.0, 2e6, 0.3975);
    rows.push_back(make_relative_row("plate2d analytical period",
                                     analytical_period_plate2d(0.2, 0.02, mat), 0.254, 0.002,
                                     "thin-plate oracle"));
    for (auto [v_f, expected] : kPlate2dReference) {
        RunResult r = run_simulation(plate2d_config(hdp, v_f, end_time));
        std::ostringstream name;
        name << "plate2d period H/dp=" << hdp << " vf=" << v_f;
        std::string note = r.fatal ? "fatal: " + r.fatal_message : "";
        rows.push_back(make_relative_row(name.str(), r.extracted_period, expected, 0.03, note));
    }
    return rows;
}

std::vector<BenchRow> bench_plate2d_convergence(double end_time) {
    std::vector<BenchRow> rows;
    double period[3];
    const double hdps[3] = {10.0, 20.0, 30.0};
    for (int k = 0; k < 3; ++k) {
        RunResult r = run_simulation(plate2d_config(hdps[k], 0.05, end_time));
        period[k] = r.extracted_period;
        std::ostringstream name;
        name << "plate2d first period H/dp=" << hdps[k];
        BenchRow row;
        row.name = name.str();
        row.measured = period[k];
        row.expected = 0.0;
        row.relative = false;
        row.pass = std::isfinite(period[k]);
        rows.push_back(row);
    }
    BenchRow conv;
    conv.name = "plate2d convergence |T20-T30| < |T10-T20|";
    conv.measured = std::abs(period[1] - period[2]);
    conv.expected = std::abs(period[0] - period[1]);
    conv.relative = false;
    conv.pass = std::isfinite(conv.measured) && conv.measured < conv.expected;
    conv.note = "successive period differences";
    rows.push_back(conv);
    return rows;
}

namespace {

std::vector<BenchRow> speedup_rows(const std::string& name, RunConfig cfg, double ratio_bound,
                                   bool check_period_agreement) {
    cfg.sim.track_stress = false;
    cfg.sim.stepping = Stepping::dual;
    RunResult dual = run_simulation(cfg);
    cfg.sim.stepping = Stepping::single;
    RunResult single = run_simulation(cfg);

    std::vector<BenchRow> rows;
    BenchRow row;
    row.name = name;
    row.measured = dual.wall_seconds / single.wall_seconds;
    row.expected = ratio_bound;
    row.relative = false;
    row.pass = !dual.fatal && !single.fatal && row.measured <= ratio_bound;
    std::ostringstream note;
    note << "dual " << dual.wall_seconds << " s (" << dual.rebuilds << " rebuilds, "
         << dual.substeps << " substeps), single " << single.wall_seconds << " s ("
         << single.rebuilds << " rebuilds)";
    row.note = note.str();
    rows.push_back(row);

    if (check_period_agreement) {
        BenchRow agree = make_relative_row(name + ": dual/single periods agree",
                                           dual.extracted_period, single.extracted_period, 0.02);
        rows.push_back(agree);
    }
    return rows;
}

}  // namespace

std::vector<BenchRow> bench_speedup_plate2d(double hdp, double ratio_bound, double end_time,
                                            bool check_period_agreement) {
    std::ostringstream name;
    name << "speedup plate2d H/dp=" << hdp << " ratio <= " << ratio_bound;
    return speedup_rows(name.str(), plate2d_config(hdp, 0.05, end_time), ratio_bound,
                        check_period_agreement);
}

std::vector<BenchRow> bench_speedup_plate3d(double hdp, double ratio_bound, double end_time) {
    RunConfig cfg;
    cfg.scenario = "plate3d";
    cfg.hdp = hdp;
    cfg.mode_m = 2;
    cfg.mode_n = 2;
    cfg.sim.end_time = end_time;
    cfg.end_time_set = true;
    std::ostringstream name;
    name << "speedup plate3d H/dp=" << hdp << " ratio <= " << ratio_bound;
    return speedup_rows(name.str(), cfg, ratio_bound, false);
}

std::vector<BenchRow> bench_instability_contrast() {
    std::vector<BenchRow> rows;

    RunConfig og = plate2d_config(10.0, 0.05, 0.1);
    og.sim.formulation = Formulation::og;
    RunResult og_result = run_simulation(og);
    BenchRow og_row;
    og_row.name = "nested baseline breaches disorder thresholds before t=0.1";
    bool breached = !std::isnan(og_result.disorder_breach_time) &&
                    og_result.disorder_breach_time < 0.1;
    og_row.pass = breached || og_result.fatal;
    og_row.measured = breached ? og_result.disorder_breach_time
                               : (og_result.fatal ? og_result.fatal_time : og_result.final_time);
    og_row.expected = 0.1;
    og_row.relative = false;
    {
        std::ostringstream note;
        note << "min gap " << og_result.min_pair_gap << ", max nn gap " << og_result.max_nn_gap;
        if (og_result.fatal) note << ", fatal: " << og_result.fatal_message;
        og_row.note = note.str();
    }
    rows.push_back(og_row);

    RunResult enog_result = run_simulation(plate2d_config(10.0, 0.05, 1.0));
    BenchRow enog_row;
    enog_row.name = "laplacian formulation healthy through t=1.0";
    enog_row.pass = enog_result.disorder_healthy();
    enog_row.measured = enog_result.min_pair_gap;
    enog_row.expected = 0.6;
    enog_row.relative = false;
    {
        std::ostringstream note;
        note << "min gap " << enog_result.min_pair_gap << " (>= 0.6), max nn gap "
             << enog_result.max_nn_gap << " (<= 1.6)";
        enog_row.note = note.str();
    }
    rows.push_back(enog_row);
    return rows;
}

BenchRow bench_laplacian_contrast() {
    RunConfig cons = plate2d_config(10.0, 0.05, 0.25);
    RunResult conservative = run_simulation(cons);
    RunConfig plain = cons;
    plain.sim.laplacian = LaplacianForm::plain;
    RunResult unprojected = run_simulation(plain);
    BenchRow row;
    row.name = "plain laplacian suppresses oscillation (amplitude < 25%)";
    row.measured = unprojected.max_abs_probe_displacement /
                   conservative.max_abs_probe_displacement;
    row.expected = 0.25;
    row.relative = false;
    row.pass = std::isfinite(row.measured) && row.measured < 0.25 && !unprojected.fatal &&
               !conservative.fatal;
    std::ostringstream note;
    note << "amplitudes " << unprojected.max_abs_probe_displacement << " vs "
         << conservative.max_abs_probe_displacement;
    row.note = note.str();
    return row;
}

namespace {

// Successive positive-peak amplitudes of the probe series (one per cycle).
std::vector<double> cycle_peaks(const RunResult& r) {
    std::vector<double> peaks;
    const int n = static_cast<int>(r.probe_time.size());
    int c = r.probe_component;
    double current = 0.0;
    bool in_positive = false;
    for (int k = 0; k < n; ++k) {
        double v = r.probe_displacement[k][c];
        if (v > 0.0) {
            in_positive = true;
            current = std::max(current, v);
        } else if (in_positive) {
            peaks.push_back(current);
            current = 0.0;
            in_positive = false;
        }
    }
    return peaks;
}

}  // namespace

std::vector<BenchRow> bench_longrun(double end_time) {
    RunConfig cfg = plate2d_config(10.0, 0.05, end_time);
    cfg.sim.stepping = Stepping::single;
    RunResult r = run_simulation(cfg);
    std::vector<double> peaks = cycle_peaks(r);

    std::vector<BenchRow> rows;
    BenchRow amp;
    amp.name = "longrun amplitude retention (late cycle >= 85% of first)";
    if (peaks.size() >= 2) {
        size_t late = std::min<size_t>(9, peaks.size() - 1);
        amp.measured = peaks[late] / peaks[0];
        std::ostringstream note;
        note << peaks.size() << " cycles, first " << peaks[0] << ", cycle " << late + 1 << " "
             << peaks[late];
        amp.note = note.str();
    }
    amp.expected = 0.85;
    amp.relative = false;
    amp.pass = peaks.size() >= 2 && amp.measured >= 0.85 && !r.fatal;
    rows.push_back(amp);

    BenchRow health;
    health.name = "longrun disorder metrics healthy";
    health.measured = r.min_pair_gap;
    health.expected = 0.6;
    health.relative = false;
    health.pass = r.disorder_healthy();
    std::ostringstream note;
    note << "min gap " << r.min_pair_gap << ", max nn gap " << r.max_nn_gap;
    health.note = note.str();
    rows.push_back(health);
    return rows;
}

std::vector<BenchRow> bench_plate3d_periods(double hdp, double period_tol) {
    const double reference[3][3] = {
        {1, 1, 0.0543}, {2, 1, 0.0218}, {2, 2, 0.0140}};  // measured at H/dp=5
    const double analytical[3] = {0.0532, 0.0213, 0.0133};
    Material mat = make_material(1000.0, 1e8, 0.3);

    std::vector<BenchRow> rows;
    for (int k = 0; k < 3; ++k) {
        int m = static_cast<int>(reference[k][0]);
        int n = static_cast<int>(reference[k][1]);
        std::ostringstream aname;
        aname << "plate3d analytical period (m,n)=(" << m << "," << n << ")";
        rows.push_back(make_relative_row(aname.str(),
                                         analytical_period_plate3d(0.4, 0.4, 0.01, mat, m, n),
                                         analytical[k], 0.004, "thin-plate oracle"));

        RunConfig cfg;
        cfg.scenario = "plate3d";
        cfg.hdp = hdp;
        cfg.mode_m = m;
        cfg.mode_n = n;
        cfg.sim.end_time = 1.65 * reference[k][2];
        cfg.end_time_set = true;
        cfg.sim.track_stress = false;
        RunResult r = run_simulation(cfg);
        std::ostringstream name;
        name << "plate3d period H/dp=" << hdp << " (m,n)=(" << m << "," << n << ")";
        std::string note = r.fatal ? "fatal: " + r.fatal_message : "";
        rows.push_back(
            make_relative_row(name.str(), r.extracted_period, reference[k][2], period_tol, note));
    }
    return rows;
}

namespace {

BenchRow collision_row(const std::string& name, const RunConfig& cfg, bool check_momentum) {
    RunResult r = run_simulation(cfg);
    BenchRow row;
    row.name = name;
    row.relative = false;
    bool healthy = r.disorder_healthy();
    double drift_bound = 1e-6 * r.total_mass * r.sound_speed;
    bool momentum_ok = !check_momentum || r.max_momentum_drift <= drift_bound;
    row.pass = healthy && momentum_ok && !r.fatal;
    row.measured = r.min_pair_gap;
    row.expected = 0.6;
    std::ostringstream note;
    note << "min gap " << r.min_pair_gap << ", max nn gap " << r.max_nn_gap;
    if (check_momentum)
        note << ", momentum drift " << r.max_momentum_drift << " (bound " << drift_bound << ")";
    if (r.fatal) note << ", fatal: " << r.fatal_message;
    row.note = note.str();
    return row;
}

}  // namespace

std::vector<BenchRow> bench_collisions(bool include_3d) {
    std::vector<BenchRow> rows;
    for (double v0 : {0.06, 0.08}) {
        RunConfig cfg;
        cfg.scenario = "rings2d";
        cfg.v0_frac = v0;
        cfg.sim.end_time = 0.012;
        cfg.end_time_set = true;
        cfg.sim.track_stress = false;
        std::ostringstream name;
        name << "rings2d v0=" << v0 << "c0 healthy to t=0.012";
        rows.push_back(collision_row(name.str(), cfg, true));
    }
    {
        RunConfig cfg;
        cfg.scenario = "ballplate2d";
        cfg.v0_frac = 0.12;
        cfg.sim.end_time = 0.01;
        cfg.end_time_set = true;
        cfg.sim.track_stress = false;
        rows.push_back(collision_row("ballplate2d v0=0.12c0 healthy to t=0.01", cfg, false));
    }
    if (include_3d) {
        {
            RunConfig cfg;
            cfg.scenario = "balls3d";
            cfg.v0_frac = 0.08;
            cfg.sim.end_time = 0.0015;
            cfg.end_time_set = true;
            cfg.sim.track_stress = false;
            rows.push_back(collision_row("balls3d v0=0.08c0 healthy to t=0.0015", cfg, true));
        }
        {
            RunConfig cfg;
            cfg.scenario = "ballplate3d";
            cfg.v0_frac = 0.12;
            cfg.sim.end_time = 0.0012;
            cfg.end_time_set = true;
            cfg.sim.track_stress = false;
            rows.push_back(collision_row("ballplate3d v0=0.12c0 healthy to t=0.0012", cfg, false));
        }
    }
    return rows;
}

BenchRow bench_determinism(double end_time) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ulsph_determinism";
    auto read_file = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    std::string bytes[2];
    for (int rep = 0; rep < 2; ++rep) {
        RunConfig cfg = plate2d_config(30.0, 0.001, end_time);
        cfg.output_dir = (dir / ("rep" + std::to_string(rep))).string();
        run_simulation(cfg);
        bytes[rep] = read_file(fs::path(cfg.output_dir) / "probe.csv");
    }
    BenchRow row;
    row.name = "determinism: repeated runs give bitwise-identical probe.csv";
    row.relative = false;
    row.measured = bytes[0] == bytes[1] ? 1.0 : 0.0;
    row.expected = 1.0;
    row.pass = !bytes[0].empty() && bytes[0] == bytes[1];
    row.note = std::to_string(bytes[0].size()) + " bytes compared";
    return row;
}

void print_rows(const std::vector<BenchRow>& rows) {
    for (const auto& row : rows) {
        std::printf("[%s] %-64s measured %.6g", row.pass ? "PASS" : "FAIL", row.name.c_str(),
                    row.measured);
        if (row.relative)
            std::printf("  expected %.6g +- %.2g%%", row.expected, 100.0 * row.tol);
        else if (row.expected != 0.0)
            std::printf("  bound %.6g", row.expected);
        if (!row.note.empty()) std::printf("  (%s)", row.note.c_str());
        std::printf("\n");
    }
}

bool all_pass(const std::vector<BenchRow>& rows) {
    for (const auto& row : rows)
        if (!row.pass) return false;
    return true;
}

}  // namespace ulsph

// Experiment runner: reproduces the solver's benchmark tables (periods,
// convergence, stepping speedup, instability contrast) at desk scale and
// prints one PASS/FAIL row per check.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulsph/bench.hpp"

int main(int argc, char** argv) {
    CLI::App app{"benchmark experiment suites"};
    app.require_subcommand(1);

    auto add = [&](const char* name, const char* desc) { return app.add_subcommand(name, desc); };
    auto* periods2d = add("periods2d", "2D plate oscillation periods vs reference");
    double hdp2d = 30.0;
    periods2d->add_option("--Hdp", hdp2d, "resolution");
    auto* convergence = add("convergence", "2D plate period convergence across resolutions");
    auto* speedup = add("speedup", "dual vs single stepping wall-time ratios");
    bool speedup_3d = false;
    speedup->add_flag("--with-3d", speedup_3d, "include the 3D plate case");
    auto* instability = add("instability", "nested baseline vs laplacian formulation");
    auto* contrast = add("contrast", "conservative vs plain laplacian in the shear update");
    auto* longrun = add("longrun", "long single-stepping amplitude retention");
    auto* periods3d = add("periods3d", "3D plate oscillation periods vs reference");
    double hdp3d = 5.0;
    periods3d->add_option("--Hdp", hdp3d, "resolution");
    auto* collisions = add("collisions", "collision property suite");
    bool skip_3d = false;
    collisions->add_flag("--skip-3d", skip_3d, "2D cases only");
    auto* determinism = add("determinism", "bitwise-reproducible probe output");

    CLI11_PARSE(app, argc, argv);

    std::vector<ulsph::BenchRow> rows;
    if (periods2d->parsed()) rows = ulsph::bench_plate2d_periods(hdp2d);
    if (convergence->parsed()) rows = ulsph::bench_plate2d_convergence();
    if (speedup->parsed()) {
        auto append = [&rows](std::vector<ulsph::BenchRow> more) {
            rows.insert(rows.end(), more.begin(), more.end());
        };
        append(ulsph::bench_speedup_plate2d(10.0, 0.75, 0.6, true));
        append(ulsph::bench_speedup_plate2d(20.0, 0.6));
        append(ulsph::bench_speedup_plate2d(30.0, 0.6));
        if (speedup_3d) append(ulsph::bench_speedup_plate3d(3.0, 0.6));
    }
    if (instability->parsed()) rows = ulsph::bench_instability_contrast();
    if (contrast->parsed()) rows.push_back(ulsph::bench_laplacian_contrast());
    if (longrun->parsed()) rows = ulsph::bench_longrun();
    if (periods3d->parsed()) rows = ulsph::bench_plate3d_periods(hdp3d, 0.04);
    if (collisions->parsed()) rows = ulsph::bench_collisions(!skip_3d);
    if (determinism->parsed()) rows.push_back(ulsph::bench_determinism());

    ulsph::print_rows(rows);
    return ulsph::all_pass(rows) ? 0 : 1;
}

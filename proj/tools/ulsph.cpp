// Command-line entry point: run a benchmark scenario and write probe series,
// snapshots, and a run summary.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ulsph/runner.hpp"

namespace {

int cmd_list(bool as_json) {
    using ulsph::scenario_registry;
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& s : scenario_registry()) {
            nlohmann::json item;
            item["name"] = s.name;
            item["dimension"] = s.dimension;
            item["description"] = s.description;
            if (s.default_hdp > 0) item["default_hdp"] = s.default_hdp;
            if (s.default_dp > 0) item["default_dp"] = s.default_dp;
            if (s.default_speed > 0) item["default_speed_fraction"] = s.default_speed;
            item["default_end_time"] = s.default_end_time;
            item["rho0"] = s.rho0;
            item["young_modulus"] = s.young_modulus;
            item["poisson_ratio"] = s.poisson_ratio;
            out.push_back(item);
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& s : scenario_registry()) {
            std::printf("%-12s %dD  %s\n", s.name.c_str(), s.dimension, s.description.c_str());
            std::printf("             defaults:");
            if (s.default_hdp > 0) std::printf(" H/dp=%g", s.default_hdp);
            if (s.default_dp > 0) std::printf(" dp=%g", s.default_dp);
            if (s.default_speed > 0) std::printf(" speed=%gc0", s.default_speed);
            std::printf(" end=%g rho0=%g E=%g nu=%g\n", s.default_end_time, s.rho0,
                        s.young_modulus, s.poisson_ratio);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly-compressible updated-Lagrangian SPH solver for elastic dynamics"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list built-in scenarios and their defaults");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable output");

    auto* run = app.add_subcommand("run", "run a scenario");
    std::string scenario, config_file, output_dir = "out";
    std::vector<std::string> overrides;
    double hdp = 0, dp = 0, vf = 0, v0 = 0, end_time = -1, output_interval = 0, zeta = 0;
    int mode_m = 0, mode_n = 0;
    std::string formulation, stepping, laplacian, geometry;
    bool vtk = false, no_stress = false;
    run->add_option("scenario", scenario, "scenario name (see 'list')");
    run->add_option("--config", config_file, "key = value configuration file");
    run->add_option("--Hdp", hdp, "plate resolution as H/dp");
    run->add_option("--dp", dp, "particle spacing");
    run->add_option("--vf", vf, "plate2d tip speed as a fraction of c0");
    run->add_option("--v0", v0, "collision speed as a fraction of c0");
    run->add_option("--m", mode_m, "plate3d mode number m");
    run->add_option("--n", mode_n, "plate3d mode number n");
    run->add_option("--formulation", formulation, "enog | og");
    run->add_option("--stepping", stepping, "dual | single");
    run->add_option("--laplacian", laplacian, "conservative | plain");
    run->add_option("--geometry", geometry, "frozen | live pair geometry between rebuilds");
    run->add_option("--end", end_time, "physical end time");
    run->add_option("--output-interval", output_interval, "snapshot cadence (physical time)");
    run->add_option("--zeta", zeta, "laplacian calibration constant override");
    run->add_option("--out", output_dir, "output directory");
    run->add_flag("--vtk", vtk, "also write legacy-VTK point-cloud snapshots");
    run->add_flag("--no-stress", no_stress, "skip the diagnostic stress integration");
    run->add_option("--set", overrides, "extra key=value overrides")->take_all();

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) return cmd_list(list_json);

    try {
        ulsph::RunConfig cfg;
        if (!config_file.empty()) cfg = ulsph::parse_run_config_file(config_file);
        if (!scenario.empty()) cfg.scenario = scenario;
        if (cfg.scenario.empty())
            throw ulsph::ConfigError("missing scenario: pass a name or a --config file");
        if (hdp > 0) cfg.hdp = hdp;
        if (dp > 0) cfg.dp = dp;
        if (vf > 0) cfg.v_f = vf;
        if (v0 > 0) cfg.v0_frac = v0;
        if (mode_m > 0) cfg.mode_m = mode_m;
        if (mode_n > 0) cfg.mode_n = mode_n;
        if (!formulation.empty()) ulsph::apply_config_key(cfg, "formulation", formulation);
        if (!stepping.empty()) ulsph::apply_config_key(cfg, "stepping", stepping);
        if (!laplacian.empty()) ulsph::apply_config_key(cfg, "laplacian", laplacian);
        if (!geometry.empty()) ulsph::apply_config_key(cfg, "geometry", geometry);
        if (end_time >= 0) ulsph::apply_config_key(cfg, "end_time", std::to_string(end_time));
        if (output_interval > 0) cfg.sim.output_interval = output_interval;
        if (zeta > 0) cfg.sim.zeta = zeta;
        if (vtk) cfg.write_vtk = true;
        if (no_stress) cfg.sim.track_stress = false;
        cfg.output_dir = output_dir;
        for (const auto& kv : overrides) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw ulsph::ConfigError("--set expects key=value, got '" + kv + "'");
            ulsph::apply_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
        }

        ulsph::RunResult result = ulsph::run_simulation(cfg);
        std::printf("scenario %s: %d particles, reached t = %g in %.2f s\n", cfg.scenario.c_str(),
                    result.particle_count, result.final_time, result.wall_seconds);
        std::printf("  advection steps %lld, acoustic substeps %lld, rebuilds %lld\n",
                    result.advection_steps, result.substeps, result.rebuilds);
        if (std::isfinite(result.extracted_period))
            std::printf("  first oscillation period %.6g\n", result.extracted_period);
        std::printf("  disorder: min pair gap %.3f dp, max nearest-neighbor gap %.3f dp\n",
                    result.min_pair_gap, result.max_nn_gap);
        if (!std::isnan(result.disorder_breach_time))
            std::printf("  disorder thresholds breached at t = %g\n",
                        result.disorder_breach_time);
        if (result.fatal) {
            std::fprintf(stderr, "fatal numerical error at t = %g: %s\n", result.fatal_time,
                         result.fatal_message.c_str());
            return 3;
        }
        return 0;
    } catch (const ulsph::ConfigError& err) {
        std::fprintf(stderr, "configuration error: %s\n", err.what());
        return 2;
    } catch (const ulsph::SimulationError& err) {
        std::fprintf(stderr, "numerical error: %s\n", err.what());
        return 3;
    }
}

#include "ulsph/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "ulsph/scenarios.hpp"
#include "ulsph/stepper.hpp"

namespace ulsph {

const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> registry = {
        {"plate2d", 2, "oscillating cantilever plate, clamped root, first-mode initial velocity",
         10.0, 0.0, 0.05, 1.0, 1000.0, 2e6, 0.3975},
        {"plate3d", 3, "simply supported square plate, product-of-sines initial velocity", 3.0,
         0.0, 0.0, 0.1, 1000.0, 1e8, 0.3},
        {"rings2d", 2, "two rubber rings colliding head-on", 0.0, 0.001, 0.06, 0.012, 1200.0, 1e7,
         0.4},
        {"balls3d", 3, "two hollow rubber balls colliding head-on", 0.0, 0.001, 0.08, 0.007,
         1200.0, 1e7, 0.4},
        {"ballplate2d", 2, "rubber ball impacting a plate clamped at both ends", 0.0, 0.0025,
         0.12, 0.02, 1200.0, 1e7, 0.49},
        {"ballplate3d", 3, "rubber ball impacting a plate clamped on all four edges", 0.0, 0.0025,
         0.12, 0.005, 1200.0, 1e7, 0.49},
    };
    return registry;
}

const ScenarioInfo& scenario_info(const std::string& name) {
    for (const auto& s : scenario_registry())
        if (s.name == name) return s;
    std::string names;
    for (const auto& s : scenario_registry()) names += (names.empty() ? "" : ", ") + s.name;
    throw ConfigError("unknown scenario '" + name + "'; valid scenarios: " + names);
}

RunConfig resolve_defaults(const RunConfig& raw) {
    RunConfig cfg = raw;
    const ScenarioInfo& info = scenario_info(cfg.scenario);
    if (cfg.hdp <= 0.0) cfg.hdp = info.default_hdp;
    if (cfg.dp <= 0.0) cfg.dp = info.default_dp;
    if (cfg.v_f <= 0.0) cfg.v_f = info.default_speed;
    if (cfg.v0_frac <= 0.0) cfg.v0_frac = info.default_speed;
    if (cfg.mode_m <= 0) cfg.mode_m = 1;
    if (cfg.mode_n <= 0) cfg.mode_n = 1;
    if (cfg.rho0 <= 0.0) cfg.rho0 = info.rho0;
    if (cfg.young_modulus <= 0.0) cfg.young_modulus = info.young_modulus;
    if (cfg.poisson_ratio < 0.0) cfg.poisson_ratio = info.poisson_ratio;
    if (!cfg.end_time_set) cfg.sim.end_time = info.default_end_time;
    cfg.sim.dimension = info.dimension;
    return cfg;
}

namespace {

void apply_thread_override() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ULSPH_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

template <int D>
World<D> build_world(const RunConfig& cfg);

template <>
World<2> build_world<2>(const RunConfig& cfg) {
    Material mat = make_material(cfg.rho0, cfg.young_modulus, cfg.poisson_ratio);
    if (cfg.scenario == "plate2d") {
        double height = 0.02;
        return build_plate2d(0.2, height, height / cfg.hdp, mat, cfg.v_f);
    }
    if (cfg.scenario == "rings2d") return build_rings2d(cfg.dp, mat, cfg.v0_frac * mat.c0);
    if (cfg.scenario == "ballplate2d")
        return build_ball_plate2d(cfg.dp, mat, cfg.v0_frac * mat.c0);
    throw ConfigError("scenario '" + cfg.scenario + "' is not 2D");
}

template <>
World<3> build_world<3>(const RunConfig& cfg) {
    Material mat = make_material(cfg.rho0, cfg.young_modulus, cfg.poisson_ratio);
    if (cfg.scenario == "plate3d") {
        double height = 0.01;
        return build_plate3d(0.4, 0.4, height, height / cfg.hdp, mat, cfg.mode_m, cfg.mode_n);
    }
    if (cfg.scenario == "balls3d") return build_balls3d(cfg.dp, mat, cfg.v0_frac * mat.c0);
    if (cfg.scenario == "ballplate3d")
        return build_ball_plate3d(cfg.dp, mat, cfg.v0_frac * mat.c0);
    throw ConfigError("scenario '" + cfg.scenario + "' is not 3D");
}

std::string snapshot_name(int counter, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%06d.%s", counter, ext);
    return buf;
}

template <int D>
RunResult run_impl(const RunConfig& cfg) {
    World<D> world = build_world<D>(cfg);
    SimConfig sim = cfg.sim;
    sim.dimension = D;
    sim.dp = world.dp;

    RunResult result;
    result.dimension = D;
    result.particle_count = world.particles.size();
    result.dp = world.dp;
    result.probe_component = world.probe_component;
    result.sound_speed = world.material.c0;
    for (int i = 0; i < world.particles.size(); ++i) result.total_mass += world.particles.mass[i];

    const int probe = world.probe;
    const Vec<D> probe_origin = probe >= 0 ? world.particles.pos[probe] : Vec<D>{};
    const Vec<D> momentum0 = total_momentum(world.particles);

    ProbeSeries<D> series;
    const bool writing = !cfg.output_dir.empty();
    if (writing) std::filesystem::create_directories(cfg.output_dir);
    int snapshot_counter = 0;
    double next_output = 0.0;

    Simulation<D> simulation(std::move(world.particles), world.material, sim);

    auto hook = [&](Simulation<D>& s) {
        double t = s.time();
        const ParticleSet<D>& ps = s.particles();
        if (probe >= 0) {
            series.time.push_back(t);
            series.displacement.push_back(ps.pos[probe] - probe_origin);
            result.max_abs_probe_displacement =
                std::max(result.max_abs_probe_displacement,
                         std::abs(series.displacement.back()[world.probe_component]));
        }
        DisorderMetrics dm = disorder_metric(ps, s.table(), sim.dp);
        result.min_pair_gap = std::min(result.min_pair_gap, dm.min_pair_gap);
        result.max_nn_gap = std::max(result.max_nn_gap, dm.max_nn_gap);
        if ((dm.min_pair_gap < 0.6 || dm.max_nn_gap > 1.6) &&
            std::isnan(result.disorder_breach_time))
            result.disorder_breach_time = t;
        result.max_momentum_drift =
            std::max(result.max_momentum_drift, norm(total_momentum(ps) - momentum0));
        if (writing && t >= next_output) {
            write_snapshot(ps, t, cfg.output_dir + "/" + snapshot_name(snapshot_counter, "csv"));
            if (cfg.write_vtk)
                write_snapshot_vtk(ps, t,
                                   cfg.output_dir + "/" + snapshot_name(snapshot_counter, "vtk"));
            ++snapshot_counter;
            while (next_output <= t) next_output += sim.output_interval;
        }
    };

    apply_thread_override();
    auto t0 = std::chrono::steady_clock::now();
    try {
        simulation.advance(sim.end_time, hook);
    } catch (const SimulationError& err) {
        result.fatal = true;
        result.fatal_message = err.what();
        result.fatal_time = simulation.time();
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    result.final_time = simulation.time();
    result.advection_steps = simulation.counters().advection_steps;
    result.substeps = simulation.counters().substeps;
    result.rebuilds = simulation.counters().rebuilds;

    for (int s = 0; s < series.size(); ++s) {
        result.probe_time.push_back(series.time[s]);
        std::array<double, 3> d{0.0, 0.0, 0.0};
        for (int k = 0; k < D; ++k) d[k] = series.displacement[s][k];
        result.probe_displacement.push_back(d);
    }
    if (probe >= 0) {
        try {
            result.extracted_period = extract_period(series, world.probe_component);
        } catch (const InsufficientData&) {
            // leave NaN; short runs and collision scenarios have no period
        }
    }

    if (writing) {
        if (probe >= 0) write_probe_csv(series, cfg.output_dir + "/probe.csv");

        nlohmann::json meta;
        meta["scenario"] = cfg.scenario;
        meta["dimension"] = D;
        meta["particles"] = result.particle_count;
        meta["dp"] = result.dp;
        meta["formulation"] = sim.formulation == Formulation::enog ? "enog" : "og";
        meta["stepping"] = sim.stepping == Stepping::dual ? "dual" : "single";
        meta["laplacian"] =
            sim.laplacian == LaplacianForm::conservative ? "conservative" : "plain";
        meta["geometry"] = sim.geometry == PairGeometry::frozen ? "frozen" : "live";
        meta["track_stress"] = sim.track_stress;
        meta["zeta"] = sim.zeta_value();
        meta["cfl_advection"] = sim.cfl_advection;
        meta["cfl_acoustic"] = sim.cfl_acoustic;
        meta["end_time"] = sim.end_time;
        meta["final_time"] = result.final_time;
        meta["wall_seconds"] = result.wall_seconds;
        meta["advection_steps"] = result.advection_steps;
        meta["acoustic_substeps"] = result.substeps;
        meta["neighbor_rebuilds"] = result.rebuilds;
        meta["sound_speed"] = result.sound_speed;
        meta["total_mass"] = result.total_mass;
        if (std::isnan(result.extracted_period))
            meta["extracted_period"] = nullptr;
        else
            meta["extracted_period"] = result.extracted_period;
        meta["disorder"]["min_pair_gap"] = result.min_pair_gap;
        meta["disorder"]["max_nn_gap"] = result.max_nn_gap;
        if (std::isnan(result.disorder_breach_time))
            meta["disorder"]["breach_time"] = nullptr;
        else
            meta["disorder"]["breach_time"] = result.disorder_breach_time;
        meta["max_momentum_drift"] = result.max_momentum_drift;
        meta["fatal"]["occurred"] = result.fatal;
        if (result.fatal) {
            meta["fatal"]["message"] = result.fatal_message;
            meta["fatal"]["time"] = result.fatal_time;
        }
        std::ofstream out(cfg.output_dir + "/meta.json");
        out << meta.dump(2) << '\n';
    }
    return result;
}

}  // namespace

RunResult run_simulation(const RunConfig& raw) {
    RunConfig cfg = resolve_defaults(raw);
    if (scenario_info(cfg.scenario).dimension == 2) return run_impl<2>(cfg);
    return run_impl<3>(cfg);
}

}  // namespace ulsph

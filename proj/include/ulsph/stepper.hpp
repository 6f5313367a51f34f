#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ulsph/config.hpp"
#include "ulsph/formulations.hpp"
#include "ulsph/material.hpp"
#include "ulsph/neighbor.hpp"
#include "ulsph/operators.hpp"
#include "ulsph/particles.hpp"

namespace ulsph {

template <int D>
double max_speed(const ParticleSet<D>& ps) {
    double vmax2 = 0.0;
    const int n = ps.size();
#pragma omp parallel for schedule(static) reduction(max : vmax2)
    for (int i = 0; i < n; ++i) vmax2 = std::max(vmax2, norm2(ps.vel[i]));
    return std::sqrt(vmax2);
}

// Advection step governs neighbor rebuilds. The velocity floor keeps the
// rebuild cadence bounded for bodies near rest.
template <int D>
double dt_advection(const ParticleSet<D>& ps, double h, double v_floor,
                    double cfl_advection = 0.2) {
    return cfl_advection * h / std::max(max_speed(ps), v_floor);
}

// Acoustic step governs the state update.
template <int D>
double dt_acoustic(const ParticleSet<D>& ps, double h, double c0, double cfl_acoustic = 0.4) {
    return cfl_acoustic * h / (c0 + max_speed(ps));
}

struct StepperCounters {
    long long advection_steps = 0;
    long long substeps = 0;
    long long rebuilds = 0;
    double last_dt_advection = 0.0;
    double last_dt_acoustic = 0.0;
};

// Owns the advance loop: position-based Verlet substeps inside advection
// windows, constraint application, and the output hook fired once per window.
template <int D>
class Simulation {
  public:
    using Hook = std::function<void(Simulation&)>;

    Simulation(ParticleSet<D> particles, Material material, SimConfig config)
        : ps_(std::move(particles)),
          mat_(material),
          cfg_(std::move(config)),
          kernel_(cfg_.h()) {
        cfg_.validate();
        if (cfg_.dimension != D) throw ConfigError("config dimension does not match scenario");
        rates_.resize(ps_.size());
        pressure_.resize(ps_.size());
        drho_cache_.assign(ps_.size(), 0.0);
        for (int k = 0; k < D; ++k) gravity_[k] = cfg_.gravity[k];
    }

    const ParticleSet<D>& particles() const { return ps_; }
    ParticleSet<D>& particles() { return ps_; }
    const Material& material() const { return mat_; }
    const SimConfig& config() const { return cfg_; }
    const WendlandKernel<D>& kernel() const { return kernel_; }
    const NeighborTable<D>& table() const { return table_; }
    const StepperCounters& counters() const { return counters_; }
    double time() const { return time_; }

    void rebuild_now() { rebuild(); }

    // Runs until end_time, truncating the last substep of each window so the
    // window boundary (and end_time itself) is landed exactly. The hook fires
    // at t = 0 and after every completed advection window.
    void advance(double end_time, const Hook& hook = {}) {
        initialize();
        if (hook && !initial_hook_fired_) {
            initial_hook_fired_ = true;
            hook(*this);
        }
        while (time_ < end_time) {
            double window = dt_advection(ps_, kernel_.h(), mat_.c0 * cfg_.v_floor_fraction,
                                         cfg_.cfl_advection);
            counters_.last_dt_advection = window;
            double window_end = std::min(time_ + window, end_time);
            while (time_ < window_end) {
                if (cfg_.stepping == Stepping::single) rebuild();
                double dt = dt_acoustic(ps_, kernel_.h(), mat_.c0, cfg_.cfl_acoustic);
                double remaining = window_end - time_;
                bool last = dt >= remaining * (1.0 - 1e-12);
                if (last) dt = remaining;
                counters_.last_dt_acoustic = dt;
                substep(dt);
                ++counters_.substeps;
                if (counters_.substeps > cfg_.max_substeps)
                    throw SimulationError("substep budget exceeded", -1, time_);
                time_ = last ? window_end : time_ + dt;
            }
            ++counters_.advection_steps;
            if (cfg_.stepping == Stepping::dual) rebuild();
            if (hook) hook(*this);
        }
    }

  private:
    void initialize() {
        if (initialized_) return;
        initialized_ = true;
        rebuild();
        GeomView<D> geom = geometry_view();
        compute_pressure();
        density_rate(ps_, table_, geom, mat_, pressure_, drho_cache_);
    }

    void rebuild() {
        table_ = build_neighbor_table(ps_.pos, kernel_);
        if (needs_correction_matrices())
            refresh_correction_matrices(ps_, table_, kernel_);
        ++counters_.rebuilds;
    }

    bool needs_correction_matrices() const {
        return cfg_.formulation == Formulation::enog && cfg_.track_stress;
    }

    GeomView<D> geometry_view() const {
        return cfg_.geometry == PairGeometry::frozen ? frozen_geometry(table_)
                                                     : live_geometry(table_, ps_, kernel_);
    }

    void compute_pressure() {
        const int n = ps_.size();
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) pressure_[i] = pressure_eos(ps_.rho[i], mat_);
    }

    // One position-based Verlet substep:
    //   drift to the midpoint with the cached start-of-step density rate,
    //   kick velocities with midpoint forces (shear acceleration lagging one
    //   substep in the laplacian formulation), re-evaluate the density rate
    //   with the new velocities, drift the second half.
    void substep(double dt) {
        const int n = ps_.size();
        GeomView<D> geom = geometry_view();

#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            ps_.pos[i] += ps_.vel[i] * (0.5 * dt);
            ps_.rho[i] += drho_cache_[i] * (0.5 * dt);
        }

        compute_pressure();
        pressure_acceleration(ps_, table_, geom, mat_, pressure_, rates_.accel_pressure);
        if (cfg_.formulation == Formulation::og) {
            og_shear_pipeline(ps_, table_, geom, mat_.G, dt, rates_.accel_shear);
        } else if (cfg_.track_stress) {
            diagnostic_stress_update(ps_, table_, geom, mat_.G, dt);
        }

        if (cfg_.formulation == Formulation::og) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < n; ++i)
                ps_.vel[i] += (rates_.accel_pressure[i] + rates_.accel_shear[i] + gravity_) * dt;
        } else {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < n; ++i)
                ps_.vel[i] += (rates_.accel_pressure[i] + ps_.shear_accel[i] + gravity_) * dt;
        }
        apply_velocity_constraints();

        // Shear-acceleration increment from the post-kick velocities; first
        // applied in the next substep's kick.
        if (cfg_.formulation == Formulation::enog)
            enog_shear_update(ps_, table_, geom, cfg_.zeta_value(), mat_.G, dt, cfg_.laplacian);

        density_rate(ps_, table_, geom, mat_, pressure_, drho_cache_);

        int bad = -1;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            ps_.pos[i] += ps_.vel[i] * (0.5 * dt);
            ps_.rho[i] += drho_cache_[i] * (0.5 * dt);
            if (!finite(ps_.pos[i]) || !finite(ps_.vel[i]) || !(ps_.rho[i] > 0.0)) {
#pragma omp critical
                bad = bad < 0 ? i : std::min(bad, i);
            }
        }
        if (bad >= 0)
            throw SimulationError("non-finite state for particle " + std::to_string(bad) +
                                      " at t = " + std::to_string(time_),
                                  bad, time_);
    }

    void apply_velocity_constraints() {
        const int n = ps_.size();
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            if (ps_.constraint[i] == Constraint::clamped) {
                ps_.vel[i] = Vec<D>{};
            } else if (ps_.constraint[i] == Constraint::fixed_z) {
                ps_.vel[i][D - 1] = 0.0;
            }
        }
    }

    ParticleSet<D> ps_;
    Material mat_;
    SimConfig cfg_;
    WendlandKernel<D> kernel_;
    NeighborTable<D> table_;
    RateBuffers<D> rates_;
    std::vector<double> pressure_;
    std::vector<double> drho_cache_;
    Vec<D> gravity_;
    StepperCounters counters_;
    double time_ = 0.0;
    bool initialized_ = false;
    bool initial_hook_fired_ = false;
};

}  // namespace ulsph

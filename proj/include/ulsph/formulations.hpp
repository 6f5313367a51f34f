#pragma once

#include <vector>

#include "ulsph/config.hpp"
#include "ulsph/kernel.hpp"
#include "ulsph/material.hpp"
#include "ulsph/neighbor.hpp"
#include "ulsph/operators.hpp"
#include "ulsph/particles.hpp"
#include "ulsph/riemann.hpp"

namespace ulsph {

// Per-substep rate buffers. Overwritten on every evaluation; the accumulated
// shear acceleration itself lives in ParticleSet.
template <int D>
struct RateBuffers {
    std::vector<double> drho_dt;
    std::vector<Vec<D>> accel_pressure;
    // og: shear acceleration applied in the same kick.
    // enog: rate of change of the accumulated shear acceleration; integrated
    // into ParticleSet::shear_accel after the kick (one-substep lag).
    std::vector<Vec<D>> accel_shear;

    void resize(int n) {
        drho_dt.resize(n);
        accel_pressure.resize(n);
        accel_shear.resize(n);
    }
};

// Pair geometry source for the rate loops: either the table's frozen build-time
// values or a live recomputation from current positions.
template <int D>
struct GeomView {
    const NeighborTable<D>* table = nullptr;
    const Vec<D>* pos = nullptr;  // non-null selects live recomputation
    const WendlandKernel<D>* kernel = nullptr;

    // Returns false for pairs that drifted beyond the support (live mode only).
    inline bool get(int k, int i, int j, double& r, Vec<D>& e, double& dw) const {
        if (!pos) {
            r = table->r[k];
            e = table->e[k];
            dw = table->dwdr[k];
            return true;
        }
        Vec<D> d = pos[i] - pos[j];
        double r2 = norm2(d);
        double cut = kernel->cutoff();
        if (r2 >= cut * cut || r2 == 0.0) return false;
        r = std::sqrt(r2);
        e = d / r;
        dw = kernel->dw_dr(r);
        return true;
    }
};

template <int D>
inline GeomView<D> frozen_geometry(const NeighborTable<D>& table) {
    return GeomView<D>{&table, nullptr, nullptr};
}

template <int D>
inline GeomView<D> live_geometry(const NeighborTable<D>& table, const ParticleSet<D>& ps,
                                 const WendlandKernel<D>& kernel) {
    return GeomView<D>{&table, ps.pos.data(), &kernel};
}

// Continuity equation with interface states from the Riemann solver. The
// left state is the row owner i, the right state its neighbor j, both
// projected on the unit vector from i to j (= -e). A globally uniform velocity
// and pressure field gives a degenerate Riemann problem pairwise and therefore
// an exactly zero density rate.
template <int D>
void density_rate(const ParticleSet<D>& ps, const NeighborTable<D>& table,
                  const GeomView<D>& geom, const Material& mat,
                  const std::vector<double>& pressure, std::vector<double>& drho_dt) {
    const int n = ps.size();
    drho_dt.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            RiemannStates s;
            s.u_l = -dot(ps.vel[i], e);
            s.u_r = -dot(ps.vel[j], e);
            s.p_l = pressure[i];
            s.p_r = pressure[j];
            s.rho_l = ps.rho[i];
            s.rho_r = ps.rho[j];
            s.c = mat.c0;
            double u_star = riemann_star(s).u_star;
            sum += ps.volume(j) * (u_star - s.u_l) * dw;
        }
        drho_dt[i] = 2.0 * ps.rho[i] * sum;
    }
}

// Pressure part of the momentum equation; pairwise antisymmetric so the summed
// momentum from this term is conserved up to accumulation order.
template <int D>
void pressure_acceleration(const ParticleSet<D>& ps, const NeighborTable<D>& table,
                           const GeomView<D>& geom, const Material& mat,
                           const std::vector<double>& pressure, std::vector<Vec<D>>& accel) {
    const int n = ps.size();
    accel.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Vec<D> a;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            RiemannStates s;
            s.u_l = -dot(ps.vel[i], e);
            s.u_r = -dot(ps.vel[j], e);
            s.p_l = pressure[i];
            s.p_r = pressure[j];
            s.rho_l = ps.rho[i];
            s.rho_r = ps.rho[j];
            s.c = mat.c0;
            double p_star = riemann_star(s).p_star;
            a += e * (-2.0 * ps.mass[j] * p_star / (ps.rho[i] * ps.rho[j]) * dw);
        }
        accel[i] = a;
    }
}

// Accumulates one substep of shear acceleration from the velocity Laplacian.
// The increment computed here is applied in the *next* momentum update.
template <int D>
void enog_shear_update(ParticleSet<D>& ps, const NeighborTable<D>& table,
                       const GeomView<D>& geom, double zeta, double shear_mod, double dt,
                       LaplacianForm form = LaplacianForm::conservative) {
    const int n = ps.size();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Vec<D> lap;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            Vec<D> vij = ps.vel[i] - ps.vel[j];
            if (form == LaplacianForm::conservative) {
                lap += e * (2.0 * zeta * dot(e, vij) / r * dw * ps.volume(j));
            } else {
                lap += vij * (2.0 * dw / r * ps.volume(j));
            }
        }
        ps.shear_accel[i] += lap * (shear_mod / ps.rho[i] * dt);
    }
}

namespace detail {

template <int D>
inline Mat<D> deviatoric_stress_rate(const Mat<D>& grad_v, double shear_mod) {
    Mat<D> eps = symmetric_part(grad_v);
    Mat<D> rate = eps * (2.0 * shear_mod);
    double iso = 2.0 * shear_mod * trace(eps) / D;
    for (int k = 0; k < D; ++k) rate(k, k) -= iso;
    return rate;
}

}  // namespace detail

// Classical nested pipeline: uncorrected velocity gradient -> strain rate ->
// stress rate -> stress integral -> pairwise stress divergence. The stress
// update completes for all particles before the divergence pass reads it.
template <int D>
void og_shear_pipeline(ParticleSet<D>& ps, const NeighborTable<D>& table,
                       const GeomView<D>& geom, double shear_mod, double dt,
                       std::vector<Vec<D>>& accel_shear) {
    const int n = ps.size();
    accel_shear.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Mat<D> grad;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            grad += outer(ps.vel[j] - ps.vel[i], e) * (dw * ps.volume(j));
        }
        ps.shear_stress[i] += detail::deviatoric_stress_rate(grad, shear_mod) * dt;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Vec<D> a;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            double w = ps.mass[j] / (ps.rho[i] * ps.rho[j]);
            a += ((ps.shear_stress[i] + ps.shear_stress[j]) * e) * (w * dw);
        }
        accel_shear[i] = a;
    }
}

// Stress bookkeeping for von Mises output when the shear force comes from the
// Laplacian path: same rate pipeline but with the corrected gradient, never
// fed back into forces. Requires current correction matrices.
template <int D>
void diagnostic_stress_update(ParticleSet<D>& ps, const NeighborTable<D>& table,
                              const GeomView<D>& geom, double shear_mod, double dt) {
    const int n = ps.size();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Mat<D> raw;
        for (int k = table.begin(i); k < table.end(i); ++k) {
            int j = table.index[k];
            double r, dw;
            Vec<D> e;
            if (!geom.get(k, i, j, r, e, dw)) continue;
            raw += outer(ps.vel[i] - ps.vel[j], e) * (dw * ps.volume(j));
        }
        Mat<D> grad = raw * transpose(ps.correction[i]);
        ps.shear_stress[i] += detail::deviatoric_stress_rate(grad, shear_mod) * dt;
    }
}

}  // namespace ulsph

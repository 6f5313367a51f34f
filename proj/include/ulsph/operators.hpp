#pragma once

#include <string>

#include "ulsph/errors.hpp"
#include "ulsph/kernel.hpp"
#include "ulsph/math.hpp"
#include "ulsph/neighbor.hpp"
#include "ulsph/particles.hpp"

namespace ulsph {

// Discrete SPH differential operators, evaluated from current positions over
// the frozen adjacency. Sign conventions are anchored by two properties:
// uniform translation maps to zero and affine velocity fields are reproduced
// with a positive sign (the corrected variant exactly).

namespace detail {

template <int D, class Fn>
inline void for_pairs(int i, const ParticleSet<D>& ps, const NeighborTable<D>& table,
                      const WendlandKernel<D>& kernel, Fn&& fn) {
    for (int k = table.begin(i); k < table.end(i); ++k) {
        int j = table.index[k];
        Vec<D> d = ps.pos[i] - ps.pos[j];
        double r = norm(d);
        if (r >= kernel.cutoff() || r == 0.0) continue;
        Vec<D> e = d / r;
        fn(j, r, e, kernel.dw_dr(r));
    }
}

}  // namespace detail

template <int D>
Mat<D> velocity_gradient_uncorrected(int i, const ParticleSet<D>& ps,
                                     const NeighborTable<D>& table,
                                     const WendlandKernel<D>& kernel) {
    Mat<D> g;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double, const Vec<D>& e, double dw) {
        g += outer(ps.vel[j] - ps.vel[i], e) * (dw * ps.volume(j));
    });
    return g;
}

// Inverse of the local kernel-gradient moment matrix. The moment matrix on a
// healthy neighborhood is close to -I (e points from j toward i), so the
// correction is close to -I as well.
template <int D>
Mat<D> correction_matrix(int i, const ParticleSet<D>& ps, const NeighborTable<D>& table,
                         const WendlandKernel<D>& kernel) {
    Mat<D> moment;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double r, const Vec<D>& e, double dw) {
        moment += outer(e, e) * (dw * r * ps.volume(j));
    });
    double det = determinant(moment);
    double scale = frobenius_norm(moment);
    if (det == 0.0 || !std::isfinite(det))
        throw DegenerateNeighborhood(
            "degenerate neighborhood for particle " + std::to_string(i), i);
    Mat<D> inv = inverse(moment, det);
    if (scale * frobenius_norm(inv) > 1e8)
        throw DegenerateNeighborhood(
            "degenerate neighborhood for particle " + std::to_string(i), i);
    return inv;
}

// First-order consistent gradient: reproduces any affine velocity field at i
// exactly, for arbitrary non-degenerate neighbor arrangements. Requires
// ps.correction[i] to be current.
template <int D>
Mat<D> velocity_gradient_corrected(int i, const ParticleSet<D>& ps,
                                   const NeighborTable<D>& table,
                                   const WendlandKernel<D>& kernel) {
    const Mat<D>& b = ps.correction[i];
    Mat<D> g;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double, const Vec<D>& e, double dw) {
        g += outer(ps.vel[i] - ps.vel[j], b * (dw * e)) * ps.volume(j);
    });
    return g;
}

// Pairwise-symmetric divergence of the stored shear stress; contributions are
// antisymmetric under i<->j so the summed momentum from this term vanishes.
template <int D>
Vec<D> nested_shear_divergence(int i, const ParticleSet<D>& ps, const NeighborTable<D>& table,
                               const WendlandKernel<D>& kernel) {
    Vec<D> a;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double, const Vec<D>& e, double dw) {
        double w = ps.mass[j] / (ps.rho[i] * ps.rho[j]);
        a += ((ps.shear_stress[i] + ps.shear_stress[j]) * e) * (w * dw);
    });
    return a;
}

// Unprojected Laplacian estimate. Not angular-momentum conservative: rigid
// rotation produces a spurious response. Kept for the contrast experiment.
template <int D>
Vec<D> laplacian_plain(int i, const ParticleSet<D>& ps, const NeighborTable<D>& table,
                       const WendlandKernel<D>& kernel) {
    Vec<D> a;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double r, const Vec<D>&, double dw) {
        a += (ps.vel[i] - ps.vel[j]) * (2.0 * dw / r * ps.volume(j));
    });
    return a;
}

// Projected (angular-momentum conservative) Laplacian estimate: the pair
// velocity is projected onto the pair axis, so rigid rotation contributes
// nothing. zeta absorbs the kernel- and h-dependent normalization.
template <int D>
Vec<D> laplacian_conservative(int i, const ParticleSet<D>& ps, const NeighborTable<D>& table,
                              const WendlandKernel<D>& kernel, double zeta) {
    Vec<D> a;
    detail::for_pairs(i, ps, table, kernel, [&](int j, double r, const Vec<D>& e, double dw) {
        double proj = dot(e, ps.vel[i] - ps.vel[j]);
        a += e * (2.0 * zeta * proj / r * dw * ps.volume(j));
    });
    return a;
}

// Refresh all correction matrices; reports the first degenerate particle.
template <int D>
void refresh_correction_matrices(ParticleSet<D>& ps, const NeighborTable<D>& table,
                                 const WendlandKernel<D>& kernel) {
    const int n = ps.size();
    int bad = -1;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        try {
            ps.correction[i] = correction_matrix(i, ps, table, kernel);
        } catch (const DegenerateNeighborhood&) {
#pragma omp critical
            bad = bad < 0 ? i : std::min(bad, i);
        }
    }
    if (bad >= 0)
        throw DegenerateNeighborhood("degenerate neighborhood for particle " + std::to_string(bad),
                                     bad);
}

}  // namespace ulsph

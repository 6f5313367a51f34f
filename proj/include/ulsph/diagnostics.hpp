#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "ulsph/errors.hpp"
#include "ulsph/math.hpp"
#include "ulsph/neighbor.hpp"
#include "ulsph/particles.hpp"

namespace ulsph {

// Scalar invariant sqrt(3/2 s:s) of the stored deviatoric stress. A 2D tensor
// is treated as the in-plane block of a 3D deviator with zero out-of-plane
// components.
template <int D>
double von_mises(const Mat<D>& s) {
    double ss = 0.0;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) ss += s(r, c) * s(r, c);
    return std::sqrt(1.5 * ss);
}

// Displacement history of one tracked particle relative to its initial position.
template <int D>
struct ProbeSeries {
    std::vector<double> time;
    std::vector<Vec<D>> displacement;

    int size() const { return static_cast<int>(time.size()); }
};

// First oscillation period from zero crossings of one displacement component:
// the gap between the first and third sign changes after an initial guard of
// `guard` samples, with linear interpolation between samples.
template <int D>
double extract_period(const ProbeSeries<D>& series, int component, int guard = 10) {
    const int n = series.size();
    std::vector<double> crossings;
    for (int k = guard; k + 1 < n && crossings.size() < 3; ++k) {
        double a = series.displacement[k][component];
        double b = series.displacement[k + 1][component];
        if (a == 0.0) continue;
        if (b == 0.0) {
            crossings.push_back(series.time[k + 1]);
        } else if ((a < 0.0) != (b < 0.0)) {
            double t = series.time[k] +
                       (series.time[k + 1] - series.time[k]) * (a / (a - b));
            crossings.push_back(t);
        }
    }
    if (crossings.size() < 3)
        throw InsufficientData("probe series has fewer than three zero crossings");
    return crossings[2] - crossings[0];
}

template <int D>
double kinetic_energy(const ParticleSet<D>& ps) {
    double e = 0.0;
    for (int i = 0; i < ps.size(); ++i) e += 0.5 * ps.mass[i] * norm2(ps.vel[i]);
    return e;
}

template <int D>
Vec<D> total_momentum(const ParticleSet<D>& ps) {
    Vec<D> p;
    for (int i = 0; i < ps.size(); ++i) p += ps.vel[i] * ps.mass[i];
    return p;
}

struct DisorderMetrics {
    double min_pair_gap = std::numeric_limits<double>::infinity();  // min r_ij / dp
    double max_nn_gap = 0.0;  // max over particles of nearest-neighbor distance / dp
};

// Quantitative proxies for the two instability signatures: particle clustering
// (pairs collapsing below the lattice spacing) and artificial fracture
// (nearest neighbors receding from it). A particle with no neighbors at all
// reports an infinite nearest-neighbor gap.
template <int D>
DisorderMetrics disorder_metric(const ParticleSet<D>& ps, const NeighborTable<D>& table,
                                double dp) {
    DisorderMetrics m;
    const int n = ps.size();
    for (int i = 0; i < n; ++i) {
        double nn = std::numeric_limits<double>::infinity();
        for (int k = table.begin(i); k < table.end(i); ++k) {
            double r = norm(ps.pos[i] - ps.pos[table.index[k]]);
            nn = std::min(nn, r);
        }
        m.min_pair_gap = std::min(m.min_pair_gap, nn / dp);
        m.max_nn_gap = std::max(m.max_nn_gap, nn / dp);
    }
    return m;
}

}  // namespace ulsph

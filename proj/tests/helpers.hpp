#pragma once

#include <random>

#include "ulsph/kernel.hpp"
#include "ulsph/neighbor.hpp"
#include "ulsph/particles.hpp"

namespace ulsph::testing {

// Uniform lattice block centered on the origin, unit density and mass
// consistent with the spacing.
template <int D>
ParticleSet<D> make_lattice(int n_side, double dp, double rho0 = 1.0) {
    ParticleSet<D> ps;
    int total = 1;
    for (int k = 0; k < D; ++k) total *= n_side;
    ps.resize(total);
    int idx = 0;
    for (int i = 0; i < n_side; ++i)
        for (int j = 0; j < n_side; ++j) {
            if constexpr (D == 2) {
                ps.pos[idx] = Vec<2>{(i - n_side / 2) * dp, (j - n_side / 2) * dp};
                ps.rho[idx] = rho0;
                ps.mass[idx] = rho0 * dp * dp;
                ++idx;
            } else {
                for (int k = 0; k < n_side; ++k) {
                    ps.pos[idx] = Vec<3>{(i - n_side / 2) * dp, (j - n_side / 2) * dp,
                                         (k - n_side / 2) * dp};
                    ps.rho[idx] = rho0;
                    ps.mass[idx] = rho0 * dp * dp * dp;
                    ++idx;
                }
            }
        }
    return ps;
}

// Index of the particle at the lattice center.
template <int D>
int center_index(const ParticleSet<D>& ps) {
    int best = 0;
    double best_d2 = norm2(ps.pos[0]);
    for (int i = 1; i < ps.size(); ++i) {
        double d2 = norm2(ps.pos[i]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

// Lattice jittered by +-amplitude*dp in every coordinate.
template <int D>
ParticleSet<D> make_jittered_lattice(int n_side, double dp, double amplitude,
                                     unsigned seed = 1234) {
    ParticleSet<D> ps = make_lattice<D>(n_side, dp);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-amplitude * dp, amplitude * dp);
    for (int i = 0; i < ps.size(); ++i)
        for (int k = 0; k < D; ++k) ps.pos[i][k] += jitter(rng);
    return ps;
}

template <int D>
Vec<D> random_vec(std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Vec<D> v;
    for (int k = 0; k < D; ++k) v[k] = u(rng);
    return v;
}

template <int D>
Mat<D> random_mat(std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat<D> m;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) m(r, c) = u(rng);
    return m;
}

// v = A x applied to every particle.
template <int D>
void apply_affine_velocity(ParticleSet<D>& ps, const Mat<D>& a, const Vec<D>& shift = {}) {
    for (int i = 0; i < ps.size(); ++i) ps.vel[i] = a * ps.pos[i] + shift;
}

// Rigid rotation about the origin (scalar rate in 2D, axis-z rate in 3D uses
// a full antisymmetric generator for generality).
template <int D>
void apply_rigid_rotation(ParticleSet<D>& ps, double omega) {
    Mat<D> gen;
    gen(0, 1) = -omega;
    gen(1, 0) = omega;
    apply_affine_velocity(ps, gen);
}

}  // namespace ulsph::testing

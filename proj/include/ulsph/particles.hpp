#pragma once

#include <cstdint>
#include <vector>

#include "ulsph/math.hpp"

namespace ulsph {

enum class Constraint : std::uint8_t {
    free_particle,  // fully dynamic
    clamped,        // velocity forced to zero, still acts as a kernel neighbor
    fixed_z,        // z velocity component forced to zero (3D only)
};

// Structure-of-arrays particle state. All arrays share one length.
// Volume is always derived as mass/density, never stored.
template <int D>
struct ParticleSet {
    std::vector<Vec<D>> pos;
    std::vector<Vec<D>> vel;
    std::vector<double> rho;
    std::vector<double> mass;
    std::vector<Vec<D>> shear_accel;      // accumulated shear acceleration
    std::vector<Mat<D>> shear_stress;     // deviatoric stress, diagnostic under the laplacian formulation
    std::vector<Mat<D>> correction;       // kernel-gradient correction matrices
    std::vector<Constraint> constraint;

    int size() const { return static_cast<int>(pos.size()); }

    void resize(int n) {
        pos.resize(n);
        vel.resize(n);
        rho.resize(n);
        mass.resize(n);
        shear_accel.resize(n);
        shear_stress.resize(n);
        correction.resize(n);
        constraint.resize(n, Constraint::free_particle);
    }

    double volume(int i) const { return mass[i] / rho[i]; }
};

}  // namespace ulsph

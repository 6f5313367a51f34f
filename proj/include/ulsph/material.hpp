#pragma once

#include <cmath>
#include <string>

#include "ulsph/errors.hpp"

namespace ulsph {

// Linear-elastic material with the derived constants used throughout the solver.
struct Material {
    double rho0 = 0.0;  // reference density
    double E = 0.0;     // Young's modulus
    double nu = 0.0;    // Poisson's ratio
    double G = 0.0;     // shear modulus, E / (2 (1 + nu))
    double c0 = 0.0;    // sound speed, sqrt(E / (3 (1 - 2 nu) rho0))
};

inline void validate_elastic_constants(double rho0, double E, double nu) {
    if (!(rho0 > 0.0))
        throw InvalidMaterial("material: rho0 must be positive, got " + std::to_string(rho0));
    if (!(E > 0.0))
        throw InvalidMaterial("material: Young's modulus must be positive, got " + std::to_string(E));
    if (!(nu >= 0.0 && nu < 0.5))
        throw InvalidMaterial("material: Poisson ratio must satisfy 0 <= nu < 0.5, got " +
                              std::to_string(nu));
}

inline double shear_modulus(double E, double nu) {
    if (!(E > 0.0) || !(nu >= 0.0 && nu < 0.5))
        throw InvalidMaterial("shear_modulus: need E > 0 and 0 <= nu < 0.5");
    return E / (2.0 * (1.0 + nu));
}

inline double sound_speed(double E, double nu, double rho0) {
    validate_elastic_constants(rho0, E, nu);
    return std::sqrt(E / (3.0 * (1.0 - 2.0 * nu) * rho0));
}

inline Material make_material(double rho0, double E, double nu) {
    validate_elastic_constants(rho0, E, nu);
    Material m;
    m.rho0 = rho0;
    m.E = E;
    m.nu = nu;
    m.G = shear_modulus(E, nu);
    m.c0 = sound_speed(E, nu, rho0);
    return m;
}

// Weakly-compressible equation of state; negative values express tension.
inline double pressure_eos(double rho, const Material& m) {
    return m.c0 * m.c0 * (rho - m.rho0);
}

}  // namespace ulsph

#pragma once

#include <algorithm>

namespace ulsph {

// Left/right states of an inter-particle Riemann problem. Normal velocities are
// projections onto the unit vector pointing from particle i (left) to j (right).
struct RiemannStates {
    double u_l = 0.0;
    double u_r = 0.0;
    double p_l = 0.0;
    double p_r = 0.0;
    double rho_l = 0.0;
    double rho_r = 0.0;
    double c = 0.0;  // shared sound speed (single material)
};

struct RiemannStar {
    double u_star = 0.0;
    double p_star = 0.0;
};

// Low-dissipation acoustic solver. The pressure dissipation is limited so that it
// acts only when the pair approaches and vanishes smoothly for separating pairs.
inline RiemannStar riemann_star(const RiemannStates& s) {
    double rho_bar = 0.5 * (s.rho_l + s.rho_r);
    double du = s.u_l - s.u_r;
    double beta = std::min(3.0 * std::max(du, 0.0) / s.c, 1.0);
    RiemannStar out;
    out.u_star = 0.5 * (s.u_l + s.u_r) + 0.5 * (s.p_l - s.p_r) / (rho_bar * s.c);
    out.p_star = 0.5 * (s.p_l + s.p_r) + 0.5 * beta * rho_bar * s.c * du;
    return out;
}

}  // namespace ulsph

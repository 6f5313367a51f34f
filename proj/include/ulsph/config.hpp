#pragma once

#include <array>
#include <limits>

#include "ulsph/errors.hpp"

namespace ulsph {

enum class Formulation {
    enog,  // non-nested shear acceleration via the conservative Laplacian (hourglass-free)
    og,    // classical nested stress-divergence shear acceleration (instability baseline)
};

enum class Stepping {
    dual,    // large advection step owns neighbor rebuilds, small acoustic substeps advance state
    single,  // acoustic substeps with a neighbor rebuild before every substep
};

enum class LaplacianForm {
    conservative,  // projected pair velocity, annihilates rigid rotation
    plain,         // unprojected form, kept for the contrast experiment
};

enum class PairGeometry {
    frozen,  // pair r/e/dW cached at each rebuild and reused across the advection window
    live,    // pair geometry recomputed from current positions every substep
};

// Calibrated normalization of the projected discrete Laplacian: the value
// that reproduces the analytic Laplacian of divergence-free quadratic
// velocity fields with the Wendland kernel at h = 1.3 dp, measured on mildly
// disordered particle distributions representative of the working state
// (lattice with 0.2 dp jitter, interior-averaged). The continuum limit of
// the projection identity gives d + 2; the discrete fourth-moment deficit of
// this kernel/spacing raises the working value (4.95/5.76 on the perfect
// lattice, decreasing with disorder).
inline double calibrated_laplacian_zeta(int dimension) {
    return dimension == 2 ? 4.5586 : 5.3901;
}

struct SimConfig {
    int dimension = 2;
    double dp = 0.0;            // initial particle spacing
    double h_ratio = 1.3;       // smoothing length = h_ratio * dp
    double cfl_advection = 0.2;
    double cfl_acoustic = 0.4;
    double zeta = 0.0;          // 0 selects the dimension default
    Formulation formulation = Formulation::enog;
    Stepping stepping = Stepping::dual;
    LaplacianForm laplacian = LaplacianForm::conservative;
    PairGeometry geometry = PairGeometry::frozen;
    bool track_stress = true;   // integrate the diagnostic stress (von Mises output)
    double end_time = 0.0;
    double output_interval = std::numeric_limits<double>::infinity();
    std::array<double, 3> gravity{0.0, 0.0, 0.0};
    double v_floor_fraction = 0.02;  // advection-step velocity floor as a fraction of c0
    long long max_substeps = 1'000'000'000;

    double zeta_value() const { return zeta > 0.0 ? zeta : calibrated_laplacian_zeta(dimension); }
    double h() const { return h_ratio * dp; }

    void validate() const {
        if (dimension != 2 && dimension != 3)
            throw ConfigError("config: dimension must be 2 or 3");
        if (!(dp > 0.0)) throw ConfigError("config: dp must be positive");
        if (!(h_ratio > 0.0)) throw ConfigError("config: h_ratio must be positive");
        if (!(cfl_advection > 0.0)) throw ConfigError("config: cfl_advection must be positive");
        if (!(cfl_acoustic > 0.0)) throw ConfigError("config: cfl_acoustic must be positive");
        if (!(end_time >= 0.0)) throw ConfigError("config: end_time must be non-negative");
        if (!(output_interval > 0.0)) throw ConfigError("config: output_interval must be positive");
        if (!(v_floor_fraction > 0.0)) throw ConfigError("config: v_floor must be positive");
    }
};

}  // namespace ulsph

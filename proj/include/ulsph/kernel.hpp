#pragma once

#include <cassert>
#include <cmath>
#include <numbers>

namespace ulsph {

// Wendland C2 kernel with compact support 2h.
//   W(q) = alpha_d / h^d (1 - q/2)^4 (2q + 1),  q = r/h in [0, 2]
//   alpha_2 = 7/(4 pi), alpha_3 = 21/(16 pi)
template <int D>
class WendlandKernel {
  public:
    explicit WendlandKernel(double h)
        : h_(h),
          inv_h_(1.0 / h),
          cutoff_(2.0 * h),
          sigma_(alpha() / std::pow(h, D)),
          grad_sigma_(alpha() / std::pow(h, D + 1)) {
        assert(h > 0.0);
    }

    double h() const { return h_; }
    double cutoff() const { return cutoff_; }

    double w(double r) const {
        assert(r >= 0.0);
        double q = r * inv_h_;
        if (q >= 2.0) return 0.0;
        double t = 1.0 - 0.5 * q;
        double t2 = t * t;
        return sigma_ * t2 * t2 * (2.0 * q + 1.0);
    }

    // Radial derivative; non-positive, zero at r = 0 and beyond the support.
    double dw_dr(double r) const {
        assert(r >= 0.0);
        double q = r * inv_h_;
        if (q >= 2.0) return 0.0;
        double t = 1.0 - 0.5 * q;
        return grad_sigma_ * (-5.0 * q) * t * t * t;
    }

  private:
    static constexpr double alpha() {
        return D == 2 ? 7.0 / (4.0 * std::numbers::pi) : 21.0 / (16.0 * std::numbers::pi);
    }

    double h_, inv_h_, cutoff_, sigma_, grad_sigma_;
};

}  // namespace ulsph

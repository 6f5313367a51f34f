#include <random>

#include "doctest.h"
#include "ulsph/riemann.hpp"

using namespace ulsph;

TEST_CASE("degenerate problem returns the shared state exactly") {
    RiemannStates s{3.5, 3.5, 1234.0, 1234.0, 1000.0, 1000.0, 57.027};
    RiemannStar star = riemann_star(s);
    CHECK(star.u_star == 3.5);
    CHECK(star.p_star == 1234.0);
}

TEST_CASE("approaching pair dissipates") {
    RiemannStates s{1.0, -1.0, 0.0, 0.0, 1000.0, 1000.0, 57.027};
    RiemannStar star = riemann_star(s);
    CHECK(star.u_star == 0.0);  // forced by symmetry
    // beta = 6/c < 1, p* = beta/2 * rho_bar * c * 2 = 6 * rho_bar exactly
    CHECK(star.p_star == doctest::Approx(6000.0).epsilon(1e-12));
}

TEST_CASE("separating pair adds no dissipation") {
    RiemannStates s{-1.0, 1.0, 250.0, 250.0, 1000.0, 1000.0, 57.027};
    RiemannStar star = riemann_star(s);
    CHECK(star.p_star == 250.0);
}

TEST_CASE("limiter saturates for strong approach") {
    // 3 (u_l - u_r) / c > 1 clamps beta at 1
    RiemannStates s{30.0, -30.0, 0.0, 0.0, 1000.0, 1000.0, 57.027};
    RiemannStar star = riemann_star(s);
    CHECK(star.p_star == doctest::Approx(0.5 * 1000.0 * 57.027 * 60.0).epsilon(1e-12));
}

TEST_CASE("swap symmetry: mirrored states negate u* and preserve p*") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-5.0, 5.0), p(-1e4, 1e4), rho(900.0, 1100.0);
    for (int trial = 0; trial < 200; ++trial) {
        RiemannStates s{u(rng), u(rng), p(rng), p(rng), rho(rng), rho(rng), 57.027};
        RiemannStates mirrored{-s.u_r, -s.u_l, s.p_r, s.p_l, s.rho_r, s.rho_l, s.c};
        RiemannStar a = riemann_star(s);
        RiemannStar b = riemann_star(mirrored);
        CHECK(a.u_star == doctest::Approx(-b.u_star).epsilon(1e-12));
        CHECK(a.p_star == doctest::Approx(b.p_star).epsilon(1e-12));
    }
}

TEST_CASE("dissipation is non-negative work on approach") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0), p(-1e4, 1e4);
    for (int trial = 0; trial < 200; ++trial) {
        RiemannStates s{u(rng), u(rng), p(rng), p(rng), 1000.0, 1000.0, 57.027};
        RiemannStar star = riemann_star(s);
        double mean_p = 0.5 * (s.p_l + s.p_r);
        if (s.u_l - s.u_r > 0.0)
            CHECK(star.p_star >= mean_p);
        else
            CHECK(star.p_star == doctest::Approx(mean_p).epsilon(1e-12));
    }
}

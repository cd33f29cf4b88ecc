#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spacecurve/geomcore.hpp"
#include "spacecurve/natural.hpp"
#include "spacecurve/zoo.hpp"

using namespace spacecurve;
using std::numbers::pi;

TEST_CASE("slant helix parameters") {
    double theta = pi / 3.0;
    SlantHelixParams p(theta, {0.0, ScalarProfile::constant(1.0)});
    CHECK(p.m == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(p.n == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.lambda1 + p.lambda2 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.lambda1 * p.lambda2 ==
          doctest::Approx(std::sin(theta) * std::sin(theta)).epsilon(1e-14));
    CHECK(p.n / p.m == doctest::Approx(std::sin(theta)).epsilon(1e-14));

    CHECK_THROWS_AS(SlantHelixParams(0.0, {0.0, ScalarProfile::constant(1.0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SlantHelixParams(pi / 2.0, {0.0, ScalarProfile::constant(1.0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SlantHelixParams(-0.3, {0.0, ScalarProfile::constant(1.0)}),
                    std::invalid_argument);
}

TEST_CASE("plane apparatus") {
    auto circle = plane_apparatus(ScalarProfile::constant(1.0));
    CHECK(circle.generic);
    for (double s = 0.0; s <= 2.0 * pi; s += 0.1) {
        Frame f = circle.frame_at(s);
        CHECK((f.t - Vec3{std::cos(s), std::sin(s), 0.0}).norm() < 1e-15);
        CHECK((f.n1 - Vec3{-std::sin(s), std::cos(s), 0.0}).norm() < 1e-15);
        CHECK(max_abs_diff(f.n2, Vec3::unit_z()) == 0.0);
        CHECK(frame_defect(f) < 1e-15);
        CHECK(circle.tau(s) == 0.0);
    }

    auto line = plane_apparatus(ScalarProfile::constant(0.0));
    for (double s = -2.0; s <= 2.0; s += 0.5) {
        CHECK(max_abs_diff(line.frame_at(s), Frame::canonical()) == 0.0);
    }
}

TEST_CASE("helix apparatus") {
    double theta = 0.7;
    auto helix = helix_apparatus(ScalarProfile::harmonic_cos(0.9, 0.6, 0.2), theta);
    CHECK(helix.generic);
    for (double s = 0.0; s <= 10.0; s += 0.23) {
        Frame f = helix.frame_at(s);
        CHECK(std::fabs(f.t.z - std::cos(theta)) < 1e-12);         // constant tangent slope
        CHECK(std::fabs(f.n1.z) < 1e-15);                          // normal on a great circle
        CHECK(std::fabs(f.n2.z - std::sin(theta)) < 1e-12);        // binormal slope
        CHECK(frame_defect(f) < 1e-14);
        CHECK(helix.tau(s) ==
              doctest::Approx(helix.kappa(s) / std::tan(theta)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(helix_apparatus(ScalarProfile::constant(1.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(helix_apparatus(ScalarProfile::constant(1.0), pi / 2.0),
                    std::invalid_argument);
}

TEST_CASE("circular helix tangent formula") {
    double theta = 0.9;
    auto helix = helix_apparatus(ScalarProfile::constant(std::sin(theta)), theta);
    for (double s = 0.0; s <= 8.0; s += 0.37) {
        Vec3 want{std::sin(theta) * std::sin(s), -std::sin(theta) * std::cos(s),
                  std::cos(theta)};
        CHECK((helix.frame_at(s).t - want).norm() < 1e-13);
    }
}

TEST_CASE("slant helix tangent") {
    double theta = pi / 3.0;
    double m = 1.0 / std::tan(theta);
    auto slant = slant_helix_apparatus({theta, {0.0, ScalarProfile::constant(m)}});

    // at W = 0 the tangent is (1, 0, 0) since (lambda1 + lambda2)/2 = 1
    CHECK((slant.tangent(0.0) - Vec3{1.0, 0.0, 0.0}).norm() < 1e-15);

    // at W = 2 pi it lands on (-1, 0, 0); cross-check against the
    // unsimplified form -cos nW cos W - n sin nW sin W
    double n = std::cos(theta);
    double s_full = 2.0 * pi * n / m;
    CHECK((slant.tangent(s_full) - Vec3{-1.0, 0.0, 0.0}).norm() < 1e-12);
    for (double s = 0.0; s <= 12.0; s += 0.31) {
        double w = m * s / n;
        Vec3 raw{-std::cos(n * w) * std::cos(w) - n * std::sin(n * w) * std::sin(w),
                 -std::cos(n * w) * std::sin(w) + n * std::sin(n * w) * std::cos(w),
                 (n / m) * std::sin(n * w)};
        Vec3 reflected{-raw.x, -raw.y, raw.z};
        CHECK((slant.tangent(s) - reflected).norm() < 1e-13);
        CHECK(std::fabs(slant.tangent(s).norm() - 1.0) < 1e-12);
    }

    // development: kappa = cos(m s), tau = sin(m s) for this phase
    for (double s = 0.0; s <= 12.0; s += 0.31) {
        CHECK(slant.kappa_sh(s) == doctest::Approx(std::cos(m * s)).epsilon(1e-14));
        CHECK(slant.tau_sh(s) == doctest::Approx(std::sin(m * s)).epsilon(1e-14));
        CHECK(slant.kappa_h(s) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(slant.tau_h(s) == doctest::Approx(m).epsilon(1e-14));
    }
}

TEST_CASE("slant helix frame field") {
    double theta = pi / 3.0;
    double m = 1.0 / std::tan(theta);
    auto slant = slant_helix_apparatus({theta, {0.0, ScalarProfile::constant(m)}});
    auto app = slant.frenet();
    CHECK(app.generic);
    for (double s = 0.0; s <= 20.0; s += 0.41) {
        Frame f = app.frame_at(s);
        CHECK(frame_defect(f) < 1e-14);
        CHECK((f.t - slant.tangent(s)).norm() < 1e-14);
        // principal normal has constant slope cos(theta)
        CHECK(std::fabs(f.n1.z - std::cos(theta)) < 1e-12);
    }
}

TEST_CASE("slant helix tangent derivative follows the Frenet equation") {
    double theta = 0.8;
    double m = 1.0 / std::tan(theta);
    auto slant = slant_helix_apparatus({theta, {0.1, ScalarProfile::constant(0.9)}});
    auto app = slant.frenet();
    double h = 1e-4;
    for (double s = 0.3; s <= 6.0; s += 0.53) {
        Vec3 fd = (slant.tangent(s + h) - slant.tangent(s - h)) / (2.0 * h);
        Vec3 want = slant.kappa_sh(s) * app.frame_at(s).n1;
        CHECK((fd - want).norm() < 1e-7);
    }
    (void)m;
}

TEST_CASE("slant helix equals successor of its helix") {
    double theta = pi / 3.0;
    double m = 1.0 / std::tan(theta);
    auto slant = slant_helix_apparatus({theta, {0.0, ScalarProfile::constant(m)}});
    auto closed = slant.frenet();
    auto via_successor = successor_transform(helix_apparatus(slant.kappa_h, theta), 0.0);
    for (double s = 0.0; s <= 15.0; s += 0.17) {
        Frame a = closed.frame_at(s);
        Frame b = via_successor.frame_at(s);
        Frame b_ref{Vec3{-b.t.x, -b.t.y, b.t.z}, Vec3{-b.n1.x, -b.n1.y, b.n1.z},
                    Vec3{-b.n2.x, -b.n2.y, b.n2.z}};
        CHECK(max_abs_diff(a, b_ref) < 1e-9);
        CHECK(std::fabs(slant.kappa_sh(s) - via_successor.kappa(s)) < 1e-9);
        CHECK(std::fabs(slant.tau_sh(s) - via_successor.tau(s)) < 1e-9);
    }
}

TEST_CASE("salkowski profile") {
    auto salk = salkowski_profile(0.5);
    CHECK(salk.tau.domain().lo() == -2.0);
    CHECK(salk.tau.domain().hi() == 2.0);
    CHECK(salk.tau(0.0) == 0.0);
    CHECK_THROWS_AS(salk.tau(2.0), std::domain_error);
    CHECK_THROWS_AS(salk.tau(-2.0), std::domain_error);
    for (double s = -1.9; s <= 1.9; s += 0.1) {
        CHECK(salk.kappa(s) == 1.0);
        double ms = 0.5 * s;
        CHECK(salk.tau(s) == doctest::Approx(ms / std::sqrt(1.0 - ms * ms)).epsilon(1e-14));
        CHECK(salk.helix_kappa(s) ==
              doctest::Approx(1.0 / std::sqrt(1.0 - ms * ms)).epsilon(1e-14));
        CHECK(salk.helix_tau(s) == doctest::Approx(0.5 * salk.helix_kappa(s)).epsilon(1e-14));
        // sin(phi) = ms and cos(phi) = sqrt(1 - (ms)^2) square to one
        double sp = ms, cp = std::sqrt(1.0 - ms * ms);
        CHECK(sp * sp + cp * cp == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(salkowski_profile(0.0), std::invalid_argument);
}

TEST_CASE("salkowski development drives a slant helix of constant curvature") {
    // integrate the natural equations and measure the normal slope
    auto salk = salkowski_profile(0.5);
    double theta = std::atan(1.0 / 0.5);  // cot(theta) = m
    SlantHelixParams params(theta, {0.0, salk.helix_kappa.scaled(0.5)});
    auto closed = slant_helix_apparatus(params).frenet();
    auto app = integrate_frenet(salk.kappa, salk.tau, closed.frame_at(-1.5),
                                Interval::closed(-1.5, 1.5));
    const auto& g = app.frames.grid();
    const auto& fr = app.frames.frames();
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::fabs(fr[i].n1.z - std::cos(theta)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("constant precession profile") {
    auto cp = constant_precession_profile(3.0, 4.0);
    CHECK(cp.cos_theta == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(cp.kappa(0.0) == 3.0);
    CHECK(cp.tau(0.0) == 0.0);
    for (double s = -3.0; s <= 3.0; s += 0.21) {
        double k = cp.kappa(s), t = cp.tau(s);
        CHECK(k == doctest::Approx(3.0 * std::cos(4.0 * s)).epsilon(1e-15));
        CHECK(t == doctest::Approx(3.0 * std::sin(4.0 * s)).epsilon(1e-15));
        CHECK(k * k + t * t == doctest::Approx(9.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(constant_precession_profile(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(constant_precession_profile(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("torsion_from_curvature") {
    // constant curvature gives the Salkowski torsion
    auto tau = torsion_from_curvature(ScalarProfile::constant(1.0), 0.5);
    auto want = ScalarProfile::salkowski_torsion(0.5);
    for (double s = -1.9; s <= 1.9; s += 0.05) {
        CHECK(tau(s) == doctest::Approx(want(s)).epsilon(1e-13));
    }
    // the restricted domain stops short of the singularity at 2
    CHECK(tau.domain().hi() > 1.99);
    CHECK(tau.domain().hi() < 2.0);
    CHECK_THROWS_AS(tau(tau.domain().hi() + 1e-3), std::domain_error);

    // zero curvature: zero torsion on the full line
    auto zero = torsion_from_curvature(ScalarProfile::constant(0.0), 0.5);
    CHECK(zero(1e5) == 0.0);
    CHECK(zero(-1e5) == 0.0);

    // precession curvature with m = mu/omega reproduces its own torsion
    auto cp_tau = torsion_from_curvature(ScalarProfile::harmonic_cos(3.0, 4.0), 4.0 / 3.0);
    for (double s = -0.3; s <= 0.3; s += 0.01) {
        CHECK(cp_tau(s) == doctest::Approx(3.0 * std::sin(4.0 * s)).epsilon(1e-12));
    }
    // its domain is clipped where |sin(4s)| reaches the margin band
    CHECK(cp_tau.domain().hi() > 0.39);
    CHECK(cp_tau.domain().hi() < pi / 8.0);

    CHECK_THROWS_AS(torsion_from_curvature(ScalarProfile::constant(1.0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("slant_slope_estimate") {
    // constant precession: the detector returns m = mu/omega
    auto cp = constant_precession_profile(3.0, 4.0);
    auto grid = uniform_grid(-0.15, 0.15, 1e-4);
    auto est = slant_slope_estimate(cp.kappa, cp.tau, grid);
    for (double s : est.grid()) CHECK(std::fabs(est(s) - 4.0 / 3.0) < 1e-6);

    // Salkowski: constant m = 1/2
    auto salk = salkowski_profile(0.5);
    auto est_s = slant_slope_estimate(salk.kappa, salk.tau, uniform_grid(-1.9, 1.9, 1e-4));
    for (double s : est_s.grid()) CHECK(std::fabs(est_s(s) - 0.5) < 1e-5);

    // general helix: (tau/kappa)' vanishes identically
    auto kappa = ScalarProfile::constant(2.0) + ScalarProfile::harmonic_cos(0.5, 1.0);
    auto est_h = slant_slope_estimate(kappa, kappa.scaled(3.0), uniform_grid(0.0, 5.0, 1e-3));
    for (double s : est_h.grid()) CHECK(std::fabs(est_h(s)) < 1e-12);

    // vanishing curvature at a node is an error
    auto bad_grid = uniform_grid(-0.5, 0.5, 0.125);  // contains 0 where cos(4s)... stays fine
    CHECK_THROWS_AS(
        slant_slope_estimate(ScalarProfile::harmonic_sin(1.0, 1.0), cp.tau,
                             uniform_grid(0.0, 1.0, 0.5)),
        std::domain_error);  // sin(0) = 0 at the first node
    (void)bad_grid;
}

TEST_CASE("phase_curvature_identity_check") {
    auto salk = salkowski_profile(0.5);
    auto grid = uniform_grid(-1.9, 1.9, 1e-3);
    auto rep = phase_curvature_identity_check(salk.kappa, salk.tau, 0.5, grid);
    CHECK(rep.applicable);
    CHECK(rep.max_residual() < 1e-10);

    auto cp = constant_precession_profile(3.0, 4.0);
    auto rep_cp =
        phase_curvature_identity_check(cp.kappa, cp.tau, 4.0 / 3.0, uniform_grid(0.0, 5.0, 1e-3));
    CHECK(rep_cp.applicable);
    CHECK(rep_cp.max_residual() < 1e-10);

    // degenerate development: the phase is undefined
    auto rep_zero = phase_curvature_identity_check(ScalarProfile::constant(0.0),
                                                   ScalarProfile::constant(0.0), 0.5,
                                                   uniform_grid(0.0, 1.0, 0.1));
    CHECK(!rep_zero.applicable);

    // a wrong m breaks the circle identity
    auto rep_bad =
        phase_curvature_identity_check(cp.kappa, cp.tau, 2.9, uniform_grid(0.0, 5.0, 1e-3));
    CHECK(rep_bad.applicable);
    CHECK(rep_bad.max_residual() > 1e-2);
}

TEST_CASE("precession totals vanish over one phase period") {
    auto cp = constant_precession_profile(3.0, 4.0);
    double period = 2.0 * pi / 4.0;
    CHECK(std::fabs(total_torsion(cp.kappa, Interval::closed(0.0, period))) < 1e-10);
    CHECK(std::fabs(total_torsion(cp.tau, Interval::closed(0.0, period))) < 1e-10);
}

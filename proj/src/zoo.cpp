#include "spacecurve/zoo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spacecurve/geomcore.hpp"

namespace spacecurve {

namespace {

void require_proper_slope(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("slope angle must lie in the open interval (0, pi/2)");
    }
}

Frame helix_frame(double omega_angle, double theta) {
    double cw = std::cos(omega_angle);
    double sw = std::sin(omega_angle);
    double ct = std::cos(theta);
    double st = std::sin(theta);
    return {Vec3(st * sw, -st * cw, ct), Vec3(cw, sw, 0.0), Vec3(-ct * sw, ct * cw, st)};
}

// rotation by pi about e3; the reflection baked into the printed tangent form
Vec3 flip_xy(const Vec3& v) { return {-v.x, -v.y, v.z}; }
Frame flip_xy(const Frame& f) { return {flip_xy(f.t), flip_xy(f.n1), flip_xy(f.n2)}; }

}  // namespace

SlantHelixParams::SlantHelixParams(double theta_, PhaseFunction phase_)
    : theta(theta_), phase(std::move(phase_)) {
    require_proper_slope(theta);
    m = 1.0 / std::tan(theta);
    n = std::cos(theta);
    lambda1 = 1.0 - n;
    lambda2 = 1.0 + n;
    if (m == 0.0) throw std::invalid_argument("SlantHelixParams: degenerate m = 0");
}

FrenetApparatus plane_apparatus(const ScalarProfile& kappa) {
    ScalarProfile k = kappa;
    auto frames = FrameField::analytic([k](double s) {
        double w = k.antiderivative(s);
        double cw = std::cos(w);
        double sw = std::sin(w);
        return Frame{Vec3(cw, sw, 0.0), Vec3(-sw, cw, 0.0), Vec3::unit_z()};
    });
    return {frames, kappa, ScalarProfile::constant(0.0, kappa.domain()), /*generic=*/true};
}

FrenetApparatus helix_apparatus(const ScalarProfile& kappa_h, double theta) {
    require_proper_slope(theta);
    double inv_sin = 1.0 / std::sin(theta);
    ScalarProfile k = kappa_h;
    auto frames = FrameField::analytic([k, inv_sin, theta](double s) {
        return helix_frame(inv_sin * k.antiderivative(s), theta);
    });
    return {frames, kappa_h, kappa_h.scaled(1.0 / std::tan(theta)), /*generic=*/true};
}

SlantHelixApparatus slant_helix_apparatus(const SlantHelixParams& params) {
    const double m = params.m;
    const double n = params.n;
    const double l1 = params.lambda1;
    const double l2 = params.lambda2;
    const PhaseFunction phase = params.phase;
    const Interval dom = phase.rate.domain();

    auto tangent = [m, n, l1, l2, phase](double s) {
        double w = phase.value(s) / n;
        return Vec3(0.5 * (l1 * std::cos(l2 * w) + l2 * std::cos(l1 * w)),
                    0.5 * (l1 * std::sin(l2 * w) + l2 * std::sin(l1 * w)),
                    (n / m) * std::sin(n * w));
    };

    ScalarProfile kappa_sh, tau_sh, kappa_h, tau_h;
    if (auto r = phase.rate.as_constant(); r && *r != 0.0) {
        kappa_sh = ScalarProfile::harmonic_cos(*r / m, *r, phase.phi0, dom);
        tau_sh = ScalarProfile::harmonic_sin(*r / m, *r, phase.phi0, dom);
    } else {
        // kappa = phi' cos(phi) / m integrates to sin(phi)/m, and the sine
        // part to -cos(phi)/m; supply both antiderivatives in closed form.
        kappa_sh = ScalarProfile::analytic(
            [phase, m](double s) { return phase.derivative(s) * std::cos(phase.value(s)) / m; },
            [phase, m](double s) { return std::sin(phase.value(s)) / m; }, dom);
        tau_sh = ScalarProfile::analytic(
            [phase, m](double s) { return phase.derivative(s) * std::sin(phase.value(s)) / m; },
            [phase, m](double s) { return -std::cos(phase.value(s)) / m; }, dom);
    }
    kappa_h = phase.rate.scaled(1.0 / m);
    tau_h = phase.rate;

    return {params, tangent, kappa_sh, tau_sh, kappa_h, tau_h};
}

FrenetApparatus SlantHelixApparatus::frenet() const {
    const PhaseFunction phase = params.phase;
    const double n = params.n;
    const double theta = params.theta;
    auto frames = FrameField::analytic([phase, n, theta](double s) {
        double phi = phase.value(s);
        Frame h = helix_frame(phi / n, theta);
        double c = std::cos(phi);
        double sn = std::sin(phi);
        // successor frame of the source helix, then the documented reflection
        return flip_xy(Frame{-c * h.n1 + sn * h.n2, h.t, sn * h.n1 + c * h.n2});
    });
    return {frames, kappa_sh, tau_sh, /*generic=*/true};
}

SalkowskiProfiles salkowski_profile(double m) {
    if (m == 0.0) throw std::invalid_argument("salkowski_profile: m must be nonzero");
    ScalarProfile tau = ScalarProfile::salkowski_torsion(m);
    ScalarProfile helix_kappa = ScalarProfile::salkowski_curvature(m);
    return {ScalarProfile::constant(1.0, tau.domain()), tau, helix_kappa,
            helix_kappa.scaled(m)};
}

ConstantPrecessionProfiles constant_precession_profile(double omega, double mu) {
    if (omega == 0.0 || mu == 0.0) {
        throw std::invalid_argument("constant_precession_profile: omega and mu must be nonzero");
    }
    return {ScalarProfile::harmonic_cos(omega, mu), ScalarProfile::harmonic_sin(omega, mu),
            mu / std::hypot(omega, mu)};
}

namespace {

constexpr double kDomainMargin = 1e-6;  // exclusion band around (mK)^2 = 1

// Largest interval around the anchor on which cond holds, found by a dense
// scan plus bisection. cond is re-checked at evaluation, so the interval is a
// best-effort bound, not a safety boundary.
Interval restricted_domain(const ScalarProfile& kappa, double m) {
    const Interval dom = kappa.domain();
    const double anchor = kappa.anchor();
    auto violates = [&kappa, m](double s) {
        double mk = m * kappa.antiderivative(s);
        return !(mk * mk < 1.0 - kDomainMargin);
    };

    if (auto c = kappa.as_constant()) {
        if (*c == 0.0) return dom;
        double half = std::sqrt(1.0 - kDomainMargin) / std::fabs(m * *c);
        return dom.intersect(Interval::open(anchor - half, anchor + half));
    }

    // Doubling windows away from the anchor keep the probe spacing
    // proportional to the distance scanned, so narrow violation pockets near
    // the anchor are not skipped.
    auto scan = [&](double limit) {
        const int kProbes = 8192;
        double sign = limit > anchor ? 1.0 : -1.0;
        double span = std::fabs(limit - anchor);
        double good = anchor;
        double bad = std::numeric_limits<double>::quiet_NaN();
        double covered = 0.0;
        for (double w = std::min(span, 1.0 / 16.0); covered < span && std::isnan(bad);
             w = std::min(2.0 * w, span - covered)) {
            double step = w / kProbes;
            for (int i = 1; i <= kProbes; ++i) {
                double s = anchor + sign * (covered + step * i);
                if (violates(s)) {
                    bad = s;
                    break;
                }
                good = s;
            }
            covered += w;
            if (w == 0.0) break;
        }
        if (std::isnan(bad)) return limit;
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (good + bad);
            (violates(mid) ? bad : good) = mid;
        }
        return good;
    };

    double up_limit = std::min(dom.hi(), anchor + 1e6);
    double down_limit = std::max(dom.lo(), anchor - 1e6);
    double hi = (up_limit > anchor) ? scan(up_limit) : anchor;
    double lo = (down_limit < anchor) ? scan(down_limit) : anchor;
    if (hi == up_limit) hi = dom.hi();
    if (lo == down_limit) lo = dom.lo();
    Interval r = dom.intersect(Interval::open(lo, hi));
    if (r.empty()) throw std::domain_error("torsion_from_curvature: restricted domain is empty");
    return r;
}

}  // namespace

ScalarProfile torsion_from_curvature(const ScalarProfile& kappa, double m) {
    if (m == 0.0) throw std::invalid_argument("torsion_from_curvature: m must be nonzero");
    Interval dom = restricted_domain(kappa, m);
    ScalarProfile k = kappa;
    auto value = [k, m](double s) {
        double mk = m * k.antiderivative(s);
        double denom2 = 1.0 - mk * mk;
        if (!(denom2 > kDomainMargin * 0.5)) {
            throw std::domain_error("torsion_from_curvature: (m * total curvature)^2 reaches 1");
        }
        return k(s) * mk / std::sqrt(denom2);
    };
    // substituting u = integral of kappa gives the closed antiderivative
    auto antider = [k, m](double s) {
        double mk = m * k.antiderivative(s);
        return -std::sqrt(std::max(0.0, 1.0 - mk * mk)) / m;
    };
    return ScalarProfile::analytic(value, antider, dom);
}

ScalarProfile slant_slope_estimate(const ScalarProfile& kappa, const ScalarProfile& tau,
                                   std::span<const double> grid) {
    if (grid.size() < 3) throw std::invalid_argument("slant_slope_estimate: need >= 3 grid nodes");
    std::vector<double> kv(grid.size()), tv(grid.size()), w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        kv[i] = kappa(grid[i]);
        tv[i] = tau(grid[i]);
        if (std::fabs(kv[i]) < 1e-12) {
            throw std::domain_error("slant_slope_estimate: curvature vanishes at a grid node");
        }
        w[i] = tv[i] / kv[i];
    }
    std::vector<double> si(grid.begin() + 1, grid.end() - 1);
    std::vector<double> est(si.size());
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        double dw = (w[i + 1] - w[i - 1]) / (grid[i + 1] - grid[i - 1]);
        double k2 = kv[i] * kv[i];
        double speed2 = k2 + tv[i] * tv[i];
        est[i - 1] = k2 / (speed2 * std::sqrt(speed2)) * dw;
    }
    return ScalarProfile::sampled(std::move(si), std::move(est));
}

double PhaseIdentityReport::max_residual() const {
    return std::max({sin_residual, cos_residual, circle_residual});
}

PhaseIdentityReport phase_curvature_identity_check(const ScalarProfile& kappa,
                                                   const ScalarProfile& tau, double m,
                                                   std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("phase_curvature_identity_check: empty grid");
    std::vector<double> sin_phi(grid.size()), cos_phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double k = kappa(grid[i]);
        double t = tau(grid[i]);
        double speed = std::hypot(k, t);
        if (speed < 1e-12) return {false, 0.0, 0.0, 0.0};  // phase undefined
        sin_phi[i] = t / speed;
        cos_phi[i] = k / speed;
    }
    double s0 = grid.front();
    double c1 = sin_phi.front() - m * kappa.antiderivative(s0);
    double c2 = cos_phi.front() + m * tau.antiderivative(s0);

    PhaseIdentityReport r{true, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double mk = m * kappa.antiderivative(grid[i]) + c1;
        double mt = c2 - m * tau.antiderivative(grid[i]);
        r.sin_residual = std::max(r.sin_residual, std::fabs(sin_phi[i] - mk));
        r.cos_residual = std::max(r.cos_residual, std::fabs(cos_phi[i] - mt));
        r.circle_residual = std::max(r.circle_residual, std::fabs(mk * mk + mt * mt - 1.0));
    }
    return r;
}

}  // namespace spacecurve

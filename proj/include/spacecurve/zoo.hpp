#pragma once

#include <span>

#include "spacecurve/apparatus.hpp"

namespace spacecurve {

/// Slope-angle parameters of a slant helix: theta in (0, pi/2) with
/// m = cot(theta), n = cos(theta), lambda1 = 1 - n, lambda2 = 1 + n, and the
/// phase function phi driving the construction.
struct SlantHelixParams {
    double theta;
    double m;
    double n;
    double lambda1;
    double lambda2;
    PhaseFunction phase;

    SlantHelixParams(double theta, PhaseFunction phase);
};

/// Generic plane-curve apparatus for a curvature profile: with
/// W(s) = integral of kappa, T = (cos W, sin W, 0), N = (-sin W, cos W, 0)
/// and a constant binormal e3; torsion is identically zero.
FrenetApparatus plane_apparatus(const ScalarProfile& kappa);

/// Generic apparatus of a general helix with slope angle theta in (0, pi/2):
/// tau = cot(theta) kappa, tangent slope cos(theta) against e3, principal
/// normal on the equatorial great circle. W(s) = integral of kappa / sin(theta).
FrenetApparatus helix_apparatus(const ScalarProfile& kappa_h, double theta);

/// Slant-helix construction: closed-form unit tangent plus the development
///   kappa = phi' cos(phi) / m,  tau = phi' sin(phi) / m,
/// the development of the source helix (kappa_h = phi'/m, tau_h = phi'), and
/// the full frame field. The tangent uses the reflected closed form
/// ((x, y) -> (-x, -y) of the raw successor tangent); the frame field applies
/// the same rotation to all axes, so it stays a coherent Frenet frame.
struct SlantHelixApparatus {
    SlantHelixParams params;
    std::function<Vec3(double)> tangent;
    ScalarProfile kappa_sh;
    ScalarProfile tau_sh;
    ScalarProfile kappa_h;
    ScalarProfile tau_h;

    /// Full Frenet apparatus (frames plus development).
    FrenetApparatus frenet() const;
};

SlantHelixApparatus slant_helix_apparatus(const SlantHelixParams& params);

/// Salkowski family: the slant helix with constant curvature 1 and torsion
/// m s / sqrt(1 - m^2 s^2) on (-1/|m|, 1/|m|), plus the development of the
/// helix it succeeds.
struct SalkowskiProfiles {
    ScalarProfile kappa;
    ScalarProfile tau;
    ScalarProfile helix_kappa;
    ScalarProfile helix_tau;
};

SalkowskiProfiles salkowski_profile(double m);

/// Constant-precession family: kappa = omega cos(mu s), tau = omega sin(mu s).
/// cos_theta = mu / sqrt(omega^2 + mu^2) controls closure (closed iff rational).
struct ConstantPrecessionProfiles {
    ScalarProfile kappa;
    ScalarProfile tau;
    double cos_theta;
};

ConstantPrecessionProfiles constant_precession_profile(double omega, double mu);

/// Torsion profile that pairs with the given curvature into a slant-helix
/// development: tau = kappa * mK / sqrt(1 - (mK)^2) with K = integral of
/// kappa. The domain is the largest interval around the anchor on which
/// (mK)^2 stays below 1 by a fixed margin.
ScalarProfile torsion_from_curvature(const ScalarProfile& kappa, double m);

/// Slant-helix slope detector: kappa^2 / (kappa^2 + tau^2)^(3/2) * (tau/kappa)'
/// evaluated by central differences on the grid; constant equal to m for a
/// slant helix, identically zero for a general helix. Requires kappa != 0 on
/// the grid; the result lives on interior nodes.
ScalarProfile slant_slope_estimate(const ScalarProfile& kappa, const ScalarProfile& tau,
                                   std::span<const double> grid);

struct PhaseIdentityReport {
    bool applicable;        // false when the development vanishes (phase undefined)
    double sin_residual;    // max |sin(phi) - (m K + c1)|, K = integral of kappa
    double cos_residual;    // max |cos(phi) + m T - c2|, T = integral of tau
    double circle_residual; // max |(m K + c1)^2 + (c2 - m T)^2 - 1|

    double max_residual() const;
};

/// Check the slant-helix phase identities sin(phi) = m * integral(kappa) and
/// cos(phi) = -m * integral(tau) along the grid, with integration constants
/// fixed at the first grid node. sin(phi) and cos(phi) are recovered
/// pointwise from the normalized development.
PhaseIdentityReport phase_curvature_identity_check(const ScalarProfile& kappa,
                                                   const ScalarProfile& tau, double m,
                                                   std::span<const double> grid);

}  // namespace spacecurve

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spacecurve/apparatus.hpp"

namespace spacecurve {

/// Fixed-step configuration for the frame integrator. The only method is the
/// classical 4th-order one-step scheme; the step is shrunk (never grown) so
/// the range divides evenly.
struct IntegrationConfig {
    double step = 1e-3;
    int renorm_every = 1;  // steps between re-orthonormalizations
    std::string method = "rk4-classic";
};

/// Arc-length grid with positions and (optionally) the frames they came from.
struct CurveSamples {
    std::vector<double> s;
    std::vector<Vec3> points;
    std::vector<Frame> frames;  // empty, or one per node

    bool has_frames() const { return !frames.empty(); }
};

/// Uniform grid over [s0, s1] with spacing <= max_step (exactly max_step when
/// it divides the range).
std::vector<double> uniform_grid(double s0, double s1, double max_step);

/// Integrate the Frenet system T' = kappa N, N' = -kappa T + tau B,
/// B' = -tau N over s_range from the given initial frame. Returns a sampled
/// apparatus carrying the input profiles; every node frame is
/// re-orthonormalized per the config (tangent-anchored Gram-Schmidt).
FrenetApparatus integrate_frenet(const ScalarProfile& kappa, const ScalarProfile& tau,
                                 const Frame& initial, Interval s_range,
                                 const IntegrationConfig& cfg = {});

/// Recover positions x(s) = x0 + integral of T by cumulative composite
/// Simpson over the sampled frame grid (trapezoid tail on an odd interval
/// count). Requires a sampled apparatus with a uniform grid of >= 3 nodes.
CurveSamples integrate_position(const FrenetApparatus& apparatus, const Vec3& x0 = {});

/// Integral of tau over the interval (radians).
double total_torsion(const ScalarProfile& tau, Interval interval);

struct PeriodicityResult {
    bool periodic;
    double residual;  // max frame-component difference over the overlap
};

/// Compare frames at s and s + period_hint over the sampled overlap.
PeriodicityResult frame_periodicity_check(const FrenetApparatus& apparatus, double period_hint,
                                          double tol);

/// Estimate (kappa, tau) from samples by central finite differences: from the
/// attached frames when present, else from positions (unsigned curvature).
/// Nodes where the curvature estimate falls below 1e-8 report zero torsion.
/// Requires a uniform grid of >= 5 nodes; estimates live on interior nodes.
std::pair<ScalarProfile, ScalarProfile> estimate_curvature_torsion(const CurveSamples& samples);

/// Evaluate a closed-form apparatus on a uniform grid, producing a sampled
/// frame field with the same development.
FrenetApparatus sample_frames(const FrenetApparatus& apparatus, double s0, double s1,
                              double max_step);

struct Rational {
    long long num;
    long long den;
};

/// Continued-fraction reconstruction of x as p/q with q <= max_den, accepted
/// when |x - p/q| <= tol. Approximate by nature; never an exact verdict.
std::optional<Rational> approximate_rational(double x, long long max_den = 1000,
                                             double tol = 1e-9);

/// Is x approximately a rational multiple of pi?
std::optional<Rational> rational_multiple_of_pi(double x, long long max_den = 1000,
                                                double tol = 1e-9);

}  // namespace spacecurve

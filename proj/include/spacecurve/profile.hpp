#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "spacecurve/interval.hpp"

namespace spacecurve {

/// Scalar function of arc length (a curvature or torsion profile) with an
/// antiderivative. Closed forms keep exact antiderivatives; sampled profiles
/// interpolate linearly and integrate with composite Simpson at half the grid
/// step (exact for the interpolant).
///
/// Antiderivatives are normalized to vanish at the domain anchor
/// (0 when the domain contains it, else the nearest finite endpoint).
/// Evaluation outside the domain throws std::domain_error; antiderivatives
/// extend to the domain closure.
///
/// Immutable; copies share state and are safe to evaluate concurrently.
class ScalarProfile {
public:
    /// Defaults to the zero profile on the whole real line.
    ScalarProfile();

    static ScalarProfile constant(double value, Interval domain = Interval::all());
    /// amplitude * cos(omega s + phase); omega must be nonzero.
    static ScalarProfile harmonic_cos(double amplitude, double omega, double phase = 0.0,
                                      Interval domain = Interval::all());
    /// amplitude * sin(omega s + phase); omega must be nonzero.
    static ScalarProfile harmonic_sin(double amplitude, double omega, double phase = 0.0,
                                      Interval domain = Interval::all());
    /// m s / sqrt(1 - m^2 s^2) on the open interval (-1/|m|, 1/|m|).
    static ScalarProfile salkowski_torsion(double m);
    /// 1 / sqrt(1 - m^2 s^2) on the same interval: curvature of the helix
    /// whose successor is the Salkowski curve.
    static ScalarProfile salkowski_curvature(double m);
    /// Piecewise-linear profile over a strictly increasing grid (>= 2 nodes).
    static ScalarProfile sampled(std::vector<double> grid, std::vector<double> values);
    /// Closed-form profile given as callables. `antiderivative` may be null,
    /// in which case integration falls back to adaptive Simpson quadrature.
    static ScalarProfile analytic(std::function<double(double)> value,
                                  std::function<double(double)> antiderivative,
                                  Interval domain);

    ScalarProfile scaled(double factor) const;
    ScalarProfile restricted(Interval domain) const;
    friend ScalarProfile operator+(const ScalarProfile& a, const ScalarProfile& b);
    friend ScalarProfile operator*(double c, const ScalarProfile& p);

    double operator()(double s) const;
    /// Antiderivative normalized to zero at the domain anchor.
    double antiderivative(double s) const;

    const Interval& domain() const;
    double anchor() const;

    bool is_sampled() const;
    /// Grid of a sampled profile; empty for closed forms.
    const std::vector<double>& grid() const;

    /// Present when the profile is a plain constant.
    std::optional<double> as_constant() const;

    struct Node;  // implementation detail, defined in profile.cpp

private:
    explicit ScalarProfile(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

inline ScalarProfile operator*(const ScalarProfile& p, double c) { return c * p; }
inline ScalarProfile operator-(const ScalarProfile& a, const ScalarProfile& b) {
    return a + (-1.0) * b;
}

/// Rotation phase phi(s) = phi0 + integral of a rate profile (a torsion, or
/// m * kappa for the slant-helix construction).
struct PhaseFunction {
    double phi0 = 0.0;
    ScalarProfile rate;

    double accumulated(double s) const { return rate.antiderivative(s); }
    double value(double s) const { return phi0 + accumulated(s); }
    double derivative(double s) const { return rate(s); }
};

}  // namespace spacecurve

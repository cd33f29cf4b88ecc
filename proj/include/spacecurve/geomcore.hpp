#pragma once

#include "spacecurve/apparatus.hpp"

namespace spacecurve {

struct FrameCoefficients {
    double k1;
    double k2;
    double k3;
};

/// Rotate the normal plane of a frame by phi, keeping the tangent:
/// (t, cos p * n1 - sin p * n2, sin p * n1 + cos p * n2).
Frame rotate_frame(const Frame& frame, double phi);

/// Moving-frame coefficients after a normal-plane rotation by phi with rate
/// phi_prime: (k1 cos p - k2 sin p, k1 sin p + k2 cos p, k3 - phi').
FrameCoefficients transform_coefficients(double k1, double k2, double k3, double phi,
                                         double phi_prime);

/// Equivalent parallel-transport apparatus of a Frenet apparatus.
/// Frames rotate by phi(s) = phi0 + integral of tau; the development becomes
/// k1 = kappa cos phi, k2 = kappa sin phi, and the rotation coefficient about
/// the tangent cancels to zero.
BishopApparatus bishop_transform(const FrenetApparatus& src, double phi0);

/// Frenet apparatus of a successor curve (a curve whose principal normal is
/// the source tangent). With phi(s) = phi0 + integral of tau:
///   T* = -cos phi N + sin phi B,  N* = T,  B* = sin phi N + cos phi B,
///   kappa* = kappa cos phi,       tau* = kappa sin phi.
/// N* is the source tangent exactly; `generic` carries over.
FrenetApparatus successor_transform(const FrenetApparatus& src, double phi0);

/// Angular-velocity vector of the Frenet frame at s: tau T + kappa B.
Vec3 darboux_vector(const FrenetApparatus& app, double s);

/// Transformed (kappa cos phi, kappa sin phi) development for a normal-plane
/// phase phi(s) = phi0 + integral of tau. Closed forms are kept where the
/// inputs allow (tau constant, or any kappa with tau identically zero).
std::pair<ScalarProfile, ScalarProfile> modulated_development(const ScalarProfile& kappa,
                                                              const ScalarProfile& tau,
                                                              double phi0);

}  // namespace spacecurve

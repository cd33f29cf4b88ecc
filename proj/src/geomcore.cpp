#include "spacecurve/geomcore.hpp"

#include <cmath>
#include <stdexcept>

namespace spacecurve {

Frame rotate_frame(const Frame& frame, double phi) {
    validate_frame(frame);
    double c = std::cos(phi);
    double s = std::sin(phi);
    return {frame.t, c * frame.n1 - s * frame.n2, s * frame.n1 + c * frame.n2};
}

FrameCoefficients transform_coefficients(double k1, double k2, double k3, double phi,
                                         double phi_prime) {
    double c = std::cos(phi);
    double s = std::sin(phi);
    return {k1 * c - k2 * s, k1 * s + k2 * c, k3 - phi_prime};
}

std::pair<ScalarProfile, ScalarProfile> modulated_development(const ScalarProfile& kappa,
                                                              const ScalarProfile& tau,
                                                              double phi0) {
    Interval dom = kappa.domain().intersect(tau.domain());
    if (dom.empty()) {
        throw std::invalid_argument("modulated_development: curvature and torsion domains do not overlap");
    }

    if (auto b = tau.as_constant()) {
        if (*b == 0.0) {
            // phase is frozen at phi0; the development is just rescaled
            return {kappa.scaled(std::cos(phi0)).restricted(dom),
                    kappa.scaled(std::sin(phi0)).restricted(dom)};
        }
        if (auto c = kappa.as_constant()) {
            return {ScalarProfile::harmonic_cos(*c, *b, phi0, dom),
                    ScalarProfile::harmonic_sin(*c, *b, phi0, dom)};
        }
    }

    ScalarProfile k = kappa;
    ScalarProfile t = tau;
    auto cos_part = ScalarProfile::analytic(
        [k, t, phi0](double s) { return k(s) * std::cos(phi0 + t.antiderivative(s)); }, nullptr,
        dom);
    auto sin_part = ScalarProfile::analytic(
        [k, t, phi0](double s) { return k(s) * std::sin(phi0 + t.antiderivative(s)); }, nullptr,
        dom);
    return {cos_part, sin_part};
}

namespace {

Frame successor_frame(const Frame& f, double phi) {
    double c = std::cos(phi);
    double s = std::sin(phi);
    return {-c * f.n1 + s * f.n2, f.t, s * f.n1 + c * f.n2};
}

// Applies a pointwise frame map lazily for closed-form fields, or node by
// node (exact at nodes) for sampled ones.
template <typename MapFn>
FrameField map_frames(const FrameField& src, const ScalarProfile& tau, double phi0, MapFn map) {
    if (src.is_sampled()) {
        const auto& g = src.grid();
        const auto& fr = src.frames();
        std::vector<Frame> out;
        out.reserve(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            out.push_back(map(fr[i], phi0 + tau.antiderivative(g[i])));
        }
        return FrameField::sampled(g, std::move(out));
    }
    FrameField s = src;
    ScalarProfile t = tau;
    return FrameField::analytic(
        [s, t, phi0, map](double x) { return map(s(x), phi0 + t.antiderivative(x)); });
}

}  // namespace

BishopApparatus bishop_transform(const FrenetApparatus& src, double phi0) {
    auto [k1, k2] = modulated_development(src.kappa, src.tau, phi0);
    FrameField frames = map_frames(src.frames, src.tau, phi0,
                                   [](const Frame& f, double phi) { return rotate_frame(f, phi); });
    return {frames, k1, k2};
}

FrenetApparatus successor_transform(const FrenetApparatus& src, double phi0) {
    auto [ks, ts] = modulated_development(src.kappa, src.tau, phi0);
    FrameField frames = map_frames(src.frames, src.tau, phi0, [](const Frame& f, double phi) {
        return successor_frame(f, phi);
    });
    return {frames, ks, ts, src.generic};
}

Vec3 darboux_vector(const FrenetApparatus& app, double s) {
    double kappa = app.kappa(s);
    double tau = app.tau(s);
    Frame f = app.frame_at(s);
    return tau * f.t + kappa * f.n2;
}

}  // namespace spacecurve

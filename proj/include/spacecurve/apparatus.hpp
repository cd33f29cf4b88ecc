#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "spacecurve/frame.hpp"
#include "spacecurve/profile.hpp"

namespace spacecurve {

/// Frame attached to every arc-length value: either a closed-form rule or a
/// sampled field over a grid. Sampled fields are validated node-by-node at
/// construction and interpolate off-node with a 4-point Lagrange stencil.
class FrameField {
public:
    FrameField() = default;

    static FrameField analytic(std::function<Frame(double)> fn);
    static FrameField sampled(std::vector<double> grid, std::vector<Frame> frames);

    Frame operator()(double s) const;

    bool valid() const { return data_ != nullptr; }
    bool is_sampled() const;
    const std::vector<double>& grid() const;
    const std::vector<Frame>& frames() const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// Frame field together with its Frenet development (kappa, tau).
/// `generic` marks apparatuses whose torsion vanishes wherever the curvature
/// does (stationary along line segments).
struct FrenetApparatus {
    FrameField frames;
    ScalarProfile kappa;
    ScalarProfile tau;
    bool generic = false;

    Interval domain() const { return kappa.domain().intersect(tau.domain()); }
    Frame frame_at(double s) const { return frames(s); }
};

/// Parallel-transport frame field: the normal components do not rotate about
/// the tangent, so the development is (k1, k2) with the third coefficient
/// identically zero by construction.
struct BishopApparatus {
    FrameField frames;
    ScalarProfile k1;
    ScalarProfile k2;

    Interval domain() const { return k1.domain().intersect(k2.domain()); }
    Frame frame_at(double s) const { return frames(s); }
};

}  // namespace spacecurve

#pragma once

#include <algorithm>
#include <stdexcept>

#include "spacecurve/vec3.hpp"

namespace spacecurve {

/// Frame invariants (unit norms, orthogonality, det = +1) are enforced to
/// this tolerance wherever an operation requires a valid frame.
inline constexpr double kOrthoTol = 1e-9;

/// Positively oriented orthonormal triple attached to one arc-length value:
/// unit tangent plus two normal fields.
struct Frame {
    Vec3 t;
    Vec3 n1;
    Vec3 n2;

    static Frame canonical() { return {Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()}; }
};

/// Worst deviation from a positively oriented orthonormal frame:
/// max over unit-norm defects, pairwise inner products and |det - 1|.
inline double frame_defect(const Frame& f) {
    double d = std::fabs(f.t.norm() - 1.0);
    d = std::max(d, std::fabs(f.n1.norm() - 1.0));
    d = std::max(d, std::fabs(f.n2.norm() - 1.0));
    d = std::max(d, std::fabs(f.t.dot(f.n1)));
    d = std::max(d, std::fabs(f.t.dot(f.n2)));
    d = std::max(d, std::fabs(f.n1.dot(f.n2)));
    d = std::max(d, std::fabs(f.t.dot(f.n1.cross(f.n2)) - 1.0));
    return d;
}

inline void validate_frame(const Frame& f) {
    if (frame_defect(f) > kOrthoTol) {
        throw std::invalid_argument("Frame: orthonormality defect exceeds tolerance");
    }
}

inline double max_abs_diff(const Frame& a, const Frame& b) {
    return std::max({max_abs_diff(a.t, b.t), max_abs_diff(a.n1, b.n1),
                     max_abs_diff(a.n2, b.n2)});
}

}  // namespace spacecurve

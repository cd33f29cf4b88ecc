#pragma once

#include <cmath>
#include <stdexcept>

namespace spacecurve {

/// Cartesian 3-vector. Constructors reject non-finite components.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw std::invalid_argument("Vec3: non-finite component");
        }
    }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3& operator+=(const Vec3& o) { return *this = *this + o; }
    Vec3& operator-=(const Vec3& o) { return *this = *this - o; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 normalized() const {
        double n = norm();
        if (n < 1e-300) {
            throw std::domain_error("Vec3: cannot normalize near-zero vector");
        }
        return *this / n;
    }

    static Vec3 unit_x() { return {1.0, 0.0, 0.0}; }
    static Vec3 unit_y() { return {0.0, 1.0, 0.0}; }
    static Vec3 unit_z() { return {0.0, 0.0, 1.0}; }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

/// Largest absolute componentwise difference.
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::fabs(a.x - b.x), std::fabs(a.y - b.y), std::fabs(a.z - b.z)});
}

}  // namespace spacecurve

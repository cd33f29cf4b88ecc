#include "spacecurve/natural.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spacecurve {

namespace {

struct LVec {
    long double x, y, z;

    LVec operator+(const LVec& o) const { return {x + o.x, y + o.y, z + o.z}; }
    LVec operator-(const LVec& o) const { return {x - o.x, y - o.y, z - o.z}; }
    LVec operator*(long double c) const { return {c * x, c * y, c * z}; }
    long double dot(const LVec& o) const { return x * o.x + y * o.y + z * o.z; }
    LVec cross(const LVec& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    LVec normalized() const {
        long double n = std::sqrt(dot(*this));
        return {x / n, y / n, z / n};
    }
};

// Frame state in extended precision; keeps the measured 4th-order truncation
// of the integrator above the double rounding floor on long runs.
struct FrameState {
    LVec t, n1, n2;
};

inline FrameState rhs(const FrameState& f, double kappa, double tau) {
    long double k = kappa;
    long double ta = tau;
    return {f.n1 * k, f.t * (-k) + f.n2 * ta, f.n1 * (-ta)};
}

inline FrameState axpy(const FrameState& a, long double c, const FrameState& d) {
    return {a.t + d.t * c, a.n1 + d.n1 * c, a.n2 + d.n2 * c};
}

// Tangent-anchored modified Gram-Schmidt: the tangent is only rescaled, never
// re-aimed, so successor logic downstream can treat it as exact.
inline void renormalize(FrameState& f) {
    f.t = f.t.normalized();
    f.n1 = f.n1 - f.t * f.n1.dot(f.t);
    f.n1 = f.n1.normalized();
    f.n2 = f.t.cross(f.n1);
}

inline Frame to_frame(const FrameState& f) {
    return {Vec3(static_cast<double>(f.t.x), static_cast<double>(f.t.y),
                 static_cast<double>(f.t.z)),
            Vec3(static_cast<double>(f.n1.x), static_cast<double>(f.n1.y),
                 static_cast<double>(f.n1.z)),
            Vec3(static_cast<double>(f.n2.x), static_cast<double>(f.n2.y),
                 static_cast<double>(f.n2.z))};
}

long long choose_steps(double len, double step) {
    double ratio = len / step;
    long long n = std::llround(ratio);
    if (n >= 1 && std::fabs(static_cast<double>(n) * step - len) <= 1e-9 * std::max(1.0, len)) {
        return n;
    }
    return static_cast<long long>(std::ceil(ratio - 1e-12));
}

void require_uniform(const std::vector<double>& g, const char* who) {
    double h = (g.back() - g.front()) / static_cast<double>(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (std::fabs(g[i] - g[i - 1] - h) > 1e-9 * std::max(1.0, h)) {
            throw std::invalid_argument(std::string(who) + ": uniform grid required");
        }
    }
}

}  // namespace

std::vector<double> uniform_grid(double s0, double s1, double max_step) {
    if (!(s1 > s0)) throw std::invalid_argument("uniform_grid: empty range");
    if (!(max_step > 0.0)) throw std::invalid_argument("uniform_grid: step must be positive");
    if (max_step > s1 - s0) throw std::invalid_argument("uniform_grid: step exceeds range length");
    long long n = choose_steps(s1 - s0, max_step);
    double h = (s1 - s0) / static_cast<double>(n);
    std::vector<double> g(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = s0 + h * static_cast<double>(i);
    g.back() = s1;
    return g;
}

FrenetApparatus integrate_frenet(const ScalarProfile& kappa, const ScalarProfile& tau,
                                 const Frame& initial, Interval s_range,
                                 const IntegrationConfig& cfg) {
    if (cfg.method != "rk4-classic") {
        throw std::invalid_argument("integrate_frenet: unknown method '" + cfg.method + "'");
    }
    if (cfg.renorm_every < 1) {
        throw std::invalid_argument("integrate_frenet: renorm_every must be >= 1");
    }
    if (s_range.empty() || !std::isfinite(s_range.lo()) || !std::isfinite(s_range.hi())) {
        throw std::invalid_argument("integrate_frenet: finite nonempty range required");
    }
    Interval dom = kappa.domain().intersect(tau.domain());
    if (!dom.contains(s_range)) {
        throw std::domain_error("integrate_frenet: range not covered by profile domains");
    }
    validate_frame(initial);

    std::vector<double> grid = uniform_grid(s_range.lo(), s_range.hi(), cfg.step);
    double h = (s_range.hi() - s_range.lo()) / static_cast<double>(grid.size() - 1);

    FrameState y{{initial.t.x, initial.t.y, initial.t.z},
                 {initial.n1.x, initial.n1.y, initial.n1.z},
                 {initial.n2.x, initial.n2.y, initial.n2.z}};
    renormalize(y);

    std::vector<Frame> frames;
    frames.reserve(grid.size());
    frames.push_back(to_frame(y));

    const long double lh = h;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double sa = grid[i];
        double sb = grid[i + 1];
        double sm = 0.5 * (sa + sb);
        double k0 = kappa(sa), t0 = tau(sa);
        double km = kappa(sm), tm = tau(sm);
        double k1v = kappa(sb), t1v = tau(sb);

        FrameState d1 = rhs(y, k0, t0);
        FrameState d2 = rhs(axpy(y, lh * 0.5L, d1), km, tm);
        FrameState d3 = rhs(axpy(y, lh * 0.5L, d2), km, tm);
        FrameState d4 = rhs(axpy(y, lh, d3), k1v, t1v);

        y.t = y.t + (d1.t + (d2.t + d3.t) * 2.0L + d4.t) * (lh / 6.0L);
        y.n1 = y.n1 + (d1.n1 + (d2.n1 + d3.n1) * 2.0L + d4.n1) * (lh / 6.0L);
        y.n2 = y.n2 + (d1.n2 + (d2.n2 + d3.n2) * 2.0L + d4.n2) * (lh / 6.0L);

        if ((i + 1) % static_cast<std::size_t>(cfg.renorm_every) == 0) renormalize(y);
        frames.push_back(to_frame(y));
    }

    return {FrameField::sampled(std::move(grid), std::move(frames)), kappa, tau,
            /*generic=*/false};
}

CurveSamples integrate_position(const FrenetApparatus& apparatus, const Vec3& x0) {
    if (!apparatus.frames.is_sampled()) {
        throw std::invalid_argument("integrate_position: sampled tangent field required");
    }
    const auto& g = apparatus.frames.grid();
    const auto& fr = apparatus.frames.frames();
    if (g.size() < 3) throw std::invalid_argument("integrate_position: need >= 3 grid nodes");
    require_uniform(g, "integrate_position");
    double h = (g.back() - g.front()) / static_cast<double>(g.size() - 1);

    std::vector<Vec3> x(g.size());
    x[0] = x0;
    std::size_t n = g.size();
    for (std::size_t i = 0; i + 2 < n; i += 2) {
        const Vec3& f0 = fr[i].t;
        const Vec3& f1 = fr[i + 1].t;
        const Vec3& f2 = fr[i + 2].t;
        // quadratic through three nodes: exact Simpson pair plus its midpoint value
        x[i + 1] = x[i] + (h / 12.0) * (5.0 * f0 + 8.0 * f1 - f2);
        x[i + 2] = x[i] + (h / 3.0) * (f0 + 4.0 * f1 + f2);
    }
    if (n % 2 == 0) {  // odd interval count: trapezoid tail
        x[n - 1] = x[n - 2] + (h / 2.0) * (fr[n - 2].t + fr[n - 1].t);
    }

    return {g, std::move(x), fr};
}

double total_torsion(const ScalarProfile& tau, Interval interval) {
    if (interval.empty()) throw std::invalid_argument("total_torsion: empty interval");
    if (!tau.domain().contains(interval)) {
        throw std::domain_error("total_torsion: interval outside torsion domain");
    }
    return tau.antiderivative(interval.hi()) - tau.antiderivative(interval.lo());
}

PeriodicityResult frame_periodicity_check(const FrenetApparatus& apparatus, double period_hint,
                                          double tol) {
    if (!apparatus.frames.is_sampled()) {
        throw std::invalid_argument("frame_periodicity_check: sampled frame field required");
    }
    if (!(period_hint > 0.0)) {
        throw std::invalid_argument("frame_periodicity_check: period must be positive");
    }
    const auto& g = apparatus.frames.grid();
    const auto& fr = apparatus.frames.frames();
    if (period_hint > g.back() - g.front()) {
        throw std::invalid_argument("frame_periodicity_check: period_hint exceeds sampled range");
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double shifted = g[i] + period_hint;
        if (shifted > g.back()) break;
        Frame other = apparatus.frames(shifted);
        residual = std::max(residual, max_abs_diff(fr[i], other));
    }
    return {residual <= tol, residual};
}

std::pair<ScalarProfile, ScalarProfile> estimate_curvature_torsion(const CurveSamples& samples) {
    const auto& g = samples.s;
    if (g.size() < 5) throw std::invalid_argument("estimate_curvature_torsion: need >= 5 nodes");
    require_uniform(g, "estimate_curvature_torsion");
    double h = (g.back() - g.front()) / static_cast<double>(g.size() - 1);
    std::size_t n = g.size();
    constexpr double kDegenerate = 1e-8;  // below this, torsion is reported as zero

    if (samples.has_frames()) {
        const auto& fr = samples.frames;
        std::vector<double> si(g.begin() + 1, g.end() - 1);
        std::vector<double> kv(si.size()), tv(si.size());
        for (std::size_t i = 1; i + 1 < n; ++i) {
            Vec3 dT = (fr[i + 1].t - fr[i - 1].t) / (2.0 * h);
            Vec3 dN = (fr[i + 1].n1 - fr[i - 1].n1) / (2.0 * h);
            double k = dT.dot(fr[i].n1);
            kv[i - 1] = k;
            tv[i - 1] = (std::fabs(k) < kDegenerate) ? 0.0 : dN.dot(fr[i].n2);
        }
        return {ScalarProfile::sampled(si, kv), ScalarProfile::sampled(std::move(si), std::move(tv))};
    }

    if (samples.points.size() != n) {
        throw std::invalid_argument("estimate_curvature_torsion: positions missing");
    }
    if (n < 6) {
        throw std::invalid_argument(
            "estimate_curvature_torsion: need >= 6 nodes for the position-only path");
    }
    // position-only path: unsigned curvature, torsion from the third difference
    const auto& x = samples.points;
    std::vector<double> si(g.begin() + 2, g.end() - 2);
    std::vector<double> kv(si.size()), tv(si.size());
    for (std::size_t i = 2; i + 2 < n; ++i) {
        Vec3 d1 = (x[i + 1] - x[i - 1]) / (2.0 * h);
        Vec3 d2 = (x[i + 1] - 2.0 * x[i] + x[i - 1]) / (h * h);
        Vec3 d3 = (x[i + 2] - 2.0 * x[i + 1] + 2.0 * x[i - 1] - x[i - 2]) / (2.0 * h * h * h);
        Vec3 c = d1.cross(d2);
        double speed = d1.norm();
        double k = c.norm() / (speed * speed * speed);
        kv[i - 2] = k;
        tv[i - 2] = (std::fabs(k) < kDegenerate) ? 0.0 : c.dot(d3) / c.dot(c);
    }
    return {ScalarProfile::sampled(si, kv), ScalarProfile::sampled(std::move(si), std::move(tv))};
}

FrenetApparatus sample_frames(const FrenetApparatus& apparatus, double s0, double s1,
                              double max_step) {
    std::vector<double> g = uniform_grid(s0, s1, max_step);
    std::vector<Frame> fr;
    fr.reserve(g.size());
    for (double s : g) fr.push_back(apparatus.frame_at(s));
    return {FrameField::sampled(std::move(g), std::move(fr)), apparatus.kappa, apparatus.tau,
            apparatus.generic};
}

std::optional<Rational> approximate_rational(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    long long sign = x < 0.0 ? -1 : 1;
    double v = std::fabs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            return Rational{sign * p1, q1};
        }
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 >= 1 && std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
        return Rational{sign * p1, q1};
    }
    return std::nullopt;
}

std::optional<Rational> rational_multiple_of_pi(double x, long long max_den, double tol) {
    return approximate_rational(x / std::numbers::pi, max_den, tol);
}

}  // namespace spacecurve

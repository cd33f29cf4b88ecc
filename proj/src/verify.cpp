#include "spacecurve/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spacecurve/geomcore.hpp"
#include "spacecurve/natural.hpp"
#include "spacecurve/zoo.hpp"

namespace spacecurve {

namespace {

using std::numbers::pi;

struct Checker {
    std::vector<CheckResult> results;

    void add(std::string name, double residual, double tolerance) {
        results.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    }

    // ratio-style check: achieved must reach `required`
    void add_ratio(std::string name, double achieved, double required) {
        results.push_back({std::move(name), std::max(0.0, required - achieved), 0.0,
                           achieved >= required});
    }
};

// Smooth closed-form test profile: constant plus three harmonics.
ScalarProfile random_trig_profile(std::mt19937& rng) {
    std::uniform_real_distribution<double> c0(-1.0, 1.0);
    std::uniform_real_distribution<double> amp(0.2, 0.8);
    std::uniform_real_distribution<double> freq(0.4, 2.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
    ScalarProfile p = ScalarProfile::constant(c0(rng));
    for (int k = 0; k < 3; ++k) {
        p = p + ScalarProfile::harmonic_cos(amp(rng), freq(rng), ph(rng));
    }
    return p;
}

Frame random_orthonormal_frame(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec3 a{u(rng), u(rng), u(rng)};
    Vec3 b{u(rng), u(rng), u(rng)};
    if (a.norm() < 0.1) a = Vec3::unit_x();
    Vec3 t = a.normalized();
    Vec3 n1 = b - t * b.dot(t);
    if (n1.norm() < 0.1) n1 = t.cross(Vec3{0.27, 0.53, 0.80});
    n1 = n1.normalized();
    return {t, n1, t.cross(n1)};
}

double max_tangent_error(const FrenetApparatus& numeric,
                         const std::function<Vec3(double)>& reference) {
    const auto& g = numeric.frames.grid();
    const auto& fr = numeric.frames.frames();
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, (fr[i].t - reference(g[i])).norm());
    }
    return worst;
}

// ---------------------------------------------------------------------------
// geomcore suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> geomcore_suite() {
    Checker ck;
    std::mt19937 rng(20140702);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);

    {
        double r = 0.0;
        for (int i = 0; i < 32; ++i) {
            Frame f = random_orthonormal_frame(rng);
            r = std::max(r, max_abs_diff(f, rotate_frame(f, 0.0)));
        }
        ck.add("rotate-frame-identity", r, 1e-15);
    }
    {
        Frame f = rotate_frame(Frame::canonical(), pi / 2.0);
        Frame want{Vec3::unit_x(), -1.0 * Vec3::unit_z(), Vec3::unit_y()};
        ck.add("rotate-frame-quarter-turn", max_abs_diff(f, want), 1e-15);
    }
    {
        // oracle: explicit rotation-matrix product acting on the frame rows
        double r_oracle = 0.0;
        double r_defect = 0.0;
        for (int i = 0; i < 64; ++i) {
            Frame f = random_orthonormal_frame(rng);
            double phi = (i == 0) ? 0.7 : angle(rng);
            double c = std::cos(phi), s = std::sin(phi);
            double rot[3][3] = {{1, 0, 0}, {0, c, -s}, {0, s, c}};
            Vec3 rows[3] = {f.t, f.n1, f.n2};
            Vec3 out[3];
            for (int a = 0; a < 3; ++a) {
                out[a] = rot[a][0] * rows[0] + rot[a][1] * rows[1] + rot[a][2] * rows[2];
            }
            Frame got = rotate_frame(f, phi);
            r_oracle = std::max(r_oracle, max_abs_diff(got, Frame{out[0], out[1], out[2]}));
            r_defect = std::max(r_defect, frame_defect(got));
        }
        ck.add("rotate-frame-matrix-oracle", r_oracle, 1e-14);
        ck.add("rotate-frame-orthonormality", r_defect, 1e-12);
    }
    {
        double r = 0.0;
        std::uniform_real_distribution<double> bump(-8e-10, 8e-10);
        for (int i = 0; i < 64; ++i) {
            Frame f = random_orthonormal_frame(rng);
            f.n1 = f.n1 * (1.0 + bump(rng));
            r = std::max(r, frame_defect(rotate_frame(f, angle(rng))) - frame_defect(f));
        }
        ck.add("rotation-invariance-defect", r, 1e-12);
    }
    {
        std::uniform_real_distribution<double> coeff(-2.0, 2.0);
        double r = 0.0;
        for (int i = 0; i < 256; ++i) {
            double k1 = coeff(rng), k2 = coeff(rng), k3 = coeff(rng);
            auto t = transform_coefficients(k1, k2, k3, angle(rng), coeff(rng));
            r = std::max(r, std::fabs(t.k1 * t.k1 + t.k2 * t.k2 - (k1 * k1 + k2 * k2)));
        }
        ck.add("coefficient-norm-preservation", r, 1e-12);
        auto q = transform_coefficients(1.0, 0.0, 0.0, pi / 2.0, 0.0);
        double rq = std::max({std::fabs(q.k1), std::fabs(q.k2 - 1.0), std::fabs(q.k3)});
        ck.add("coefficient-quarter-turn", rq, 1e-15);
        auto p = transform_coefficients(3.0, 4.0, 0.0, 0.37, 0.0);
        ck.add("coefficient-pythagorean-pair", std::fabs(std::hypot(p.k1, p.k2) - 5.0), 1e-12);
    }
    {
        // Bishop on sampled profiles: k1^2 + k2^2 = kappa^2 at grid nodes
        auto grid = uniform_grid(0.0, 10.0, 0.05);
        ScalarProfile ka = random_trig_profile(rng);
        ScalarProfile ta = random_trig_profile(rng);
        std::vector<double> kv, tv;
        for (double s : grid) {
            kv.push_back(ka(s));
            tv.push_back(ta(s));
        }
        auto ks = ScalarProfile::sampled(grid, kv);
        auto ts = ScalarProfile::sampled(grid, tv);
        auto app =
            integrate_frenet(ks, ts, Frame::canonical(), Interval::closed(0.0, 10.0), {0.01, 1});
        auto bishop = bishop_transform(app, 0.4);
        double r = 0.0;
        for (double s : grid) {
            double k = ks(s);
            double k1 = bishop.k1(s), k2 = bishop.k2(s);
            r = std::max(r, std::fabs(k1 * k1 + k2 * k2 - k * k));
        }
        ck.add("bishop-identity-sampled", r, 1e-10);
    }
    {
        // constant development: k1 = a cos(b s), k2 = a sin(b s); tau = 0
        // leaves the frames untouched
        auto plane = plane_apparatus(ScalarProfile::constant(1.4));
        FrenetApparatus helixish{plane.frames, ScalarProfile::constant(1.4),
                                 ScalarProfile::constant(0.9), true};
        auto bishop = bishop_transform(helixish, 0.0);
        double r = 0.0;
        for (double s = 0.0; s <= 6.0; s += 0.37) {
            r = std::max(r, std::fabs(bishop.k1(s) - 1.4 * std::cos(0.9 * s)));
            r = std::max(r, std::fabs(bishop.k2(s) - 1.4 * std::sin(0.9 * s)));
        }
        ck.add("bishop-constant-development", r, 1e-14);

        auto frozen = bishop_transform(plane, 0.0);
        double rf = 0.0;
        for (double s = 0.0; s <= 6.0; s += 0.37) {
            rf = std::max(rf, max_abs_diff(frozen.frame_at(s), plane.frame_at(s)));
        }
        ck.add("bishop-zero-torsion-frames", rf, 1e-15);
    }
    {
        double r = 0.0;
        for (double theta : {pi / 6.0, pi / 4.0, pi / 3.0}) {
            auto plane = plane_apparatus(ScalarProfile::constant(1.0));
            auto suc = successor_transform(plane, pi / 2.0 - theta);
            for (double s = 0.0; s <= 4.0; s += 0.5) {
                r = std::max(r, std::fabs(suc.kappa(s) - std::sin(theta)));
                r = std::max(r, std::fabs(suc.tau(s) - std::cos(theta)));
            }
        }
        ck.add("successor-plane-to-helix", r, 1e-14);
    }
    {
        auto helix = helix_apparatus(ScalarProfile::constant(2.0), 0.9);
        auto suc = successor_transform(helix, 0.3);
        double rn = 0.0, rk = 0.0, rd = 0.0;
        for (double s = 0.0; s <= 8.0; s += 0.11) {
            Frame f = suc.frame_at(s);
            Frame src = helix.frame_at(s);
            rn = std::max(rn, max_abs_diff(f.n1, src.t));
            double k = helix.kappa(s);
            double ks = suc.kappa(s), ts = suc.tau(s);
            rk = std::max(rk, std::fabs(ks * ks + ts * ts - k * k));
            Vec3 d = ts * f.t + ks * f.n2;
            rd = std::max(rd, (d - k * src.n2).norm());
        }
        ck.add("successor-normal-identity", rn, 1e-12);
        ck.add("successor-curvature-identity", rk, 1e-10);
        ck.add("successor-darboux-identity", rd, 1e-9);
    }
    {
        // successor systems with parameters a and b differ by the constant
        // normal-plane rotation b - a of the underlying Bishop frames
        double a = 0.3, b = 1.1, c = b - a;
        auto helix = helix_apparatus(ScalarProfile::constant(2.0), 0.9);
        auto bis_a = bishop_transform(helix, a);
        auto bis_b = bishop_transform(helix, b);
        auto suc_a = successor_transform(helix, a);
        auto suc_b = successor_transform(helix, b);
        double r = 0.0;
        for (double s = 0.0; s <= 6.0; s += 0.23) {
            r = std::max(r, max_abs_diff(rotate_frame(bis_a.frame_at(s), c), bis_b.frame_at(s)));
            auto co = transform_coefficients(bis_a.k1(s), bis_a.k2(s), 0.0, c, 0.0);
            r = std::max(r, std::fabs(co.k1 - bis_b.k1(s)));
            r = std::max(r, std::fabs(co.k2 - bis_b.k2(s)));
            Frame fa = suc_a.frame_at(s);
            Frame fb = suc_b.frame_at(s);
            double cc = std::cos(c), sc = std::sin(c);
            r = std::max(r, max_abs_diff(fb.t, cc * fa.t + sc * fa.n2));
            r = std::max(r, max_abs_diff(fb.n2, -sc * fa.t + cc * fa.n2));
            r = std::max(r, max_abs_diff(fb.n1, fa.n1));
        }
        ck.add("successor-composition-law", r, 1e-12);
    }
    {
        ck.add("frame-defect-canonical", frame_defect(Frame::canonical()), 0.0);
        Frame f = Frame::canonical();
        f.n1 = f.n1 * (1.0 + 1e-6);
        ck.add("frame-defect-scaled-axis", std::fabs(frame_defect(f) - 1e-6), 1e-12);
        double r = 0.0;
        for (int i = 0; i < 32; ++i) {
            r = std::max(r, frame_defect(rotate_frame(Frame::canonical(), angle(rng))));
        }
        ck.add("frame-defect-rotated-canonical", r, 1e-14);
    }
    {
        auto plane = plane_apparatus(ScalarProfile::harmonic_cos(1.2, 0.7));
        auto helix = helix_apparatus(ScalarProfile::constant(3.0), std::atan2(3.0, 4.0));
        double r = 0.0, rp = 0.0;
        for (double s = 0.0; s <= 5.0; s += 0.31) {
            Vec3 dh = darboux_vector(helix, s);
            r = std::max(r, std::fabs(dh.norm() - std::hypot(helix.kappa(s), helix.tau(s))));
            Vec3 dp = darboux_vector(plane, s);
            rp = std::max(rp, (dp - plane.kappa(s) * Vec3::unit_z()).norm());
        }
        ck.add("darboux-norm-identity", r, 1e-12);
        ck.add("darboux-plane-direction", rp, 1e-12);
    }
    return ck.results;
}

// ---------------------------------------------------------------------------
// natural suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> natural_suite() {
    Checker ck;
    std::mt19937 rng(18620101);

    {
        auto app = integrate_frenet(ScalarProfile::constant(1.0), ScalarProfile::constant(0.0),
                                    Frame::canonical(), Interval::closed(0.0, 2.0 * pi));
        double r = max_tangent_error(app, [](double s) {
            return Vec3{std::cos(s), std::sin(s), 0.0};
        });
        ck.add("integrate-plane-circle", r, 1e-8);

        auto samples = integrate_position(app, Vec3{0.0, 0.0, 0.0});
        ck.add("position-circle-closure", (samples.points.back() - samples.points.front()).norm(),
               1e-7);
    }
    {
        double theta = pi / 5.0;
        auto helix = helix_apparatus(ScalarProfile::constant(std::sin(theta)), theta);
        auto app = integrate_frenet(helix.kappa, helix.tau, helix.frame_at(0.0),
                                    Interval::closed(0.0, 10.0));
        auto hf = helix.frames;
        double r = max_tangent_error(app, [hf](double s) { return hf(s).t; });
        ck.add("integrate-circular-helix", r, 1e-8);
    }
    {
        auto app = integrate_frenet(ScalarProfile::constant(0.0), ScalarProfile::constant(0.0),
                                    Frame::canonical(), Interval::closed(0.0, 5.0), {1e-2, 1});
        double r = 0.0;
        for (const Frame& f : app.frames.frames()) {
            r = std::max(r, max_abs_diff(f, Frame::canonical()));
        }
        ck.add("integrate-constant-frame", r, 1e-15);
    }
    {
        // order check: halving the step cuts the max tangent error by >= 12
        auto reference = [](double s) { return Vec3{std::cos(s), std::sin(s), 0.0}; };
        auto run = [&](double step) {
            auto app = integrate_frenet(ScalarProfile::constant(1.0), ScalarProfile::constant(0.0),
                                        Frame::canonical(), Interval::closed(0.0, 2.0 * pi),
                                        {step, 1});
            return max_tangent_error(app, reference);
        };
        ck.add_ratio("convergence-order-circle", run(4e-3) / run(2e-3), 12.0);

        double theta = pi / 5.0;
        auto helix = helix_apparatus(ScalarProfile::constant(std::sin(theta)), theta);
        auto hf = helix.frames;
        auto run_h = [&](double step) {
            auto app = integrate_frenet(helix.kappa, helix.tau, helix.frame_at(0.0),
                                        Interval::closed(0.0, 2.0 * pi), {step, 1});
            return max_tangent_error(app, [hf](double s) { return hf(s).t; });
        };
        ck.add_ratio("convergence-order-helix", run_h(4e-3) / run_h(2e-3), 12.0);
    }
    {
        ScalarProfile ka = random_trig_profile(rng);
        ScalarProfile ta = random_trig_profile(rng);
        auto app = integrate_frenet(ka, ta, Frame::canonical(), Interval::closed(0.0, 10.0));
        double r = 0.0;
        for (const Frame& f : app.frames.frames()) r = std::max(r, frame_defect(f));
        ck.add("frame-drift-renormalized", r, 1e-12);
    }
    {
        // straight line: constant tangent integrates to x0 + s T
        Frame f{Vec3{2.0, 1.0, 2.0} / 3.0, Vec3{1.0, 2.0, -2.0} / 3.0, Vec3{-2.0, 2.0, 1.0} / 3.0};
        auto app = integrate_frenet(ScalarProfile::constant(0.0), ScalarProfile::constant(0.0), f,
                                    Interval::closed(0.0, 4.0), {1e-2, 1});
        auto samples = integrate_position(app, Vec3{1.0, -1.0, 0.5});
        double r = 0.0;
        for (std::size_t i = 0; i < samples.s.size(); ++i) {
            Vec3 want = Vec3{1.0, -1.0, 0.5} + samples.s[i] * app.frames.frames()[0].t;
            r = std::max(r, (samples.points[i] - want).norm());
        }
        ck.add("position-line-exact", r, 1e-12);
    }
    {
        // unit-speed consistency for the constant-precession development over
        // one successor-frame period
        auto cp = constant_precession_profile(3.0, 4.0);
        auto app = integrate_frenet(cp.kappa, cp.tau, Frame::canonical(),
                                    Interval::closed(0.0, 2.0 * pi));
        auto samples = integrate_position(app, {});
        double h = samples.s[1] - samples.s[0];
        double r = 0.0;
        for (std::size_t i = 1; i < samples.s.size(); ++i) {
            double chord = (samples.points[i] - samples.points[i - 1]).norm();
            r = std::max(r, std::fabs(chord - h));
        }
        ck.add("unit-speed-consistency", r, 1e-8);
    }
    {
        ck.add("total-torsion-constant",
               std::fabs(total_torsion(ScalarProfile::constant(0.7), Interval::closed(0.0, 3.0)) -
                         2.1),
               1e-12);
        // circular helix (omega=3, mu=4): frame period 2 pi cos(theta) / mu
        double cos_theta = 0.8;
        double period = 2.0 * pi * cos_theta / 4.0;
        ck.add("total-torsion-helix-period",
               std::fabs(total_torsion(ScalarProfile::constant(4.0),
                                       Interval::closed(0.0, period)) -
                         2.0 * pi * cos_theta),
               1e-12);
        ck.add("total-torsion-odd-symmetry",
               std::fabs(total_torsion(ScalarProfile::harmonic_sin(1.0, 1.0),
                                       Interval::closed(0.0, 2.0 * pi))),
               1e-12);
    }
    {
        // closed-form circular-helix frames are exactly periodic
        double theta = std::atan2(3.0, 4.0);
        auto helix = helix_apparatus(ScalarProfile::constant(3.0), theta);
        double period = 2.0 * pi / 5.0;  // omega advances 2 pi when s advances 2 pi / sqrt(9+16)
        auto sampled = sample_frames(helix, 0.0, 3.0 * period, 1e-3);
        auto res = frame_periodicity_check(sampled, period, 1e-7);
        ck.add("periodicity-circular-helix", res.residual, 1e-7);

        // successor frame of that helix: rational cos(theta) = 4/5 makes it
        // periodic with period 5 L = 2 pi
        auto suc = successor_transform(helix, 0.0);
        auto suc_sampled = sample_frames(suc, 0.0, 2.0 * pi + 1.5, 1e-3);
        auto res2 = frame_periodicity_check(suc_sampled, 2.0 * pi, 1e-6);
        ck.add("periodicity-successor-frame", res2.residual, 1e-6);
    }
    {
        auto app = integrate_frenet(ScalarProfile::constant(0.0), ScalarProfile::constant(0.0),
                                    Frame::canonical(), Interval::closed(0.0, 5.0), {1e-2, 1});
        auto res = frame_periodicity_check(app, 1.7, 1e-12);
        ck.add("periodicity-constant-frame", res.residual, 1e-15);
    }
    {
        auto app = integrate_frenet(ScalarProfile::constant(1.0), ScalarProfile::constant(0.0),
                                    Frame::canonical(), Interval::closed(0.0, 2.0 * pi));
        auto samples = integrate_position(app, {});
        auto [kest, test] = estimate_curvature_torsion(samples);
        double r = 0.0;
        for (double s : kest.grid()) {
            r = std::max(r, std::fabs(kest(s) - 1.0));
            r = std::max(r, std::fabs(test(s)));
        }
        ck.add("estimate-roundtrip-circle", r, 1e-5);
    }
    {
        auto salk = salkowski_profile(0.5);
        auto app = integrate_frenet(salk.kappa, salk.tau, Frame::canonical(),
                                    Interval::closed(-1.5, 1.5));
        auto samples = integrate_position(app, {});
        auto [kest, test] = estimate_curvature_torsion(samples);
        double r = 0.0;
        for (double s : kest.grid()) r = std::max(r, std::fabs(kest(s) - 1.0));
        ck.add("estimate-salkowski-curvature", r, 1e-4);
    }
    {
        // degenerate rule: straight-line samples report zero torsion
        CurveSamples line;
        Vec3 dir = Vec3{1.0, 2.0, 2.0} / 3.0;
        for (int i = 0; i <= 200; ++i) {
            double s = 0.01 * i;
            line.s.push_back(s);
            line.points.push_back(Vec3{0.3, -0.2, 0.1} + s * dir);
        }
        auto [kest, test] = estimate_curvature_torsion(line);
        double r = 0.0;
        for (double s : kest.grid()) r = std::max(r, std::fabs(kest(s)));
        for (double s : test.grid()) r = std::max(r, std::fabs(test(s)));
        ck.add("estimate-degenerate-line", r, 1e-8);
    }
    {
        // round trip: the estimate converges at second order in the step
        auto reference = ScalarProfile::harmonic_cos(0.8, 0.9, 0.2);
        auto tau = ScalarProfile::constant(0.4);
        auto err = [&](double step) {
            auto app = integrate_frenet(reference, tau, Frame::canonical(),
                                        Interval::closed(0.0, 4.0), {step, 1});
            auto samples = integrate_position(app, {});
            auto [kest, test] = estimate_curvature_torsion(samples);
            double r = 0.0;
            for (double s : kest.grid()) {
                r = std::max(r, std::fabs(kest(s) - reference(s)));
                r = std::max(r, std::fabs(test(s) - 0.4));
            }
            return r;
        };
        ck.add_ratio("estimate-roundtrip-order", err(4e-3) / err(2e-3), 3.0);
    }
    {
        auto r = approximate_rational(0.8);
        bool good = r && r->num == 4 && r->den == 5;
        ck.add("rational-reconstruction", good ? 0.0 : 1.0, 0.0);
        auto rp = rational_multiple_of_pi(1.6 * pi);
        bool goodp = rp && rp->num == 8 && rp->den == 5;
        ck.add("rational-multiple-of-pi", goodp ? 0.0 : 1.0, 0.0);
        auto ri = approximate_rational(std::numbers::sqrt2, 1000, 1e-9);
        ck.add("rational-rejects-irrational", ri ? 1.0 : 0.0, 0.0);
    }
    return ck.results;
}

// ---------------------------------------------------------------------------
// zoo suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> zoo_suite() {
    Checker ck;

    {
        auto plane = plane_apparatus(ScalarProfile::constant(1.0));
        double r = 0.0, rd = 0.0;
        for (double s = 0.0; s <= 2.0 * pi; s += 0.05) {
            Frame f = plane.frame_at(s);
            r = std::max(r, (f.t - Vec3{std::cos(s), std::sin(s), 0.0}).norm());
            rd = std::max(rd, frame_defect(f));
        }
        ck.add("plane-circle-tangent", r, 1e-15);
        ck.add("plane-frame-defect", rd, 1e-15);

        auto line = plane_apparatus(ScalarProfile::constant(0.0));
        double rl = 0.0;
        for (double s = -3.0; s <= 3.0; s += 0.5) {
            rl = std::max(rl, max_abs_diff(line.frame_at(s), Frame::canonical()));
        }
        ck.add("plane-zero-curvature-constant-frame", rl, 1e-15);
    }
    {
        double theta = 0.7;
        auto helix = helix_apparatus(ScalarProfile::harmonic_cos(0.8, 0.5, 0.1), theta);
        double rt = 0.0, rn = 0.0, rb = 0.0;
        for (double s = 0.0; s <= 12.0; s += 0.11) {
            Frame f = helix.frame_at(s);
            rt = std::max(rt, std::fabs(f.t.z - std::cos(theta)));
            rn = std::max(rn, std::fabs(f.n1.z));
            rb = std::max(rb, std::fabs(f.n2.z - std::sin(theta)));
        }
        ck.add("helix-tangent-slope", rt, 1e-12);
        ck.add("helix-normal-great-circle", rn, 1e-15);
        ck.add("helix-binormal-slope", rb, 1e-12);
    }
    {
        // circular helix: kappa_h = sin(theta) gives W(s) = s
        double theta = 0.9;
        auto helix = helix_apparatus(ScalarProfile::constant(std::sin(theta)), theta);
        double r = 0.0;
        for (double s = 0.0; s <= 10.0; s += 0.37) {
            Vec3 want{std::sin(theta) * std::sin(s), -std::sin(theta) * std::cos(s),
                      std::cos(theta)};
            r = std::max(r, (helix.frame_at(s).t - want).norm());
        }
        ck.add("helix-circular-tangent", r, 1e-13);
    }

    double theta3 = pi / 3.0;
    double m3 = 1.0 / std::tan(theta3);
    SlantHelixParams params3(theta3, {0.0, ScalarProfile::constant(m3)});
    auto slant = slant_helix_apparatus(params3);
    auto slant_frames = slant.frenet();
    {
        double r = 0.0;
        for (double s = 0.0; s <= 20.0; s += 0.13) {
            r = std::max(r, std::fabs(slant.tangent(s).norm() - 1.0));
        }
        ck.add("slant-tangent-unit-norm", r, 1e-12);
    }
    {
        // the printed tangent against the unsimplified successor form
        // (-cos nW cos W - n sin nW sin W, ...), reflected
        double n = params3.n, m = params3.m;
        double r = 0.0;
        for (double s = 0.0; s <= 20.0; s += 0.17) {
            double w = params3.phase.value(s) / n;
            Vec3 raw{-std::cos(n * w) * std::cos(w) - n * std::sin(n * w) * std::sin(w),
                     -std::cos(n * w) * std::sin(w) + n * std::sin(n * w) * std::cos(w),
                     (n / m) * std::sin(n * w)};
            Vec3 reflected{-raw.x, -raw.y, raw.z};
            r = std::max(r, (slant.tangent(s) - reflected).norm());
            r = std::max(r, (slant_frames.frame_at(s).t - reflected).norm());
        }
        ck.add("slant-tangent-presimplified-form", r, 1e-13);

        // W = 2 pi lands the tangent on (-1, 0, 0)
        double s_full = 2.0 * pi * n / m3;
        ck.add("slant-tangent-full-turn",
               (slant.tangent(s_full) - Vec3{-1.0, 0.0, 0.0}).norm(), 1e-12);
    }
    {
        double r = 0.0;
        for (double s = 0.0; s <= 20.0; s += 0.13) {
            r = std::max(r, std::fabs(slant_frames.frame_at(s).n1.z - std::cos(theta3)));
        }
        ck.add("slant-normal-slope", r, 1e-12);
    }
    {
        // T' = kappa N for the constructed frame field, by central differences
        double h = 1e-4;
        double r = 0.0;
        for (double s = 0.5; s <= 19.5; s += 0.41) {
            Vec3 fd = (slant.tangent(s + h) - slant.tangent(s - h)) / (2.0 * h);
            Vec3 want = slant.kappa_sh(s) * slant_frames.frame_at(s).n1;
            r = std::max(r, (fd - want).norm());
        }
        ck.add("slant-tangent-derivative-law", r, 1e-7);
    }
    {
        double r = 0.0;
        for (double s = 0.0; s <= 20.0; s += 0.13) {
            double ks = slant.kappa_sh(s), ts = slant.tau_sh(s), kh = slant.kappa_h(s);
            r = std::max(r, std::fabs(ks * ks + ts * ts - kh * kh));
        }
        ck.add("slant-angular-speed-law", r, 1e-10);
    }
    {
        // two independent routes to the slant-helix frame: the closed form
        // against successor_transform of the public helix apparatus
        double r = 0.0;
        auto helix = helix_apparatus(slant.kappa_h, theta3);
        auto suc = successor_transform(helix, 0.0);
        for (double s = 0.0; s <= 20.0; s += 0.11) {
            Frame a = slant_frames.frame_at(s);
            Frame b = suc.frame_at(s);
            Frame b_reflected{Vec3{-b.t.x, -b.t.y, b.t.z}, Vec3{-b.n1.x, -b.n1.y, b.n1.z},
                              Vec3{-b.n2.x, -b.n2.y, b.n2.z}};
            r = std::max(r, max_abs_diff(a, b_reflected));
            r = std::max(r, std::fabs(slant.kappa_sh(s) - suc.kappa(s)));
            r = std::max(r, std::fabs(slant.tau_sh(s) - suc.tau(s)));
        }
        ck.add("successor-consistency", r, 1e-9);
    }
    {
        // Salkowski family: slant helix of constant curvature
        auto salk = salkowski_profile(0.5);
        auto grid = uniform_grid(-1.9, 1.9, 1e-2);
        double r = 0.0;
        for (double s : grid) {
            r = std::max(r, std::fabs(salk.kappa(s) - 1.0));
            double sp = 0.5 * s;
            r = std::max(r, std::fabs(salk.tau(s) - sp / std::sqrt(1.0 - sp * sp)));
            // sin(phi) = m s with cos(phi) = sqrt(1 - (ms)^2)
            r = std::max(r, std::fabs(sp * sp + (1.0 - sp * sp) - 1.0));
        }
        ck.add("salkowski-profile-values", r, 1e-12);

        auto report = phase_curvature_identity_check(salk.kappa, salk.tau, 0.5, grid);
        ck.add("salkowski-phase-identity", report.applicable ? report.max_residual() : 1.0,
               1e-10);

        auto est = slant_slope_estimate(salk.kappa, salk.tau, uniform_grid(-1.9, 1.9, 1e-4));
        double re = 0.0;
        for (double s : est.grid()) re = std::max(re, std::fabs(est(s) - 0.5));
        ck.add("slant-slope-estimate-salkowski", re, 1e-5);
    }
    {
        auto cp = constant_precession_profile(3.0, 4.0);
        double r = 0.0;
        for (double s = -2.0; s <= 2.0; s += 0.07) {
            double k = cp.kappa(s), t = cp.tau(s);
            r = std::max(r, std::fabs(k * k + t * t - 9.0));
        }
        ck.add("precession-pythagoras", r, 1e-12);
        ck.add("precession-cos-theta", std::fabs(cp.cos_theta - 0.8), 1e-15);

        auto grid = uniform_grid(-0.15, 0.15, 1e-4);
        auto est = slant_slope_estimate(cp.kappa, cp.tau, grid);
        double re = 0.0;
        for (double s : est.grid()) re = std::max(re, std::fabs(est(s) - 4.0 / 3.0));
        ck.add("slant-slope-estimate-precession", re, 1e-6);

        auto report = phase_curvature_identity_check(cp.kappa, cp.tau, 4.0 / 3.0, grid);
        ck.add("precession-phase-identity", report.applicable ? report.max_residual() : 1.0,
               1e-10);

        // total curvature and torsion vanish over one phase period
        double period = 2.0 * pi / 4.0;
        double tot_k = std::fabs(total_torsion(cp.kappa, Interval::closed(0.0, period)));
        double tot_t = std::fabs(total_torsion(cp.tau, Interval::closed(0.0, period)));
        ck.add("precession-period-totals", std::max(tot_k, tot_t), 1e-10);
    }
    {
        // torsion_from_curvature: constant curvature reproduces the Salkowski
        // torsion; the precession curvature reproduces its own torsion
        auto tau_s = torsion_from_curvature(ScalarProfile::constant(1.0), 0.5);
        auto salk = ScalarProfile::salkowski_torsion(0.5);
        double r = 0.0;
        for (double s = -1.9; s <= 1.9; s += 0.01) {
            r = std::max(r, std::fabs(tau_s(s) - salk(s)));
        }
        ck.add("torsion-from-curvature-salkowski", r, 1e-12);

        auto tau_zero = torsion_from_curvature(ScalarProfile::constant(0.0), 0.5);
        double rz = std::fabs(tau_zero(1e5)) + std::fabs(tau_zero(-1e5));
        ck.add("torsion-from-curvature-zero", rz, 1e-15);

        auto tau_cp = torsion_from_curvature(ScalarProfile::harmonic_cos(3.0, 4.0), 4.0 / 3.0);
        double rc = 0.0;
        for (double s = -0.3; s <= 0.3; s += 0.005) {
            rc = std::max(rc, std::fabs(tau_cp(s) - 3.0 * std::sin(4.0 * s)));
        }
        ck.add("torsion-from-curvature-precession", rc, 1e-10);
    }
    {
        // general helix: (tau/kappa)' = 0, so the detector reports zero
        auto kappa = ScalarProfile::constant(2.0) + ScalarProfile::harmonic_cos(0.5, 1.0);
        auto est = slant_slope_estimate(kappa, kappa.scaled(2.0), uniform_grid(0.0, 5.0, 1e-3));
        double r = 0.0;
        for (double s : est.grid()) r = std::max(r, std::fabs(est(s)));
        ck.add("slant-slope-general-helix", r, 1e-12);
    }
    return ck.results;
}

// ---------------------------------------------------------------------------
// acceptance suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> acceptance_suite() {
    Checker ck;

    {
        // 1: successor of the unit circle with phi0 = pi/2 - theta is the
        // circular helix development (sin theta, cos theta)
        double r = 0.0;
        for (double theta : {pi / 6.0, pi / 4.0, pi / 3.0}) {
            auto plane = plane_apparatus(ScalarProfile::constant(1.0));
            auto suc = successor_transform(plane, pi / 2.0 - theta);
            for (double s = 0.0; s <= 10.0; s += 0.1) {
                r = std::max(r, std::fabs(suc.kappa(s) - std::sin(theta)));
                r = std::max(r, std::fabs(suc.tau(s) - std::cos(theta)));
            }
        }
        ck.add("acceptance-01-plane-to-helix-successor", r, 1e-14);
    }
    {
        // 2: successor of the circular helix (3, 4) is the constant-precession
        // development (3 cos 4s, 3 sin 4s)
        double theta = std::atan2(3.0, 4.0);
        auto helix = helix_apparatus(ScalarProfile::constant(3.0), theta);
        auto suc = successor_transform(helix, 0.0);
        double r = 0.0;
        for (double s : uniform_grid(0.0, 10.0, 1e-3)) {
            r = std::max(r, std::fabs(suc.kappa(s) - 3.0 * std::cos(4.0 * s)));
            r = std::max(r, std::fabs(suc.tau(s) - 3.0 * std::sin(4.0 * s)));
        }
        ck.add("acceptance-02-helix-to-precession-successor", r, 1e-12);
    }
    {
        // 3: the integrated slant-helix frame reproduces the closed-form
        // tangent over [0, 20]. The reference is evaluated in extended
        // precision: the rotation angle reaches ~35 rad, where double
        // evaluation would put ~4e-15 of noise into the oracle itself.
        double theta = pi / 3.0;
        double m = 1.0 / std::tan(theta);
        auto slant = slant_helix_apparatus({theta, {0.0, ScalarProfile::constant(m)}});
        auto closed = slant.frenet();

        long double lt = std::numbers::pi_v<long double> / 3.0L;
        long double lm = 1.0L / std::tan(lt);
        long double ln = std::cos(lt);
        long double l1 = 1.0L - ln, l2 = 1.0L + ln;
        auto reference = [lm, ln, l1, l2](double s) {
            long double w = lm * static_cast<long double>(s) / ln;
            return Vec3{
                static_cast<double>(0.5L * (l1 * std::cos(l2 * w) + l2 * std::cos(l1 * w))),
                static_cast<double>(0.5L * (l1 * std::sin(l2 * w) + l2 * std::sin(l1 * w))),
                static_cast<double>((ln / lm) * std::sin(ln * w))};
        };

        auto app = integrate_frenet(slant.kappa_sh, slant.tau_sh, closed.frame_at(0.0),
                                    Interval::closed(0.0, 20.0), {1e-3, 1});
        double err_step = max_tangent_error(app, reference);
        ck.add("acceptance-03-slant-helix-ode-vs-closed-form", err_step, 1e-7);

        // 4: halving the step reduces the error by >= 12 (nominal 16)
        auto app_half = integrate_frenet(slant.kappa_sh, slant.tau_sh, closed.frame_at(0.0),
                                         Interval::closed(0.0, 20.0), {5e-4, 1});
        double err_half = max_tangent_error(app_half, reference);
        ck.add_ratio("acceptance-04-convergence-order", err_step / err_half, 12.0);

        // 5: principal normal slope stays at cos(theta)
        double r5 = 0.0;
        for (double s : uniform_grid(0.0, 20.0, 1e-2)) {
            r5 = std::max(r5, std::fabs(closed.frame_at(s).n1.z - std::cos(theta)));
        }
        ck.add("acceptance-05-slant-normal-slope", r5, 1e-10);
    }
    {
        // 6: the slope detector recovers m on both reference families
        auto cp = constant_precession_profile(3.0, 4.0);
        auto est = slant_slope_estimate(cp.kappa, cp.tau, uniform_grid(-0.15, 0.15, 1e-4));
        double r_cp = 0.0;
        for (double s : est.grid()) r_cp = std::max(r_cp, std::fabs(est(s) - 4.0 / 3.0));
        ck.add("acceptance-06-slope-detector-precession", r_cp, 1e-6);

        auto salk = salkowski_profile(0.5);
        auto est_s = slant_slope_estimate(salk.kappa, salk.tau, uniform_grid(-1.9, 1.9, 1e-4));
        double r_s = 0.0;
        for (double s : est_s.grid()) r_s = std::max(r_s, std::fabs(est_s(s) - 0.5));
        ck.add("acceptance-06-slope-detector-salkowski", r_s, 1e-5);
    }
    {
        // 7: the total-curvature/total-torsion point runs on the unit circle
        auto salk = salkowski_profile(0.5);
        auto rep_s = phase_curvature_identity_check(salk.kappa, salk.tau, 0.5,
                                                    uniform_grid(-1.9, 1.9, 1e-3));
        auto cp = constant_precession_profile(3.0, 4.0);
        auto rep_c = phase_curvature_identity_check(cp.kappa, cp.tau, 4.0 / 3.0,
                                                    uniform_grid(0.0, 5.0, 1e-3));
        double r = std::max(rep_s.applicable ? rep_s.circle_residual : 1.0,
                            rep_c.applicable ? rep_c.circle_residual : 1.0);
        ck.add("acceptance-07-phase-circle-identity", r, 1e-10);
    }
    {
        // 8: with cos(theta) = 4/5 the successor frame of the circular helix
        // is periodic with period 2 pi (five helix-frame periods)
        double theta = std::atan2(3.0, 4.0);
        auto helix = helix_apparatus(ScalarProfile::constant(3.0), theta);
        auto suc = successor_transform(helix, 0.0);
        auto app = integrate_frenet(suc.kappa, suc.tau, suc.frame_at(0.0),
                                    Interval::closed(0.0, 8.0), {1e-3, 1});
        auto res = frame_periodicity_check(app, 2.0 * pi, 1e-6);
        ck.add("acceptance-08-successor-frame-periodicity", res.residual, 1e-6);

        double period = 2.0 * pi / 4.0;
        auto cp = constant_precession_profile(3.0, 4.0);
        double tot_k = std::fabs(total_torsion(cp.kappa, Interval::closed(0.0, period)));
        double tot_t = std::fabs(total_torsion(cp.tau, Interval::closed(0.0, period)));
        ck.add("acceptance-08-precession-period-totals", std::max(tot_k, tot_t), 1e-10);
    }
    {
        // 9 and 10: randomized smooth developments
        std::mt19937 rng(424242);
        double r_darboux = 0.0;
        double r_bishop = 0.0;
        double r_k3 = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            ScalarProfile kappa = random_trig_profile(rng);
            ScalarProfile tau = random_trig_profile(rng);
            auto app = integrate_frenet(kappa, tau, Frame::canonical(),
                                        Interval::closed(0.0, 5.0), {2e-3, 1});
            auto suc = successor_transform(app, 0.25);
            auto bishop = bishop_transform(app, 0.25);
            const auto& g = app.frames.grid();
            const auto& src = app.frames.frames();
            const auto& sf = suc.frames.frames();
            const auto& bf = bishop.frames.frames();
            double h = g[1] - g[0];
            for (std::size_t i = 0; i < g.size(); ++i) {
                double k = kappa(g[i]);
                double ks = suc.kappa(g[i]), ts = suc.tau(g[i]);
                Vec3 d = ts * sf[i].t + ks * sf[i].n2;
                r_darboux = std::max(r_darboux, (d - k * src[i].n2).norm());

                double k1 = bishop.k1(g[i]), k2 = bishop.k2(g[i]);
                r_bishop = std::max(r_bishop, std::fabs(k1 * k1 + k2 * k2 - k * k));

                if (i >= 2 && i + 2 < g.size()) {
                    // fourth-order stencil for the normal rotation rate
                    Vec3 dn1 = (-1.0 * bf[i + 2].n1 + 8.0 * bf[i + 1].n1 - 8.0 * bf[i - 1].n1 +
                                bf[i - 2].n1) /
                               (12.0 * h);
                    r_k3 = std::max(r_k3, std::fabs(dn1.dot(bf[i].n2)));
                }
            }
        }
        ck.add("acceptance-09-successor-darboux-identity", r_darboux, 1e-9);
        ck.add("acceptance-10-bishop-identity", r_bishop, 1e-10);
        ck.add("acceptance-10-bishop-rotation-rate", r_k3, 1e-5);
    }
    return ck.results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"geomcore", "natural", "zoo", "acceptance"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "geomcore") return geomcore_suite();
    if (name == "natural") return natural_suite();
    if (name == "zoo") return zoo_suite();
    if (name == "acceptance") return acceptance_suite();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace spacecurve

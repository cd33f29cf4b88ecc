#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spacecurve/geomcore.hpp"
#include "spacecurve/natural.hpp"
#include "spacecurve/zoo.hpp"

using namespace spacecurve;
using std::numbers::pi;

namespace {

Frame random_frame(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec3 a{u(rng), u(rng), u(rng)};
    Vec3 b{u(rng), u(rng), u(rng)};
    if (a.norm() < 0.1) a = Vec3::unit_x();
    Vec3 t = a.normalized();
    Vec3 n1 = b - t * b.dot(t);
    if (n1.norm() < 0.1) n1 = t.cross(Vec3{0.3, 0.6, 0.74});
    n1 = n1.normalized();
    return {t, n1, t.cross(n1)};
}

}  // namespace

TEST_CASE("vec3 rejects non-finite components") {
    CHECK_THROWS_AS(Vec3(std::nan(""), 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Vec3(0.0, std::numeric_limits<double>::infinity(), 0.0),
                    std::invalid_argument);
    Vec3 v{1.0, 2.0, 2.0};
    CHECK(v.norm() == 3.0);
    CHECK(v.normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(Vec3{}.normalized(), std::domain_error);
}

TEST_CASE("frame defect") {
    CHECK(frame_defect(Frame::canonical()) == 0.0);

    Frame scaled = Frame::canonical();
    scaled.n1 = scaled.n1 * (1.0 + 1e-6);
    CHECK(frame_defect(scaled) == doctest::Approx(1e-6).epsilon(1e-6));

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        CHECK(frame_defect(random_frame(rng)) < 1e-14);
    }

    Frame flipped{Vec3::unit_x(), Vec3::unit_z(), Vec3::unit_y()};  // left-handed
    CHECK(frame_defect(flipped) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(validate_frame(flipped), std::invalid_argument);
}

TEST_CASE("rotate_frame identity and quarter turn") {
    std::mt19937 rng(3);
    Frame f = random_frame(rng);
    CHECK(max_abs_diff(f, rotate_frame(f, 0.0)) == 0.0);

    Frame q = rotate_frame(Frame::canonical(), pi / 2.0);
    CHECK(max_abs_diff(q.t, Vec3::unit_x()) == 0.0);
    CHECK(max_abs_diff(q.n1, -1.0 * Vec3::unit_z()) < 1e-15);
    CHECK(max_abs_diff(q.n2, Vec3::unit_y()) < 1e-15);
}

TEST_CASE("rotate_frame against explicit matrix product") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    for (int trial = 0; trial < 50; ++trial) {
        Frame f = random_frame(rng);
        double phi = trial == 0 ? 0.7 : angle(rng);
        double c = std::cos(phi), s = std::sin(phi);
        // oracle: R1(phi) applied to the stacked rows
        Vec3 rows[3] = {f.t, f.n1, f.n2};
        double R[3][3] = {{1, 0, 0}, {0, c, -s}, {0, s, c}};
        Vec3 want[3];
        for (int i = 0; i < 3; ++i) {
            want[i] = R[i][0] * rows[0] + R[i][1] * rows[1] + R[i][2] * rows[2];
        }
        Frame got = rotate_frame(f, phi);
        CHECK(max_abs_diff(got, Frame{want[0], want[1], want[2]}) < 1e-15);
        CHECK(frame_defect(got) < 1e-12);
    }
}

TEST_CASE("rotate_frame validates its input") {
    Frame bad = Frame::canonical();
    bad.n1 = bad.n1 * 1.5;
    CHECK_THROWS_AS(rotate_frame(bad, 0.3), std::invalid_argument);
}

TEST_CASE("transform_coefficients") {
    auto r = transform_coefficients(1.0, 0.0, 0.0, pi / 2.0, 0.0);
    CHECK(std::fabs(r.k1) < 1e-15);
    CHECK(r.k2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.k3 == 0.0);

    auto id = transform_coefficients(0.3, -0.7, 0.2, 0.0, 0.0);
    CHECK(id.k1 == 0.3);
    CHECK(id.k2 == -0.7);
    CHECK(id.k3 == 0.2);

    auto p = transform_coefficients(3.0, 4.0, 0.0, 0.37, 0.0);
    CHECK(std::hypot(p.k1, p.k2) == doctest::Approx(5.0).epsilon(1e-14));

    // the rotation rate only shifts the third coefficient
    auto d = transform_coefficients(0.0, 0.0, 1.5, 1.0, 0.4);
    CHECK(d.k3 == doctest::Approx(1.1).epsilon(1e-15));

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        double k1 = u(rng), k2 = u(rng);
        auto t = transform_coefficients(k1, k2, u(rng), u(rng), u(rng));
        CHECK(std::fabs(t.k1 * t.k1 + t.k2 * t.k2 - (k1 * k1 + k2 * k2)) < 1e-12);
    }
}

TEST_CASE("bishop transform of constant development") {
    // kappa = a, tau = b: k1 = a cos(b s), k2 = a sin(b s)
    auto helix = helix_apparatus(ScalarProfile::constant(1.4), std::atan(1.4 / 0.9));
    FrenetApparatus src{helix.frames, ScalarProfile::constant(1.4), ScalarProfile::constant(0.9),
                        true};
    auto bishop = bishop_transform(src, 0.0);
    for (double s = 0.0; s <= 5.0; s += 0.31) {
        CHECK(bishop.k1(s) == doctest::Approx(1.4 * std::cos(0.9 * s)).epsilon(1e-15));
        CHECK(bishop.k2(s) == doctest::Approx(1.4 * std::sin(0.9 * s)).epsilon(1e-15));
        CHECK(frame_defect(bishop.frame_at(s)) < 1e-12);
    }
}

TEST_CASE("bishop transform leaves frames fixed for zero torsion") {
    auto plane = plane_apparatus(ScalarProfile::constant(1.0));
    auto bishop = bishop_transform(plane, 0.0);
    for (double s = 0.0; s <= 6.0; s += 0.5) {
        CHECK(max_abs_diff(bishop.frame_at(s), plane.frame_at(s)) == 0.0);
        CHECK(bishop.k1(s) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::fabs(bishop.k2(s)) < 1e-15);
    }
}

TEST_CASE("bishop identity on sampled profiles") {
    auto grid = uniform_grid(0.0, 10.0, 0.02);
    std::vector<double> kv, tv;
    for (double s : grid) {
        kv.push_back(1.0 + 0.5 * std::sin(0.8 * s));
        tv.push_back(0.4 * std::cos(1.3 * s));
    }
    auto kappa = ScalarProfile::sampled(grid, kv);
    auto tau = ScalarProfile::sampled(grid, tv);
    auto app = integrate_frenet(kappa, tau, Frame::canonical(), Interval::closed(0.0, 10.0),
                                {0.02, 1});
    auto bishop = bishop_transform(app, 0.7);
    double r = 0.0;
    for (double s : grid) {
        double k = kappa(s), k1 = bishop.k1(s), k2 = bishop.k2(s);
        r = std::max(r, std::fabs(k1 * k1 + k2 * k2 - k * k));
    }
    CHECK(r < 1e-10);
    // sampled input produces a sampled transform on the same grid
    CHECK(bishop.frames.is_sampled());
    CHECK(bishop.frames.grid() == app.frames.grid());
}

TEST_CASE("bishop transform rejects disjoint domains") {
    auto plane = plane_apparatus(ScalarProfile::constant(1.0, Interval::closed(0.0, 1.0)));
    FrenetApparatus src{plane.frames, plane.kappa,
                        ScalarProfile::constant(0.0, Interval::closed(2.0, 3.0)), true};
    CHECK_THROWS_AS(bishop_transform(src, 0.0), std::invalid_argument);
}

TEST_CASE("successor of plane circle is a circular helix development") {
    for (double theta : {pi / 6.0, pi / 4.0, pi / 3.0}) {
        auto plane = plane_apparatus(ScalarProfile::constant(1.0));
        auto suc = successor_transform(plane, pi / 2.0 - theta);
        for (double s = 0.0; s <= 3.0; s += 0.37) {
            CHECK(std::fabs(suc.kappa(s) - std::sin(theta)) < 1e-14);
            CHECK(std::fabs(suc.tau(s) - std::cos(theta)) < 1e-14);
        }
        CHECK(suc.generic);
    }
}

TEST_CASE("successor with zero torsion and zero phase keeps the development") {
    auto plane = plane_apparatus(ScalarProfile::harmonic_cos(0.8, 0.6, 0.2));
    auto suc = successor_transform(plane, 0.0);
    for (double s = 0.0; s <= 3.0; s += 0.41) {
        CHECK(suc.kappa(s) == doctest::Approx(plane.kappa(s)).epsilon(1e-15));
        CHECK(std::fabs(suc.tau(s)) < 1e-15);
    }
}

TEST_CASE("successor of circular helix is the constant-precession development") {
    auto helix = helix_apparatus(ScalarProfile::constant(2.0), std::atan(2.0 / 1.5));
    // tau = cot(theta) kappa = 1.5
    auto suc = successor_transform(helix, 0.0);
    for (double s = 0.0; s <= 10.0; s += 0.17) {
        CHECK(suc.kappa(s) == doctest::Approx(2.0 * std::cos(1.5 * s)).epsilon(1e-13));
        CHECK(suc.tau(s) == doctest::Approx(2.0 * std::sin(1.5 * s)).epsilon(1e-13));
    }
}

TEST_CASE("successor frame identities") {
    auto helix = helix_apparatus(ScalarProfile::constant(2.0), 0.9);
    auto suc = successor_transform(helix, 0.35);
    for (double s = 0.0; s <= 8.0; s += 0.13) {
        Frame f = suc.frame_at(s);
        Frame src = helix.frame_at(s);
        // the successor normal is the source tangent, exactly
        CHECK(f.n1.x == src.t.x);
        CHECK(f.n1.y == src.t.y);
        CHECK(f.n1.z == src.t.z);
        CHECK(frame_defect(f) < 1e-12);
        // Darboux vector of the successor system is kappa B of the source
        Vec3 d = suc.tau(s) * f.t + suc.kappa(s) * f.n2;
        CHECK((d - helix.kappa(s) * src.n2).norm() < 1e-9);
        // angular speed of the successor frame equals |kappa|
        double ks = suc.kappa(s), ts = suc.tau(s), k = helix.kappa(s);
        CHECK(std::fabs(ks * ks + ts * ts - k * k) < 1e-10);
    }
}

TEST_CASE("successor systems with different parameters differ by a rotation") {
    double a = 0.2, b = 0.9, c = b - a;
    auto helix = helix_apparatus(ScalarProfile::constant(1.3), 0.7);
    auto sa = successor_transform(helix, a);
    auto sb = successor_transform(helix, b);
    auto ba = bishop_transform(helix, a);
    auto bb = bishop_transform(helix, b);
    double cc = std::cos(c), sc = std::sin(c);
    for (double s = 0.0; s <= 5.0; s += 0.19) {
        CHECK(max_abs_diff(rotate_frame(ba.frame_at(s), c), bb.frame_at(s)) < 1e-12);
        auto co = transform_coefficients(ba.k1(s), ba.k2(s), 0.0, c, 0.0);
        CHECK(std::fabs(co.k1 - bb.k1(s)) < 1e-12);
        CHECK(std::fabs(co.k2 - bb.k2(s)) < 1e-12);
        Frame fa = sa.frame_at(s), fb = sb.frame_at(s);
        CHECK(max_abs_diff(fb.t, cc * fa.t + sc * fa.n2) < 1e-12);
        CHECK(max_abs_diff(fb.n1, fa.n1) < 1e-15);
        CHECK(max_abs_diff(fb.n2, -sc * fa.t + cc * fa.n2) < 1e-12);
    }
}

TEST_CASE("darboux vector") {
    // plane apparatus: D = kappa e3
    auto plane = plane_apparatus(ScalarProfile::harmonic_cos(1.1, 0.5, 0.1));
    for (double s = 0.0; s <= 4.0; s += 0.37) {
        CHECK((darboux_vector(plane, s) - plane.kappa(s) * Vec3::unit_z()).norm() < 1e-12);
    }
    // circular helix: |D| = sqrt(kappa^2 + tau^2) everywhere
    auto helix = helix_apparatus(ScalarProfile::constant(3.0), std::atan2(3.0, 4.0));
    for (double s = 0.0; s <= 4.0; s += 0.37) {
        CHECK(darboux_vector(helix, s).norm() == doctest::Approx(5.0).epsilon(1e-13));
    }
    // domain enforcement
    auto narrow = plane_apparatus(ScalarProfile::constant(1.0, Interval::closed(0.0, 1.0)));
    CHECK_THROWS_AS(darboux_vector(narrow, 2.0), std::domain_error);
}

TEST_CASE("rotation cannot worsen the defect beyond tolerance") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_real_distribution<double> tiny(-2e-13, 2e-13);
    for (int i = 0; i < 100; ++i) {
        Frame f = random_frame(rng);
        f.n1 = f.n1 * (1.0 + tiny(rng));
        f.n2 = f.n2 * (1.0 + tiny(rng));
        double before = frame_defect(f);
        double after = frame_defect(rotate_frame(f, angle(rng)));
        CHECK(after <= before + 1e-12);
    }

    // for larger (still valid) defects the rotation can at most mix the two
    // normal-norm defects into the inner product, a factor-two bound
    std::uniform_real_distribution<double> bump(-5e-10, 5e-10);
    for (int i = 0; i < 100; ++i) {
        Frame f = random_frame(rng);
        f.n1 = f.n1 * (1.0 + bump(rng));
        f.n2 = f.n2 * (1.0 + bump(rng));
        double before = frame_defect(f);
        double after = frame_defect(rotate_frame(f, angle(rng)));
        CHECK(after <= 2.5 * before + 1e-12);
    }
}

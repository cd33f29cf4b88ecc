#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "spacecurve/io.hpp"

using namespace spacecurve;

namespace {

GeometryTable small_table() {
    GeometryTable t;
    t.s = {0.0, 0.1, 0.2};
    t.points = {Vec3{0.0, 0.0, 0.0}, Vec3{0.1, 0.3, -0.2}, Vec3{0.2, 0.5, 0.1}};
    t.frames = {Frame::canonical(), Frame::canonical(), Frame::canonical()};
    t.kappa = {1.0, 1.5, 2.0};
    t.tau = {0.0, -0.5, 0.25};
    return t;
}

}  // namespace

TEST_CASE("format_full round-trips doubles exactly") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 13) - 6);
        double back = std::strtod(format_full(x).c_str(), nullptr);
        CHECK(back == x);
    }
    CHECK(format_full(0.0) == "0");
    CHECK(format_full(1.0) == "1");
}

TEST_CASE("csv round trip is bit exact") {
    GeometryTable t = small_table();
    t.points[1] = Vec3{1.0 / 3.0, 2.0 / 7.0, -0.1234567890123456789};
    t.kappa[2] = 3.0000000000000004;

    std::stringstream buf;
    write_csv(buf, t);
    GeometryTable back = read_csv(buf);

    REQUIRE(back.s.size() == t.s.size());
    for (std::size_t i = 0; i < t.s.size(); ++i) {
        CHECK(back.s[i] == t.s[i]);
        CHECK(back.points[i].x == t.points[i].x);
        CHECK(back.points[i].y == t.points[i].y);
        CHECK(back.points[i].z == t.points[i].z);
        CHECK(back.kappa[i] == t.kappa[i]);
        CHECK(back.tau[i] == t.tau[i]);
        CHECK(max_abs_diff(back.frames[i], t.frames[i]) == 0.0);
    }
}

TEST_CASE("csv write is deterministic") {
    GeometryTable t = small_table();
    std::stringstream a, b;
    write_csv(a, t);
    write_csv(b, t);
    CHECK(a.str() == b.str());
}

TEST_CASE("csv missing columns stay empty") {
    GeometryTable t;
    t.s = {0.0, 1.0};
    t.kappa = {2.0, 3.0};
    t.tau = {0.5, 0.5};

    std::stringstream buf;
    write_csv(buf, t);
    std::string first_row;
    std::getline(buf, first_row);  // header
    std::getline(buf, first_row);
    CHECK(first_row == "0,,,,,,,,,,,,,2,0.5");

    buf.seekg(0);
    GeometryTable back = read_csv(buf);
    CHECK(!back.has_points());
    CHECK(!back.has_frames());
    CHECK(back.has_development());
    CHECK(back.kappa[1] == 3.0);
}

TEST_CASE("csv validation") {
    std::stringstream empty;
    CHECK_THROWS_AS(read_csv(empty), std::invalid_argument);

    std::stringstream bad_header("s,x\n1,2\n");
    CHECK_THROWS_AS(read_csv(bad_header), std::invalid_argument);

    std::stringstream no_rows("s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau\n");
    CHECK_THROWS_AS(read_csv(no_rows), std::invalid_argument);

    std::stringstream short_row("s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau\n1,2\n");
    CHECK_THROWS_AS(read_csv(short_row), std::invalid_argument);

    // ragged optional column: kappa present on one row only
    std::stringstream ragged(
        "s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau\n"
        "0,,,,,,,,,,,,,1,1\n"
        "1,,,,,,,,,,,,,,\n");
    CHECK_THROWS_AS(read_csv(ragged), std::invalid_argument);

    std::stringstream garbage(
        "s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau\n"
        "zero,,,,,,,,,,,,,1,1\n");
    CHECK_THROWS_AS(read_csv(garbage), std::invalid_argument);

    GeometryTable mismatched;
    mismatched.s = {0.0, 1.0};
    mismatched.kappa = {1.0};
    mismatched.tau = {1.0};
    std::stringstream out;
    CHECK_THROWS_AS(write_csv(out, mismatched), std::invalid_argument);
}

TEST_CASE("obj polyline export") {
    std::vector<Vec3> pts{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}};
    std::stringstream buf;
    write_obj(buf, pts);
    std::string line;
    std::getline(buf, line);
    CHECK(line == "v 0 0 0");
    std::getline(buf, line);
    CHECK(line == "v 1 0 0");
    std::getline(buf, line);
    CHECK(line == "v 1 1 0");
    std::getline(buf, line);
    CHECK(line == "l 1 2 3");

    std::stringstream tiny;
    CHECK_THROWS_AS(write_obj(tiny, {{0.0, 0.0, 0.0}}), std::invalid_argument);
}

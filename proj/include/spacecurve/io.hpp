#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spacecurve/frame.hpp"
#include "spacecurve/vec3.hpp"

namespace spacecurve {

/// Column-oriented sample table matching the CSV schema
///   s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau
/// Optional columns are empty vectors; present ones match s in length.
struct GeometryTable {
    std::vector<double> s;
    std::vector<Vec3> points;
    std::vector<Frame> frames;
    std::vector<double> kappa;
    std::vector<double> tau;

    bool has_points() const { return !points.empty(); }
    bool has_frames() const { return !frames.empty(); }
    bool has_development() const { return !kappa.empty(); }
};

/// Shortest decimal form that round-trips a double exactly (17 significant
/// digits).
std::string format_full(double v);

void write_csv(std::ostream& out, const GeometryTable& table);
GeometryTable read_csv(std::istream& in);

/// Polyline export: one `v` record per point and an `l` record chain.
void write_obj(std::ostream& out, const std::vector<Vec3>& points);

}  // namespace spacecurve

#include "spacecurve/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spacecurve {

namespace {

constexpr const char* kHeader = "s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau";
constexpr std::size_t kColumns = 15;

void check_sizes(const GeometryTable& t) {
    std::size_t n = t.s.size();
    if (t.has_points() && t.points.size() != n) {
        throw std::invalid_argument("GeometryTable: point column length mismatch");
    }
    if (t.has_frames() && t.frames.size() != n) {
        throw std::invalid_argument("GeometryTable: frame column length mismatch");
    }
    if (t.kappa.size() != t.tau.size() || (t.has_development() && t.kappa.size() != n)) {
        throw std::invalid_argument("GeometryTable: development column length mismatch");
    }
}

}  // namespace

std::string format_full(double v) {
    std::array<char, 40> buf{};
    int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

void write_csv(std::ostream& out, const GeometryTable& table) {
    check_sizes(table);
    out << kHeader << '\n';
    for (std::size_t i = 0; i < table.s.size(); ++i) {
        out << format_full(table.s[i]) << ',';
        if (table.has_points()) {
            const Vec3& p = table.points[i];
            out << format_full(p.x) << ',' << format_full(p.y) << ',' << format_full(p.z);
        } else {
            out << ",,";
        }
        if (table.has_frames()) {
            const Frame& f = table.frames[i];
            for (const Vec3* v : {&f.t, &f.n1, &f.n2}) {
                out << ',' << format_full(v->x) << ',' << format_full(v->y) << ','
                    << format_full(v->z);
            }
        } else {
            out << ",,,,,,,,,";
        }
        if (table.has_development()) {
            out << ',' << format_full(table.kappa[i]) << ',' << format_full(table.tau[i]);
        } else {
            out << ",,";
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: stream failure");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_field(const std::string& f, std::size_t row, std::size_t col) {
    char* end = nullptr;
    double v = std::strtod(f.c_str(), &end);
    if (end == f.c_str() || *end != '\0') {
        throw std::invalid_argument("read_csv: bad number in row " + std::to_string(row) +
                                    ", column " + std::to_string(col));
    }
    return v;
}

}  // namespace

GeometryTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("read_csv: empty input");
    auto header = split_csv_line(line);
    auto expected = split_csv_line(kHeader);
    if (header != expected) throw std::invalid_argument("read_csv: unexpected header");

    std::vector<std::array<std::string, kColumns>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != kColumns) {
            throw std::invalid_argument("read_csv: row " + std::to_string(lineno) + " has " +
                                        std::to_string(fields.size()) + " fields");
        }
        std::array<std::string, kColumns> row;
        std::move(fields.begin(), fields.end(), row.begin());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("read_csv: no data rows");

    // a column group is present iff its fields are nonempty on every row
    auto group_present = [&rows](std::size_t from, std::size_t to) {
        bool any = false;
        bool all = true;
        for (const auto& r : rows) {
            for (std::size_t c = from; c <= to; ++c) {
                if (r[c].empty()) all = false;
                else any = true;
            }
        }
        if (any && !all) throw std::invalid_argument("read_csv: ragged optional column");
        return all;
    };

    GeometryTable t;
    bool with_points = group_present(1, 3);
    bool with_frames = group_present(4, 12);
    bool with_dev = group_present(13, 14);

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        t.s.push_back(parse_field(r[0], i + 2, 0));
        if (with_points) {
            t.points.emplace_back(parse_field(r[1], i + 2, 1), parse_field(r[2], i + 2, 2),
                                  parse_field(r[3], i + 2, 3));
        }
        if (with_frames) {
            double c[9];
            for (std::size_t k = 0; k < 9; ++k) c[k] = parse_field(r[4 + k], i + 2, 4 + k);
            t.frames.push_back({Vec3(c[0], c[1], c[2]), Vec3(c[3], c[4], c[5]),
                                Vec3(c[6], c[7], c[8])});
        }
        if (with_dev) {
            t.kappa.push_back(parse_field(r[13], i + 2, 13));
            t.tau.push_back(parse_field(r[14], i + 2, 14));
        }
    }
    return t;
}

void write_obj(std::ostream& out, const std::vector<Vec3>& points) {
    if (points.size() < 2) throw std::invalid_argument("write_obj: need >= 2 points");
    for (const Vec3& p : points) {
        out << "v " << format_full(p.x) << ' ' << format_full(p.y) << ' ' << format_full(p.z)
            << '\n';
    }
    out << 'l';
    for (std::size_t i = 1; i <= points.size(); ++i) out << ' ' << i;
    out << '\n';
    if (!out) throw std::runtime_error("write_obj: stream failure");
}

}  // namespace spacecurve

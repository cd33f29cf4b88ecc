#include "spacecurve/apparatus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spacecurve {

struct FrameField::Data {
    std::function<Frame(double)> fn;  // set for closed-form fields
    std::vector<double> grid;
    std::vector<Frame> frames;

    static const std::vector<double> kEmptyGrid;
    static const std::vector<Frame> kEmptyFrames;
};

const std::vector<double> FrameField::Data::kEmptyGrid{};
const std::vector<Frame> FrameField::Data::kEmptyFrames{};

FrameField FrameField::analytic(std::function<Frame(double)> fn) {
    if (!fn) throw std::invalid_argument("FrameField: null frame rule");
    auto d = std::make_shared<Data>();
    d->fn = std::move(fn);
    FrameField f;
    f.data_ = std::move(d);
    return f;
}

FrameField FrameField::sampled(std::vector<double> grid, std::vector<Frame> frames) {
    if (grid.size() < 2 || grid.size() != frames.size()) {
        throw std::invalid_argument("FrameField: need >= 2 nodes and matching frames");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("FrameField: grid must be strictly increasing");
        }
    }
    for (const Frame& f : frames) validate_frame(f);
    auto d = std::make_shared<Data>();
    d->grid = std::move(grid);
    d->frames = std::move(frames);
    FrameField f;
    f.data_ = std::move(d);
    return f;
}

bool FrameField::is_sampled() const { return data_ && !data_->fn; }

const std::vector<double>& FrameField::grid() const {
    return is_sampled() ? data_->grid : Data::kEmptyGrid;
}

const std::vector<Frame>& FrameField::frames() const {
    return is_sampled() ? data_->frames : Data::kEmptyFrames;
}

namespace {

Vec3 lagrange3(const double* s, const Vec3* f, double x) {
    // cubic through four nodes, evaluated componentwise
    double w[4];
    for (int i = 0; i < 4; ++i) {
        double num = 1.0;
        double den = 1.0;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            num *= x - s[j];
            den *= s[i] - s[j];
        }
        w[i] = num / den;
    }
    double cx = 0.0, cy = 0.0, cz = 0.0;
    for (int i = 0; i < 4; ++i) {
        cx += w[i] * f[i].x;
        cy += w[i] * f[i].y;
        cz += w[i] * f[i].z;
    }
    return {cx, cy, cz};
}

}  // namespace

Frame FrameField::operator()(double s) const {
    if (!data_) throw std::logic_error("FrameField: empty field");
    if (data_->fn) return data_->fn(s);

    const auto& g = data_->grid;
    if (s < g.front() || s > g.back()) {
        throw std::domain_error("FrameField: s = " + std::to_string(s) +
                                " outside sampled range [" + std::to_string(g.front()) + ", " +
                                std::to_string(g.back()) + "]");
    }
    auto it = std::lower_bound(g.begin(), g.end(), s);
    if (it != g.end() && *it == s) {
        return data_->frames[static_cast<std::size_t>(it - g.begin())];
    }
    std::size_t hi = static_cast<std::size_t>(it - g.begin());
    std::size_t lo = hi - 1;

    if (g.size() < 4) {  // linear fallback on tiny grids
        double w = (s - g[lo]) / (g[hi] - g[lo]);
        const Frame& a = data_->frames[lo];
        const Frame& b = data_->frames[hi];
        return {a.t + w * (b.t - a.t), a.n1 + w * (b.n1 - a.n1), a.n2 + w * (b.n2 - a.n2)};
    }

    std::size_t i0 = (lo == 0) ? 0 : lo - 1;
    if (i0 + 3 >= g.size()) i0 = g.size() - 4;
    double sn[4];
    Vec3 t[4], n1[4], n2[4];
    for (int k = 0; k < 4; ++k) {
        sn[k] = g[i0 + k];
        const Frame& f = data_->frames[i0 + k];
        t[k] = f.t;
        n1[k] = f.n1;
        n2[k] = f.n2;
    }
    return {lagrange3(sn, t, s), lagrange3(sn, n1, s), lagrange3(sn, n2, s)};
}

}  // namespace spacecurve

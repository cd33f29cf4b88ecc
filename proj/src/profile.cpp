#include "spacecurve/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace spacecurve {

namespace {

struct ConstantNode {
    double value;
};

struct HarmonicNode {
    double amplitude;
    double omega;
    double phase;
    bool sine;  // sin when true, cos otherwise
};

struct SalkowskiTorsionNode {
    double m;
};

struct SalkowskiCurvatureNode {
    double m;
};

struct SampledNode {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> cumulative;  // integral of the interpolant from grid[0]
};

struct AnalyticNode {
    std::function<double(double)> value;
    std::function<double(double)> antiderivative;  // may be empty
};

}  // namespace

struct ScalarProfile::Node {
    using Payload = std::variant<ConstantNode, HarmonicNode, SalkowskiTorsionNode,
                                 SalkowskiCurvatureNode, SampledNode, AnalyticNode>;

    Payload payload;
    Interval domain;
    double anchor = 0.0;

    // affine combination ca*a + cb*b layered over a payload-free node
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    double ca = 0.0;
    double cb = 0.0;
    bool affine = false;

    static const std::vector<double> kEmptyGrid;
};

const std::vector<double> ScalarProfile::Node::kEmptyGrid{};

namespace {

using Node = ScalarProfile::Node;

void check_domain(const Interval& dom, double s, bool closure) {
    bool ok = closure ? dom.contains_closure(s) : dom.contains(s);
    if (!ok) {
        throw std::domain_error("ScalarProfile: s = " + std::to_string(s) +
                                " outside domain " + dom.str());
    }
}

double eval_node(const Node& n, double s);
double antiderivative_raw(const Node& n, double s);

// Sampled lookup: index of the segment containing s, exact at nodes.
std::size_t segment_index(const std::vector<double>& grid, double s) {
    auto it = std::upper_bound(grid.begin(), grid.end(), s);
    std::size_t i = (it == grid.begin()) ? 0 : static_cast<std::size_t>(it - grid.begin() - 1);
    if (i >= grid.size() - 1) i = grid.size() - 2;
    return i;
}

double eval_sampled(const SampledNode& n, double s) {
    std::size_t i = segment_index(n.grid, s);
    if (s == n.grid[i]) return n.values[i];
    if (s == n.grid[i + 1]) return n.values[i + 1];
    double w = (s - n.grid[i]) / (n.grid[i + 1] - n.grid[i]);
    return n.values[i] + w * (n.values[i + 1] - n.values[i]);
}

double antiderivative_sampled(const SampledNode& n, double s) {
    std::size_t i = segment_index(n.grid, s);
    double u = s - n.grid[i];
    double h = n.grid[i + 1] - n.grid[i];
    double slope = (n.values[i + 1] - n.values[i]) / h;
    return n.cumulative[i] + u * n.values[i] + 0.5 * u * u * slope;
}

// Adaptive Simpson for analytic profiles without a closed antiderivative.
double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    double fa = f(a);
    double fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, 1e-13, 40);
}

double eval_payload(const Node::Payload& p, double s) {
    if (const auto* c = std::get_if<ConstantNode>(&p)) return c->value;
    if (const auto* h = std::get_if<HarmonicNode>(&p)) {
        double arg = h->omega * s + h->phase;
        return h->amplitude * (h->sine ? std::sin(arg) : std::cos(arg));
    }
    if (const auto* t = std::get_if<SalkowskiTorsionNode>(&p)) {
        double m = t->m;
        return m * s / std::sqrt(1.0 - m * m * s * s);
    }
    if (const auto* c = std::get_if<SalkowskiCurvatureNode>(&p)) {
        double m = c->m;
        return 1.0 / std::sqrt(1.0 - m * m * s * s);
    }
    if (const auto* sm = std::get_if<SampledNode>(&p)) return eval_sampled(*sm, s);
    const auto& an = std::get<AnalyticNode>(p);
    return an.value(s);
}

double antiderivative_payload(const Node& node, double s) {
    const auto& p = node.payload;
    if (const auto* c = std::get_if<ConstantNode>(&p)) return c->value * s;
    if (const auto* h = std::get_if<HarmonicNode>(&p)) {
        double arg = h->omega * s + h->phase;
        return h->sine ? -(h->amplitude / h->omega) * std::cos(arg)
                       : (h->amplitude / h->omega) * std::sin(arg);
    }
    if (const auto* t = std::get_if<SalkowskiTorsionNode>(&p)) {
        double m = t->m;
        return -std::sqrt(std::max(0.0, 1.0 - m * m * s * s)) / m;
    }
    if (const auto* c = std::get_if<SalkowskiCurvatureNode>(&p)) {
        double m = c->m;
        return std::asin(std::clamp(m * s, -1.0, 1.0)) / m;
    }
    if (const auto* sm = std::get_if<SampledNode>(&p)) return antiderivative_sampled(*sm, s);
    const auto& an = std::get<AnalyticNode>(p);
    if (an.antiderivative) return an.antiderivative(s);
    return adaptive_simpson(an.value, node.anchor, s);
}

double eval_node(const Node& n, double s) {
    if (n.affine) {
        double v = n.ca * eval_node(*n.a, s);
        if (n.b) v += n.cb * eval_node(*n.b, s);
        return v;
    }
    return eval_payload(n.payload, s);
}

double antiderivative_raw(const Node& n, double s) {
    if (n.affine) {
        double v = n.ca * antiderivative_raw(*n.a, s);
        if (n.b) v += n.cb * antiderivative_raw(*n.b, s);
        return v;
    }
    return antiderivative_payload(n, s);
}

std::shared_ptr<Node> make_node(Node::Payload payload, Interval domain) {
    if (domain.empty()) {
        throw std::invalid_argument("ScalarProfile: empty domain");
    }
    auto n = std::make_shared<Node>();
    n->payload = std::move(payload);
    n->domain = domain;
    n->anchor = domain.anchor();
    return n;
}

}  // namespace

ScalarProfile::ScalarProfile(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ScalarProfile::ScalarProfile()
    : node_(make_node(ConstantNode{0.0}, Interval::all())) {}

ScalarProfile ScalarProfile::constant(double value, Interval domain) {
    if (!std::isfinite(value)) throw std::invalid_argument("constant profile: non-finite value");
    return ScalarProfile(make_node(ConstantNode{value}, domain));
}

ScalarProfile ScalarProfile::harmonic_cos(double amplitude, double omega, double phase,
                                          Interval domain) {
    if (omega == 0.0) throw std::invalid_argument("harmonic profile: omega must be nonzero");
    return ScalarProfile(make_node(HarmonicNode{amplitude, omega, phase, false}, domain));
}

ScalarProfile ScalarProfile::harmonic_sin(double amplitude, double omega, double phase,
                                          Interval domain) {
    if (omega == 0.0) throw std::invalid_argument("harmonic profile: omega must be nonzero");
    return ScalarProfile(make_node(HarmonicNode{amplitude, omega, phase, true}, domain));
}

ScalarProfile ScalarProfile::salkowski_torsion(double m) {
    if (m == 0.0) throw std::invalid_argument("salkowski_torsion: m must be nonzero");
    double b = 1.0 / std::fabs(m);
    return ScalarProfile(make_node(SalkowskiTorsionNode{m}, Interval::open(-b, b)));
}

ScalarProfile ScalarProfile::salkowski_curvature(double m) {
    if (m == 0.0) throw std::invalid_argument("salkowski_curvature: m must be nonzero");
    double b = 1.0 / std::fabs(m);
    return ScalarProfile(make_node(SalkowskiCurvatureNode{m}, Interval::open(-b, b)));
}

ScalarProfile ScalarProfile::sampled(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 2 || grid.size() != values.size()) {
        throw std::invalid_argument("sampled profile: need >= 2 nodes and matching values");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) {
            throw std::invalid_argument("sampled profile: non-finite data");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sampled profile: grid must be strictly increasing");
        }
    }
    SampledNode n;
    n.cumulative.resize(grid.size());
    n.cumulative[0] = 0.0;
    // Composite Simpson at half the grid step; the interpolated midpoint makes
    // each increment the exact integral of the piecewise-linear interpolant.
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double h = grid[i + 1] - grid[i];
        double mid = 0.5 * (values[i] + values[i + 1]);
        n.cumulative[i + 1] = n.cumulative[i] + h / 6.0 * (values[i] + 4.0 * mid + values[i + 1]);
    }
    Interval dom = Interval::closed(grid.front(), grid.back());
    n.grid = std::move(grid);
    n.values = std::move(values);
    return ScalarProfile(make_node(std::move(n), dom));
}

ScalarProfile ScalarProfile::analytic(std::function<double(double)> value,
                                      std::function<double(double)> antiderivative,
                                      Interval domain) {
    if (!value) throw std::invalid_argument("analytic profile: value callable required");
    return ScalarProfile(
        make_node(AnalyticNode{std::move(value), std::move(antiderivative)}, domain));
}

ScalarProfile ScalarProfile::scaled(double factor) const {
    auto n = std::make_shared<Node>();
    n->affine = true;
    n->a = node_;
    n->ca = factor;
    n->domain = node_->domain;
    n->anchor = node_->anchor;
    return ScalarProfile(n);
}

ScalarProfile ScalarProfile::restricted(Interval domain) const {
    Interval d = node_->domain.intersect(domain);
    if (d.empty()) throw std::invalid_argument("ScalarProfile: restriction is empty");
    auto n = std::make_shared<Node>(*node_);
    n->domain = d;
    n->anchor = d.anchor();
    return ScalarProfile(n);
}

ScalarProfile operator+(const ScalarProfile& a, const ScalarProfile& b) {
    Interval d = a.domain().intersect(b.domain());
    if (d.empty()) throw std::invalid_argument("ScalarProfile: sum has empty domain");
    auto n = std::make_shared<ScalarProfile::Node>();
    n->affine = true;
    n->a = a.node_;
    n->b = b.node_;
    n->ca = 1.0;
    n->cb = 1.0;
    n->domain = d;
    n->anchor = d.anchor();
    return ScalarProfile(n);
}

ScalarProfile operator*(double c, const ScalarProfile& p) { return p.scaled(c); }

double ScalarProfile::operator()(double s) const {
    check_domain(node_->domain, s, /*closure=*/false);
    return eval_node(*node_, s);
}

double ScalarProfile::antiderivative(double s) const {
    check_domain(node_->domain, s, /*closure=*/true);
    return antiderivative_raw(*node_, s) - antiderivative_raw(*node_, node_->anchor);
}

const Interval& ScalarProfile::domain() const { return node_->domain; }

double ScalarProfile::anchor() const { return node_->anchor; }

bool ScalarProfile::is_sampled() const {
    return !node_->affine && std::holds_alternative<SampledNode>(node_->payload);
}

const std::vector<double>& ScalarProfile::grid() const {
    if (!is_sampled()) return Node::kEmptyGrid;
    return std::get<SampledNode>(node_->payload).grid;
}

std::optional<double> ScalarProfile::as_constant() const {
    if (node_->affine) {
        auto a = ScalarProfile(node_->a).as_constant();
        if (!a) return std::nullopt;
        if (!node_->b) return node_->ca * *a;
        auto b = ScalarProfile(node_->b).as_constant();
        if (!b) return std::nullopt;
        return node_->ca * *a + node_->cb * *b;
    }
    if (const auto* c = std::get_if<ConstantNode>(&node_->payload)) return c->value;
    return std::nullopt;
}

}  // namespace spacecurve

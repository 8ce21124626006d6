#include "stokesmac/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace stokesmac {

namespace {

double side_of_value(double v) { return v >= 0.0 ? 1.0 : -1.0; }

Vec2 lerp(Vec2 a, Vec2 b, double s) { return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)}; }

/// Root of classify along [a, b] given a strict sign change. Bisection
/// with secant acceleration; classify is smooth but need not be a distance.
double bracket_root(Vec2 a, Vec2 b, const InterfaceCurve& curve, double fa, double fb) {
    double lo = 0.0, hi = 1.0, flo = fa, fhi = fb;
    double s = 0.5;
    for (int it = 0; it < 200; ++it) {
        // secant proposal, fall back to bisection when it leaves the bracket
        double cand = (flo * hi - fhi * lo) / (flo - fhi);
        if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
        const double fc = curve.classify(lerp(a, b, cand));
        if (fc == 0.0) return cand;
        if (side_of_value(fc) == side_of_value(flo)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
        s = 0.5 * (lo + hi);
        if (hi - lo < 1e-16) break;
    }
    return s;
}

}  // namespace

std::optional<Crossing> find_crossing(Vec2 a, Vec2 b, const InterfaceCurve& curve) {
    const double fa = curve.classify(a);
    const double fb = curve.classify(b);
    const double sa = side_of_value(fa), sb = side_of_value(fb);
    if (sa == sb) return std::nullopt;

    double s;
    if (fa == 0.0)
        s = 0.0;
    else if (fb == 0.0)
        s = 1.0;
    else
        s = bracket_root(a, b, curve, fa, fb);

    Crossing c;
    c.point = lerp(a, b, s);
    c.a = a;
    c.b = b;
    c.axis = std::abs(b.x - a.x) >= std::abs(b.y - a.y) ? Axis::X : Axis::Y;
    c.side_a = sa;
    const double scale = std::max({1.0, std::abs(fa), std::abs(fb)});
    if (std::abs(curve.classify(c.point)) > 1e-11 * scale)
        throw std::runtime_error("find_crossing: root finder failed to converge");
    c.t = curve.project(c.point);
    return c;
}

ClassifiedLattice::ClassifiedLattice(const StaggeredGrid& grid, const InterfaceCurve* curve)
    : grid_(grid), curve_(curve) {
    const int m = 2 * grid_.n + 5;  // p, q in [-2, 2n+2]
    stride_ = m;
    values_.assign(static_cast<std::size_t>(m) * m, 1.0);
    if (curve_) {
        for (int p = -2; p <= 2 * grid_.n + 2; ++p)
            for (int q = -2; q <= 2 * grid_.n + 2; ++q)
                values_[idx(p, q)] = curve_->classify(point(p, q));
    }
}

int ClassifiedLattice::crossing_on_edge(Axis axis, int p, int q) {
    const auto key = std::make_tuple(axis == Axis::X ? 0 : 1, p, q);
    auto it = edge_index_.find(key);
    if (it != edge_index_.end()) return it->second;

    const int p2 = axis == Axis::X ? p + 1 : p;
    const int q2 = axis == Axis::X ? q : q + 1;
    auto c = find_crossing(point(p, q), point(p2, q2), *curve_);
    if (!c) throw std::logic_error("crossing_on_edge: edge is not cut");
    const int index = static_cast<int>(crossings_.size());
    crossings_.push_back(*c);
    edge_index_.emplace(key, index);
    return index;
}

void ClassifiedLattice::check_arm_resolution(Axis axis, int p, int q, int half_steps) const {
    if (!curve_) return;
    const int dp = axis == Axis::X ? 1 : 0;
    const int dq = axis == Axis::X ? 0 : 1;
    const double s0 = side(p, q);
    const double s1 = side(p + half_steps * dp, q + half_steps * dq);
    if (s0 != s1) return;  // one crossing at most under the assumptions
    for (int k = 1; k < half_steps; ++k) {
        if (side(p + k * dp, q + k * dq) != s0)
            throw GridTooCoarseError(
                "interface crosses one stencil arm twice; refine the grid");
    }
}

namespace {

struct LatticeCoord {
    int p, q;
};

LatticeCoord to_lattice(GridFamily f, int i, int j) {
    switch (f) {
        case GridFamily::Vertex: return {2 * i, 2 * j};
        case GridFamily::CellCenter: return {2 * i + 1, 2 * j + 1};
        case GridFamily::VEdge: return {2 * i, 2 * j - 1};
        case GridFamily::HEdge: return {2 * i - 1, 2 * j};
    }
    return {0, 0};
}

}  // namespace

std::vector<NodeClass> classify_nodes(const StaggeredGrid& grid,
                                      const InterfaceCurve& curve, GridFamily family) {
    ClassifiedLattice lat(grid, &curve);
    const int n = grid.n;
    const int nx = grid.nx(family), ny = grid.ny(family);
    std::vector<NodeClass> out(static_cast<std::size_t>(nx) * ny);

    // stencil stations in half-lattice offsets, per family
    std::vector<LatticeCoord> arms;  // (offset, used with resolution checks)
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const auto [p, q] = to_lattice(family, i, j);
            const double s0 = lat.side(p, q);
            bool has_equation = false;
            bool cut = false;
            switch (family) {
                case GridFamily::VEdge:
                    has_equation = (i >= 1 && i <= n - 1 && j >= 1 && j <= n);
                    break;
                case GridFamily::HEdge:
                    has_equation = (i >= 1 && i <= n && j >= 1 && j <= n - 1);
                    break;
                case GridFamily::CellCenter:
                    has_equation = true;
                    break;
                case GridFamily::Vertex:
                    has_equation = (i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1);
                    break;
            }
            if (has_equation) {
                auto differs = [&](int dp, int dq) { return lat.side(p + dp, q + dq) != s0; };
                if (family == GridFamily::VEdge || family == GridFamily::HEdge) {
                    // velocity Laplacian arms (length h) and the two
                    // half-length pressure-gradient arms
                    lat.check_arm_resolution(Axis::X, p - 2, q, 2);
                    lat.check_arm_resolution(Axis::X, p, q, 2);
                    lat.check_arm_resolution(Axis::Y, p, q - 2, 2);
                    lat.check_arm_resolution(Axis::Y, p, q, 2);
                    cut = differs(-2, 0) || differs(2, 0) || differs(0, -2) ||
                          differs(0, 2) ||
                          (family == GridFamily::VEdge
                               ? (differs(-1, 0) || differs(1, 0))
                               : (differs(0, -1) || differs(0, 1)));
                } else if (family == GridFamily::CellCenter) {
                    cut = differs(-1, 0) || differs(1, 0) || differs(0, -1) || differs(0, 1);
                } else {
                    lat.check_arm_resolution(Axis::X, p - 2, q, 2);
                    lat.check_arm_resolution(Axis::X, p, q, 2);
                    lat.check_arm_resolution(Axis::Y, p, q - 2, 2);
                    lat.check_arm_resolution(Axis::Y, p, q, 2);
                    cut = differs(-2, 0) || differs(2, 0) || differs(0, -2) || differs(0, 2);
                }
            }
            out[static_cast<std::size_t>(i) * ny + j] =
                cut ? NodeClass::Irregular
                    : (s0 > 0.0 ? NodeClass::RegularPlus : NodeClass::RegularMinus);
        }
    }
    return out;
}

}  // namespace stokesmac

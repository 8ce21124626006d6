#include "stokesmac/corrections.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace stokesmac {

void CorrectionField::add(GridFamily f, int i, int j, double value, int crossing) {
    if (!std::isfinite(value))
        throw std::runtime_error("correction value is not finite");
    if (value == 0.0) return;
    const Key key{static_cast<int>(f), i, j};
    entries_[key] += value;
    if (track_ && crossing >= 0) provenance_[key].push_back(crossing);
}

double CorrectionField::at(GridFamily f, int i, int j) const {
    const auto it = entries_.find(Key{static_cast<int>(f), i, j});
    return it == entries_.end() ? 0.0 : it->second;
}

double laplacian_correction(const JumpSet& jumps, double center_side, int component,
                            Axis axis, double offset, double h) {
    if (std::abs(offset) > h * (1.0 + 1e-9))
        throw std::runtime_error("laplacian_correction: offset exceeds arm length");
    if (std::abs(offset) < 1e-10 * h) offset = 0.0;
    // [[u]] = 0 by the interface conditions; kept for clarity
    const double u_jump = 0.0;
    const double series = u_jump + offset * jumps.velocity_jump(component, axis) +
                          0.5 * offset * offset * jumps.velocity_jump2(component, axis);
    return center_side * series / (h * h);
}

double gradient_correction(const JumpSet& jumps, double center_side, GradQuantity quantity,
                           double offset, int direction, double h) {
    if (std::abs(offset) > 0.5 * h * (1.0 + 1e-9))
        throw std::runtime_error("gradient_correction: offset exceeds arm length");
    if (std::abs(offset) < 1e-10 * h) offset = 0.0;
    double series = 0.0;
    switch (quantity) {
        case GradQuantity::Px:
            series = jumps.p + offset * jumps.p_x;
            break;
        case GradQuantity::Py:
            series = jumps.p + offset * jumps.p_y;
            break;
        case GradQuantity::U1x:
            series = offset * jumps.u1_x + 0.5 * offset * offset * jumps.u1_xx;
            break;
        case GradQuantity::U2y:
            series = offset * jumps.u2_y + 0.5 * offset * offset * jumps.u2_yy;
            break;
    }
    return center_side * (-direction) * series / h;
}

namespace {

struct Assembler {
    const StaggeredGrid& grid;
    const ProblemSpec& problem;
    ClassifiedLattice lat;
    AssemblyResult& out;

    Assembler(const StaggeredGrid& g, const ProblemSpec& p, AssemblyResult& o)
        : grid(g), problem(p), lat(g, p.curve.get()), out(o) {}

    double coord(Axis axis, int p, int q) const {
        const Vec2 pt = lat.point(p, q);
        return axis == Axis::X ? pt.x : pt.y;
    }

    /// Crossing index on the cut full arm (two lattice edges) from (p,q)
    /// towards direction d along axis; the cut half is found by the sign
    /// at the arm's lattice midpoint.
    int full_arm_crossing(Axis axis, int p, int q, int d) {
        const int dp = axis == Axis::X ? d : 0;
        const int dq = axis == Axis::X ? 0 : d;
        const double mid_side = lat.side(p + dp, q + dq);
        int ep = p, eq = q;
        if (mid_side == lat.side(p, q)) {  // crossing in the far half
            ep = p + dp;
            eq = q + dq;
        }
        if (d < 0) {
            ep += dp;  // canonical edge key uses the lower endpoint
            eq += dq;
        }
        return lat.crossing_on_edge(axis, ep, eq);
    }

    int half_arm_crossing(Axis axis, int p, int q, int d) {
        int ep = p, eq = q;
        if (d < 0) {
            ep -= axis == Axis::X ? 1 : 0;
            eq -= axis == Axis::X ? 0 : 1;
        }
        return lat.crossing_on_edge(axis, ep, eq);
    }

    double crossing_coord(int idx, Axis axis) const {
        const Crossing& c = out.crossings[idx];
        return axis == Axis::X ? c.point.x : c.point.y;
    }

    struct PendingLaplacian {
        GridFamily fam;
        int i, j, component;
        Axis axis;
        int crossing;
        double far_coord, side;
    };
    struct PendingGradient {
        GridFamily fam;  // family receiving the correction (equation's)
        int i, j;
        GradQuantity quantity;
        Axis axis;
        int crossing, direction;
        double far_coord, side;
    };
    std::vector<PendingLaplacian> lap_arms;
    std::vector<PendingGradient> grad_arms;

    void scan_momentum(GridFamily fam) {
        const int n = grid.n;
        const int component = fam == GridFamily::VEdge ? 1 : 2;
        const int i_hi = fam == GridFamily::VEdge ? n - 1 : n;
        const int j_hi = fam == GridFamily::VEdge ? n : n - 1;
        const Axis press_axis = fam == GridFamily::VEdge ? Axis::X : Axis::Y;
        const GradQuantity quantity =
            fam == GridFamily::VEdge ? GradQuantity::Px : GradQuantity::Py;
        for (int i = 1; i <= i_hi; ++i) {
            for (int j = 1; j <= j_hi; ++j) {
                const int p = fam == GridFamily::VEdge ? 2 * i : 2 * i - 1;
                const int q = fam == GridFamily::VEdge ? 2 * j - 1 : 2 * j;
                const double s0 = lat.side(p, q);
                for (const Axis axis : {Axis::X, Axis::Y}) {
                    for (const int d : {-1, 1}) {
                        const int dp = axis == Axis::X ? d : 0;
                        const int dq = axis == Axis::X ? 0 : d;
                        lat.check_arm_resolution(axis, p + (d < 0 ? -2 * std::abs(dp) : 0),
                                                 q + (d < 0 ? -2 * std::abs(dq) : 0), 2);
                        // velocity Laplacian arm, length h
                        if (lat.side(p + 2 * dp, q + 2 * dq) != s0) {
                            const int c = full_arm_crossing(axis, p, q, d);
                            lap_arms.push_back({fam, i, j, component, axis, c,
                                                coord(axis, p + 2 * dp, q + 2 * dq), s0});
                        }
                        // pressure-gradient arm, length h/2, along one axis only
                        if (axis == press_axis && lat.side(p + dp, q + dq) != s0) {
                            const int c = half_arm_crossing(axis, p, q, d);
                            grad_arms.push_back({fam, i, j, quantity, axis, c, d,
                                                 coord(axis, p + dp, q + dq), s0});
                        }
                    }
                }
            }
        }
    }

    void scan_divergence() {
        const int n = grid.n;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const int p = 2 * a + 1, q = 2 * b + 1;
                const double s0 = lat.side(p, q);
                for (const Axis axis : {Axis::X, Axis::Y}) {
                    const GradQuantity quantity =
                        axis == Axis::X ? GradQuantity::U1x : GradQuantity::U2y;
                    for (const int d : {-1, 1}) {
                        const int dp = axis == Axis::X ? d : 0;
                        const int dq = axis == Axis::X ? 0 : d;
                        if (lat.side(p + dp, q + dq) != s0) {
                            const int c = half_arm_crossing(axis, p, q, d);
                            grad_arms.push_back({GridFamily::CellCenter, a, b, quantity, axis,
                                                 c, d, coord(axis, p + dp, q + dq), s0});
                        }
                    }
                }
            }
        }
    }

    void apply() {
        const double h = grid.h;
        for (const auto& arm : lap_arms) {
            const double offset = arm.far_coord - crossing_coord(arm.crossing, arm.axis);
            const double v = laplacian_correction(out.jumps[arm.crossing], arm.side,
                                                  arm.component, arm.axis, offset, h);
            out.corrections.add(arm.fam, arm.i, arm.j, v, arm.crossing);
        }
        for (const auto& arm : grad_arms) {
            const double offset = arm.far_coord - crossing_coord(arm.crossing, arm.axis);
            const double v = gradient_correction(out.jumps[arm.crossing], arm.side,
                                                 arm.quantity, offset, arm.direction, h);
            out.corrections.add(arm.fam, arm.i, arm.j, v, arm.crossing);
        }
    }
};

}  // namespace

AssemblyResult assemble_rhs(const StaggeredGrid& grid, const ProblemSpec& problem,
                            bool with_provenance) {
    AssemblyResult out{Field(grid, GridFamily::VEdge), Field(grid, GridFamily::HEdge),
                       Field(grid, GridFamily::CellCenter), {}, {}, {}};
    out.corrections.track_provenance(with_provenance);
    const int n = grid.n;

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            out.f1(i, j) = problem.f1(grid.x(GridFamily::VEdge, i), grid.y(GridFamily::VEdge, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j)
            out.f2(i, j) = problem.f2(grid.x(GridFamily::HEdge, i), grid.y(GridFamily::HEdge, j));

    if (problem.curve) {
        Assembler as(grid, problem, out);
        as.scan_momentum(GridFamily::VEdge);
        as.scan_momentum(GridFamily::HEdge);
        as.scan_divergence();
        out.crossings = as.lat.crossings();
        out.jumps = jump_table(*problem.curve, problem.interface_data, out.crossings);
        as.out.crossings = as.lat.crossings();  // keep in sync before apply
        as.apply();
    }

    for (const auto& [key, value] : out.corrections.entries()) {
        const auto [fam, i, j] = key;
        switch (static_cast<GridFamily>(fam)) {
            case GridFamily::VEdge: out.f1(i, j) += value; break;
            case GridFamily::HEdge: out.f2(i, j) += value; break;
            case GridFamily::CellCenter: out.g(i, j) += value; break;
            default: throw std::logic_error("correction on unexpected family");
        }
    }
    return out;
}

std::string corrections_to_csv(const CorrectionField& c) {
    std::ostringstream os;
    os << "family,i,j,value\n";
    char buf[64];
    for (const auto& [key, value] : c.entries()) {
        const auto [fam, i, j] = key;
        std::snprintf(buf, sizeof buf, "%.17g", value);
        os << family_name(static_cast<GridFamily>(fam)) << ',' << i << ',' << j << ',' << buf
           << '\n';
    }
    return os.str();
}

}  // namespace stokesmac

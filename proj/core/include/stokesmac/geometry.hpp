/// Node classification against the interface and grid-segment/interface
/// intersections.
///
/// Every stencil point of every equation lies on the half-index lattice
/// (x0 + p*h/2, y0 + q*h/2): vertices at (even, even), cell centers at
/// (odd, odd), vertical-edge points at (even, odd), horizontal-edge points
/// at (odd, even). Stencil arms are unions of unit lattice edges, so one
/// cached classification of the lattice answers every sidedness query, and
/// crossings are keyed by the lattice edge that contains them.
///
/// Points with classify exactly zero are assigned to the plus side.

#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "stokesmac/grid.hpp"
#include "stokesmac/interface_curve.hpp"

namespace stokesmac {

enum class NodeClass { RegularPlus, RegularMinus, Irregular };

struct Crossing {
    Vec2 point;      // intersection of the interface with the lattice edge
    double t = 0.0;  // curve parameter at the intersection
    Vec2 a, b;       // edge endpoints, a before b along the axis
    Axis axis = Axis::X;
    double side_a = 1.0;  // sign at a; the sign at b is the opposite
};

/// Raised when the grid is too coarse to resolve the interface (two
/// crossings detected on one stencil arm).
struct GridTooCoarseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ClassifiedLattice {
public:
    ClassifiedLattice(const StaggeredGrid& grid, const InterfaceCurve* curve);

    const StaggeredGrid& grid() const { return grid_; }
    const InterfaceCurve* curve() const { return curve_; }

    /// p, q in [-2, 2n+2]; one layer beyond covers ghost points.
    double value(int p, int q) const { return values_[idx(p, q)]; }
    double side(int p, int q) const { return value(p, q) >= 0.0 ? 1.0 : -1.0; }
    Vec2 point(int p, int q) const {
        return {grid_.x0 + 0.5 * p * grid_.h, grid_.y0 + 0.5 * q * grid_.h};
    }
    bool edge_cut(Axis axis, int p, int q) const {  // unit edge from (p,q)
        if (!curve_) return false;
        const int p2 = axis == Axis::X ? p + 1 : p;
        const int q2 = axis == Axis::X ? q : q + 1;
        return side(p, q) != side(p2, q2);
    }

    /// Crossing on the unit edge starting at (p,q); caches by edge.
    /// Precondition: edge_cut. Results are indexed densely in first-use
    /// order; use crossings()/crossing_index for the deterministic list.
    int crossing_on_edge(Axis axis, int p, int q);
    const std::vector<Crossing>& crossings() const { return crossings_; }

    /// Verifies the resolution assumptions on full-length arms: endpoints
    /// on the same side with the midpoint on the other side means the arm
    /// is cut twice. Lattice midpoints make this a pure sign test.
    void check_arm_resolution(Axis axis, int p, int q, int half_steps) const;

private:
    std::size_t idx(int p, int q) const {
        return static_cast<std::size_t>(p + 2) * stride_ + (q + 2);
    }

    StaggeredGrid grid_;
    const InterfaceCurve* curve_;
    std::size_t stride_ = 0;
    std::vector<double> values_;
    std::map<std::tuple<int, int, int>, int> edge_index_;
    std::vector<Crossing> crossings_;
};

/// Label every storage point of the family: irregular iff a stencil arm of
/// the equation living there is cut. Points without an equation (boundary
/// columns, ghosts, all vertices) are labelled by their own sign.
std::vector<NodeClass> classify_nodes(const StaggeredGrid& grid,
                                      const InterfaceCurve& curve, GridFamily family);

/// Sign-change bracketed intersection of the segment [a, b] with the curve.
std::optional<Crossing> find_crossing(Vec2 a, Vec2 b, const InterfaceCurve& curve);

}  // namespace stokesmac

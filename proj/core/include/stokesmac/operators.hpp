/// Divided differences, the 5-point Laplacian, and the ghost-point closure.
///
/// Difference fields are indexed by their *target* points: the divided
/// difference over a source-point pair is stored at the midpoint of that
/// pair, which always lands on another grid family (cell values difference
/// in x lands on vertical edge midpoints, and so on). In this indexing a
/// forward and a backward difference of the same field are the same target
/// field; both names are kept so call sites can mirror the scheme they
/// implement.

#pragma once

#include <functional>

#include "stokesmac/grid.hpp"

namespace stokesmac {

enum class Axis { X, Y };

/// Family the difference of `f` along `axis` lands on.
GridFamily difference_target(GridFamily f, Axis axis);

Field diff_forward(const Field& f, Axis axis);
Field diff_backward(const Field& f, Axis axis);

/// 5-point Laplacian at interior points of a VEdge/HEdge field.
/// Requires the ghost rows/columns to be populated (see ghost closure).
Field laplacian(const Field& f);

/// Dirichlet trace sampled at boundary points; null means zero trace.
using BoundaryTrace = std::function<double(double x, double y)>;

/// Sets boundary and ghost entries of a VEdge/HEdge field:
///  - on-node boundary entries get the trace value directly,
///  - ghost entries are set so that (ghost + first interior)/2 equals the
///    trace at the boundary midpoint (ghost = 2g - interior).
void apply_ghost_closure_inplace(Field& f, const BoundaryTrace& trace = nullptr);
Field apply_ghost_closure(Field f, const BoundaryTrace& trace = nullptr);

/// Pressure gradient components onto the velocity families (zero in the
/// unreachable boundary/ghost entries).
Field grad_to_vedge(const Field& p);  // d/dx
Field grad_to_hedge(const Field& p);  // d/dy

/// Discrete divergence of (u1, u2) at cell centers.
Field divergence(const Field& u1, const Field& u2);

}  // namespace stokesmac

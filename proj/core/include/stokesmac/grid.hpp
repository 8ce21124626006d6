/// Uniform staggered (MAC) grid: pressure at cell centers, u at vertical
/// edge midpoints, v at horizontal edge midpoints.
///
/// Four grid families share one N x N partition of a square domain:
///   Vertex     (x_i, y_j)              i,j = 0..N
///   CellCenter (x_{i-1/2}, y_{j-1/2})  i,j = 1..N
///   VEdge      (x_i, y_{j-1/2})        u'th component; has ghost rows
///   HEdge      (x_{i-1/2}, y_j)        v'th component; has ghost columns
///
/// Storage indices are 0-based and include ghosts where the family has them:
///   VEdge  storage (i,j): i = 0..N (on-node Dirichlet columns at 0, N),
///          j = 0..N+1 maps to y_{j-1/2}; rows j=0 and j=N+1 are ghosts.
///   HEdge  storage (i,j): i = 0..N+1 maps to x_{i-1/2} (ghost columns at
///          0 and N+1), j = 0..N with Dirichlet rows at 0, N.
///   CellCenter storage (i,j): i,j = 0..N-1 maps to (x_{i+1/2}, y_{j+1/2}).
/// All index arithmetic between families lives here.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stokesmac {

enum class GridFamily { Vertex, CellCenter, VEdge, HEdge };

const char* family_name(GridFamily f);

struct StaggeredGrid {
    int n = 0;          // cells per axis
    double x0 = 0.0;    // lower-left corner
    double y0 = 0.0;
    double length = 1.0;  // side length, square domain (square cells required)
    double h = 0.0;       // = length / n

    StaggeredGrid() = default;
    StaggeredGrid(int n_cells, double x0_, double y0_, double length_);

    double area() const { return length * length; }

    // storage extents per family
    int nx(GridFamily f) const;
    int ny(GridFamily f) const;

    // physical coordinates of storage index (i, j) in family f
    double x(GridFamily f, int i) const;
    double y(GridFamily f, int j) const;

    bool operator==(const StaggeredGrid&) const = default;
};

/// Dense grid function on one family, ghost entries included in storage.
class Field {
public:
    Field() = default;
    Field(const StaggeredGrid& g, GridFamily f);

    GridFamily family() const { return family_; }
    const StaggeredGrid& grid() const { return grid_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }

    double& operator()(int i, int j) { return values_[idx(i, j)]; }
    double operator()(int i, int j) const { return values_[idx(i, j)]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    void fill(double v);

    // Ghost bookkeeping: VEdge/HEdge fields start with unset ghosts; the
    // ghost closure (or any routine that writes the full array) marks them.
    bool ghosts_valid() const { return ghosts_valid_; }
    void set_ghosts_valid(bool v) { ghosts_valid_ = v; }
    bool has_ghosts() const {
        return family_ == GridFamily::VEdge || family_ == GridFamily::HEdge;
    }

private:
    std::size_t idx(int i, int j) const {
#ifndef NDEBUG
        if (i < 0 || i >= nx_ || j < 0 || j >= ny_)
            throw std::out_of_range("Field index out of range");
#endif
        return static_cast<std::size_t>(i) * ny_ + j;
    }

    StaggeredGrid grid_;
    GridFamily family_ = GridFamily::Vertex;
    int nx_ = 0, ny_ = 0;
    std::vector<double> values_;
    bool ghosts_valid_ = false;
};

}  // namespace stokesmac

#include "stokesmac/grid.hpp"

#include <algorithm>
#include <string>

namespace stokesmac {

const char* family_name(GridFamily f) {
    switch (f) {
        case GridFamily::Vertex: return "vertex";
        case GridFamily::CellCenter: return "cell";
        case GridFamily::VEdge: return "vedge";
        case GridFamily::HEdge: return "hedge";
    }
    return "?";
}

StaggeredGrid::StaggeredGrid(int n_cells, double x0_, double y0_, double length_)
    : n(n_cells), x0(x0_), y0(y0_), length(length_) {
    if (n < 4) throw std::invalid_argument("StaggeredGrid: need N >= 4");
    if (!(length > 0.0)) throw std::invalid_argument("StaggeredGrid: need positive extent");
    h = length / n;
}

int StaggeredGrid::nx(GridFamily f) const {
    switch (f) {
        case GridFamily::Vertex: return n + 1;
        case GridFamily::CellCenter: return n;
        case GridFamily::VEdge: return n + 1;
        case GridFamily::HEdge: return n + 2;
    }
    return 0;
}

int StaggeredGrid::ny(GridFamily f) const {
    switch (f) {
        case GridFamily::Vertex: return n + 1;
        case GridFamily::CellCenter: return n;
        case GridFamily::VEdge: return n + 2;
        case GridFamily::HEdge: return n + 1;
    }
    return 0;
}

double StaggeredGrid::x(GridFamily f, int i) const {
    switch (f) {
        case GridFamily::Vertex:
        case GridFamily::VEdge: return x0 + i * h;
        case GridFamily::CellCenter: return x0 + (i + 0.5) * h;
        case GridFamily::HEdge: return x0 + (i - 0.5) * h;
    }
    return 0.0;
}

double StaggeredGrid::y(GridFamily f, int j) const {
    switch (f) {
        case GridFamily::Vertex:
        case GridFamily::HEdge: return y0 + j * h;
        case GridFamily::CellCenter: return y0 + (j + 0.5) * h;
        case GridFamily::VEdge: return y0 + (j - 0.5) * h;
    }
    return 0.0;
}

Field::Field(const StaggeredGrid& g, GridFamily f)
    : grid_(g), family_(f), nx_(g.nx(f)), ny_(g.ny(f)),
      values_(static_cast<std::size_t>(nx_) * ny_, 0.0) {}

void Field::fill(double v) { std::fill(values_.begin(), values_.end(), v); }

}  // namespace stokesmac

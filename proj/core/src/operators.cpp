#include "stokesmac/operators.hpp"

#include <stdexcept>
#include <string>

namespace stokesmac {

GridFamily difference_target(GridFamily f, Axis axis) {
    using GF = GridFamily;
    if (axis == Axis::X) {
        switch (f) {
            case GF::CellCenter: return GF::VEdge;
            case GF::VEdge: return GF::CellCenter;
            case GF::HEdge: return GF::Vertex;
            case GF::Vertex: return GF::HEdge;
        }
    } else {
        switch (f) {
            case GF::CellCenter: return GF::HEdge;
            case GF::HEdge: return GF::CellCenter;
            case GF::VEdge: return GF::Vertex;
            case GF::Vertex: return GF::VEdge;
        }
    }
    throw std::invalid_argument("difference_target: bad family/axis");
}

namespace {

Field divided_difference(const Field& f, Axis axis) {
    const StaggeredGrid& g = f.grid();
    const int n = g.n;
    const double inv_h = 1.0 / g.h;
    Field out(g, difference_target(f.family(), axis));
    using GF = GridFamily;

    switch (f.family()) {
        case GF::CellCenter:
            if (axis == Axis::X) {
                // cells (a,b),(a+1,b) -> vedge (a+1, b+1); interior columns only
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = 1; j <= n; ++j)
                        out(i, j) = (f(i, j - 1) - f(i - 1, j - 1)) * inv_h;
            } else {
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n - 1; ++j)
                        out(i, j) = (f(i - 1, j) - f(i - 1, j - 1)) * inv_h;
            }
            break;
        case GF::VEdge:
            if (axis == Axis::X) {
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        out(a, b) = (f(a + 1, b + 1) - f(a, b + 1)) * inv_h;
            } else {
                // bonds through ghost rows cover all vertex rows 0..N
                for (int i = 0; i <= n; ++i)
                    for (int m = 0; m <= n; ++m)
                        out(i, m) = (f(i, m + 1) - f(i, m)) * inv_h;
            }
            break;
        case GF::HEdge:
            if (axis == Axis::X) {
                for (int m = 0; m <= n; ++m)
                    for (int j = 0; j <= n; ++j)
                        out(m, j) = (f(m + 1, j) - f(m, j)) * inv_h;
            } else {
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        out(a, b) = (f(a + 1, b + 1) - f(a + 1, b)) * inv_h;
            }
            break;
        case GF::Vertex:
            if (axis == Axis::X) {
                for (int m = 1; m <= n; ++m)
                    for (int j = 0; j <= n; ++j)
                        out(m, j) = (f(m, j) - f(m - 1, j)) * inv_h;
            } else {
                for (int i = 0; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        out(i, j) = (f(i, j) - f(i, j - 1)) * inv_h;
            }
            break;
    }
    return out;
}

}  // namespace

Field diff_forward(const Field& f, Axis axis) { return divided_difference(f, axis); }
Field diff_backward(const Field& f, Axis axis) { return divided_difference(f, axis); }

Field laplacian(const Field& f) {
    const GridFamily fam = f.family();
    if (fam != GridFamily::VEdge && fam != GridFamily::HEdge)
        throw std::invalid_argument("laplacian: field must live on a velocity family");
    if (!f.ghosts_valid())
        throw std::logic_error("laplacian: ghost entries not populated");

    const StaggeredGrid& g = f.grid();
    const int n = g.n;
    const double inv_h2 = 1.0 / (g.h * g.h);
    Field out(g, fam);
    const int i_lo = 1, j_lo = 1;
    const int i_hi = (fam == GridFamily::VEdge) ? n - 1 : n;
    const int j_hi = (fam == GridFamily::VEdge) ? n : n - 1;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int j = j_lo; j <= j_hi; ++j)
            out(i, j) = (f(i + 1, j) + f(i - 1, j) + f(i, j + 1) + f(i, j - 1) -
                         4.0 * f(i, j)) * inv_h2;
    return out;
}

void apply_ghost_closure_inplace(Field& f, const BoundaryTrace& trace) {
    const GridFamily fam = f.family();
    if (fam != GridFamily::VEdge && fam != GridFamily::HEdge)
        throw std::invalid_argument("ghost closure: field must live on a velocity family");
    const StaggeredGrid& g = f.grid();
    const int n = g.n;
    auto tr = [&](double x, double y) { return trace ? trace(x, y) : 0.0; };

    if (fam == GridFamily::VEdge) {
        for (int j = 1; j <= n; ++j) {
            f(0, j) = tr(g.x0, g.y(fam, j));
            f(n, j) = tr(g.x0 + g.length, g.y(fam, j));
        }
        for (int i = 0; i <= n; ++i) {
            const double x = g.x(fam, i);
            f(i, 0) = 2.0 * tr(x, g.y0) - f(i, 1);
            f(i, n + 1) = 2.0 * tr(x, g.y0 + g.length) - f(i, n);
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            f(i, 0) = tr(g.x(fam, i), g.y0);
            f(i, n) = tr(g.x(fam, i), g.y0 + g.length);
        }
        for (int j = 0; j <= n; ++j) {
            const double y = g.y(fam, j);
            f(0, j) = 2.0 * tr(g.x0, y) - f(1, j);
            f(n + 1, j) = 2.0 * tr(g.x0 + g.length, y) - f(n, j);
        }
    }
    f.set_ghosts_valid(true);
}

Field apply_ghost_closure(Field f, const BoundaryTrace& trace) {
    apply_ghost_closure_inplace(f, trace);
    return f;
}

Field grad_to_vedge(const Field& p) {
    if (p.family() != GridFamily::CellCenter)
        throw std::invalid_argument("grad_to_vedge: expected a cell-center field");
    return diff_forward(p, Axis::X);
}

Field grad_to_hedge(const Field& p) {
    if (p.family() != GridFamily::CellCenter)
        throw std::invalid_argument("grad_to_hedge: expected a cell-center field");
    return diff_forward(p, Axis::Y);
}

Field divergence(const Field& u1, const Field& u2) {
    if (u1.family() != GridFamily::VEdge || u2.family() != GridFamily::HEdge)
        throw std::invalid_argument("divergence: expected (VEdge, HEdge) fields");
    const StaggeredGrid& g = u1.grid();
    const int n = g.n;
    const double inv_h = 1.0 / g.h;
    Field out(g, GridFamily::CellCenter);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out(a, b) = ((u1(a + 1, b + 1) - u1(a, b + 1)) +
                         (u2(a + 1, b + 1) - u2(a + 1, b))) * inv_h;
    return out;
}

}  // namespace stokesmac

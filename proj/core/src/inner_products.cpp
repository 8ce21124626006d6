#include "stokesmac/inner_products.hpp"

#include <cmath>
#include <stdexcept>

namespace stokesmac {

namespace {

GridFamily space_family(Space s) {
    switch (s) {
        case Space::V1: return GridFamily::VEdge;
        case Space::V2: return GridFamily::HEdge;
        case Space::M: return GridFamily::CellCenter;
        case Space::W1:
        case Space::W2: return GridFamily::Vertex;
    }
    throw std::invalid_argument("space_family");
}

}  // namespace

double inner_product(const Field& a, const Field& b, Space s) {
    if (a.family() != b.family() || a.grid() != b.grid())
        throw std::invalid_argument("inner_product: fields on different families/grids");
    if (a.family() != space_family(s))
        throw std::invalid_argument("inner_product: field family does not match space");
    const int n = a.grid().n;
    const double h2 = a.grid().h * a.grid().h;
    double sum = 0.0;
    switch (s) {
        case Space::V1:
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= n; ++j) sum += a(i, j) * b(i, j);
            break;
        case Space::V2:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n - 1; ++j) sum += a(i, j) * b(i, j);
            break;
        case Space::M:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) sum += a(i, j) * b(i, j);
            break;
        case Space::W1:
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 0; j <= n; ++j) {
                    const double rho = (j == 0 || j == n) ? 0.5 : 1.0;
                    sum += rho * a(i, j) * b(i, j);
                }
            break;
        case Space::W2:
            for (int i = 0; i <= n; ++i) {
                const double rho = (i == 0 || i == n) ? 0.5 : 1.0;
                for (int j = 1; j <= n - 1; ++j) sum += rho * a(i, j) * b(i, j);
            }
            break;
    }
    return h2 * sum;
}

double inner_product(const Field& a, const Field& b) {
    switch (a.family()) {
        case GridFamily::VEdge: return inner_product(a, b, Space::V1);
        case GridFamily::HEdge: return inner_product(a, b, Space::V2);
        case GridFamily::CellCenter: return inner_product(a, b, Space::M);
        case GridFamily::Vertex:
            throw std::invalid_argument(
                "inner_product: vertex fields are ambiguous, pass Space::W1 or W2");
    }
    throw std::invalid_argument("inner_product");
}

double space_norm(const Field& a, Space s) { return std::sqrt(inner_product(a, a, s)); }

VelocityNorms norms(const Field& u1, const Field& u2, const Field& p) {
    if (u1.family() != GridFamily::VEdge || u2.family() != GridFamily::HEdge ||
        p.family() != GridFamily::CellCenter)
        throw std::invalid_argument("norms: expected (VEdge, HEdge, CellCenter)");
    const StaggeredGrid& g = u1.grid();
    const int n = g.n;
    const double h = g.h, h2 = h * h;

    VelocityNorms out;
    out.l2_u = std::sqrt(inner_product(u1, u1, Space::V1) +
                         inner_product(u2, u2, Space::V2));
    out.l2_p = space_norm(p, Space::M);

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) out.max_u = std::max(out.max_u, std::abs(u1(i, j)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) out.max_u = std::max(out.max_u, std::abs(u2(i, j)));

    double s2 = 0.0, gmax = 0.0;
    // d(u1)/dx at all cells, d(u2)/dy at all cells (M parts)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double dx1 = (u1(a + 1, b + 1) - u1(a, b + 1)) / h;
            const double dy2 = (u2(a + 1, b + 1) - u2(a + 1, b)) / h;
            s2 += h2 * (dx1 * dx1 + dy2 * dy2);
            gmax = std::max({gmax, std::abs(dx1), std::abs(dy2)});
        }
    // d(u1)/dy at interior vertex rows (W1 without the ghost bonds)
    for (int i = 1; i <= n - 1; ++i)
        for (int m = 1; m <= n - 1; ++m) {
            const double d = (u1(i, m + 1) - u1(i, m)) / h;
            s2 += h2 * d * d;
            gmax = std::max(gmax, std::abs(d));
        }
    // d(u2)/dx at interior vertex columns (W2 without the ghost bonds)
    for (int m = 1; m <= n - 1; ++m)
        for (int j = 1; j <= n - 1; ++j) {
            const double d = (u2(m + 1, j) - u2(m, j)) / h;
            s2 += h2 * d * d;
            gmax = std::max(gmax, std::abs(d));
        }
    out.h1_semi_u = std::sqrt(s2);
    out.max_grad_u = gmax;
    return out;
}

double field_mean(const Field& f) {
    if (f.family() != GridFamily::CellCenter)
        throw std::invalid_argument("field_mean: cell-center fields only");
    double sum = 0.0;
    for (double v : f.values()) sum += v;
    return sum / static_cast<double>(f.values().size());
}

void shift_to_zero_mean(Field& f) {
    const double m = field_mean(f);
    for (double& v : f.values()) v -= m;
}

}  // namespace stokesmac

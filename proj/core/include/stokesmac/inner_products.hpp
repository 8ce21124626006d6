/// Discrete l2 inner products of the five grid-function spaces and the
/// norms used by the convergence tables.
///
/// Spaces and summation ranges (paper indices, N cells per axis):
///   V1: vedge,  i = 1..N-1, j = 1..N, weight h^2
///   V2: hedge,  i = 1..N,   j = 1..N-1
///   M : cell,   all N x N cells
///   W1: vertex, i = 1..N-1, j = 0..N with rho_0 = rho_N = 1/2
///   W2: vertex, i = 0..N with rho half-weights, j = 1..N-1
///
/// The velocity seminorm |v|_1 combines the backward differences of both
/// components measured in M and W norms. For error reporting the vertex
/// rows/columns whose difference stencil straddles the domain boundary
/// (ghost bonds) are excluded: the interpolated ghost closure carries an
/// O(h) defect there that is not part of the interior convergence the
/// tables measure. The full literal W products (ghost bonds included, rho
/// weights applied) are what the Green-formula identities use.

#pragma once

#include "stokesmac/grid.hpp"

namespace stokesmac {

enum class Space { V1, V2, M, W1, W2 };

double inner_product(const Field& a, const Field& b, Space s);
/// Infers V1/V2/M from the family; vertex fields are ambiguous and throw.
double inner_product(const Field& a, const Field& b);

double space_norm(const Field& a, Space s);

struct VelocityNorms {
    double l2_u = 0.0;        // sqrt(|u1|_V1^2 + |u2|_V2^2)
    double l2_p = 0.0;        // M-norm of the pressure argument
    double h1_semi_u = 0.0;   // interior discrete H1 seminorm
    double max_u = 0.0;
    double max_grad_u = 0.0;  // max over the four interior difference fields
};

/// Unscaled norms of a (u1, u2, p) triple sampled on (V1, V2, M).
/// The caller shifts p to zero mean beforehand when that is wanted.
VelocityNorms norms(const Field& u1, const Field& u2, const Field& p);

double field_mean(const Field& f);          // cell fields
void shift_to_zero_mean(Field& f);

}  // namespace stokesmac

/// Fast solver for -lap_h u = rhs on one velocity family with homogeneous
/// closure: on-node Dirichlet along one axis, anti-reflected ghosts along
/// the other.
///
/// The operator separates by axis. The node-Dirichlet axis diagonalizes in
/// the DST-I basis sin(k pi i / N) on the N-1 interior lines; the ghost
/// axis in the half-offset basis sin(k pi (j - 1/2) / N) on its N lines
/// (DST-II forward, DST-III inverse). Eigenvalues along either axis are
/// (2 - 2 cos(k pi / N)) / h^2 for k = 1..N-1 resp. 1..N.
///
/// A dense LU path (N <= 16) backs the transform solver as its oracle.

#pragma once

#include <Eigen/Dense>
#include <memory>

#include "stokesmac/grid.hpp"
#include "stokesmac/operators.hpp"

namespace stokesmac {

class FftPoissonSolver {
public:
    FftPoissonSolver(const StaggeredGrid& grid, GridFamily family);
    ~FftPoissonSolver();
    FftPoissonSolver(const FftPoissonSolver&) = delete;
    FftPoissonSolver& operator=(const FftPoissonSolver&) = delete;

    GridFamily family() const { return family_; }

    /// Interior entries of rhs are consumed; the result has the interior
    /// set and zero boundary/ghost entries (ghosts left to the caller).
    Field solve(const Field& rhs);

    /// Inhomogeneous traces enter the momentum right-hand side through the
    /// rows next to the boundary: trace/h^2 on Dirichlet-node neighbours,
    /// 2 trace/h^2 on ghost-row neighbours.
    static void add_boundary_lift(Field& rhs, const BoundaryTrace& trace);

private:
    struct Plans;
    StaggeredGrid grid_;
    GridFamily family_;
    int mx_, my_;  // interior extents
    std::vector<double> buf_;
    std::vector<double> eig_x_, eig_y_;
    std::unique_ptr<Plans> plans_;
};

/// Dense matrix of -lap_h on the interior unknowns of the family, rows and
/// columns ordered i-major over (i, j) interior. Exposed as the oracle.
Eigen::MatrixXd dense_neg_laplacian_matrix(const StaggeredGrid& grid, GridFamily family);

/// Direct solve against the dense matrix; guarded to N <= 16.
Field dense_poisson_solve(const StaggeredGrid& grid, GridFamily family, const Field& rhs);

}  // namespace stokesmac

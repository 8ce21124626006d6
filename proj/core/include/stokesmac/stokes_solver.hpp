/// Saddle-point solve of the modified scheme: outer conjugate gradients on
/// the pressure Schur complement with transform-based Poisson inner
/// solves, then velocity recovery.
///
/// The system is augmented with a scalar lambda coupled through gamma
/// (one h^2 entry per cell) and alpha = |Omega|, which pins the pressure
/// constant and makes lambda the pressure mean. Eliminating the velocity
/// gives the symmetric positive definite operator
///
///     S p = G^T (-lap_h)^{-1} G p + (1/alpha) gamma (gamma^T p),
///
/// applied with two Poisson solves per iteration. Inhomogeneous boundary
/// traces are lifted into the right-hand sides once, up front, so every
/// inner solve is homogeneous.

#pragma once

#include <vector>

#include "stokesmac/corrections.hpp"
#include "stokesmac/poisson.hpp"

namespace stokesmac {

struct AugmentedSystem {
    StaggeredGrid grid;
    Field f1, f2;  // corrected momentum RHS (VEdge, HEdge)
    Field g;       // corrected divergence RHS (CellCenter)
    BoundaryTrace ub1, ub2;
    double alpha = 0.0;  // defaults to the domain area when 0

    /// Midpoint-rule boundary flux of the trace; the compatibility
    /// condition asks this to vanish.
    double boundary_flux() const;
};

/// Assembles the corrected RHS of a problem into a solvable system.
AugmentedSystem make_system(const StaggeredGrid& grid, const ProblemSpec& problem);
AugmentedSystem make_system(const StaggeredGrid& grid, const ProblemSpec& problem,
                            const AssemblyResult& assembly);

struct SolverStats {
    int cg_iterations = 0;
    double cg_relative_residual = 0.0;
    double momentum_residual = 0.0;    // V-norms of the two momentum rows
    double divergence_residual = 0.0;  // M-norm of div u - g - gamma lambda
    double compatibility_defect = 0.0;
    double lambda = 0.0;
    double seconds = 0.0;
};

struct StokesFields {
    Field u1, u2, p;
    double lambda = 0.0;
};

struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
    std::vector<double> residual_history;
};

class StokesSolver {
public:
    explicit StokesSolver(const StaggeredGrid& grid);

    const StaggeredGrid& grid() const { return grid_; }

    /// S p as above; alpha <= 0 uses the domain area.
    Field schur_apply(const Field& p, double alpha = 0.0);

    /// rel_tol <= 0 picks default_tolerance(). Throws SolverFailure when
    /// CG has not converged within 10 N iterations.
    StokesFields solve(const AugmentedSystem& sys, double rel_tol = 0.0,
                       SolverStats* stats = nullptr);

    /// max(1e-11, 1e-2 h^4): tight enough that solver error stays below
    /// the scheme's own O(h^2) error in every squared norm.
    static double default_tolerance(const StaggeredGrid& grid);

private:
    StaggeredGrid grid_;
    FftPoissonSolver poisson_u1_;
    FftPoissonSolver poisson_u2_;
};

}  // namespace stokesmac

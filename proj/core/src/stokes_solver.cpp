#include "stokesmac/stokes_solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "stokesmac/inner_products.hpp"
#include "stokesmac/threading.hpp"

namespace stokesmac {

namespace {

double gamma_dot(const StaggeredGrid& g, const Field& p) {
    // gamma^T p with gamma = h^2 per cell
    double sum = 0.0;
    for (double v : p.values()) sum += v;
    return g.h * g.h * sum;
}

/// g' = g - (boundary-velocity terms of the divergence), so that the
/// homogeneous divergence of the interior unknowns equals g'.
Field lift_divergence_rhs(const StaggeredGrid& g, const Field& gt, const BoundaryTrace& ub1,
                          const BoundaryTrace& ub2) {
    Field out = gt;
    const int n = g.n;
    const double inv_h = 1.0 / g.h;
    auto tr = [](const BoundaryTrace& t, double x, double y) { return t ? t(x, y) : 0.0; };
    for (int b = 0; b < n; ++b) {
        const double y = g.y(GridFamily::CellCenter, b);
        out(0, b) += tr(ub1, g.x0, y) * inv_h;
        out(n - 1, b) -= tr(ub1, g.x0 + g.length, y) * inv_h;
    }
    for (int a = 0; a < n; ++a) {
        const double x = g.x(GridFamily::CellCenter, a);
        out(a, 0) += tr(ub2, x, g.y0) * inv_h;
        out(a, n - 1) -= tr(ub2, x, g.y0 + g.length) * inv_h;
    }
    return out;
}

}  // namespace

double AugmentedSystem::boundary_flux() const {
    const StaggeredGrid& g = grid;
    const int n = g.n;
    auto tr = [](const BoundaryTrace& t, double x, double y) { return t ? t(x, y) : 0.0; };
    double flux = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double y = g.y(GridFamily::VEdge, j);
        flux += g.h * (tr(ub1, g.x0 + g.length, y) - tr(ub1, g.x0, y));
    }
    for (int i = 1; i <= n; ++i) {
        const double x = g.x(GridFamily::HEdge, i);
        flux += g.h * (tr(ub2, x, g.y0 + g.length) - tr(ub2, x, g.y0));
    }
    return flux;
}

AugmentedSystem make_system(const StaggeredGrid& grid, const ProblemSpec& problem) {
    return make_system(grid, problem, assemble_rhs(grid, problem));
}

AugmentedSystem make_system(const StaggeredGrid& grid, const ProblemSpec& problem,
                            const AssemblyResult& assembly) {
    AugmentedSystem sys{grid, assembly.f1, assembly.f2, assembly.g, problem.ub1, problem.ub2,
                        grid.area()};
    return sys;
}

StokesSolver::StokesSolver(const StaggeredGrid& grid)
    : grid_(grid),
      poisson_u1_(grid, GridFamily::VEdge),
      poisson_u2_(grid, GridFamily::HEdge) {}

double StokesSolver::default_tolerance(const StaggeredGrid& grid) {
    const double h4 = grid.h * grid.h * grid.h * grid.h;
    return std::max(1e-11, 1e-2 * h4);
}

Field StokesSolver::schur_apply(const Field& p, double alpha) {
    if (p.family() != GridFamily::CellCenter || p.grid() != grid_)
        throw std::invalid_argument("schur_apply: expected a cell-center field on the grid");
    if (alpha <= 0.0) alpha = grid_.area();

    const Field g1 = grad_to_vedge(p);
    const Field g2 = grad_to_hedge(p);
    Field w1, w2;
    run_pair([&] { w1 = poisson_u1_.solve(g1); }, [&] { w2 = poisson_u2_.solve(g2); });
    Field out = divergence(w1, w2);
    const double pumped = gamma_dot(grid_, p) / alpha * grid_.h * grid_.h;
    for (double& v : out.values()) v = -v + pumped;
    return out;
}

StokesFields StokesSolver::solve(const AugmentedSystem& sys, double rel_tol,
                                 SolverStats* stats) {
    const auto t_start = std::chrono::steady_clock::now();
    const StaggeredGrid& g = grid_;
    const int n = g.n;
    const double alpha = sys.alpha > 0.0 ? sys.alpha : g.area();
    if (rel_tol <= 0.0) rel_tol = default_tolerance(g);

    // lift the traces once; all inner solves are homogeneous afterwards
    Field f1 = sys.f1;
    Field f2 = sys.f2;
    FftPoissonSolver::add_boundary_lift(f1, sys.ub1);
    FftPoissonSolver::add_boundary_lift(f2, sys.ub2);
    const Field g_lifted = lift_divergence_rhs(g, sys.g, sys.ub1, sys.ub2);

    // S p = b with b = g' - div(L^{-1} f'); the solved pair then satisfies
    // div u + gamma lambda = g with lambda = mean(p)
    Field w1, w2;
    run_pair([&] { w1 = poisson_u1_.solve(f1); }, [&] { w2 = poisson_u2_.solve(f2); });
    Field b = divergence(w1, w2);
    {
        auto& bv = b.values();
        const auto& gv = g_lifted.values();
        for (std::size_t k = 0; k < bv.size(); ++k) bv[k] = gv[k] - bv[k];
    }

    // conjugate gradients on S p = b in the M inner product
    Field p(g, GridFamily::CellCenter);
    const double b_norm = space_norm(b, Space::M);
    std::vector<double> history;
    int iters = 0;
    if (b_norm > 0.0) {
        Field r = b;
        Field d = r;
        double rho = inner_product(r, r, Space::M);
        const double stop = rel_tol * b_norm;
        const int max_iters = 10 * n;
        bool converged = std::sqrt(rho) <= stop;
        while (!converged) {
            if (iters >= max_iters) {
                std::ostringstream os;
                os << "Schur CG failed to reach " << rel_tol << " within " << max_iters
                   << " iterations (relative residual "
                   << std::sqrt(rho) / b_norm << ")";
                SolverFailure failure(os.str());
                failure.residual_history = history;
                throw failure;
            }
            Field q = schur_apply(d, alpha);
            const double dq = inner_product(d, q, Space::M);
            const double step = rho / dq;
            auto& pv = p.values();
            auto& rv = r.values();
            const auto& dv = d.values();
            const auto& qv = q.values();
            for (std::size_t k = 0; k < pv.size(); ++k) {
                pv[k] += step * dv[k];
                rv[k] -= step * qv[k];
            }
            const double rho_next = inner_product(r, r, Space::M);
            ++iters;
            history.push_back(std::sqrt(rho_next) / b_norm);
            if (std::sqrt(rho_next) <= stop) {
                rho = rho_next;
                converged = true;
                break;
            }
            const double beta = rho_next / rho;
            rho = rho_next;
            auto& dvm = d.values();
            for (std::size_t k = 0; k < dvm.size(); ++k) dvm[k] = rv[k] + beta * dvm[k];
        }
    }

    // velocity recovery: -lap u = f' - G p, then trace closure for output
    const Field gp1 = grad_to_vedge(p);
    const Field gp2 = grad_to_hedge(p);
    Field rhs1 = f1, rhs2 = f2;
    {
        auto& r1 = rhs1.values();
        const auto& gp = gp1.values();
        for (std::size_t k = 0; k < r1.size(); ++k) r1[k] -= gp[k];
        auto& r2 = rhs2.values();
        const auto& gq = gp2.values();
        for (std::size_t k = 0; k < r2.size(); ++k) r2[k] -= gq[k];
    }
    StokesFields sol{Field(g, GridFamily::VEdge), Field(g, GridFamily::HEdge), p, 0.0};
    run_pair([&] { sol.u1 = poisson_u1_.solve(rhs1); },
             [&] { sol.u2 = poisson_u2_.solve(rhs2); });
    apply_ghost_closure_inplace(sol.u1, sys.ub1);
    apply_ghost_closure_inplace(sol.u2, sys.ub2);
    sol.lambda = gamma_dot(g, p) / alpha;

    if (stats) {
        stats->cg_iterations = iters;
        stats->cg_relative_residual = history.empty() ? 0.0 : history.back();
        stats->lambda = sol.lambda;
        stats->compatibility_defect = std::abs(sys.boundary_flux());
        // residuals of the augmented system rows with the final fields
        const Field lap1 = laplacian(sol.u1);
        const Field lap2 = laplacian(sol.u2);
        Field r1(g, GridFamily::VEdge), r2(g, GridFamily::HEdge);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n; ++j)
                r1(i, j) = -lap1(i, j) + gp1(i, j) - sys.f1(i, j);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n - 1; ++j)
                r2(i, j) = -lap2(i, j) + gp2(i, j) - sys.f2(i, j);
        stats->momentum_residual = std::sqrt(inner_product(r1, r1, Space::V1) +
                                             inner_product(r2, r2, Space::V2));
        Field rdiv = divergence(sol.u1, sol.u2);
        const double gl = sol.lambda * g.h * g.h;
        for (int a = 0; a < n; ++a)
            for (int b2 = 0; b2 < n; ++b2) rdiv(a, b2) -= sys.g(a, b2) - gl;
        stats->divergence_residual = space_norm(rdiv, Space::M);
        stats->seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    }
    return sol;
}

}  // namespace stokesmac

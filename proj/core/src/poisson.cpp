#include "stokesmac/poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace stokesmac {

namespace {
// FFTW planning is not thread safe; executing distinct plans is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct FftPoissonSolver::Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    ~Plans() {
        std::lock_guard<std::mutex> lock(plan_mutex());
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }
};

FftPoissonSolver::FftPoissonSolver(const StaggeredGrid& grid, GridFamily family)
    : grid_(grid), family_(family), plans_(std::make_unique<Plans>()) {
    if (family != GridFamily::VEdge && family != GridFamily::HEdge)
        throw std::invalid_argument("FftPoissonSolver: velocity families only");
    const int n = grid.n;
    mx_ = family == GridFamily::VEdge ? n - 1 : n;
    my_ = family == GridFamily::VEdge ? n : n - 1;
    buf_.assign(static_cast<std::size_t>(mx_) * my_, 0.0);

    const double inv_h2 = 1.0 / (grid.h * grid.h);
    auto eigenvalue = [&](int mode) {
        return (2.0 - 2.0 * std::cos(mode * std::numbers::pi / n)) * inv_h2;
    };
    eig_x_.resize(mx_);
    eig_y_.resize(my_);
    for (int k = 0; k < mx_; ++k) eig_x_[k] = eigenvalue(k + 1);
    for (int k = 0; k < my_; ++k) eig_y_[k] = eigenvalue(k + 1);

    // x is the slow dimension of the buffer
    const fftw_r2r_kind fx = family == GridFamily::VEdge ? FFTW_RODFT00 : FFTW_RODFT10;
    const fftw_r2r_kind fy = family == GridFamily::VEdge ? FFTW_RODFT10 : FFTW_RODFT00;
    const fftw_r2r_kind bx = family == GridFamily::VEdge ? FFTW_RODFT00 : FFTW_RODFT01;
    const fftw_r2r_kind by = family == GridFamily::VEdge ? FFTW_RODFT01 : FFTW_RODFT00;
    std::lock_guard<std::mutex> lock(plan_mutex());
    plans_->forward =
        fftw_plan_r2r_2d(mx_, my_, buf_.data(), buf_.data(), fx, fy, FFTW_ESTIMATE);
    plans_->backward =
        fftw_plan_r2r_2d(mx_, my_, buf_.data(), buf_.data(), bx, by, FFTW_ESTIMATE);
    if (!plans_->forward || !plans_->backward)
        throw std::runtime_error("FftPoissonSolver: planning failed");
}

FftPoissonSolver::~FftPoissonSolver() = default;

Field FftPoissonSolver::solve(const Field& rhs) {
    if (rhs.family() != family_ || rhs.grid() != grid_)
        throw std::invalid_argument("FftPoissonSolver: rhs family/grid mismatch");
    for (int i = 0; i < mx_; ++i)
        for (int j = 0; j < my_; ++j)
            buf_[static_cast<std::size_t>(i) * my_ + j] = rhs(i + 1, j + 1);

    fftw_execute(plans_->forward);
    // both transform pairs scale by 2N per axis
    const double norm = 1.0 / (4.0 * static_cast<double>(grid_.n) * grid_.n);
    for (int k = 0; k < mx_; ++k)
        for (int l = 0; l < my_; ++l)
            buf_[static_cast<std::size_t>(k) * my_ + l] *= norm / (eig_x_[k] + eig_y_[l]);
    fftw_execute(plans_->backward);

    Field out(grid_, family_);
    for (int i = 0; i < mx_; ++i)
        for (int j = 0; j < my_; ++j)
            out(i + 1, j + 1) = buf_[static_cast<std::size_t>(i) * my_ + j];
    return out;
}

void FftPoissonSolver::add_boundary_lift(Field& rhs, const BoundaryTrace& trace) {
    if (!trace) return;
    const StaggeredGrid& g = rhs.grid();
    const int n = g.n;
    const double inv_h2 = 1.0 / (g.h * g.h);
    const GridFamily fam = rhs.family();
    if (fam == GridFamily::VEdge) {
        for (int j = 1; j <= n; ++j) {
            const double y = g.y(fam, j);
            rhs(1, j) += trace(g.x0, y) * inv_h2;
            rhs(n - 1, j) += trace(g.x0 + g.length, y) * inv_h2;
        }
        for (int i = 1; i <= n - 1; ++i) {
            const double x = g.x(fam, i);
            rhs(i, 1) += 2.0 * trace(x, g.y0) * inv_h2;
            rhs(i, n) += 2.0 * trace(x, g.y0 + g.length) * inv_h2;
        }
    } else if (fam == GridFamily::HEdge) {
        for (int i = 1; i <= n; ++i) {
            const double x = g.x(fam, i);
            rhs(i, 1) += trace(x, g.y0) * inv_h2;
            rhs(i, n - 1) += trace(x, g.y0 + g.length) * inv_h2;
        }
        for (int j = 1; j <= n - 1; ++j) {
            const double y = g.y(fam, j);
            rhs(1, j) += 2.0 * trace(g.x0, y) * inv_h2;
            rhs(n, j) += 2.0 * trace(g.x0 + g.length, y) * inv_h2;
        }
    } else {
        throw std::invalid_argument("add_boundary_lift: velocity families only");
    }
}

Eigen::MatrixXd dense_neg_laplacian_matrix(const StaggeredGrid& grid, GridFamily family) {
    if (family != GridFamily::VEdge && family != GridFamily::HEdge)
        throw std::invalid_argument("dense_neg_laplacian_matrix: velocity families only");
    const int n = grid.n;
    const int mx = family == GridFamily::VEdge ? n - 1 : n;
    const int my = family == GridFamily::VEdge ? n : n - 1;
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    const auto dof = [my](int i, int j) { return i * my + j; };

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(mx * my, mx * my);
    for (int i = 0; i < mx; ++i) {
        for (int j = 0; j < my; ++j) {
            const int row = dof(i, j);
            double diag = 4.0;
            // node-Dirichlet axis: missing neighbours are zero
            if (family == GridFamily::VEdge) {
                if (i > 0) A(row, dof(i - 1, j)) -= 1.0;
                if (i < mx - 1) A(row, dof(i + 1, j)) -= 1.0;
                // ghost axis: anti-reflection folds into the diagonal
                if (j > 0) A(row, dof(i, j - 1)) -= 1.0; else diag += 1.0;
                if (j < my - 1) A(row, dof(i, j + 1)) -= 1.0; else diag += 1.0;
            } else {
                if (i > 0) A(row, dof(i - 1, j)) -= 1.0; else diag += 1.0;
                if (i < mx - 1) A(row, dof(i + 1, j)) -= 1.0; else diag += 1.0;
                if (j > 0) A(row, dof(i, j - 1)) -= 1.0;
                if (j < my - 1) A(row, dof(i, j + 1)) -= 1.0;
            }
            A(row, row) += diag;
        }
    }
    return inv_h2 * A;
}

Field dense_poisson_solve(const StaggeredGrid& grid, GridFamily family, const Field& rhs) {
    if (grid.n > 16)
        throw std::invalid_argument("dense_poisson_solve: oracle path is limited to N <= 16");
    const int n = grid.n;
    const int mx = family == GridFamily::VEdge ? n - 1 : n;
    const int my = family == GridFamily::VEdge ? n : n - 1;
    Eigen::VectorXd b(mx * my);
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < my; ++j) b[i * my + j] = rhs(i + 1, j + 1);
    const Eigen::MatrixXd A = dense_neg_laplacian_matrix(grid, family);
    const Eigen::VectorXd x = A.partialPivLu().solve(b);
    Field out(grid, family);
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < my; ++j) out(i + 1, j + 1) = x[i * my + j];
    return out;
}

}  // namespace stokesmac

#include "stokesmac/study.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include "stokesmac/inner_products.hpp"
#include "stokesmac/threading.hpp"

namespace stokesmac {

namespace {

std::string fmt6e(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

double reparse6e(double v) { return std::strtod(fmt6e(v).c_str(), nullptr); }

}  // namespace

LevelResult measure_level(const ProblemSpec& problem, const StaggeredGrid& grid,
                          const StokesFields& sol, const SolverStats& stats) {
    if (!problem.has_exact())
        throw std::invalid_argument("measure_level: problem has no exact solution");
    const Field U1 = sample_exact_u1(problem, grid);
    const Field U2 = sample_exact_u2(problem, grid);
    Field P = sample_exact_p(problem, grid);

    Field e1(grid, GridFamily::VEdge), e2(grid, GridFamily::HEdge);
    for (std::size_t k = 0; k < e1.values().size(); ++k)
        e1.values()[k] = sol.u1.values()[k] - U1.values()[k];
    for (std::size_t k = 0; k < e2.values().size(); ++k)
        e2.values()[k] = sol.u2.values()[k] - U2.values()[k];

    // pressure is defined up to a constant: compare the zero-mean parts
    Field ph = sol.p;
    shift_to_zero_mean(ph);
    shift_to_zero_mean(P);
    Field ep(grid, GridFamily::CellCenter);
    for (std::size_t k = 0; k < ep.values().size(); ++k)
        ep.values()[k] = ph.values()[k] - P.values()[k];

    const VelocityNorms err = norms(e1, e2, ep);
    const VelocityNorms ref = norms(U1, U2, P);
    auto scaled = [](double e, double r) { return r > 0.0 ? e / r : e; };

    LevelResult out;
    out.n = grid.n;
    out.eu_l2 = scaled(err.l2_u, ref.l2_u);
    out.ep_l2 = scaled(err.l2_p, ref.l2_p);
    out.eu_h1 = scaled(err.h1_semi_u, ref.h1_semi_u);
    out.eu_max = scaled(err.max_u, ref.max_u);
    out.eu_gradmax = scaled(err.max_grad_u, ref.max_grad_u);
    out.stats = stats;
    return out;
}

LevelResult run_level(const ProblemSpec& problem, int n, double tol) {
    const StaggeredGrid grid = problem.make_grid(n);
    const AugmentedSystem sys = make_system(grid, problem);
    StokesSolver solver(grid);
    SolverStats stats;
    const StokesFields sol = solver.solve(sys, tol, &stats);
    return measure_level(problem, grid, sol, stats);
}

ConvergenceReport run_study(const ProblemSpec& problem, const std::vector<int>& levels,
                            const StudyOptions& options) {
    ConvergenceReport report;
    report.problem = problem.name;
    for (int n : levels) {
        if (n > 512 && !options.allow_large)
            throw std::invalid_argument(
                "levels above 512 are gated; pass the large-grid flag to enable them");
    }
    if (options.parallel_levels && max_threads() > 1) {
        std::vector<std::future<LevelResult>> futures;
        futures.reserve(levels.size());
        for (int n : levels)
            futures.push_back(std::async(std::launch::async, [&problem, n, &options] {
                return run_level(problem, n, options.tol);
            }));
        for (auto& f : futures) {
            try {
                report.levels.push_back(f.get());
            } catch (const std::exception& e) {
                report.error = e.what();
                break;
            }
        }
    } else {
        for (int n : levels) {
            try {
                report.levels.push_back(run_level(problem, n, options.tol));
            } catch (const std::exception& e) {
                report.error = e.what();
                break;
            }
        }
    }
    return report;
}

namespace {

struct OrderColumns {
    // order against the previous level, per error column; NaN when undefined
    double eu, ep, h1, mx, gmx;
};

std::vector<OrderColumns> orders_from_printed(const ConvergenceReport& r) {
    std::vector<OrderColumns> out(r.levels.size(),
                                  OrderColumns{NAN, NAN, NAN, NAN, NAN});
    for (std::size_t k = 1; k < r.levels.size(); ++k) {
        const LevelResult& a = r.levels[k - 1];
        const LevelResult& b = r.levels[k];
        if (b.n != 2 * a.n) continue;
        auto ord = [](double coarse, double fine) {
            coarse = reparse6e(coarse);
            fine = reparse6e(fine);
            return (coarse > 0 && fine > 0) ? std::log2(coarse / fine) : NAN;
        };
        out[k] = {ord(a.eu_l2, b.eu_l2), ord(a.ep_l2, b.ep_l2), ord(a.eu_h1, b.eu_h1),
                  ord(a.eu_max, b.eu_max), ord(a.eu_gradmax, b.eu_gradmax)};
    }
    return out;
}

std::string fmt_order(double v) { return std::isnan(v) ? std::string() : fmt6e(v); }

}  // namespace

std::string emit(const ConvergenceReport& report, ReportFormat format, bool include_timing) {
    const auto orders = orders_from_printed(report);
    std::ostringstream os;
    if (format == ReportFormat::Csv) {
        os << "N,eu_l2,order,ep_l2,order,eu_h1,order,eu_max,order,eu_gradmax,order,"
              "cg_iters,seconds\n";
        for (std::size_t k = 0; k < report.levels.size(); ++k) {
            const LevelResult& L = report.levels[k];
            const OrderColumns& o = orders[k];
            os << L.n << ',' << fmt6e(L.eu_l2) << ',' << fmt_order(o.eu) << ','
               << fmt6e(L.ep_l2) << ',' << fmt_order(o.ep) << ',' << fmt6e(L.eu_h1) << ','
               << fmt_order(o.h1) << ',' << fmt6e(L.eu_max) << ',' << fmt_order(o.mx) << ','
               << fmt6e(L.eu_gradmax) << ',' << fmt_order(o.gmx) << ','
               << L.stats.cg_iterations << ',';
            if (include_timing) os << fmt6e(L.stats.seconds);
            os << '\n';
        }
        return os.str();
    }

    // plain table
    os << "problem: " << report.problem << '\n';
    char line[256];
    std::snprintf(line, sizeof line, "%6s  %12s %6s  %12s %6s  %12s %6s  %12s %6s  %12s %6s  %5s\n",
                  "N", "|e_u|", "ord", "|e_p|", "ord", "|e_u|_1", "ord", "|e_u|_inf", "ord",
                  "|e_u|_1inf", "ord", "cg");
    os << line;
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
        const LevelResult& L = report.levels[k];
        const OrderColumns& o = orders[k];
        auto short_ord = [](double v) {
            if (std::isnan(v)) return std::string("-");
            char b[16];
            std::snprintf(b, sizeof b, "%.2f", v);
            return std::string(b);
        };
        std::snprintf(line, sizeof line,
                      "%6d  %12.4e %6s  %12.4e %6s  %12.4e %6s  %12.4e %6s  %12.4e %6s  %5d\n",
                      L.n, L.eu_l2, short_ord(o.eu).c_str(), L.ep_l2, short_ord(o.ep).c_str(),
                      L.eu_h1, short_ord(o.h1).c_str(), L.eu_max, short_ord(o.mx).c_str(),
                      L.eu_gradmax, short_ord(o.gmx).c_str(), L.stats.cg_iterations);
        os << line;
    }
    if (!report.error.empty()) os << "aborted: " << report.error << '\n';
    return os.str();
}

ConvergenceReport parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("N,eu_l2,order", 0) != 0)
        throw std::invalid_argument("parse_csv: missing header");
    ConvergenceReport report;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        while (cells.size() < 13) cells.emplace_back();
        LevelResult L;
        L.n = std::stoi(cells[0]);
        L.eu_l2 = std::strtod(cells[1].c_str(), nullptr);
        L.ep_l2 = std::strtod(cells[3].c_str(), nullptr);
        L.eu_h1 = std::strtod(cells[5].c_str(), nullptr);
        L.eu_max = std::strtod(cells[7].c_str(), nullptr);
        L.eu_gradmax = std::strtod(cells[9].c_str(), nullptr);
        L.stats.cg_iterations = cells[11].empty() ? 0 : std::stoi(cells[11]);
        L.stats.seconds = cells[12].empty() ? 0.0 : std::strtod(cells[12].c_str(), nullptr);
        report.levels.push_back(L);
    }
    return report;
}

}  // namespace stokesmac

/// Built-in manufactured interface problems and the general problem record.
///
/// A problem carries the domain, the interface curve, the piecewise
/// forcing, the interface data (traction jump, its arc derivative and the
/// forcing jump, as functions of the curve parameter), the boundary trace,
/// and optionally the exact piecewise solution with derivatives through
/// second order. For the built-ins everything is derived from hand-coded
/// exact fields; validate() cross-checks the encoded identities.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "stokesmac/grid.hpp"
#include "stokesmac/interface_curve.hpp"
#include "stokesmac/jumps.hpp"

namespace stokesmac {

using ScalarField = std::function<double(double x, double y)>;

struct SideFields {
    ScalarField u1, u2, p;
    ScalarField u1_x, u1_y, u2_x, u2_y;
    ScalarField u1_xx, u1_xy, u1_yy;
    ScalarField u2_xx, u2_xy, u2_yy;
    ScalarField p_x, p_y;
};

struct ExactSolution {
    SideFields plus;   // bounded interior region
    SideFields minus;  // exterior
};

struct Rect {
    double x0 = 0.0, y0 = 0.0, length = 1.0;  // square domain
};

struct InvalidProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemSpec {
    std::string name;
    Rect domain;
    double mu = 1.0;
    std::shared_ptr<const InterfaceCurve> curve;  // null: no interface
    std::optional<ExactSolution> exact;
    ScalarField f1_plus, f1_minus, f2_plus, f2_minus;
    InterfaceData interface_data;
    ScalarField ub1, ub2;  // boundary trace (defaults to zero)

    double side(double x, double y) const {
        return (!curve || curve->classify({x, y}) >= 0.0) ? 1.0 : -1.0;
    }
    double f1(double x, double y) const;
    double f2(double x, double y) const;
    bool has_exact() const { return exact.has_value(); }
    double exact_u1(double x, double y) const;
    double exact_u2(double x, double y) const;
    double exact_p(double x, double y) const;

    StaggeredGrid make_grid(int n) const { return {n, domain.x0, domain.y0, domain.length}; }
};

/// Builds forcing, interface data and boundary trace from exact fields.
ProblemSpec make_manufactured(std::string name, Rect domain, double mu,
                              std::shared_ptr<const InterfaceCurve> curve,
                              ExactSolution exact);

/// Circular interface of radius 1 centered in a (-2,2)^2 box; the pressure
/// is constant inside and cubic outside, the velocity field is tangential
/// with a 1/r profile outside.
ProblemSpec circle_problem();

/// Elliptic interface x^2 + 4 y^2 = 1 in the same box.
ProblemSpec ellipse_problem();

/// Smooth divergence-free field on the unit square, no jumps. With
/// with_zero_jump_interface a circle is embedded but both sides carry the
/// same fields, so every jump vanishes identically.
ProblemSpec smooth_problem(bool with_zero_jump_interface = false);

/// Lookup by CLI name ("circle", "ellipse", "smooth"); throws on unknown.
ProblemSpec problem_by_name(const std::string& name);

struct ValidationReport {
    double max_velocity_jump = 0.0;   // [[u]] on the curve
    double max_divergence = 0.0;      // per-side div u at sample points
    double max_traction_dev = 0.0;    // psi vs stress jump of exact fields
    double max_forcing_jump_dev = 0.0;  // f_jump vs [[f]] of encoded forcing
};

/// Checks the ProblemSpec identities at sampled points; throws
/// InvalidProblemError naming the failed identity above 1e-8.
ValidationReport validate(const ProblemSpec& spec);

/// Max deviation between the encoded forcing and -mu lap(u) + grad(p)
/// reconstructed from the exact u, p closures by 5-point finite
/// differences (step 1e-4) at `samples` random points per side.
double max_forcing_fd_deviation(const ProblemSpec& spec, int samples = 200,
                                unsigned seed = 20240901);

/// Same idea for the encoded derivative closures against differences of
/// the value closures.
double max_derivative_fd_deviation(const ProblemSpec& spec, int samples = 200,
                                   unsigned seed = 20240902);

/// Traction jump of an exact solution at curve parameter t (oracle path).
Vec2 exact_traction_jump(const ExactSolution& exact, const InterfaceCurve& curve, double t,
                         double mu);

/// Samples a piecewise scalar over all storage points of a family
/// (ghost entries included, marked valid for velocity families).
Field sample_field(const StaggeredGrid& grid, GridFamily family, const ScalarField& plus,
                   const ScalarField& minus, const InterfaceCurve* curve);
Field sample_exact_u1(const ProblemSpec& spec, const StaggeredGrid& grid);
Field sample_exact_u2(const ProblemSpec& spec, const StaggeredGrid& grid);
Field sample_exact_p(const ProblemSpec& spec, const StaggeredGrid& grid);

}  // namespace stokesmac

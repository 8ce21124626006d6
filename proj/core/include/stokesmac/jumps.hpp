/// Interface jumps of the solution derivatives, recovered pointwise from
/// the prescribed data by two dense solves.
///
/// At a curve point, tangential differentiation of the velocity-continuity
/// condition, the traction-jump components, and the divergence jump close
/// a 5x5 system for the first-derivative jumps of the velocity and the
/// pressure jump. Differentiating those identities once more along the
/// curve and jumping the momentum balance closes an 8x8 system for the
/// second-derivative velocity jumps and the pressure-gradient jumps.
/// Jump orientation is plus-side minus minus-side throughout.

#pragma once

#include <functional>
#include <vector>

#include "stokesmac/geometry.hpp"
#include "stokesmac/interface_curve.hpp"

namespace stokesmac {

/// Data prescribed along the interface, as functions of the curve
/// parameter. psi_s is the arclength derivative of psi; when absent it is
/// approximated by centered differences in the parameter (documented
/// accuracy loss for user problems).
struct InterfaceData {
    std::function<Vec2(double t)> psi;     // traction jump
    std::function<Vec2(double t)> psi_s;   // d(psi)/ds, optional
    std::function<Vec2(double t)> f_jump;  // ([[f1]], [[f2]]), optional (0)
    double mu = 1.0;
};

struct JumpSet {
    // first-order block ([[u1]] = [[u2]] = 0 identically)
    double u1_x = 0, u1_y = 0, u2_x = 0, u2_y = 0, p = 0;
    // second-order block
    double u1_xx = 0, u1_xy = 0, u1_yy = 0;
    double u2_xx = 0, u2_xy = 0, u2_yy = 0;
    double p_x = 0, p_y = 0;
    // back-substitution residuals (max norm) of the two solves
    double residual_first = 0, residual_second = 0;

    double velocity_jump(int component, Axis axis) const;   // first order
    double velocity_jump2(int component, Axis axis) const;  // second, axis twice
    double pressure_grad_jump(Axis axis) const;
};

/// First-order block from the local frame and the traction jump.
JumpSet solve_first_order(const LocalFrame& frame, Vec2 psi, double mu = 1.0);

/// Fills the second-order block; the first-order block must be solved at
/// the same curve point.
void solve_second_order(const LocalFrame& frame, Vec2 psi_s, Vec2 f_jump, JumpSet& jumps,
                        double mu = 1.0);

/// Both stages at curve parameter t.
JumpSet solve_jumps_at(const InterfaceCurve& curve, const InterfaceData& data, double t);

/// JumpSet per crossing, aligned with the input order (which the geometry
/// layer makes deterministic). Solver failures are rethrown with the
/// crossing location attached.
std::vector<JumpSet> jump_table(const InterfaceCurve& curve, const InterfaceData& data,
                                const std::vector<Crossing>& crossings);

}  // namespace stokesmac

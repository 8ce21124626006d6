#include "stokesmac/jumps.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stokesmac {

double JumpSet::velocity_jump(int component, Axis axis) const {
    if (component == 1) return axis == Axis::X ? u1_x : u1_y;
    return axis == Axis::X ? u2_x : u2_y;
}

double JumpSet::velocity_jump2(int component, Axis axis) const {
    if (component == 1) return axis == Axis::X ? u1_xx : u1_yy;
    return axis == Axis::X ? u2_xx : u2_yy;
}

double JumpSet::pressure_grad_jump(Axis axis) const { return axis == Axis::X ? p_x : p_y; }

JumpSet solve_first_order(const LocalFrame& frame, Vec2 psi, double mu) {
    const double tx = frame.tangent.x, ty = frame.tangent.y;
    const double n1 = frame.normal.x, n2 = frame.normal.y;

    Eigen::Matrix<double, 5, 5> A;
    Eigen::Matrix<double, 5, 1> r;
    // unknowns: [[u1_x]], [[u1_y]], [[u2_x]], [[u2_y]], [[p]]
    A << tx, ty, 0, 0, 0,                              // tangential continuity of u1
        0, 0, tx, ty, 0,                               // tangential continuity of u2
        2 * mu * n1, mu * n2, mu * n2, 0, -n1,         // traction jump, 1st component
        0, mu * n1, mu * n1, 2 * mu * n2, -n2,         // traction jump, 2nd component
        1, 0, 0, 1, 0;                                 // divergence jump
    r << 0, 0, psi.x, psi.y, 0;

    Eigen::Matrix<double, 5, 1> x = A.partialPivLu().solve(r);
    const double res = (A * x - r).cwiseAbs().maxCoeff();
    const double psi_mag = std::sqrt(psi.x * psi.x + psi.y * psi.y);
    if (!(res <= 1e-12 * (1.0 + psi_mag))) {
        std::ostringstream os;
        os << "first-order jump system ill-conditioned: residual " << res << ", tangent ("
           << tx << ", " << ty << "), normal (" << n1 << ", " << n2 << ")";
        throw std::runtime_error(os.str());
    }
    JumpSet j;
    j.u1_x = x[0];
    j.u1_y = x[1];
    j.u2_x = x[2];
    j.u2_y = x[3];
    j.p = x[4];
    j.residual_first = res;
    return j;
}

void solve_second_order(const LocalFrame& frame, Vec2 psi_s, Vec2 f_jump, JumpSet& j,
                        double mu) {
    const double tx = frame.tangent.x, ty = frame.tangent.y;
    const double sx = frame.second.x, sy = frame.second.y;
    const double n1 = frame.normal.x, n2 = frame.normal.y;
    const double n1s = frame.normal_s.x, n2s = frame.normal_s.y;

    Eigen::Matrix<double, 8, 8> A;
    Eigen::Matrix<double, 8, 1> r;
    // unknowns: [[u1_xx]] [[u1_xy]] [[u1_yy]] [[u2_xx]] [[u2_xy]] [[u2_yy]] [[p_x]] [[p_y]]
    A << 1, 0, 0, 0, 1, 0, 0, 0,
        0, 1, 0, 0, 0, 1, 0, 0,
        -mu, 0, -mu, 0, 0, 0, 1, 0,
        0, 0, 0, -mu, 0, -mu, 0, 1,
        tx * tx, 2 * tx * ty, ty * ty, 0, 0, 0, 0, 0,
        0, 0, 0, tx * tx, 2 * tx * ty, ty * ty, 0, 0,
        2 * mu * n1 * tx, mu * (2 * n1 * ty + n2 * tx), mu * n2 * ty, mu * n2 * tx,
        mu * n2 * ty, 0, -n1 * tx, -n1 * ty,
        0, mu * n1 * tx, mu * n1 * ty, mu * n1 * tx, mu * (n1 * ty + 2 * n2 * tx),
        2 * mu * n2 * ty, -n2 * tx, -n2 * ty;
    r << 0, 0, f_jump.x, f_jump.y,
        -j.u1_x * sx - j.u1_y * sy,
        -j.u2_x * sx - j.u2_y * sy,
        psi_s.x - 2 * mu * j.u1_x * n1s - mu * (j.u1_y + j.u2_x) * n2s + j.p * n1s,
        psi_s.y - mu * (j.u2_x + j.u1_y) * n1s - 2 * mu * j.u2_y * n2s + j.p * n2s;

    const auto svd = A.jacobiSvd();
    const double cond =
        svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (!(cond < 1e12)) {
        std::ostringstream os;
        os << "second-order jump system ill-conditioned (cond " << cond << ")";
        throw std::runtime_error(os.str());
    }
    Eigen::Matrix<double, 8, 1> x = A.partialPivLu().solve(r);
    const double res = (A * x - r).cwiseAbs().maxCoeff();
    const double rhs_mag = r.cwiseAbs().maxCoeff();
    if (!(res <= 1e-10 * (1.0 + rhs_mag))) {
        std::ostringstream os;
        os << "second-order jump system residual " << res << " exceeds tolerance";
        throw std::runtime_error(os.str());
    }
    j.u1_xx = x[0];
    j.u1_xy = x[1];
    j.u1_yy = x[2];
    j.u2_xx = x[3];
    j.u2_xy = x[4];
    j.u2_yy = x[5];
    j.p_x = x[6];
    j.p_y = x[7];
    j.residual_second = res;
}

JumpSet solve_jumps_at(const InterfaceCurve& curve, const InterfaceData& data, double t) {
    const LocalFrame frame = curve.frame(t);
    const Vec2 psi = data.psi ? data.psi(t) : Vec2{};
    JumpSet j = solve_first_order(frame, psi, data.mu);

    Vec2 psi_s{};
    if (data.psi_s) {
        psi_s = data.psi_s(t);
    } else if (data.psi) {
        psi_s.x = curve.arc_derivative([&](double s) { return data.psi(s).x; }, t);
        psi_s.y = curve.arc_derivative([&](double s) { return data.psi(s).y; }, t);
    }
    const Vec2 fj = data.f_jump ? data.f_jump(t) : Vec2{};
    solve_second_order(frame, psi_s, fj, j, data.mu);
    return j;
}

std::vector<JumpSet> jump_table(const InterfaceCurve& curve, const InterfaceData& data,
                                const std::vector<Crossing>& crossings) {
    std::vector<JumpSet> table;
    table.reserve(crossings.size());
    for (const Crossing& c : crossings) {
        try {
            table.push_back(solve_jumps_at(curve, data, c.t));
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << e.what() << " at crossing (" << c.point.x << ", " << c.point.y << ")";
            throw std::runtime_error(os.str());
        }
    }
    return table;
}

}  // namespace stokesmac

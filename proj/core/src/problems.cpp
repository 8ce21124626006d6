#include "stokesmac/problems.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stokesmac {

namespace {
constexpr double kPi = std::numbers::pi;

struct JumpOfExact {
    // first derivatives and p
    double u1_x, u1_y, u2_x, u2_y, p;
    // second derivatives and grad p
    double u1_xx, u1_xy, u1_yy, u2_xx, u2_xy, u2_yy, p_x, p_y;
};

JumpOfExact jumps_of_exact(const ExactSolution& e, Vec2 X) {
    auto d = [&](const ScalarField& plus, const ScalarField& minus) {
        return plus(X.x, X.y) - minus(X.x, X.y);
    };
    JumpOfExact j;
    j.u1_x = d(e.plus.u1_x, e.minus.u1_x);
    j.u1_y = d(e.plus.u1_y, e.minus.u1_y);
    j.u2_x = d(e.plus.u2_x, e.minus.u2_x);
    j.u2_y = d(e.plus.u2_y, e.minus.u2_y);
    j.p = d(e.plus.p, e.minus.p);
    j.u1_xx = d(e.plus.u1_xx, e.minus.u1_xx);
    j.u1_xy = d(e.plus.u1_xy, e.minus.u1_xy);
    j.u1_yy = d(e.plus.u1_yy, e.minus.u1_yy);
    j.u2_xx = d(e.plus.u2_xx, e.minus.u2_xx);
    j.u2_xy = d(e.plus.u2_xy, e.minus.u2_xy);
    j.u2_yy = d(e.plus.u2_yy, e.minus.u2_yy);
    j.p_x = d(e.plus.p_x, e.minus.p_x);
    j.p_y = d(e.plus.p_y, e.minus.p_y);
    return j;
}

ScalarField side_forcing_1(const SideFields& s, double mu) {
    return [=](double x, double y) {
        return -mu * (s.u1_xx(x, y) + s.u1_yy(x, y)) + s.p_x(x, y);
    };
}

ScalarField side_forcing_2(const SideFields& s, double mu) {
    return [=](double x, double y) {
        return -mu * (s.u2_xx(x, y) + s.u2_yy(x, y)) + s.p_y(x, y);
    };
}

}  // namespace

double ProblemSpec::f1(double x, double y) const {
    return side(x, y) > 0.0 ? f1_plus(x, y) : f1_minus(x, y);
}

double ProblemSpec::f2(double x, double y) const {
    return side(x, y) > 0.0 ? f2_plus(x, y) : f2_minus(x, y);
}

double ProblemSpec::exact_u1(double x, double y) const {
    const SideFields& s = side(x, y) > 0.0 ? exact->plus : exact->minus;
    return s.u1(x, y);
}

double ProblemSpec::exact_u2(double x, double y) const {
    const SideFields& s = side(x, y) > 0.0 ? exact->plus : exact->minus;
    return s.u2(x, y);
}

double ProblemSpec::exact_p(double x, double y) const {
    const SideFields& s = side(x, y) > 0.0 ? exact->plus : exact->minus;
    return s.p(x, y);
}

Vec2 exact_traction_jump(const ExactSolution& exact, const InterfaceCurve& curve, double t,
                         double mu) {
    const Vec2 X = curve.position(t);
    const LocalFrame fr = curve.frame(t);
    const JumpOfExact j = jumps_of_exact(exact, X);
    const double n1 = fr.normal.x, n2 = fr.normal.y;
    return {2 * mu * j.u1_x * n1 + mu * (j.u1_y + j.u2_x) * n2 - j.p * n1,
            mu * (j.u2_x + j.u1_y) * n1 + 2 * mu * j.u2_y * n2 - j.p * n2};
}

ProblemSpec make_manufactured(std::string name, Rect domain, double mu,
                              std::shared_ptr<const InterfaceCurve> curve,
                              ExactSolution exact) {
    ProblemSpec spec;
    spec.name = std::move(name);
    spec.domain = domain;
    spec.mu = mu;
    spec.curve = std::move(curve);
    spec.f1_plus = side_forcing_1(exact.plus, mu);
    spec.f1_minus = side_forcing_1(exact.minus, mu);
    spec.f2_plus = side_forcing_2(exact.plus, mu);
    spec.f2_minus = side_forcing_2(exact.minus, mu);
    spec.ub1 = exact.minus.u1;  // the boundary is in the exterior region
    spec.ub2 = exact.minus.u2;

    if (spec.curve) {
        const InterfaceCurve* cv = spec.curve.get();
        const ExactSolution ex = exact;  // captured by value below
        const double m = mu;
        spec.interface_data.mu = mu;
        spec.interface_data.psi = [cv, ex, m](double t) {
            return exact_traction_jump(ex, *cv, t, m);
        };
        spec.interface_data.psi_s = [cv, ex, m](double t) {
            const Vec2 X = cv->position(t);
            const LocalFrame fr = cv->frame(t);
            const JumpOfExact j = jumps_of_exact(ex, X);
            const double tx = fr.tangent.x, ty = fr.tangent.y;
            const double n1 = fr.normal.x, n2 = fr.normal.y;
            const double n1s = fr.normal_s.x, n2s = fr.normal_s.y;
            // chain rule along the curve for each jump
            const double du1x = j.u1_xx * tx + j.u1_xy * ty;
            const double du1y = j.u1_xy * tx + j.u1_yy * ty;
            const double du2x = j.u2_xx * tx + j.u2_xy * ty;
            const double du2y = j.u2_xy * tx + j.u2_yy * ty;
            const double dp = j.p_x * tx + j.p_y * ty;
            return Vec2{2 * m * (du1x * n1 + j.u1_x * n1s) +
                            m * ((du1y + du2x) * n2 + (j.u1_y + j.u2_x) * n2s) -
                            dp * n1 - j.p * n1s,
                        m * ((du2x + du1y) * n1 + (j.u2_x + j.u1_y) * n1s) +
                            2 * m * (du2y * n2 + j.u2_y * n2s) - dp * n2 - j.p * n2s};
        };
        const ScalarField f1p = spec.f1_plus, f1m = spec.f1_minus;
        const ScalarField f2p = spec.f2_plus, f2m = spec.f2_minus;
        spec.interface_data.f_jump = [cv, f1p, f1m, f2p, f2m](double t) {
            const Vec2 X = cv->position(t);
            return Vec2{f1p(X.x, X.y) - f1m(X.x, X.y), f2p(X.x, X.y) - f2m(X.x, X.y)};
        };
    }
    spec.exact = std::move(exact);
    return spec;
}

ProblemSpec circle_problem() {
    ExactSolution e;
    // interior: u = (y (x^2+y^2)/4, -x y^2 / 4), p = 5
    e.plus.u1 = [](double x, double y) { return 0.25 * y * (x * x + y * y); };
    e.plus.u1_x = [](double x, double y) { return 0.5 * x * y; };
    e.plus.u1_y = [](double x, double y) { return 0.25 * (x * x + 3.0 * y * y); };
    e.plus.u1_xx = [](double, double y) { return 0.5 * y; };
    e.plus.u1_xy = [](double x, double) { return 0.5 * x; };
    e.plus.u1_yy = [](double, double y) { return 1.5 * y; };
    e.plus.u2 = [](double x, double y) { return -0.25 * x * y * y; };
    e.plus.u2_x = [](double, double y) { return -0.25 * y * y; };
    e.plus.u2_y = [](double x, double y) { return -0.5 * x * y; };
    e.plus.u2_xx = [](double, double) { return 0.0; };
    e.plus.u2_xy = [](double, double y) { return -0.5 * y; };
    e.plus.u2_yy = [](double x, double) { return -0.5 * x; };
    e.plus.p = [](double, double) { return 5.0; };
    e.plus.p_x = [](double, double) { return 0.0; };
    e.plus.p_y = [](double, double) { return 0.0; };

    // exterior: u1 = y/r - 3y/4, u2 = -x/r + 3x/4 + x^3/4,
    //           p = (-(3/4) x^3 + (3/8) x) y, with r = sqrt(x^2+y^2)
    auto r2 = [](double x, double y) { return x * x + y * y; };
    e.minus.u1 = [=](double x, double y) { return y / std::sqrt(r2(x, y)) - 0.75 * y; };
    e.minus.u1_x = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y));
        return -x * y / (r * r * r);
    };
    e.minus.u1_y = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y));
        return x * x / (r * r * r) - 0.75;
    };
    e.minus.u1_xx = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r, r5 = r3 * r * r;
        return -y / r3 + 3.0 * x * x * y / r5;
    };
    e.minus.u1_xy = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r, r5 = r3 * r * r;
        return -x / r3 + 3.0 * x * y * y / r5;
    };
    e.minus.u1_yy = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r5 = r * r * r * r * r;
        return -3.0 * x * x * y / r5;
    };
    e.minus.u2 = [=](double x, double y) {
        return -x / std::sqrt(r2(x, y)) + 0.75 * x + 0.25 * x * x * x;
    };
    e.minus.u2_x = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r;
        return -y * y / r3 + 0.75 + 0.75 * x * x;
    };
    e.minus.u2_y = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r;
        return x * y / r3;
    };
    e.minus.u2_xx = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r5 = r * r * r * r * r;
        return 3.0 * x * y * y / r5 + 1.5 * x;
    };
    e.minus.u2_xy = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r, r5 = r3 * r * r;
        return -2.0 * y / r3 + 3.0 * y * y * y / r5;
    };
    e.minus.u2_yy = [=](double x, double y) {
        const double r = std::sqrt(r2(x, y)), r3 = r * r * r, r5 = r3 * r * r;
        return x / r3 - 3.0 * x * y * y / r5;
    };
    e.minus.p = [](double x, double y) { return (-0.75 * x * x * x + 0.375 * x) * y; };
    e.minus.p_x = [](double x, double y) { return (-2.25 * x * x + 0.375) * y; };
    e.minus.p_y = [](double x, double) { return -0.75 * x * x * x + 0.375 * x; };

    auto curve = std::make_shared<CircleCurve>(Vec2{0.0, 0.0}, 1.0);
    return make_manufactured("circle", Rect{-2.0, -2.0, 4.0}, 1.0, curve, std::move(e));
}

ProblemSpec ellipse_problem() {
    ExactSolution e;
    // interior: u = (y/4, -x(1-x^2)/16), p = (-(3/4)x^3 + (3/8)x) y
    e.plus.u1 = [](double, double y) { return 0.25 * y; };
    e.plus.u1_x = [](double, double) { return 0.0; };
    e.plus.u1_y = [](double, double) { return 0.25; };
    e.plus.u1_xx = [](double, double) { return 0.0; };
    e.plus.u1_xy = [](double, double) { return 0.0; };
    e.plus.u1_yy = [](double, double) { return 0.0; };
    e.plus.u2 = [](double x, double) { return -x * (1.0 - x * x) / 16.0; };
    e.plus.u2_x = [](double x, double) { return (3.0 * x * x - 1.0) / 16.0; };
    e.plus.u2_y = [](double, double) { return 0.0; };
    e.plus.u2_xx = [](double x, double) { return 0.375 * x; };
    e.plus.u2_xy = [](double, double) { return 0.0; };
    e.plus.u2_yy = [](double, double) { return 0.0; };
    e.plus.p = [](double x, double y) { return (-0.75 * x * x * x + 0.375 * x) * y; };
    e.plus.p_x = [](double x, double y) { return (-2.25 * x * x + 0.375) * y; };
    e.plus.p_y = [](double x, double) { return -0.75 * x * x * x + 0.375 * x; };

    // exterior: u = (y (x^2 + 4 y^2)/4, -x y^2/4), p = 0
    e.minus.u1 = [](double x, double y) { return 0.25 * y * (x * x + 4.0 * y * y); };
    e.minus.u1_x = [](double x, double y) { return 0.5 * x * y; };
    e.minus.u1_y = [](double x, double y) { return 0.25 * (x * x + 12.0 * y * y); };
    e.minus.u1_xx = [](double, double y) { return 0.5 * y; };
    e.minus.u1_xy = [](double x, double) { return 0.5 * x; };
    e.minus.u1_yy = [](double, double y) { return 6.0 * y; };
    e.minus.u2 = [](double x, double y) { return -0.25 * x * y * y; };
    e.minus.u2_x = [](double, double y) { return -0.25 * y * y; };
    e.minus.u2_y = [](double x, double y) { return -0.5 * x * y; };
    e.minus.u2_xx = [](double, double) { return 0.0; };
    e.minus.u2_xy = [](double, double y) { return -0.5 * y; };
    e.minus.u2_yy = [](double x, double) { return -0.5 * x; };
    e.minus.p = [](double, double) { return 0.0; };
    e.minus.p_x = [](double, double) { return 0.0; };
    e.minus.p_y = [](double, double) { return 0.0; };

    auto curve = std::make_shared<EllipseCurve>(Vec2{0.0, 0.0}, 1.0, 0.5);
    return make_manufactured("ellipse", Rect{-2.0, -2.0, 4.0}, 1.0, curve, std::move(e));
}

ProblemSpec smooth_problem(bool with_zero_jump_interface) {
    SideFields s;
    s.u1 = [](double x, double y) { return std::sin(kPi * x) * std::cos(kPi * y); };
    s.u1_x = [](double x, double y) { return kPi * std::cos(kPi * x) * std::cos(kPi * y); };
    s.u1_y = [](double x, double y) { return -kPi * std::sin(kPi * x) * std::sin(kPi * y); };
    s.u1_xx = [](double x, double y) {
        return -kPi * kPi * std::sin(kPi * x) * std::cos(kPi * y);
    };
    s.u1_xy = [](double x, double y) {
        return -kPi * kPi * std::cos(kPi * x) * std::sin(kPi * y);
    };
    s.u1_yy = [](double x, double y) {
        return -kPi * kPi * std::sin(kPi * x) * std::cos(kPi * y);
    };
    s.u2 = [](double x, double y) { return -std::cos(kPi * x) * std::sin(kPi * y); };
    s.u2_x = [](double x, double y) { return kPi * std::sin(kPi * x) * std::sin(kPi * y); };
    s.u2_y = [](double x, double y) { return -kPi * std::cos(kPi * x) * std::cos(kPi * y); };
    s.u2_xx = [](double x, double y) {
        return kPi * kPi * std::cos(kPi * x) * std::sin(kPi * y);
    };
    s.u2_xy = [](double x, double y) {
        return kPi * kPi * std::sin(kPi * x) * std::cos(kPi * y);
    };
    s.u2_yy = [](double x, double y) {
        return kPi * kPi * std::cos(kPi * x) * std::sin(kPi * y);
    };
    s.p = [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); };
    s.p_x = [](double x, double y) { return -kPi * std::sin(kPi * x) * std::cos(kPi * y); };
    s.p_y = [](double x, double y) { return -kPi * std::cos(kPi * x) * std::sin(kPi * y); };

    ExactSolution e{s, s};
    std::shared_ptr<const InterfaceCurve> curve;
    if (with_zero_jump_interface)
        curve = std::make_shared<CircleCurve>(Vec2{0.5, 0.5}, 0.3);
    return make_manufactured(with_zero_jump_interface ? "smooth+interface" : "smooth",
                             Rect{0.0, 0.0, 1.0}, 1.0, std::move(curve), std::move(e));
}

ProblemSpec problem_by_name(const std::string& name) {
    if (name == "circle") return circle_problem();
    if (name == "ellipse") return ellipse_problem();
    if (name == "smooth") return smooth_problem();
    throw std::invalid_argument("unknown problem name: " + name +
                                " (built-ins: circle, ellipse, smooth)");
}

ValidationReport validate(const ProblemSpec& spec) {
    if (!spec.exact) throw std::invalid_argument("validate: problem has no exact solution");
    ValidationReport rep;
    const ExactSolution& e = *spec.exact;

    // per-side divergence at domain samples, each side on its own region
    const int m = 33;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            const double x = spec.domain.x0 + spec.domain.length * i / m;
            const double y = spec.domain.y0 + spec.domain.length * j / m;
            const SideFields& s = spec.side(x, y) > 0.0 ? e.plus : e.minus;
            rep.max_divergence =
                std::max(rep.max_divergence, std::abs(s.u1_x(x, y) + s.u2_y(x, y)));
        }
    }

    if (spec.curve) {
        const InterfaceCurve& cv = *spec.curve;
        const double T = cv.period();
        for (int k = 0; k < 64; ++k) {
            const double t = T * (k + 0.5) / 64.0;
            const Vec2 X = cv.position(t);
            rep.max_velocity_jump = std::max(
                {rep.max_velocity_jump, std::abs(e.plus.u1(X.x, X.y) - e.minus.u1(X.x, X.y)),
                 std::abs(e.plus.u2(X.x, X.y) - e.minus.u2(X.x, X.y))});
            // divergence-free just off the interface on both sides
            const LocalFrame fr = cv.frame(t);
            const double delta = 1e-4 * spec.domain.length;
            const Vec2 Xp = X - delta * fr.normal;
            const Vec2 Xm = X + delta * fr.normal;
            rep.max_divergence = std::max(
                {rep.max_divergence, std::abs(e.plus.u1_x(Xp.x, Xp.y) + e.plus.u2_y(Xp.x, Xp.y)),
                 std::abs(e.minus.u1_x(Xm.x, Xm.y) + e.minus.u2_y(Xm.x, Xm.y))});
            if (spec.interface_data.psi) {
                const Vec2 psi = spec.interface_data.psi(t);
                const Vec2 ref = exact_traction_jump(e, cv, t, spec.mu);
                rep.max_traction_dev = std::max(
                    {rep.max_traction_dev, std::abs(psi.x - ref.x), std::abs(psi.y - ref.y)});
            }
            if (spec.interface_data.f_jump) {
                const Vec2 fj = spec.interface_data.f_jump(t);
                rep.max_forcing_jump_dev =
                    std::max({rep.max_forcing_jump_dev,
                              std::abs(fj.x - (spec.f1_plus(X.x, X.y) - spec.f1_minus(X.x, X.y))),
                              std::abs(fj.y - (spec.f2_plus(X.x, X.y) - spec.f2_minus(X.x, X.y)))});
            }
        }
    }

    auto fail = [](const char* what, double v) {
        std::ostringstream os;
        os << "invalid problem: " << what << " violated by " << v;
        throw InvalidProblemError(os.str());
    };
    if (rep.max_velocity_jump > 1e-8) fail("velocity continuity [[u]] = 0", rep.max_velocity_jump);
    if (rep.max_divergence > 1e-8) fail("per-side incompressibility div u = 0", rep.max_divergence);
    if (rep.max_traction_dev > 1e-8) fail("traction jump consistency", rep.max_traction_dev);
    if (rep.max_forcing_jump_dev > 1e-8) fail("forcing jump consistency", rep.max_forcing_jump_dev);
    return rep;
}

namespace {

// 5-point central difference stencils
double fd1(const ScalarField& f, double x, double y, bool in_x, double h) {
    auto v = [&](double s) { return in_x ? f(x + s, y) : f(x, y + s); };
    return (-v(2 * h) + 8 * v(h) - 8 * v(-h) + v(-2 * h)) / (12 * h);
}

double fd2(const ScalarField& f, double x, double y, bool in_x, double h) {
    auto v = [&](double s) { return in_x ? f(x + s, y) : f(x, y + s); };
    return (-v(2 * h) + 16 * v(h) - 30 * v(0) + 16 * v(-h) - v(-2 * h)) / (12 * h * h);
}

template <class Fn>
double scan_sides(const ProblemSpec& spec, int samples, unsigned seed, Fn&& dev_at) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> U(0.05, 0.95);
    double worst = 0.0;
    int got_plus = 0, got_minus = 0;
    while (got_plus < samples || got_minus < samples) {
        const double x = spec.domain.x0 + spec.domain.length * U(rng);
        const double y = spec.domain.y0 + spec.domain.length * U(rng);
        const double s = spec.side(x, y);
        // stay clear of the interface so the one-sided stencils do not cross it
        if (spec.curve && std::abs(spec.curve->classify({x, y})) < 0.05) continue;
        if (s > 0 && got_plus < samples) {
            worst = std::max(worst, dev_at(spec.exact->plus, x, y));
            ++got_plus;
        } else if (s < 0 && got_minus < samples) {
            worst = std::max(worst, dev_at(spec.exact->minus, x, y));
            ++got_minus;
        }
        if (!spec.curve) got_minus = samples;  // single region
    }
    return worst;
}

}  // namespace

double max_forcing_fd_deviation(const ProblemSpec& spec, int samples, unsigned seed) {
    if (!spec.exact) throw std::invalid_argument("no exact solution");
    const double h = 1e-4, mu = spec.mu;
    return scan_sides(spec, samples, seed, [&](const SideFields& s, double x, double y) {
        const double f1 = -mu * (fd2(s.u1, x, y, true, h) + fd2(s.u1, x, y, false, h)) +
                          fd1(s.p, x, y, true, h);
        const double f2 = -mu * (fd2(s.u2, x, y, true, h) + fd2(s.u2, x, y, false, h)) +
                          fd1(s.p, x, y, false, h);
        const bool plus = (&s == &spec.exact->plus);
        const double e1 = f1 - (plus ? spec.f1_plus(x, y) : spec.f1_minus(x, y));
        const double e2 = f2 - (plus ? spec.f2_plus(x, y) : spec.f2_minus(x, y));
        return std::max(std::abs(e1), std::abs(e2));
    });
}

double max_derivative_fd_deviation(const ProblemSpec& spec, int samples, unsigned seed) {
    if (!spec.exact) throw std::invalid_argument("no exact solution");
    const double h = 1e-4;
    return scan_sides(spec, samples, seed, [&](const SideFields& s, double x, double y) {
        double worst = 0.0;
        auto chk = [&](double a, double b) { worst = std::max(worst, std::abs(a - b)); };
        chk(fd1(s.u1, x, y, true, h), s.u1_x(x, y));
        chk(fd1(s.u1, x, y, false, h), s.u1_y(x, y));
        chk(fd1(s.u2, x, y, true, h), s.u2_x(x, y));
        chk(fd1(s.u2, x, y, false, h), s.u2_y(x, y));
        chk(fd1(s.p, x, y, true, h), s.p_x(x, y));
        chk(fd1(s.p, x, y, false, h), s.p_y(x, y));
        chk(fd2(s.u1, x, y, true, h), s.u1_xx(x, y));
        chk(fd2(s.u1, x, y, false, h), s.u1_yy(x, y));
        chk(fd1(s.u1_y, x, y, true, h), s.u1_xy(x, y));
        chk(fd2(s.u2, x, y, true, h), s.u2_xx(x, y));
        chk(fd2(s.u2, x, y, false, h), s.u2_yy(x, y));
        chk(fd1(s.u2_y, x, y, true, h), s.u2_xy(x, y));
        return worst;
    });
}

Field sample_field(const StaggeredGrid& grid, GridFamily family, const ScalarField& plus,
                   const ScalarField& minus, const InterfaceCurve* curve) {
    Field out(grid, family);
    for (int i = 0; i < out.nx(); ++i) {
        for (int j = 0; j < out.ny(); ++j) {
            const double x = grid.x(family, i), y = grid.y(family, j);
            const bool on_plus = !curve || curve->classify({x, y}) >= 0.0;
            out(i, j) = on_plus ? plus(x, y) : minus(x, y);
        }
    }
    if (out.has_ghosts()) out.set_ghosts_valid(true);
    return out;
}

Field sample_exact_u1(const ProblemSpec& spec, const StaggeredGrid& grid) {
    return sample_field(grid, GridFamily::VEdge, spec.exact->plus.u1, spec.exact->minus.u1,
                        spec.curve.get());
}

Field sample_exact_u2(const ProblemSpec& spec, const StaggeredGrid& grid) {
    return sample_field(grid, GridFamily::HEdge, spec.exact->plus.u2, spec.exact->minus.u2,
                        spec.curve.get());
}

Field sample_exact_p(const ProblemSpec& spec, const StaggeredGrid& grid) {
    return sample_field(grid, GridFamily::CellCenter, spec.exact->plus.p, spec.exact->minus.p,
                        spec.curve.get());
}

}  // namespace stokesmac

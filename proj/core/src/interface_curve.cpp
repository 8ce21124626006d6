#include "stokesmac/interface_curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stokesmac {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double InterfaceCurve::speed(double t) const {
    const Vec2 v = velocity(t);
    return std::sqrt(dot(v, v));
}

double InterfaceCurve::orientation_sign() const {
    if (orientation_ != 0.0) return orientation_;
    // Probe a few parameters; the sign is constant on a smooth closed curve.
    const double T = period();
    for (int k = 0; k < 8; ++k) {
        const double t = T * (k + 0.37) / 8.0;
        const Vec2 p = position(t);
        const double g = speed(t);
        if (g <= 0.0) continue;
        const Vec2 tau = (1.0 / g) * velocity(t);
        const Vec2 cand{tau.y, -tau.x};
        const double eps = 1e-6 * std::max(1.0, std::sqrt(std::abs(dot(p, p))));
        const double ahead = classify(p + eps * cand);
        const double behind = classify(p - eps * cand);
        if (ahead < 0.0 && behind > 0.0) {
            orientation_ = 1.0;
            return orientation_;
        }
        if (ahead > 0.0 && behind < 0.0) {
            orientation_ = -1.0;
            return orientation_;
        }
    }
    throw std::runtime_error("InterfaceCurve: could not determine normal orientation");
}

LocalFrame InterfaceCurve::frame(double t) const {
    const Vec2 v = velocity(t);
    const Vec2 a = acceleration(t);
    const double g = std::sqrt(dot(v, v));
    if (!(g > 0.0)) throw std::runtime_error("InterfaceCurve: singular parametrization");
    LocalFrame fr;
    fr.tangent = (1.0 / g) * v;
    // d2r/ds2 via chain rule, with dg/dt = (v . a)/g
    const double g_t = dot(v, a) / g;
    fr.second = (1.0 / (g * g)) * a - (g_t / (g * g * g)) * v;
    const double sgn = orientation_sign();
    fr.normal = {sgn * fr.tangent.y, -sgn * fr.tangent.x};
    fr.normal_s = {sgn * fr.second.y, -sgn * fr.second.x};
    return fr;
}

double InterfaceCurve::arc_derivative(const std::function<double(double)>& f,
                                      double t) const {
    const double T = period();
    const double dt = 1e-5 * T;
    const double df = (f(t + dt) - f(t - dt)) / (2.0 * dt);
    return df / speed(t);
}

double InterfaceCurve::project(Vec2 p) const {
    const double T = period();
    // coarse scan for a seed
    double best_t = 0.0, best_d2 = std::numeric_limits<double>::max();
    const int samples = 64;
    for (int k = 0; k < samples; ++k) {
        const double t = T * k / samples;
        const Vec2 d = position(t) - p;
        const double d2 = dot(d, d);
        if (d2 < best_d2) {
            best_d2 = d2;
            best_t = t;
        }
    }
    // Newton on phi(t) = (r(t) - p) . r'(t) = 0
    double t = best_t;
    for (int it = 0; it < 50; ++it) {
        const Vec2 d = position(t) - p;
        const Vec2 v = velocity(t);
        const Vec2 a = acceleration(t);
        const double phi = dot(d, v);
        const double dphi = dot(v, v) + dot(d, a);
        if (dphi == 0.0) break;
        const double step = phi / dphi;
        t -= step;
        if (std::abs(step) < 1e-14 * T) break;
    }
    t = std::fmod(t, T);
    if (t < 0.0) t += T;
    return t;
}

CircleCurve::CircleCurve(Vec2 center, double radius) : c_(center), r_(radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("CircleCurve: radius must be positive");
}

double CircleCurve::classify(Vec2 p) const {
    const double dx = p.x - c_.x, dy = p.y - c_.y;
    return r_ * r_ - dx * dx - dy * dy;
}

double CircleCurve::period() const { return kTwoPi; }

Vec2 CircleCurve::position(double t) const {
    return {c_.x + r_ * std::cos(t), c_.y + r_ * std::sin(t)};
}

Vec2 CircleCurve::velocity(double t) const {
    return {-r_ * std::sin(t), r_ * std::cos(t)};
}

Vec2 CircleCurve::acceleration(double t) const {
    return {-r_ * std::cos(t), -r_ * std::sin(t)};
}

double CircleCurve::project(Vec2 p) const {
    double t = std::atan2(p.y - c_.y, p.x - c_.x);
    if (t < 0.0) t += kTwoPi;
    return t;
}

EllipseCurve::EllipseCurve(Vec2 center, double a, double b) : c_(center), a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("EllipseCurve: semi-axes must be positive");
}

double EllipseCurve::classify(Vec2 p) const {
    const double dx = (p.x - c_.x) / a_, dy = (p.y - c_.y) / b_;
    return 1.0 - dx * dx - dy * dy;
}

double EllipseCurve::period() const { return kTwoPi; }

Vec2 EllipseCurve::position(double t) const {
    return {c_.x + a_ * std::cos(t), c_.y + b_ * std::sin(t)};
}

Vec2 EllipseCurve::velocity(double t) const {
    return {-a_ * std::sin(t), b_ * std::cos(t)};
}

Vec2 EllipseCurve::acceleration(double t) const {
    return {-a_ * std::cos(t), -b_ * std::sin(t)};
}

double EllipseCurve::project(Vec2 p) const {
    // Exact for points on the curve, which is how crossings use it;
    // fall back to Newton for general points.
    const double ex = (p.x - c_.x) / a_, ey = (p.y - c_.y) / b_;
    const double on_curve = std::abs(ex * ex + ey * ey - 1.0);
    if (on_curve < 1e-9) {
        double t = std::atan2(ey, ex);
        if (t < 0.0) t += kTwoPi;
        return t;
    }
    return InterfaceCurve::project(p);
}

}  // namespace stokesmac

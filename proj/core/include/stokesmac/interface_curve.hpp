/// Smooth closed interface curves: inside/outside classification, a smooth
/// periodic parametrization, and local geometric data in arclength form.
///
/// The parameter t is whatever is natural for the curve (polar angle for
/// the built-in conics); every derivative this class hands out is taken
/// with respect to arclength, so the frame quantities are parametrization
/// independent: the tangent is unit, (x'', y'') is the arclength second
/// derivative (curvature vector), and n' = dn/ds. Attached scalar data f(t)
/// can be converted to df/ds through arc_derivative().
///
/// classify() is positive in the plus region (the bounded interior), and
/// the normal points from the plus region into the minus region.

#pragma once

#include <functional>
#include <memory>

#include "stokesmac/grid.hpp"

namespace stokesmac {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct LocalFrame {
    Vec2 tangent;   // (x', y'), unit
    Vec2 second;    // (x'', y''), arclength second derivative
    Vec2 normal;    // unit, from plus side into minus side
    Vec2 normal_s;  // dn/ds
};

class InterfaceCurve {
public:
    virtual ~InterfaceCurve() = default;

    virtual double classify(Vec2 p) const = 0;  // > 0 on the plus side
    virtual double period() const = 0;          // parameter period T, t in [0, T)
    virtual Vec2 position(double t) const = 0;
    virtual Vec2 velocity(double t) const = 0;      // dr/dt
    virtual Vec2 acceleration(double t) const = 0;  // d^2r/dt^2

    /// Parameter of the curve point nearest to p. Newton on the
    /// stationarity condition seeded by a coarse scan; conics override
    /// with closed forms.
    virtual double project(Vec2 p) const;

    double speed(double t) const;  // |dr/dt|
    LocalFrame frame(double t) const;

    /// df/ds for data attached to the curve as a function of t.
    double arc_derivative(const std::function<double(double)>& f, double t) const;

    /// +1 if the outward-from-plus normal is (t_y, -t_x), -1 otherwise.
    double orientation_sign() const;

protected:
    mutable double orientation_ = 0.0;  // lazily detected
};

class CircleCurve : public InterfaceCurve {
public:
    CircleCurve(Vec2 center, double radius);
    double classify(Vec2 p) const override;
    double period() const override;
    Vec2 position(double t) const override;
    Vec2 velocity(double t) const override;
    Vec2 acceleration(double t) const override;
    double project(Vec2 p) const override;

    double radius() const { return r_; }
    Vec2 center() const { return c_; }

private:
    Vec2 c_;
    double r_;
};

/// Axis-aligned ellipse (x-cx)^2/a^2 + (y-cy)^2/b^2 = 1.
class EllipseCurve : public InterfaceCurve {
public:
    EllipseCurve(Vec2 center, double a, double b);
    double classify(Vec2 p) const override;
    double period() const override;
    Vec2 position(double t) const override;
    Vec2 velocity(double t) const override;
    Vec2 acceleration(double t) const override;
    double project(Vec2 p) const override;

private:
    Vec2 c_;
    double a_, b_;
};

}  // namespace stokesmac

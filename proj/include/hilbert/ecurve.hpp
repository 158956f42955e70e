#pragma once
// Chord-tangent arithmetic on cubic models Y^2 = X^3 + A X^2 + B X + C over
// the rationals, the two curve constructions used by the parametric
// families, and the pullback of 2*P0 to a cube tuple.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hilbert/cube.hpp"
#include "hilbert/families.hpp"
#include "hilbert/int.hpp"
#include "hilbert/rational.hpp"

namespace hilbert {

struct SingularCurveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CurveModel {
    Rational A, B, C;   // Y^2 = X^3 + A X^2 + B X + C

    CurveModel(Rational a, Rational b, Rational c)
        : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
        // discriminant of the cubic in X; zero means a singular model
        Rational disc = Rational(18) * A * B * C - Rational(4) * A * A * A * C +
                        A * A * B * B - Rational(4) * B * B * B -
                        Rational(27) * C * C;
        if (disc.is_zero()) throw SingularCurveError("curve model is singular");
    }

    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

class CurvePoint {
public:
    CurvePoint() : infinity_(true) {}   // point at infinity
    CurvePoint(Rational x, Rational y)
        : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint{}; }
    bool is_infinity() const { return infinity_; }
    const Rational& x() const { require_affine(); return x_; }
    const Rational& y() const { require_affine(); return y_; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    bool infinity_;
    Rational x_, y_;
    void require_affine() const {
        if (infinity_) throw std::logic_error("point at infinity has no coordinates");
    }
};

inline bool on_curve(const CurvePoint& p, const CurveModel& e) {
    if (p.is_infinity()) return true;
    const Rational& x = p.x();
    return p.y() * p.y() == x * x * x + e.A * x * x + e.B * x + e.C;
}

inline CurvePoint ec_negate(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return {p.x(), -p.y()};
}

inline CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q, const CurveModel& e) {
    if (!on_curve(p, e) || !on_curve(q, e))
        throw std::invalid_argument("ec_add: point not on curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    Rational lambda;
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return CurvePoint::infinity();
        // tangent
        lambda = (Rational(3) * p.x() * p.x() + Rational(2) * e.A * p.x() + e.B) /
                 (Rational(2) * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = lambda * lambda - e.A - p.x() - q.x();
    Rational y3 = lambda * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}

inline CurvePoint ec_double(const CurvePoint& p, const CurveModel& e) {
    return ec_add(p, p, e);
}

inline CurvePoint ec_mul(uint64_t k, CurvePoint p, const CurveModel& e) {
    CurvePoint acc = CurvePoint::infinity();
    while (k) {
        if (k & 1) acc = ec_add(acc, p, e);
        if (k >>= 1) p = ec_double(p, e);
    }
    return acc;
}

// smallest k <= bound with k*P = infinity, or empty (infinite order beyond bound)
inline std::optional<uint64_t> torsion_order(const CurvePoint& p, const CurveModel& e,
                                             uint64_t bound) {
    if (!on_curve(p, e)) throw std::invalid_argument("torsion_order: point not on curve");
    CurvePoint acc = CurvePoint::infinity();
    for (uint64_t k = 1; k <= bound; ++k) {
        acc = ec_add(acc, p, e);
        if (acc.is_infinity()) return k;
    }
    return std::nullopt;
}

struct CurveE {
    CurveModel model;
    CurvePoint q0;   // torsion, order 4
    CurvePoint q1, q2;   // infinite order
};

// Y^2 = X (X^2 + 2((x^2-z^2)u^4 - (x^4-4x^2z^2+z^4)u^2 - x^2z^2(x^2-z^2)) X
//          + (u^2-x^2)^2 (x^2-z^2)^2 (u^2+z^2)^2)
inline CurveE build_curve_E(const Int& u, const Int& x, const Int& z) {
    Int u2 = u * u, x2 = x * x, z2 = z * z;
    if ((u2 - x2 + z2).is_zero())
        throw SingularCurveError("curve E degenerates on u^2 - x^2 + z^2 = 0");
    Int A = Int(2) * ((x2 - z2) * u2 * u2 - (x2 * x2 - Int(4) * x2 * z2 + z2 * z2) * u2 -
                      x2 * z2 * (x2 - z2));
    Int Bc = (u2 - x2) * (x2 - z2) * (u2 + z2);
    CurveModel model{Rational(A), Rational(Bc * Bc), Rational(0)};
    CurvePoint q1{Rational((x2 - u2) * (x2 - u2) * z2),
                  Rational((u2 - x2) * (u2 - x2) * (u2 * x2 + z2 * z2) * z)};
    CurvePoint q2{Rational((x2 - z2) * (x2 - z2) * u2),
                  Rational((x2 - z2) * (x2 - z2) * (u2 * u2 + x2 * z2) * u)};
    CurvePoint q0{Rational(-Bc),
                  Rational(Int(2) * u * x * z * (x2 - z2) * (u2 - x2) * (u2 + z2))};
    for (const CurvePoint* p : {&q0, &q1, &q2})
        if (!on_curve(*p, model))
            throw std::logic_error("build_curve_E: constructed point is off the curve");
    return {std::move(model), std::move(q0), std::move(q1), std::move(q2)};
}

struct CurveA1A2 {
    CurveModel model;
    CurvePoint p0;   // infinite order
    CurvePoint p1;   // order 4
};

// Y^2 = X (X^2 - 4(c^2-cd-d^2)(c^2+cd-d^2) X + 4(c^2-d^2)^4)
inline CurveA1A2 build_curve_a1a2(const Int& c, const Int& d) {
    Int c2 = c * c, d2 = d * d;
    Int m = c2 - d2;
    if (m.is_zero()) throw SingularCurveError("curve requires c^2 != d^2");
    Int A = Int(-4) * (c2 - c * d - d2) * (c2 + c * d - d2);
    Int B = Int(4) * m.pow(4);
    CurveModel model{Rational(A), Rational(B), Rational(0)};
    CurvePoint p0{Rational(m * m), Rational(m * m * (c2 + d2))};
    CurvePoint p1{Rational(Int(2) * m * m), Rational(Int(4) * c * d * m * m)};
    for (const CurvePoint* p : {&p0, &p1})
        if (!on_curve(*p, model))
            throw std::logic_error("build_curve_a1a2: constructed point is off the curve");
    return {std::move(model), std::move(p0), std::move(p1)};
}

// the printed pullbacks of Q2 and Q1 on curve E, as generators in (u, x, z);
// every subset sum is a perfect square whenever it is nonnegative (checked by
// specialization tests). The Q2 pullback has a2 = 0, a degenerate tuple.
inline CubeTuple pullback_Q2(const Int& u, const Int& x, const Int& z) {
    return {u * u * (x + z) * (x + z),
            {Int(-4) * u * u * x * z, Int(0), (u * u - x * x) * (u * u - z * z)}};
}

inline CubeTuple pullback_Q1(const Int& u, const Int& x, const Int& z) {
    Int u2 = u * u, x2 = x * x, z2 = z * z;
    Int a0c = Int(2) * x2 * z2 * u.pow(6) +
              x2 * (x.pow(3) - x2 * z - Int(2) * x * z2 - Int(6) * z.pow(3)) * u.pow(5) -
              Int(2) * z *
                  (x.pow(5) - x.pow(4) * z - Int(3) * x.pow(3) * z2 -
                   Int(5) * x2 * z.pow(3) + z.pow(5)) *
                  u.pow(4) +
              Int(2) * z2 * (x + z) *
                  (x.pow(4) - Int(2) * x.pow(3) * z - Int(2) * x2 * z2 -
                   Int(2) * x * z.pow(3) + z.pow(4)) *
                  u.pow(3) -
              Int(2) * z.pow(3) *
                  (x.pow(5) - Int(5) * x.pow(3) * z2 - Int(3) * x2 * z.pow(3) -
                   x * z.pow(4) + z.pow(5)) *
                  u2 -
              z.pow(6) * (Int(6) * x.pow(3) + Int(2) * x2 * z + x * z2 - z.pow(3)) * u +
              Int(2) * x.pow(3) * z.pow(7);
    Int a1 = Int(-4) * u * x * z * (u2 * x2 - Int(2) * u * x2 * z + Int(2) * x2 * z2 - z2 * z2) *
             (u2 * x2 - Int(2) * u2 * z2 + Int(2) * u * z.pow(3) - z2 * z2) *
             (-(u2 * x2) + Int(2) * u2 * u * z - Int(2) * u2 * z2 + Int(2) * u * z.pow(3) -
              z2 * z2) *
             (u2 * u * x2 - Int(2) * u2 * x2 * z + Int(2) * u * x2 * z2 -
              Int(2) * x2 * z.pow(3) + u * z2 * z2);
    Int a2 = Int(4) * (u - z) * z * (x2 - z2) * (u * z - x2) * (u2 * x2 - z2 * z2) *
             (u2 - u * z + z2) *
             (u2 * u * x - Int(2) * u2 * x * z + u * x2 * z - u2 * z2 + Int(2) * u * x * z2 -
              x * z.pow(3)) *
             (u2 * u * x - Int(2) * u2 * x * z - u * x2 * z + u2 * z2 + Int(2) * u * x * z2 -
              x * z.pow(3));
    Int a3 = (u2 - x2) * (u - z) *
             (u2 * x2 - Int(2) * u * x2 * z + Int(2) * u * z.pow(3) - z2 * z2) *
             (u2 * x2 - Int(2) * u2 * x * z + Int(2) * u * x * z2 - Int(2) * x * z.pow(3) +
              z2 * z2) *
             (u2 * x2 + Int(2) * u2 * x * z - Int(2) * u * x * z2 + Int(2) * x * z.pow(3) +
              z2 * z2) *
             (u2 * u * x2 - u2 * x2 * z + Int(2) * u * x2 * z2 - Int(2) * u2 * z.pow(3) +
              u * z2 * z2 - z.pow(5));
    return {a0c * a0c, {std::move(a1), std::move(a2), std::move(a3)}};
}

struct Pullback2P0 {
    Int a, b, r, u;      // the displayed quadruple
    CubeTuple cube;      // (p^2; q^2-p^2, q^2-p^2, s^2-p^2)
};

// the point 2*P0 pulled back through (p,q,s,t) = (ad-bc, ac-bd, ad+bc, ac+bd);
// must agree entrywise with the a1 = a2 family
inline Pullback2P0 pullback_2P0(const Int& c, const Int& d) {
    Int c2 = c * c, d2 = d * d;
    if (c2 == d2) throw SingularCurveError("pullback requires c^2 != d^2");
    Pullback2P0 out;
    out.a = (Int(5) * c2 - d2) * (c2 + Int(7) * d2);
    out.b = -(c2 - Int(5) * d2) * (Int(7) * c2 + d2);
    out.r = (c - d) * (c2 * c2 + Int(36) * c2 * c * d + Int(38) * c2 * d2 +
                       Int(36) * c * d2 * d + d2 * d2);
    out.u = (c + d) * (c2 * c2 - Int(36) * c2 * c * d + Int(38) * c2 * d2 -
                       Int(36) * c * d2 * d + d2 * d2);
    Int p = out.a * d - out.b * c;
    Int q = out.a * c - out.b * d;
    Int s = out.a * d + out.b * c;
    out.cube = {p * p, {q * q - p * p, q * q - p * p, s * s - p * p}};
    if (out.cube != family_a1a2(c, d))
        throw std::logic_error("pullback_2P0: disagreement with the a1=a2 family");
    return out;
}

}  // namespace hilbert

#pragma once

#include <vector>

#include "eah/arith.hpp"

namespace eah {

/// E_a : y^2 = x^3 + a x over the rationals, a != 0.
class Curve {
 public:
  explicit Curve(Integer a);

  const Integer& a() const noexcept { return a_; }
  /// Delta = -64 a^3.
  Integer discriminant() const;
  /// The model is minimal over Q exactly when a is fourth-power-free.
  bool is_minimal() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Integer a_;
};

class Point {
 public:
  static Point infinity() { return Point(); }
  static Point affine(Rational x, Rational y) { return Point(std::move(x), std::move(y)); }

  bool is_infinity() const noexcept { return infinity_; }
  /// Throws Errc::InfinityPoint on the point at infinity.
  const Rational& x() const;
  const Rational& y() const;

  Point negated() const;

  friend bool operator==(const Point& p, const Point& q);

 private:
  Point() = default;
  Point(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool infinity_ = true;
  Rational x_;
  Rational y_;
};

bool on_curve(const Curve& curve, const Rational& x, const Rational& y);
bool on_curve(const Curve& curve, const Point& p);

/// Group law. All three throw Errc::NotOnCurve for points off the curve.
Point double_point(const Curve& curve, const Point& p);
Point add(const Curve& curve, const Point& p, const Point& q);
Point multiply(const Curve& curve, long n, const Point& p);

/// x(2P) = (x^2 - a)^2 / (4 y^2) computed from x alone; y^2 = x^3 + a x.
/// Errc::ZeroInput when y(P) = 0.
Rational double_x(const Curve& curve, const Rational& x);

enum class TorsionKind { Z2, Z2xZ2, Z4 };

struct TorsionStructure {
  TorsionKind kind = TorsionKind::Z2;
  std::vector<Point> points;  // nonzero torsion points

  unsigned exponent() const { return kind == TorsionKind::Z4 ? 4 : 2; }
};

TorsionStructure torsion_subgroup(const Curve& curve);
bool is_torsion(const Curve& curve, const Point& p);

/// Squarefree representative of the class of x(P) in Q*/Q*^2 (descent map).
Integer alpha(const Curve& curve, const Point& p);

/// P = (b1 M^2 / e^2, b1 M N / e^3) with a = b1 b2 and N^2 = b1 M^4 + b2 e^4.
struct DescentForm {
  Integer b1;
  Integer b2;
  Integer M;
  Integer N;
  Integer e;
};

/// Requires a fourth-power-free (Errc::NotMinimal) and x(P) != 0 (Errc::ZeroX).
DescentForm descent_form(const Curve& curve, const Point& p);

/// Minimal twin of a curve and the isomorphism (x, y) -> (x / s^2, y / s^3).
struct MinimalModel {
  Curve curve;
  Integer scale;  // a = a_min * scale^4
};

MinimalModel minimal_model(const Curve& curve);
Point scale_point(const Point& p, const Integer& scale);

}  // namespace eah

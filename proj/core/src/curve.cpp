#include "eah/curve.hpp"

#include <string>

#include "eah/error.hpp"

namespace eah {

namespace {

void require_on_curve(const Curve& curve, const Point& p) {
  if (!on_curve(curve, p)) {
    throw Error(Errc::NotOnCurve, "point (" + to_string(p.x()) + ", " + to_string(p.y()) +
                                      ") is not on y^2 = x^3 + " + curve.a().get_str() + "x");
  }
}

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

Curve::Curve(Integer a) : a_(std::move(a)) {
  if (a_ == 0) throw Error(Errc::ZeroInput, "E_a requires a != 0");
}

Integer Curve::discriminant() const { return -64 * a_ * a_ * a_; }

bool Curve::is_minimal() const { return is_fourth_power_free(a_); }

const Rational& Point::x() const {
  if (infinity_) throw Error(Errc::InfinityPoint, "point at infinity has no x-coordinate");
  return x_;
}

const Rational& Point::y() const {
  if (infinity_) throw Error(Errc::InfinityPoint, "point at infinity has no y-coordinate");
  return y_;
}

Point Point::negated() const { return infinity_ ? *this : Point(x_, -y_); }

bool operator==(const Point& p, const Point& q) {
  if (p.infinity_ || q.infinity_) return p.infinity_ == q.infinity_;
  return p.x_ == q.x_ && p.y_ == q.y_;
}

bool on_curve(const Curve& curve, const Rational& x, const Rational& y) {
  return y * y == x * x * x + Rational(curve.a()) * x;
}

bool on_curve(const Curve& curve, const Point& p) {
  return p.is_infinity() || on_curve(curve, p.x(), p.y());
}

Rational double_x(const Curve& curve, const Rational& x) {
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  const Integer ad2 = curve.a() * d * d;
  const Integer nn = n * n;
  const Integer den = 4 * n * d * (nn + ad2);
  if (den == 0) throw Error(Errc::ZeroInput, "doubling a 2-torsion x-coordinate");
  const Integer top = nn - ad2;
  return make_rational(top * top, den);
}

Point double_point(const Curve& curve, const Point& p) {
  require_on_curve(curve, p);
  if (p.is_infinity() || p.y() == 0) return Point::infinity();
  const Rational& x = p.x();
  const Rational& y = p.y();
  const Rational slope = (3 * x * x + Rational(curve.a())) / (2 * y);
  const Rational x2 = slope * slope - 2 * x;
  const Rational y2 = slope * (x - x2) - y;
  return Point::affine(x2, y2);
}

Point add(const Curve& curve, const Point& p, const Point& q) {
  require_on_curve(curve, p);
  require_on_curve(curve, q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return double_point(curve, p);
    return Point::infinity();
  }
  const Rational slope = (q.y() - p.y()) / (q.x() - p.x());
  const Rational x3 = slope * slope - p.x() - q.x();
  const Rational y3 = slope * (p.x() - x3) - p.y();
  return Point::affine(x3, y3);
}

Point multiply(const Curve& curve, long n, const Point& p) {
  require_on_curve(curve, p);
  if (n < 0) return multiply(curve, -n, p).negated();
  Point result = Point::infinity();
  Point base = p;
  auto k = static_cast<unsigned long>(n);
  while (k != 0) {
    if (k & 1UL) result = add(curve, result, base);
    k >>= 1;
    if (k != 0) base = double_point(curve, base);
  }
  return result;
}

MinimalModel minimal_model(const Curve& curve) {
  auto [reduced, scale] = fourth_power_free_part(curve.a());
  return {Curve(reduced), scale};
}

Point scale_point(const Point& p, const Integer& scale) {
  if (p.is_infinity()) return p;
  const Integer s2 = scale * scale;
  return Point::affine(p.x() / Rational(s2), p.y() / Rational(s2 * scale));
}

TorsionStructure torsion_subgroup(const Curve& curve) {
  const Integer& a = curve.a();
  TorsionStructure out;
  out.points.push_back(Point::affine(0, 0));
  // Z/4 exactly when a = 4 s^4 (a = 4 on the minimal model), with torsion (2s^2, +-4s^3).
  Integer s;
  if (a > 0 && mpz_divisible_ui_p(a.get_mpz_t(), 4) &&
      mpz_root(s.get_mpz_t(), Integer(a / 4).get_mpz_t(), 4) != 0) {
    out.kind = TorsionKind::Z4;
    const Integer x = 2 * s * s;
    const Integer y = 4 * s * s * s;
    out.points.push_back(Point::affine(x, y));
    out.points.push_back(Point::affine(x, Integer(-y)));
  } else if (auto root = exact_sqrt(Integer(-a))) {
    // -a = r^2 with r an integer; a non-integral root is impossible for integral a.
    out.kind = TorsionKind::Z2xZ2;
    out.points.insert(out.points.begin(), {Point::affine(*root, 0), Point::affine(Integer(-*root), 0)});
  }
  return out;
}

bool is_torsion(const Curve& curve, const Point& p) {
  require_on_curve(curve, p);
  if (p.is_infinity() || p.y() == 0) return true;
  // The torsion subgroup has exponent 2 or 4, so P is torsion iff 2P has order <= 2.
  const Point twice = double_point(curve, p);
  return twice.y() == 0;
}

Integer alpha(const Curve& curve, const Point& p) {
  require_on_curve(curve, p);
  if (p.is_infinity()) return 1;
  if (p.x() == 0) return squarefree_decompose(curve.a()).squarefree;
  const Rational& x = p.x();
  return squarefree_decompose(Integer(x.get_num() * x.get_den())).squarefree;
}

DescentForm descent_form(const Curve& curve, const Point& p) {
  require_on_curve(curve, p);
  if (p.is_infinity()) throw Error(Errc::InfinityPoint, "descent form of O");
  if (p.x() == 0) throw Error(Errc::ZeroX, "descent form requires x(P) != 0");
  if (!curve.is_minimal()) {
    throw Error(Errc::NotMinimal, "a = " + curve.a().get_str() + " is not fourth-power-free");
  }
  const Integer& a = curve.a();
  const Integer& n = p.x().get_num();
  auto e = exact_sqrt(p.x().get_den());
  auto not_minimal = [&](const std::string& why) {
    return Error(Errc::NotMinimal, "descent shape fails for a = " + a.get_str() + ": " + why);
  };
  if (!e) throw not_minimal("denominator of x is not a square");

  DescentForm out;
  out.e = *e;
  out.b1 = gcd(n, a);
  if (n < 0) out.b1 = -out.b1;
  out.b2 = a / out.b1;
  auto m = exact_sqrt(Integer(n / out.b1));
  if (!m) throw not_minimal("x numerator / b1 is not a square");
  out.M = *m;
  const Rational n_rat = p.y() * Rational(pow_ui(out.e, 3)) / Rational(out.b1 * out.M);
  if (n_rat.get_den() != 1) throw not_minimal("N is not integral");
  out.N = n_rat.get_num();

  const bool coprime = gcd(out.b1, out.e) == 1 && gcd(out.b2, out.M) == 1 && gcd(out.e, out.M) == 1 &&
                       gcd(out.M, out.N) == 1 && gcd(out.e, out.N) == 1;
  const bool quartic = out.N * out.N == out.b1 * pow_ui(out.M, 4) + out.b2 * pow_ui(out.e, 4);
  if (!coprime || !quartic) throw not_minimal("gcd conditions violated");
  return out;
}

}  // namespace eah

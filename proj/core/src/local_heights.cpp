#include "eah/local_heights.hpp"

#include <cmath>
#include <limits>

#include "eah/error.hpp"
#include "local_heights_detail.hpp"

namespace eah {

namespace {

long ord_or_large(const Rational& x, const Integer& p) {
  return x == 0 ? std::numeric_limits<long>::max() : ord_p(x, p);
}

long checked_ord_a(const Curve& curve, const Integer& p) {
  const long k = ord_p(curve.a(), p);
  if (k >= 4) {
    throw Error(Errc::NotMinimal, p.get_str() + "^4 divides a = " + curve.a().get_str());
  }
  return k;
}

ReductionData classify_odd(const Curve& curve, const Integer& p, long k) {
  ReductionData out;
  out.prime = p;
  out.ord_delta = static_cast<unsigned long>(3 * k);
  switch (k) {
    case 0:
      out.kodaira = {KodairaKind::I0};
      out.tamagawa = 1;
      out.tate_trace = "step 1";
      break;
    case 1:
      out.kodaira = {KodairaKind::III};
      out.tamagawa = 2;
      out.tate_trace = "step 4";
      break;
    case 2: {
      out.kodaira = {KodairaKind::I0star};
      const Integer reduced = -curve.a() / (p * p);
      out.tamagawa = legendre_symbol(reduced, p) == 1 ? 4 : 2;
      out.tate_trace = "step 6";
      break;
    }
    default:
      out.kodaira = {KodairaKind::IIIstar};
      out.tamagawa = 2;
      out.tate_trace = "step 9";
      break;
  }
  return out;
}

ReductionData classify_two(const Curve& curve, long k) {
  ReductionData out;
  out.prime = 2;
  out.ord_delta = static_cast<unsigned long>(6 + 3 * k);
  const unsigned long r4 = mod_positive(curve.a(), 4);
  const unsigned long r32 = mod_positive(curve.a(), 32);
  const unsigned long r64 = mod_positive(curve.a(), 64);
  if (r4 == 1) {
    out.kodaira = {KodairaKind::II};
    out.tamagawa = 1;
    out.tate_trace = "step 3 (x = x' + 1)";
  } else if (r4 == 3) {
    out.kodaira = {KodairaKind::III};
    out.tamagawa = 2;
    out.tate_trace = "step 4 (x = x' + 1)";
  } else if (r4 == 2) {
    out.kodaira = {KodairaKind::III};
    out.tamagawa = 2;
    out.tate_trace = "step 4";
  } else if (k == 3) {
    out.kodaira = {KodairaKind::IIIstar};
    out.tamagawa = 2;
    out.tate_trace = "step 9";
  } else if (r32 % 16 == 12) {
    out.kodaira = {KodairaKind::Imstar, 2};
    out.tamagawa = r32 == 12 ? 2 : 4;
    out.tate_trace = "step 7 (x = x' + 2)";
  } else if (r32 == 4) {
    out.kodaira = {KodairaKind::Imstar, 3};
    out.tamagawa = r64 == 4 ? 4 : 2;
    out.tate_trace = "step 7 (x = x' + 2, y = y' + 4)";
  } else {
    // a = 20 mod 32
    out.kodaira = {KodairaKind::Imstar, 3};
    out.tamagawa = r64 == 52 ? 4 : 2;
    out.tate_trace = "step 7 (x = x' + 2, y = y' + 4, x' = x'' + 4)";
  }
  return out;
}

template <class Real>
Real translated_z(const Real& u) {
  const Real u2 = u * u;
  return 1 - 8 * u2 + 16 * u2 * u - 8 * u2 * u2;
}

template <class Real>
ArchHeightValue evaluate_arch(const Curve& curve, const Point& p, unsigned terms) {
  const Real value = detail::archimedean_series<Real>(curve, p, terms);
  ArchHeightValue out;
  out.value = static_cast<double>(value);
  out.terms_used = terms;
  out.tail_bound = static_cast<double>(detail::tail_bound<Real>(terms));
  out.rounding_bound = static_cast<double>(detail::rounding_allowance<Real>(value)) +
                       std::abs(out.value) * std::numeric_limits<double>::epsilon();
  return out;
}

}  // namespace

std::string Kodaira::symbol() const {
  switch (kind) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::I0star: return "I0*";
    case KodairaKind::Imstar: return "I" + std::to_string(m) + "*";
    case KodairaKind::IIIstar: return "III*";
  }
  return "?";
}

ReductionData classify_reduction(const Curve& curve, const Integer& p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  const long k = checked_ord_a(curve, p);
  return p == 2 ? classify_two(curve, k) : classify_odd(curve, p, k);
}

std::vector<ReductionData> classify_bad_primes(const Curve& curve) {
  std::vector<ReductionData> rows;
  rows.push_back(classify_reduction(curve, 2));
  for (const auto& [prime, e] : factorize(curve.a())) {
    if (prime != 2) rows.push_back(classify_reduction(curve, prime));
  }
  return rows;
}

std::string_view to_string(SingularCase c) noexcept {
  switch (c) {
    case SingularCase::Otherwise: return "otherwise";
    case SingularCase::OddOrd1: return "p||a, ord_p(x)>0";
    case SingularCase::OddOrd2: return "p^2||a, ord_p(x)>0";
    case SingularCase::OddOrd3: return "p^3||a, ord_p(x)>0";
    case SingularCase::TwoIII: return "a=2,3 mod 4, ord_2(x+a)>0";
    case SingularCase::TwoI2I3Star: return "a=12,20,36,44 mod 64, ord_2(x)>0";
    case SingularCase::TwoImStarDeep: return "a=4,28,52,60 mod 64, ord_2(x)>1";
    case SingularCase::TwoIIIStar: return "a=0 mod 8, ord_2(x)>0";
    case SingularCase::TwoI2StarShallow: return "a=28,60 mod 64, ord_2(x)=1";
    case SingularCase::TwoI3StarShallow: return "a=4,52 mod 64, ord_2(x)=1";
  }
  return "?";
}

Rational correction_coefficient(SingularCase c) {
  switch (c) {
    case SingularCase::Otherwise: return 0;
    case SingularCase::OddOrd1:
    case SingularCase::TwoIII: return Rational(1, 4);
    case SingularCase::OddOrd2:
    case SingularCase::TwoI2I3Star:
    case SingularCase::TwoImStarDeep: return Rational(1, 2);
    case SingularCase::OddOrd3:
    case SingularCase::TwoIIIStar:
    case SingularCase::TwoI2StarShallow: return Rational(3, 4);
    case SingularCase::TwoI3StarShallow: return Rational(7, 8);
  }
  return 0;
}

SingularCase singular_case(const Curve& curve, const Rational& x, const Integer& p) {
  const long k = checked_ord_a(curve, p);
  const long ord_x = ord_or_large(x, p);
  if (p != 2) {
    if (k == 0 || ord_x <= 0) return SingularCase::Otherwise;
    return k == 1 ? SingularCase::OddOrd1 : k == 2 ? SingularCase::OddOrd2 : SingularCase::OddOrd3;
  }
  const unsigned long r4 = mod_positive(curve.a(), 4);
  const unsigned long r8 = mod_positive(curve.a(), 8);
  const unsigned long r64 = mod_positive(curve.a(), 64);
  if (r4 == 2 || r4 == 3) {
    // Literal reading: a rational x with even denominator gives ord_2(x + a) < 0.
    return ord_or_large(x + Rational(curve.a()), p) > 0 ? SingularCase::TwoIII : SingularCase::Otherwise;
  }
  if (r8 == 0) return ord_x > 0 ? SingularCase::TwoIIIStar : SingularCase::Otherwise;
  switch (r64) {
    case 12: case 20: case 36: case 44:
      return ord_x > 0 ? SingularCase::TwoI2I3Star : SingularCase::Otherwise;
    case 28: case 60:
      if (ord_x > 1) return SingularCase::TwoImStarDeep;
      return ord_x == 1 ? SingularCase::TwoI2StarShallow : SingularCase::Otherwise;
    case 4: case 52:
      if (ord_x > 1) return SingularCase::TwoImStarDeep;
      return ord_x == 1 ? SingularCase::TwoI3StarShallow : SingularCase::Otherwise;
    default:
      return SingularCase::Otherwise;
  }
}

double NonArchLocalHeight::value() const {
  return coefficient.get_d() * std::log(prime.get_d());
}

NonArchLocalHeight lambda_nonarch(const Curve& curve, const Point& p, const Integer& prime) {
  if (p.is_infinity()) throw Error(Errc::InfinityPoint, "lambda_p(O) is undefined");
  if (!curve.is_minimal()) throw Error(Errc::NotMinimal, "a = " + curve.a().get_str() + " is not fourth-power-free");
  if (is_torsion(curve, p)) throw Error(Errc::TorsionPoint, "lambda_p requires a nontorsion point");
  if (!is_prime(prime)) throw Error(Errc::NotPrime, prime.get_str() + " is not prime");

  NonArchLocalHeight out;
  out.prime = prime;
  out.correction_tag = singular_case(curve, p.x(), prime);
  const long ord_x = ord_p(p.x(), prime);
  const long ord_a = ord_p(curve.a(), prime);
  const long ord_delta = 3 * ord_a + (prime == 2 ? 6 : 0);
  out.coefficient = make_rational(ord_x < 0 ? -ord_x : 0, 2) + make_rational(ord_delta, 12) -
                    correction_coefficient(out.correction_tag);
  out.coefficient.canonicalize();
  return out;
}

namespace detail {

template <class Real>
Real archimedean_series(const Curve& curve, const Point& p, unsigned terms) {
  const Integer& a = curve.a();
  const Rational& x = p.x();
  const Real log_delta = 6 * log2_constant<Real>() + 3 * log_abs<Real>(a);
  Real sum = 0;
  Real weight = 1;

  if (a < 0) {
    // (1/2) log|x| + (1/8) log z(P) = (1/4) log(x^2 - a), valid on both components.
    const Real first = log_abs<Real>(Rational(x * x - Rational(a))) / 4;
    const Real root = sqrt(to_real<Real>(Integer(-a)));
    Real u = root / to_real<Real>(double_x(curve, x));
    for (unsigned k = 1; k <= terms; ++k) {
      weight /= 4;
      const Real u2 = u * u;
      const Real z = (1 + u2) * (1 + u2);
      sum += weight * log(z);
      u = 4 * u * (1 - u2) / z;
    }
    return first + sum / 8 - log_delta / 12;
  }

  const Real root = sqrt(to_real<Real>(a));
  const Real xr = to_real<Real>(x);
  const Real x2 = xr * xr;
  const Real ar = to_real<Real>(a);
  // x'^4 z(P') expanded in the untranslated coordinate.
  const Real first = log((x2 - ar) * (x2 - ar) + 4 * root * xr * (x2 + ar)) / 8;
  Real u = root / (xr + root);
  for (unsigned k = 1; k <= terms; ++k) {
    weight /= 4;
    const Real z = translated_z(u);
    u = u * (4 - 12 * u + 16 * u * u - 8 * u * u * u) / z;
    sum += weight * log(translated_z(u));
  }
  return first + sum / 8 - log_delta / 12;
}

template StandardReal archimedean_series<StandardReal>(const Curve&, const Point&, unsigned);
template ExtendedReal archimedean_series<ExtendedReal>(const Curve&, const Point&, unsigned);

}  // namespace detail

ArchHeightValue lambda_archimedean(const Curve& curve, const Point& p, const ArchOptions& options) {
  if (p.is_infinity()) throw Error(Errc::InfinityPoint, "lambda_infinity(O) is undefined");
  if (is_torsion(curve, p)) throw Error(Errc::TorsionPoint, "Tate's series requires a nontorsion point");
  if (options.terms == 0) throw Error(Errc::InvalidArgument, "at least one series term is required");
  return options.precision == Precision::Extended
             ? evaluate_arch<detail::ExtendedReal>(curve, p, options.terms)
             : evaluate_arch<detail::StandardReal>(curve, p, options.terms);
}

Rational z_value_exact(const Curve& curve, const Rational& x) {
  if (x == 0) throw Error(Errc::ZeroX, "z(P) needs x(P) != 0");
  const Rational w = 1 - Rational(curve.a()) / (x * x);
  return w * w;
}

double z_value(const Curve& curve, const Rational& x) {
  using Real = detail::StandardReal;
  if (curve.a() < 0) return z_value_exact(curve, x).get_d();
  const Real root = sqrt(detail::to_real<Real>(curve.a()));
  const Real shifted = detail::to_real<Real>(x) + root;
  if (shifted == 0) throw Error(Errc::ZeroX, "translated x(P') is zero");
  return static_cast<double>(translated_z<Real>(root / shifted));
}

}  // namespace eah

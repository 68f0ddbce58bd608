#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eah/arith.hpp"
#include "eah/curve.hpp"

namespace eah {

enum class KodairaKind { I0, II, III, I0star, Imstar, IIIstar };

struct Kodaira {
  KodairaKind kind = KodairaKind::I0;
  unsigned m = 0;  // only meaningful for Imstar

  /// "I0", "II", "III", "I0*", "I2*", "III*".
  std::string symbol() const;
  friend bool operator==(const Kodaira&, const Kodaira&) = default;
};

struct ReductionData {
  Integer prime;
  Kodaira kodaira;
  unsigned tamagawa = 1;
  unsigned long ord_delta = 0;
  /// Which step of Tate's algorithm terminates, and the coordinate changes
  /// applied on the way, e.g. "step 7 (x = x' + 2, y = y' + 4)".
  std::string tate_trace;
};

/// Closed-form reduction type of E_a at p. Requires p^4 not dividing a
/// (Errc::NotMinimal) and p prime (Errc::NotPrime).
ReductionData classify_reduction(const Curve& curve, const Integer& p);

/// Rows for every prime dividing 2a, in increasing order.
std::vector<ReductionData> classify_bad_primes(const Curve& curve);

/// Which singular-point correction applies to a local height at p.
enum class SingularCase {
  Otherwise,
  OddOrd1,          // p || a, ord_p(x) > 0                       1/4
  OddOrd2,          // p^2 || a, ord_p(x) > 0                     1/2
  OddOrd3,          // p^3 || a, ord_p(x) > 0                     3/4
  TwoIII,           // a = 2,3 mod 4, ord_2(x + a) > 0            1/4
  TwoI2I3Star,      // a = 12,20,36,44 mod 64, ord_2(x) > 0       1/2
  TwoImStarDeep,    // a = 4,28,52,60 mod 64, ord_2(x) > 1        1/2
  TwoIIIStar,       // a = 0 mod 8, ord_2(x) > 0                  3/4
  TwoI2StarShallow, // a = 28,60 mod 64, ord_2(x) = 1             3/4
  TwoI3StarShallow, // a = 4,52 mod 64, ord_2(x) = 1              7/8
};

std::string_view to_string(SingularCase c) noexcept;
/// The subtracted multiple of log p.
Rational correction_coefficient(SingularCase c);

SingularCase singular_case(const Curve& curve, const Rational& x, const Integer& p);

/// lambda_p(P) = coefficient * log(p), exactly.
struct NonArchLocalHeight {
  Integer prime;
  Rational coefficient;
  SingularCase correction_tag = SingularCase::Otherwise;

  double value() const;
};

/// Requires p^4 not dividing a (Errc::NotMinimal); rejects O
/// (Errc::InfinityPoint) and torsion points (Errc::TorsionPoint).
NonArchLocalHeight lambda_nonarch(const Curve& curve, const Point& p, const Integer& prime);

enum class Precision { Standard, Extended };

struct ArchOptions {
  unsigned terms = 40;
  Precision precision = Precision::Standard;
};

struct ArchHeightValue {
  double value = 0;
  /// log(4) / (24 * 4^terms_used): bound on the neglected series tail.
  double tail_bound = 0;
  unsigned terms_used = 0;
  /// Bound on multiprecision rounding plus the final conversion to double.
  double rounding_bound = 0;
};

/// Tate's series for lambda_infinity. For a < 0 the series runs on E_a with
/// the first term folded into (1/4) log(x^2 - a); for a > 0 it runs on the
/// model translated by x' = x + sqrt(a). Rejects torsion points.
ArchHeightValue lambda_archimedean(const Curve& curve, const Point& p, const ArchOptions& options = {});

/// Tate's z for a single point: (1 - a/x^2)^2 on E_a when a < 0, and
/// 1 - 8a t^2 + 16 a^(3/2) t^3 - 8 a^2 t^4 with t = 1/(x + sqrt(a)) when a > 0.
double z_value(const Curve& curve, const Rational& x);
/// (1 - a/x^2)^2 exactly; Errc::ZeroX when x = 0.
Rational z_value_exact(const Curve& curve, const Rational& x);

}  // namespace eah

#include "eah/canonical_height.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "eah/error.hpp"
#include "local_heights_detail.hpp"

namespace eah {

namespace {

template <class Real>
Real naive_height_real(const Rational& x) {
  const Integer num = abs(x.get_num());
  const Integer& den = x.get_den();
  const Integer& top = num > den ? num : den;
  return detail::log_abs<Real>(top);
}

void require_point(const Curve& curve, const Point& p) {
  if (!on_curve(curve, p)) throw Error(Errc::NotOnCurve, "point is not on E_a");
}

void require_minimal(const Curve& curve) {
  if (!curve.is_minimal()) {
    throw Error(Errc::NotMinimal, "a = " + curve.a().get_str() + " is not fourth-power-free");
  }
}

void require_nontorsion(const Curve& curve, const Point& p) {
  if (is_torsion(curve, p)) throw Error(Errc::TorsionPoint, "point is torsion");
}

void add_primes(std::set<Integer>& into, const Integer& n) {
  if (n == 0) return;
  for (const auto& pp : factorize(n)) into.insert(pp.prime);
}

/// Primes dividing 2 a den(x); the denominator is a square for points on a
/// minimal E_a, so only its root is factored.
std::set<Integer> scanned_primes(const Curve& curve, const Rational& x) {
  std::set<Integer> primes{Integer(2)};
  add_primes(primes, curve.a());
  const Integer& den = x.get_den();
  if (auto root = exact_sqrt(den)) {
    add_primes(primes, *root);
  } else {
    add_primes(primes, den);
  }
  return primes;
}

template <class Real>
HeightBreakdown decompose(const Curve& curve, const Point& p, unsigned terms) {
  HeightBreakdown out;
  const std::set<Integer> primes = scanned_primes(curve, p.x());
  const Real arch = detail::archimedean_series<Real>(curve, p, terms);
  Real total = arch;
  Real rounding = detail::rounding_allowance<Real>(arch);
  for (const Integer& prime : primes) {
    NonArchLocalHeight term = lambda_nonarch(curve, p, prime);
    if (term.coefficient != 0) {
      const Real value = detail::log_term<Real>(term.coefficient, prime);
      total += value;
      rounding += detail::rounding_allowance<Real>(value);
    }
    out.nonarch_terms.push_back(std::move(term));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  out.archimedean.value = static_cast<double>(arch);
  out.archimedean.terms_used = terms;
  out.archimedean.tail_bound = static_cast<double>(detail::tail_bound<Real>(terms));
  out.archimedean.rounding_bound =
      static_cast<double>(detail::rounding_allowance<Real>(arch)) + std::abs(out.archimedean.value) * eps;
  out.canonical = static_cast<double>(total);

  const Real naive = naive_height_real<Real>(p.x());
  out.naive = static_cast<double>(naive);
  out.difference = static_cast<double>(naive / 2 - total);
  rounding += detail::rounding_allowance<Real>(naive);
  out.error_bound = out.archimedean.tail_bound + static_cast<double>(rounding) +
                    (std::abs(out.canonical) + std::abs(out.difference) + out.naive) * eps;
  return out;
}

}  // namespace

double naive_height(const Rational& x) {
  return static_cast<double>(naive_height_real<detail::StandardReal>(x));
}

double naive_height(const Point& p) {
  if (p.is_infinity()) throw Error(Errc::InfinityPoint, "naive height of O is undefined");
  return naive_height(p.x());
}

HeightBreakdown canonical_height(const Curve& curve, const Point& p, const ArchOptions& options) {
  require_point(curve, p);
  if (options.terms == 0) throw Error(Errc::InvalidArgument, "at least one series term is required");

  if (is_torsion(curve, p)) {
    HeightBreakdown out;
    out.torsion = true;
    out.minimal_a = curve.a();
    if (!p.is_infinity()) {
      out.naive = naive_height(p.x());
      out.difference = out.naive / 2;
      out.error_bound = out.naive * std::numeric_limits<double>::epsilon();
    }
    return out;
  }

  const MinimalModel model = minimal_model(curve);
  const Point q = scale_point(p, model.scale);
  HeightBreakdown out = options.precision == Precision::Extended
                            ? decompose<detail::ExtendedReal>(model.curve, q, options.terms)
                            : decompose<detail::StandardReal>(model.curve, q, options.terms);
  out.minimal_a = model.curve.a();
  out.scale = model.scale;
  if (model.scale != 1) {
    // The naive height and the difference refer to the input model.
    out.naive = naive_height(p.x());
    out.difference = out.naive / 2 - out.canonical;
    out.error_bound += out.naive * std::numeric_limits<double>::epsilon();
  }
  return out;
}

double limit_oracle(const Curve& curve, const Point& p, unsigned doublings, unsigned max_depth) {
  require_point(curve, p);
  if (doublings > max_depth || doublings > kMaxOracleDepth) {
    throw Error(Errc::DepthExceeded, "oracle depth " + std::to_string(doublings) + " exceeds the cap of " +
                                         std::to_string(std::min(max_depth, kMaxOracleDepth)));
  }
  if (doublings == 0) throw Error(Errc::InvalidArgument, "oracle depth must be positive");
  require_nontorsion(curve, p);
  Rational x = p.x();
  for (unsigned k = 0; k < doublings; ++k) x = double_x(curve, x);
  using Real = detail::StandardReal;
  const Real h = naive_height_real<Real>(x);
  return static_cast<double>(h / (2 * pow(Real(4), doublings)));
}

std::vector<DenominatorRecord> denominator_sequence(const Curve& curve, const Point& p, unsigned upto) {
  require_point(curve, p);
  require_minimal(curve);
  require_nontorsion(curve, p);
  std::vector<DenominatorRecord> out;
  out.reserve(upto);
  Point current = p;
  for (unsigned n = 1; n <= upto; ++n) {
    if (n > 1) current = add(curve, current, p);
    DenominatorRecord r;
    r.n = n;
    r.A = current.x().get_num();
    r.B = current.x().get_den();
    r.ord2_B = mpz_scan1(r.B.get_mpz_t(), 0);
    out.push_back(std::move(r));
  }
  return out;
}

unsigned b2_class_bound(const Integer& a) {
  switch (mod_positive(a, 16)) {
    case 1: case 5: case 7: case 9: case 13: case 15: return 4;
    case 4: case 0: return 0;
    default: return 2;
  }
}

B2Report check_b2_bounds(const Curve& curve, const Point& p) {
  const auto records = denominator_sequence(curve, p, 2);
  B2Report out;
  out.ord2_B1 = records[0].ord2_B;
  out.ord2_B2 = records[1].ord2_B;
  out.class_bound = b2_class_bound(curve.a());
  out.class_ok = out.ord2_B2 >= out.class_bound;

  const bool four_mod_16 = mod_positive(curve.a(), 16) == 4;
  const Rational& x = p.x();
  const long ord_x = x == 0 ? std::numeric_limits<long>::max() : ord_p(x, 2);
  out.step_hypothesis = !four_mod_16 || ord_x != 1;
  out.proof_hypothesis = !four_mod_16 || ord_x % 2 == 0;
  out.step_ok = out.ord2_B2 >= out.ord2_B1 + 2;

  if (out.step_hypothesis != out.proof_hypothesis) {
    out.discrepancies.push_back("stated and proof-side hypotheses differ (a = " + curve.a().get_str() +
                                ", ord_2(x) = " + std::to_string(ord_x) + ")");
  }
  const double required = out.step_hypothesis
                              ? static_cast<double>(std::max<unsigned long>(out.class_bound, out.ord2_B1 + 2))
                              : static_cast<double>(out.class_bound);
  out.check.theorem = Theorem::B2;
  out.check.bound = required;
  out.check.actual = static_cast<double>(out.ord2_B2);
  out.check.margin = out.check.actual - required;
  out.check.error_bound = 0;
  out.check.verdict = out.class_ok && (!out.step_hypothesis || out.step_ok) ? Verdict::Pass : Verdict::Fail;
  return out;
}

SumFormulaCheck check_sum_formula(const Curve& curve, const Point& p) {
  require_point(curve, p);
  require_minimal(curve);
  require_nontorsion(curve, p);
  const Point q = double_point(curve, p);
  SumFormulaCheck out;
  out.x2p = q.x();

  for (const Integer& prime : scanned_primes(curve, q.x())) {
    const Rational c = lambda_nonarch(curve, q, prime).coefficient;
    if (c != 0) out.local_sum[prime] = c;
  }

  auto add_to = [](LogCombination& m, const Integer& prime, const Rational& c) {
    Rational& slot = m[prime];
    slot += c;
    if (slot == 0) m.erase(prime);
  };

  // x(2P) = alpha^2 / delta^2; a non-square denominator is itself a finding.
  const Integer& den = q.x().get_den();
  const auto delta = exact_sqrt(den);
  if (delta) {
    for (const auto& pp : factorize(*delta)) add_to(out.closed_form, pp.prime, Rational(Integer(pp.exponent)));
  } else {
    for (const auto& pp : factorize(den)) add_to(out.closed_form, pp.prime, make_rational(pp.exponent, 2));
  }
  add_to(out.closed_form, 2, Rational(1, 2));  // ord_2(64) / 12
  for (const auto& pp : factorize(curve.a())) {
    add_to(out.closed_form, pp.prime, make_rational(3 * pp.exponent, 12));
  }
  if (mod_positive(curve.a(), 16) == 4 && q.x() != 0 && ord_p(q.x(), 2) > 0) {
    add_to(out.closed_form, 2, Rational(-1, 2));
  }

  out.residue = out.local_sum;
  for (const auto& [prime, c] : out.closed_form) add_to(out.residue, prime, -c);
  return out;
}

}  // namespace eah

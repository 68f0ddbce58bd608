#include "eah/bounds.hpp"

#include <cmath>
#include <limits>

#include "eah/error.hpp"

namespace eah {

namespace {

const double kLog2 = std::log(2.0);

/// Rounding allowance for a handful of double operations on a value.
double eval_error(double value) {
  return 16 * std::numeric_limits<double>::epsilon() * (1 + std::abs(value));
}

BoundCheck lower_check(Theorem t, double bound, double actual, double error) {
  BoundCheck c;
  c.theorem = t;
  c.bound = bound;
  c.actual = actual;
  c.margin = actual - bound;
  c.error_bound = error + eval_error(bound);
  c.verdict = judge(c.margin, c.error_bound);
  return c;
}

BoundCheck upper_check(Theorem t, double bound, double actual, double error) {
  BoundCheck c = lower_check(t, bound, actual, error);
  c.margin = bound - actual;
  c.verdict = judge(c.margin, c.error_bound);
  return c;
}

Certificate build(const Curve& curve, const Point& p, const ArchOptions& options) {
  Certificate out;
  out.height = canonical_height(curve, p, options);
  const HeightBreakdown& h = out.height;

  if (!h.torsion) {
    const LangBound lang = lang_lower_bound(h.minimal_a);
    out.checks.push_back(lower_check(Theorem::Lang, lang.bound, h.canonical, h.error_bound));
    out.checks.push_back(
        lower_check(Theorem::Corollary, corollary_bound(curve.a()), h.canonical, h.error_bound));
  }
  const DiffBounds d = diff_bounds(curve.a());
  out.checks.push_back(upper_check(Theorem::DiffUpper, d.upper, h.difference, h.error_bound));
  out.checks.push_back(lower_check(Theorem::DiffLowerSqrt, d.lower_sqrt, h.difference, h.error_bound));
  out.checks.push_back(lower_check(Theorem::DiffLowerConst, d.lower_const, h.difference, h.error_bound));
  if (!h.torsion) {
    const Curve minimal(h.minimal_a);
    B2Report b2 = check_b2_bounds(minimal, scale_point(p, h.scale));
    out.checks.push_back(b2.check);
    for (auto& msg : b2.discrepancies) out.notes.push_back(std::move(msg));
  }
  return out;
}

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::Lang: return "Lang";
    case Theorem::Corollary: return "Corollary";
    case Theorem::DiffUpper: return "DiffUpper";
    case Theorem::DiffLowerSqrt: return "DiffLowerSqrt";
    case Theorem::DiffLowerConst: return "DiffLowerConst";
    case Theorem::B2: return "B2";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict judge(double margin, double error_bound) noexcept {
  if (margin > error_bound) return Verdict::Pass;
  if (margin < -error_bound) return Verdict::Fail;
  return Verdict::Inconclusive;
}

ResidueGroup residue_group(const Integer& a) {
  switch (mod_positive(a, 16)) {
    case 1: case 5: case 7: case 9: case 13: case 15: return ResidueGroup::Odd;
    case 4: return ResidueGroup::Four;
    default: return ResidueGroup::Even;
  }
}

std::string class_tag(const Integer& a) {
  const std::string sign = a > 0 ? "a>0" : "a<0";
  switch (residue_group(a)) {
    case ResidueGroup::Odd: return sign + ", a=1,5,7,9,13,15 mod 16";
    case ResidueGroup::Even: return sign + ", a=2,3,6,8,10,11,12,14 mod 16";
    case ResidueGroup::Four: return sign + ", a=4 mod 16";
  }
  return sign;
}

LangBound lang_lower_bound(const Integer& a) {
  if (a == 0) throw Error(Errc::ZeroInput, "a must be nonzero");
  if (!is_fourth_power_free(a)) {
    throw Error(Errc::NotMinimal, "a = " + a.get_str() + " is not fourth-power-free");
  }
  LangBound out;
  out.a = a;
  out.group = residue_group(a);
  const bool pos = a > 0;
  switch (out.group) {
    case ResidueGroup::Odd: out.log2_coefficient = pos ? Rational(1, 2) : Rational(9, 16); break;
    case ResidueGroup::Even: out.log2_coefficient = pos ? Rational(1, 4) : Rational(5, 16); break;
    case ResidueGroup::Four: out.log2_coefficient = pos ? Rational(-1, 8) : Rational(-1, 16); break;
  }
  out.bound = log_abs(a) / 16 + out.log2_coefficient.get_d() * kLog2;
  return out;
}

double corollary_bound(const Integer& a) {
  if (a == 0) throw Error(Errc::ZeroInput, "a must be nonzero");
  const Integer reduced = fourth_power_free_part(a).reduced;
  return (6 * kLog2 + 3 * log_abs(reduced)) / 48 - kLog2 / 4;
}

DiffBounds diff_bounds(const Integer& a) {
  if (a == 0) throw Error(Errc::ZeroInput, "a must be nonzero");
  DiffBounds out;
  out.a = a;
  const double quarter = log_abs(a) / 4;
  out.lower_sqrt = -quarter - std::exp(-2 * quarter) / 2;
  out.lower_const = -quarter - 0.16;
  out.upper = quarter + 3 * kLog2 / 8;
  return out;
}

double oracle_radius(const Integer& a, unsigned depth) {
  const DiffBounds d = diff_bounds(a);
  const double spread = std::max(d.upper, -d.best_lower());
  return std::ldexp(spread, -2 * static_cast<int>(depth));
}

Verdict Certificate::overall() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
  }
  return v;
}

const BoundCheck* Certificate::find(Theorem t) const {
  for (const auto& c : checks) {
    if (c.theorem == t) return &c;
  }
  return nullptr;
}

Certificate certify_point(const Curve& curve, const Point& p, const ArchOptions& options) {
  Certificate out = build(curve, p, options);
  if (out.overall() == Verdict::Inconclusive && options.precision == Precision::Standard) {
    ArchOptions wider = options;
    wider.precision = Precision::Extended;
    wider.terms = options.terms * 2;
    out = build(curve, p, wider);
    out.extended_rerun = true;
  }
  return out;
}

}  // namespace eah

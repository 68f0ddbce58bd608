#pragma once

#include <string>
#include <string_view>

namespace eah {

enum class Theorem { Lang, Corollary, DiffUpper, DiffLowerSqrt, DiffLowerConst, B2 };
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Theorem t) noexcept;
std::string_view to_string(Verdict v) noexcept;

/// One inequality checked on one point. margin is oriented so that a
/// positive value means the inequality holds.
struct BoundCheck {
  Theorem theorem = Theorem::Lang;
  double bound = 0;
  double actual = 0;
  double margin = 0;
  double error_bound = 0;
  Verdict verdict = Verdict::Inconclusive;

  bool pass() const noexcept { return verdict == Verdict::Pass; }
};

/// Strict inequality under numeric uncertainty: pass only when the margin
/// clears the error bound, fail only when it is below -error_bound.
Verdict judge(double margin, double error_bound) noexcept;

}  // namespace eah

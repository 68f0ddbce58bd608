#pragma once

#include <string>
#include <vector>

#include "eah/arith.hpp"
#include "eah/canonical_height.hpp"
#include "eah/certificate.hpp"
#include "eah/curve.hpp"

namespace eah {

/// Residue groups of a mod 16 that select the lower-bound constant.
enum class ResidueGroup { Odd, Even, Four };

ResidueGroup residue_group(const Integer& a);
/// "a>0, a=1,5,7,9,13,15 mod 16" and so on.
std::string class_tag(const Integer& a);

struct LangBound {
  Integer a;
  ResidueGroup group = ResidueGroup::Odd;
  /// c in (1/16) log|a| + c log 2.
  Rational log2_coefficient;
  double bound = 0;
};

/// Requires a fourth-power-free (Errc::NotMinimal).
LangBound lang_lower_bound(const Integer& a);

/// (1/48) log(64 |a'|^3) - (1/4) log 2 on the minimal twin a' of a.
double corollary_bound(const Integer& a);

struct DiffBounds {
  Integer a;
  double lower_sqrt = 0;   // -(1/4) log|a| - 1 / (2 sqrt|a|)
  double lower_const = 0;  // -(1/4) log|a| - 0.16
  double upper = 0;        // (1/4) log|a| + (3/8) log 2

  double best_lower() const { return lower_sqrt > lower_const ? lower_sqrt : lower_const; }
};

DiffBounds diff_bounds(const Integer& a);

/// Certified |limit_oracle(depth) - canonical height| from the difference bounds.
double oracle_radius(const Integer& a, unsigned depth);

struct Certificate {
  HeightBreakdown height;
  std::vector<BoundCheck> checks;
  /// Set when an inconclusive verdict forced an extended-precision re-run.
  bool extended_rerun = false;
  std::vector<std::string> notes;

  Verdict overall() const;
  const BoundCheck* find(Theorem t) const;
};

/// Lang, Corollary, three difference bounds and B2 for nontorsion points;
/// only the difference bounds for torsion points. Non-minimal curves are
/// certified on their minimal twin. Errc::NotOnCurve.
Certificate certify_point(const Curve& curve, const Point& p, const ArchOptions& options = {});

}  // namespace eah

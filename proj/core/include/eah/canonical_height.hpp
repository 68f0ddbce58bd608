#pragma once

#include <map>
#include <string>
#include <vector>

#include "eah/arith.hpp"
#include "eah/certificate.hpp"
#include "eah/curve.hpp"
#include "eah/local_heights.hpp"

namespace eah {

/// h(x) = log max(|s|, |t|) for x = s/t in lowest terms.
double naive_height(const Rational& x);
/// Errc::InfinityPoint on O.
double naive_height(const Point& p);

struct HeightBreakdown {
  bool torsion = false;
  double naive = 0;
  double canonical = 0;
  ArchHeightValue archimedean;
  std::vector<NonArchLocalHeight> nonarch_terms;
  /// naive / 2 - canonical
  double difference = 0;
  double error_bound = 0;
  /// Model the local heights were evaluated on: a = minimal_a * scale^4.
  Integer minimal_a;
  Integer scale = 1;
};

/// Canonical height as lambda_infinity plus exact lambda_p over the primes
/// dividing 2 a den(x). Non-minimal curves are minimalized first; torsion
/// points return canonical = 0. Errc::NotOnCurve for points off the curve.
HeightBreakdown canonical_height(const Curve& curve, const Point& p, const ArchOptions& options = {});

inline constexpr unsigned kDefaultOracleDepth = 6;
inline constexpr unsigned kMaxOracleDepth = 10;

/// (1/2) h(2^n P) / 4^n from exact doublings. Errc::TorsionPoint for torsion
/// input; Errc::DepthExceeded when doublings > max_depth.
double limit_oracle(const Curve& curve, const Point& p, unsigned doublings = kDefaultOracleDepth,
                    unsigned max_depth = kMaxOracleDepth);

struct DenominatorRecord {
  unsigned n = 0;
  Integer A;
  Integer B;
  unsigned long ord2_B = 0;
};

/// x(nP) = A_n / B_n for n = 1..upto. Requires minimal a and nontorsion P.
std::vector<DenominatorRecord> denominator_sequence(const Curve& curve, const Point& p, unsigned upto);

/// ord_2(B_2) class bound: 4, 2 or 0 by a mod 16.
unsigned b2_class_bound(const Integer& a);

struct B2Report {
  unsigned long ord2_B1 = 0;
  unsigned long ord2_B2 = 0;
  unsigned class_bound = 0;
  bool class_ok = false;
  /// Stated hypothesis of the step inequality: a != 4 mod 16 or ord_2(x(P)) != 1.
  bool step_hypothesis = false;
  /// Hypothesis the argument actually uses: a != 4 mod 16 or ord_2(x(P)) even.
  bool proof_hypothesis = false;
  bool step_ok = true;
  BoundCheck check;
  /// Points where the stated and proof-side hypotheses disagree.
  std::vector<std::string> discrepancies;
};

B2Report check_b2_bounds(const Curve& curve, const Point& p);

/// Rational combination sum_p c_p log(p), keyed by prime.
using LogCombination = std::map<Integer, Rational>;

struct SumFormulaCheck {
  Rational x2p;
  LogCombination local_sum;    // sum of lambda_p(2P) over primes
  LogCombination closed_form;  // log|delta| + log|Delta|/12 - [..] log(2)/2
  LogCombination residue;      // local_sum - closed_form, zero entries dropped

  bool exact() const { return residue.empty(); }
};

/// Evaluates both sides of the non-archimedean sum identity for 2P exactly.
SumFormulaCheck check_sum_formula(const Curve& curve, const Point& p);

}  // namespace eah

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eah/bounds.hpp"

namespace eah {

struct SweepOptions {
  Integer amin = -20;
  Integer amax = 20;
  unsigned search_bound = 60;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
  ArchOptions arch;
};

struct SweepRow {
  Integer a;
  Point point = Point::infinity();
  Certificate certificate;
  /// Nontorsion rows only.
  std::optional<SumFormulaCheck> sum_formula;
  std::optional<B2Report> b2;
  /// x(2P) is a rational square (nontorsion rows only; true otherwise).
  bool x2p_square = true;

  bool torsion() const { return certificate.height.torsion; }
};

struct ClassSummary {
  std::size_t curves = 0;
  std::size_t points = 0;
  std::size_t nontorsion = 0;
  std::map<Theorem, double> min_margin;
  /// (a, x) attaining the minimum Lang margin.
  std::optional<std::pair<Integer, Rational>> lang_argmin;
};

struct SweepReport {
  /// Minimal, deduplicated curve parameters actually processed.
  std::vector<Integer> curves;
  /// Sorted by a, then x.
  std::vector<SweepRow> rows;
  std::map<std::string, ClassSummary> classes;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::size_t sum_formula_mismatches = 0;
  std::size_t b2_violations = 0;
  std::size_t square_violations = 0;
  std::size_t hypothesis_mismatches = 0;
  /// Per-curve errors and logged hypothesis discrepancies.
  std::vector<std::string> log;

  bool clean() const {
    return failures == 0 && inconclusive == 0 && sum_formula_mismatches == 0 && b2_violations == 0 &&
           square_violations == 0 && hypothesis_mismatches == 0;
  }
};

/// Minimal twins of every nonzero a in [amin, amax], deduplicated, sorted.
std::vector<Integer> sweep_curves(const Integer& amin, const Integer& amax);

SweepReport sweep(const SweepOptions& options);

}  // namespace eah

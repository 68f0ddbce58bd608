#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eah/bounds.hpp"
#include "eah/curve.hpp"

namespace eah {

/// c_0 = c_1 = 1 and d_0 = 0, d_1 = 1, both with x_n = 2 x_{n-1} + x_{n-2}.
Integer pell_c(unsigned long n);
Integer pell_d(unsigned long n);

/// z >= 0 with c^2 - 2 z^2 = +-1, if any.
std::optional<Integer> pell_c_witness(const Integer& c);
/// z >= 0 with 2 d^2 - z^2 = +-4, if any.
std::optional<Integer> pell_d_witness(const Integer& d);

/// Every rational P (one per x, y >= 0) with x(2P) = xi, from the
/// factorization of (x^2 - a)^2 - 4 xi (x^3 + a x) into two quadratics.
std::vector<Point> halve_point(const Curve& curve, const Rational& xi);

enum class FamilyKind { LangPos, LangNeg, DiffLowerPos, DiffLowerNeg, DiffUpper };

struct ExtremalCandidate {
  std::string family;
  FamilyKind kind = FamilyKind::LangPos;
  Integer parameter;
  /// Recurrence index actually used (LangNeg only).
  std::optional<unsigned long> index;
  Curve curve{1};
  Point point = Point::infinity();
  std::optional<Rational> target_x2p;
  bool validated = false;
  bool minimal = true;
  std::string note;
};

/// Positive-a rows; residue 1..15. Literal rows that fail validation raise
/// Errc::RowValidationFailed. a1 >= 1.
ExtremalCandidate family_lang_pos(unsigned residue, const Integer& a1);
/// Re-derived replacements for the positive rows that fail validation (1, 11).
ExtremalCandidate family_lang_pos_rederived(unsigned residue, const Integer& a1);

/// Negative-a rows; residue 1..15. Errc::NoRationalHalf when no half exists,
/// Errc::RowValidationFailed when a is not an integer of the claimed class.
ExtremalCandidate family_lang_neg(unsigned residue, unsigned long n);
/// Residue 4 with d = 2 d_{2n+1}, the indices where halving succeeds.
ExtremalCandidate family_lang_neg_rederived(unsigned long n);

enum class DiffKind { LowerPos, LowerNeg, Upper };
ExtremalCandidate family_diff(DiffKind kind, const Integer& a1);

/// Dispatch on the CLI family name: lang-pos-<r>, lang-pos-1r, lang-pos-11r,
/// lang-neg-<r>, lang-neg-4r, diff-lower-pos, diff-lower-neg, diff-upper.
ExtremalCandidate make_family(std::string_view name, const Integer& param);
std::vector<std::string> family_names();

/// Certificate of the candidate plus the check of the bound it approaches.
struct ExtremalCertification {
  Certificate certificate;
  BoundCheck focus;
  /// (1/2)h - h^ - (1/4)log|a| for difference families.
  std::optional<double> constant;
  /// Lower-bound families: h^ minus the bound formula evaluated at the family's own a.
  /// Equals focus.margin when a is fourth-power-free; otherwise the check itself runs
  /// on the minimal twin and its margin jumps by (1/16) log s^4.
  std::optional<double> family_margin;
};

ExtremalCertification certify_candidate(const ExtremalCandidate& c, const ArchOptions& options = {});

}  // namespace eah

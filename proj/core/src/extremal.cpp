#include "eah/extremal.hpp"

#include <array>
#include <cmath>
#include <map>

#include "eah/error.hpp"

namespace eah {

namespace {

struct Linear {
  long p;
  long q;
  Integer at(const Integer& a1) const { return p * a1 + q; }
};

// a = k u v w^2, x(P) = m s t.
struct PosRow {
  long k;
  Linear u, v, w;
  long m;
  Linear s, t;
};

const std::array<PosRow, 15> kPosRows = {{
    {1, {16, 1}, {256, 17}, {512, 33}, 1, {16, 1}, {512, 33}},
    {2, {16, 7}, {32, 15}, {64, 29}, 1, {32, 15}, {64, 29}},
    {1, {32, 13}, {32, 15}, {16, 7}, 1, {16, 7}, {32, 15}},
    {4, {8, 1}, {8, 5}, {8, 3}, 2, {8, 1}, {8, 3}},
    {1, {16, 5}, {256, 81}, {512, 161}, 4, {16, 5}, {512, 161}},
    {2, {16, 7}, {32, 13}, {64, 27}, 1, {32, 13}, {64, 27}},
    {1, {64, 23}, {64, 25}, {8, 3}, 1, {64, 25}, {8, 3}},
    {8, {2, 1}, {16, 7}, {32, 15}, 1, {16, 7}, {32, 15}},
    {1, {16, 7}, {256, 111}, {512, 223}, 4, {16, 7}, {512, 223}},
    {2, {8, 3}, {16, 7}, {32, 13}, 1, {16, 7}, {32, 13}},
    {1, {16, 5}, {16, 7}, {8, 3}, 4, {16, 5}, {8, 3}},
    {4, {4, 1}, {16, 3}, {32, 7}, 1, {16, 3}, {32, 7}},
    {1, {16, 3}, {256, 47}, {512, 95}, 4, {16, 3}, {512, 95}},
    {2, {8, 3}, {16, 5}, {32, 11}, 1, {16, 5}, {32, 11}},
    {1, {128, 55}, {128, 57}, {16, 7}, 1, {16, 7}, {128, 55}},
}};

// Replacements for rows 1 and 11: only the multiplier of x(P) changes.
const std::map<unsigned, long> kPosRederivedMultiplier = {{1, 4}, {11, 1}};

enum class NegKind { C16, C256, D };

struct NegRow {
  NegKind kind;
  unsigned long mult;
  unsigned long offset;
};

const std::array<NegRow, 15> kNegRows = {{
    {NegKind::C256, 512, 161},
    {NegKind::C16, 32, 13},
    {NegKind::C16, 16, 6},
    {NegKind::D, 1, 0},
    {NegKind::C256, 512, 289},
    {NegKind::C16, 32, 11},
    {NegKind::C256, 64, 8},
    {NegKind::C16, 32, 15},
    {NegKind::C256, 512, 417},
    {NegKind::C16, 32, 3},
    {NegKind::C16, 16, 2},
    {NegKind::C16, 16, 4},
    {NegKind::C256, 512, 33},
    {NegKind::C16, 32, 5},
    {NegKind::C256, 64, 24},
}};

const char* kRederiveHint =
    "re-derive the row with the two-step construction: fix x(2P), solve for the a admitting it, "
    "then keep the a for which the halving quadratics have rational roots";

void check_residue(unsigned residue) {
  if (residue < 1 || residue > 15) {
    throw Error(Errc::InvalidArgument, "residue must lie in 1..15, got " + std::to_string(residue));
  }
}

Rational positive_target(unsigned residue) {
  switch (residue) {
    case 1: case 5: case 7: case 9: case 13: case 15: return Rational(1, 16);
    case 4: return 4;
    default: return Rational(1, 4);
  }
}

ExtremalCandidate build_pos(unsigned residue, const Integer& a1, long multiplier, std::string family) {
  if (a1 < 1) throw Error(Errc::InvalidArgument, "a1 must be a positive integer");
  const PosRow& row = kPosRows[residue - 1];
  ExtremalCandidate out;
  out.family = std::move(family);
  out.kind = FamilyKind::LangPos;
  out.parameter = a1;
  const Integer w = row.w.at(a1);
  const Integer a = row.k * row.u.at(a1) * row.v.at(a1) * w * w;
  const Integer x = multiplier * row.s.at(a1) * row.t.at(a1);
  out.curve = Curve(a);
  out.target_x2p = positive_target(residue);

  const auto y = exact_sqrt(Integer(x * x * x + a * x));
  if (!y) {
    throw Error(Errc::RowValidationFailed, out.family + " with a1 = " + a1.get_str() + ": x = " +
                                               x.get_str() + " gives no rational y on a = " + a.get_str() +
                                               "; " + kRederiveHint);
  }
  out.point = Point::affine(x, *y);
  const Rational x2 = double_x(out.curve, x);
  if (x2 != *out.target_x2p) {
    throw Error(Errc::RowValidationFailed, out.family + ": x(2P) = " + to_string(x2) + ", expected " +
                                               to_string(*out.target_x2p) + "; " + kRederiveHint);
  }
  if (mod_positive(a, 16) != residue) {
    throw Error(Errc::RowValidationFailed, out.family + ": a = " + a.get_str() + " is not " +
                                               std::to_string(residue) + " mod 16");
  }
  out.validated = true;
  out.minimal = is_fourth_power_free(a);
  if (!out.minimal) out.note = "a is not fourth-power-free; heights are certified on the minimal twin";
  return out;
}

ExtremalCandidate finish_neg(ExtremalCandidate out, unsigned residue, const Rational& target, const Point& q) {
  const Integer& a = out.curve.a();
  out.target_x2p = target;
  if (!on_curve(out.curve, q)) {
    throw Error(Errc::RowValidationFailed, out.family + ": the target point is not on a = " + a.get_str());
  }
  const auto halves = halve_point(out.curve, target);
  if (halves.empty()) {
    throw Error(Errc::NoRationalHalf, out.family + " at index " + std::to_string(*out.index) +
                                          ": x(2P) = " + to_string(target) + " has no rational half on a = " +
                                          a.get_str());
  }
  if (a >= 0 || mod_positive(a, 16) != residue) {
    throw Error(Errc::RowValidationFailed, out.family + ": a = " + a.get_str() + " is not a negative integer = " +
                                               std::to_string(residue) + " mod 16");
  }
  out.point = halves.back();  // largest x
  out.validated = true;
  return out;
}

}  // namespace

Integer pell_c(unsigned long n) {
  Integer prev = 1, cur = 1;
  for (unsigned long k = 1; k < n; ++k) {
    Integer next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == 0 ? prev : cur;
}

Integer pell_d(unsigned long n) {
  if (n == 0) return 0;
  Integer prev = 0, cur = 1;
  for (unsigned long k = 1; k < n; ++k) {
    Integer next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<Integer> pell_c_witness(const Integer& c) {
  for (int sign : {1, -1}) {
    const Integer twice = c * c - sign;
    if (twice >= 0 && mpz_even_p(twice.get_mpz_t())) {
      if (auto z = exact_sqrt(Integer(twice / 2))) return z;
    }
  }
  return std::nullopt;
}

std::optional<Integer> pell_d_witness(const Integer& d) {
  for (int sign : {4, -4}) {
    const Integer z2 = 2 * d * d - sign;
    if (z2 >= 0) {
      if (auto z = exact_sqrt(z2)) return z;
    }
  }
  return std::nullopt;
}

std::vector<Point> halve_point(const Curve& curve, const Rational& xi) {
  const Rational a(curve.a());
  std::map<Rational, Point> found;
  auto try_x = [&](const Rational& x) {
    const auto y = is_rational_square(x * x * x + a * x);
    if (!y || *y == 0) return;
    const Point p = Point::affine(x, *y);
    const Point twice = double_point(curve, p);
    if (!twice.is_infinity() && twice.x() == xi) found.emplace(x, p);
  };

  if (xi == 0) {
    if (auto s = is_rational_square(a)) {
      try_x(*s);
      try_x(-*s);
    }
  } else {
    // x(2P) is always a square, and xi must be the x of a rational point.
    const auto s = is_rational_square(xi);
    if (!s) return {};
    const auto eta = is_rational_square(xi * xi * xi + a * xi);
    if (!eta) return {};
    for (int sign : {1, -1}) {
      const Rational t = xi + sign * *eta / *s;
      if (auto r = is_rational_square(t * t - a)) {
        try_x(t + *r);
        try_x(t - *r);
      }
    }
  }
  std::vector<Point> out;
  for (auto& [x, p] : found) out.push_back(std::move(p));
  return out;
}

ExtremalCandidate family_lang_pos(unsigned residue, const Integer& a1) {
  check_residue(residue);
  return build_pos(residue, a1, kPosRows[residue - 1].m, "lang-pos-" + std::to_string(residue));
}

ExtremalCandidate family_lang_pos_rederived(unsigned residue, const Integer& a1) {
  const auto it = kPosRederivedMultiplier.find(residue);
  if (it == kPosRederivedMultiplier.end()) {
    throw Error(Errc::InvalidArgument, "no re-derived row for residue " + std::to_string(residue));
  }
  return build_pos(residue, a1, it->second, "lang-pos-" + std::to_string(residue) + "r");
}

ExtremalCandidate family_lang_neg(unsigned residue, unsigned long n) {
  check_residue(residue);
  const NegRow& row = kNegRows[residue - 1];
  ExtremalCandidate out;
  out.family = "lang-neg-" + std::to_string(residue);
  out.kind = FamilyKind::LangNeg;
  out.parameter = n;

  if (row.kind == NegKind::D) {
    out.index = n;
    const Integer d = pell_d(n);
    out.curve = Curve(Integer(4 - d * d * d * d));  // d^4 = 4 has no integer solution
    out.note = "d = " + d.get_str();
    return finish_neg(std::move(out), residue, Rational(d * d), Point::affine(d * d, 2 * d));
  }

  const unsigned long index = row.mult * n + row.offset;
  out.index = index;
  const Integer c = pell_c(index);
  const long denom = row.kind == NegKind::C16 ? 16 : 256;
  const Integer c2 = c * c;
  const Integer num = c2 * c2 - 1;
  if (num % denom != 0 || num == 0) {
    throw Error(Errc::RowValidationFailed, out.family + ": (c^4 - 1) / " + std::to_string(denom) +
                                               " is not a nonzero integer for c = c_" + std::to_string(index));
  }
  out.curve = Curve(Integer(-num / denom));
  const long xden = row.kind == NegKind::C16 ? 4 : 16;
  const long yden = row.kind == NegKind::C16 ? 8 : 64;
  const auto z = pell_c_witness(c);
  out.note = "c = c_" + std::to_string(index) + (z ? ", c^2 - 2z^2 = +-1 with z = " + z->get_str() : "");
  return finish_neg(std::move(out), residue, make_rational(c2, xden),
                    Point::affine(make_rational(c2, xden), make_rational(c, yden)));
}

ExtremalCandidate family_lang_neg_rederived(unsigned long n) {
  ExtremalCandidate out;
  out.family = "lang-neg-4r";
  out.kind = FamilyKind::LangNeg;
  out.parameter = n;
  out.index = 2 * n + 1;
  const Integer d = 2 * pell_d(2 * n + 1);
  out.curve = Curve(Integer(4 - d * d * d * d));
  out.note = "d = 2 d_" + std::to_string(2 * n + 1) + " = " + d.get_str();
  return finish_neg(std::move(out), 4, Rational(d * d), Point::affine(d * d, 2 * d));
}

ExtremalCandidate family_diff(DiffKind kind, const Integer& a1) {
  if (a1 < 1) throw Error(Errc::InvalidArgument, "a1 must be a positive integer");
  ExtremalCandidate out;
  out.parameter = a1;
  const Integer odd = 2 * a1 + 1;
  switch (kind) {
    case DiffKind::LowerPos:
      out.family = "diff-lower-pos";
      out.kind = FamilyKind::DiffLowerPos;
      out.curve = Curve(Integer(4 * a1 * a1 + 4 * a1));
      out.point = Point::affine(1, odd);
      break;
    case DiffKind::LowerNeg:
      out.family = "diff-lower-neg";
      out.kind = FamilyKind::DiffLowerNeg;
      out.curve = Curve(Integer(-4 * a1 * a1 - 4 * a1 - 2));
      out.point = Point::affine(-1, odd);
      break;
    case DiffKind::Upper: {
      out.family = "diff-upper";
      out.kind = FamilyKind::DiffUpper;
      const Integer a = 32 * a1 * a1 + 32 * a1 + 4;
      out.curve = Curve(a);
      out.point = Point::affine(a / 2, Integer(4 * odd * (8 * a1 * a1 + 8 * a1 + 1)));
      break;
    }
  }
  out.validated = on_curve(out.curve, out.point);
  if (!out.validated) throw Error(Errc::RowValidationFailed, out.family + " produced an off-curve point");
  return out;
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (unsigned r = 1; r <= 15; ++r) names.push_back("lang-pos-" + std::to_string(r));
  names.push_back("lang-pos-1r");
  names.push_back("lang-pos-11r");
  for (unsigned r = 1; r <= 15; ++r) names.push_back("lang-neg-" + std::to_string(r));
  names.push_back("lang-neg-4r");
  names.push_back("diff-lower-pos");
  names.push_back("diff-lower-neg");
  names.push_back("diff-upper");
  return names;
}

ExtremalCandidate make_family(std::string_view name, const Integer& param) {
  auto unknown = [&] { return Error(Errc::InvalidArgument, "unknown family '" + std::string(name) + "'"); };
  if (name == "diff-lower-pos") return family_diff(DiffKind::LowerPos, param);
  if (name == "diff-lower-neg") return family_diff(DiffKind::LowerNeg, param);
  if (name == "diff-upper") return family_diff(DiffKind::Upper, param);

  const bool pos = name.starts_with("lang-pos-");
  const bool neg = name.starts_with("lang-neg-");
  if (!pos && !neg) throw unknown();
  std::string_view rest = name.substr(9);
  const bool rederived = rest.ends_with("r");
  if (rederived) rest.remove_suffix(1);
  if (rest.empty() || rest.size() > 2 || rest.find_first_not_of("0123456789") != std::string_view::npos) {
    throw unknown();
  }
  const unsigned residue = static_cast<unsigned>(std::stoul(std::string(rest)));
  if (pos) {
    return rederived ? family_lang_pos_rederived(residue, param) : family_lang_pos(residue, param);
  }
  if (param < 0 || !param.fits_ulong_p()) throw Error(Errc::InvalidArgument, "index must be a nonnegative integer");
  if (rederived) {
    if (residue != 4) throw unknown();
    return family_lang_neg_rederived(param.get_ui());
  }
  return family_lang_neg(residue, param.get_ui());
}

ExtremalCertification certify_candidate(const ExtremalCandidate& c, const ArchOptions& options) {
  ExtremalCertification out;
  out.certificate = certify_point(c.curve, c.point, options);
  Theorem focus = Theorem::Lang;
  const double quarter = log_abs(c.curve.a()) / 4;
  const double diff = out.certificate.height.difference;
  switch (c.kind) {
    case FamilyKind::LangPos:
    case FamilyKind::LangNeg: {
      focus = Theorem::Lang;
      const LangBound minimal = lang_lower_bound(out.certificate.height.minimal_a);
      const double literal = log_abs(c.curve.a()) / 16 + minimal.log2_coefficient.get_d() * std::log(2.0);
      out.family_margin = out.certificate.height.canonical - literal;
      break;
    }
    case FamilyKind::DiffUpper:
      focus = Theorem::DiffUpper;
      out.constant = diff - quarter;
      break;
    case FamilyKind::DiffLowerPos:
    case FamilyKind::DiffLowerNeg:
      focus = Theorem::DiffLowerSqrt;
      out.constant = diff + quarter;
      break;
  }
  if (const BoundCheck* check = out.certificate.find(focus)) out.focus = *check;
  return out;
}

}  // namespace eah

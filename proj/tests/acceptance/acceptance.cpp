// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: eah_acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eah/bounds.hpp"
#include "eah/canonical_height.hpp"
#include "eah/error.hpp"
#include "eah/extremal.hpp"
#include "eah/local_heights.hpp"
#include "eah/search.hpp"
#include "eah/sweep.hpp"

using namespace eah;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { detail.push_back(what); }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pt(const Integer& a, const Point& p) {
  return "a=" + to_string(a) + " (" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome oracle_equivalence() {
  Outcome o;
  struct Case {
    long a, x, y;
    bool deep;
  };
  for (const Case& c : {Case{3, 1, 2, true}, Case{-2, -1, 1, true}, Case{56628, 198, 4356, false}}) {
    const Curve curve(c.a);
    const Point p = Point::affine(c.x, c.y);
    const auto t0 = Clock::now();
    const double h = canonical_height(curve, p).canonical;
    const double l6 = limit_oracle(curve, p, 6);
    const double s6 = seconds_since(t0);
    const double d6 = std::abs(h - l6);
    o.note(pt(c.a, p) + ": canonical " + num(h) + ", depth 6 " + num(l6) + ", |diff| " + num(d6) + " in " +
           num(s6) + " s");
    o.require(d6 < 1e-5, pt(c.a, p) + " depth 6 within 1e-5");
    o.require(s6 < 1.0, pt(c.a, p) + " depth 6 under 1 s");
    if (c.deep) {
      const auto t1 = Clock::now();
      const double l8 = limit_oracle(curve, p, 8);
      const double s8 = seconds_since(t1);
      const double d8 = std::abs(h - l8);
      o.note(pt(c.a, p) + ": depth 8 " + num(l8) + ", |diff| " + num(d8) + " in " + num(s8) + " s");
      o.require(d8 < 1e-8, pt(c.a, p) + " depth 8 within 1e-8");
      o.require(s8 < 1.0, pt(c.a, p) + " depth 8 under 1 s");
    }
  }
  return o;
}

const SweepReport& acceptance_sweep() {
  static const SweepReport report = [] {
    SweepOptions opts;
    opts.amin = -200;
    opts.amax = 200;
    opts.search_bound = 100;
    const auto t0 = Clock::now();
    SweepReport r = sweep(opts);
    std::printf("sweep: %zu curves, %zu points, %.1f s\n", r.curves.size(), r.rows.size(), seconds_since(t0));
    return r;
  }();
  return report;
}

void log_sweep_errors(Outcome& o, const SweepReport& r) {
  for (const std::string& line : r.log) o.note("log: " + line);
}

Outcome lang_sweep() {
  Outcome o;
  const SweepReport& r = acceptance_sweep();
  o.require(r.curves.size() > 300, "sweep covers the minimal a with |a| <= 200");
  std::size_t checked = 0;
  for (const SweepRow& row : r.rows) {
    if (row.torsion()) continue;
    const BoundCheck* c = row.certificate.find(Theorem::Lang);
    if (c == nullptr) {
      o.require(false, pt(row.a, row.point) + " has no lower-bound check");
      continue;
    }
    ++checked;
    o.require(c->verdict == Verdict::Pass, pt(row.a, row.point) + " lower bound " + std::string(to_string(c->verdict)) +
                                               ", margin " + num(c->margin));
  }
  o.note(std::to_string(checked) + " nontorsion points checked");
  for (const auto& [tag, s] : r.classes) {
    const auto it = s.min_margin.find(Theorem::Lang);
    if (it != s.min_margin.end()) o.note(tag + ": min margin " + num(it->second));
  }
  log_sweep_errors(o, r);
  return o;
}

Outcome difference_sweep() {
  Outcome o;
  const SweepReport& r = acceptance_sweep();
  std::size_t checked = 0;
  for (const SweepRow& row : r.rows) {
    for (Theorem t : {Theorem::DiffUpper, Theorem::DiffLowerSqrt, Theorem::DiffLowerConst}) {
      const BoundCheck* c = row.certificate.find(t);
      o.require(c != nullptr && c->verdict == Verdict::Pass,
                pt(row.a, row.point) + " " + std::string(to_string(t)) + (c ? ", margin " + num(c->margin) : ""));
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " difference checks");

  // Torsion on every a in range, minimal or not.
  std::size_t torsion = 0;
  for (long a = -200; a <= 200; ++a) {
    if (a == 0) continue;
    const Curve curve(a);
    const double quarter = std::log(std::abs(static_cast<double>(a))) / 4;
    for (const Point& p : torsion_subgroup(curve).points) {
      const double d = canonical_height(curve, p).difference;
      const bool ok = std::abs(d) < 1e-9 || std::abs(d - quarter) < 1e-9;
      o.require(ok, pt(a, p) + " torsion difference " + num(d));
      ++torsion;
    }
  }
  o.note(std::to_string(torsion) + " torsion points");
  return o;
}

Outcome upper_sharpness() {
  Outcome o;
  const double target = 0.259930;
  double previous = -1;
  for (long a1 : {1, 10, 100, 1000}) {
    const ExtremalCertification cert = certify_candidate(family_diff(DiffKind::Upper, a1));
    const double k = cert.constant.value_or(-1);
    o.note("a1=" + std::to_string(a1) + ": constant " + num(k));
    o.require(k > previous, "constant increases at a1=" + std::to_string(a1));
    o.require(k < 3 * std::log(2.0) / 8, "constant below 3/8 log 2 at a1=" + std::to_string(a1));
    previous = k;
  }
  o.require(std::abs(previous - target) < 1e-4, "a1=1000 within 1e-4 of 0.259930");
  return o;
}

Outcome kodaira_golden() {
  Outcome o;
  struct Row {
    long a, p;
    const char* symbol;
    unsigned c;
  };
  const Row rows[] = {{5, 5, "III", 2},  {18, 3, "I0*", 4}, {9, 3, "I0*", 2},  {27, 3, "III*", 2},
                      {1, 2, "II", 1},   {3, 2, "III", 2},  {2, 2, "III", 2},  {12, 2, "I2*", 2},
                      {28, 2, "I2*", 4}, {20, 2, "I3*", 2}, {52, 2, "I3*", 4}, {8, 2, "III*", 2}};
  for (const Row& row : rows) {
    const ReductionData r = classify_reduction(Curve(row.a), row.p);
    const std::string got = r.kodaira.symbol() + "/" + std::to_string(r.tamagawa);
    const std::string want = std::string(row.symbol) + "/" + std::to_string(row.c);
    o.require(got == want, "a=" + std::to_string(row.a) + " p=" + std::to_string(row.p) + ": got " + got +
                               ", want " + want);
  }
  return o;
}

Outcome sum_formula() {
  Outcome o;
  const SweepReport& r = acceptance_sweep();
  std::size_t checked = 0;
  for (const SweepRow& row : r.rows) {
    if (row.torsion()) continue;
    o.require(row.sum_formula.has_value(), pt(row.a, row.point) + " has a sum-formula check");
    if (!row.sum_formula) continue;
    ++checked;
    if (!row.sum_formula->exact()) {
      std::ostringstream res;
      for (const auto& [prime, coef] : row.sum_formula->residue) res << " " << to_string(coef) << " log " << prime;
      o.require(false, pt(row.a, row.point) + " residue" + res.str());
    }
  }
  o.require(r.sum_formula_mismatches == 0, "sweep reports no mismatches");
  o.note(std::to_string(checked) + " points with zero residue");
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const SweepReport& r = acceptance_sweep();
  std::size_t checked = 0, stepped = 0;
  for (const SweepRow& row : r.rows) {
    if (row.torsion()) continue;
    ++checked;
    o.require(row.x2p_square, pt(row.a, row.point) + " x(2P) is a square");
    o.require(row.b2.has_value(), pt(row.a, row.point) + " has a denominator check");
    if (!row.b2) continue;
    const B2Report& b = *row.b2;
    o.require(b.class_ok, pt(row.a, row.point) + " ord2(B2)=" + std::to_string(b.ord2_B2) + " below " +
                              std::to_string(b.class_bound));
    if (b.step_hypothesis) {
      ++stepped;
      o.require(b.step_ok, pt(row.a, row.point) + " ord2(B2)=" + std::to_string(b.ord2_B2) + " < ord2(B1)+2=" +
                               std::to_string(b.ord2_B1 + 2));
    }
    for (const std::string& d : b.discrepancies) o.require(false, "discrepancy: " + d);
  }
  o.require(r.b2_violations == 0 && r.square_violations == 0 && r.hypothesis_mismatches == 0,
            "sweep counters are zero");
  o.require(r.log.empty(), "sweep log is empty");
  log_sweep_errors(o, r);
  o.note(std::to_string(checked) + " points, " + std::to_string(stepped) + " under the step hypothesis");
  return o;
}

Outcome z_ranges() {
  Outcome o;
  SweepOptions opts;
  opts.amin = -200;
  opts.amax = 200;
  opts.search_bound = 40;
  std::vector<std::pair<Curve, Point>> neg, pos;
  for (const Integer& a : sweep_curves(opts.amin, opts.amax)) {
    const Curve c(a);
    for (const Point& p : search_points(c, opts.search_bound)) {
      if (is_torsion(c, p)) continue;
      // Small multiples enlarge the pool; for a < 0, 2P lies on the identity component.
      for (long n = 1; n <= 3; ++n) (a < 0 ? neg : pos).emplace_back(c, multiply(c, n, p));
    }
  }
  std::mt19937_64 rng(20261016);
  auto sample = [&](std::vector<std::pair<Curve, Point>>& pool) {
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() > 1000) pool.erase(pool.begin() + 1000, pool.end());
  };
  sample(neg);
  sample(pos);
  o.require(neg.size() == 1000, "1000 points with a < 0 (have " + std::to_string(neg.size()) + ")");
  o.require(pos.size() == 1000, "1000 points with a > 0 (have " + std::to_string(pos.size()) + ")");

  std::size_t identity = 0;
  double zmin = 4, zmax = 1;
  for (const auto& [c, p] : neg) {
    const Rational& x = p.x();
    if (!(x > 0 && x * x > Rational(-c.a()))) continue;
    ++identity;
    const Rational z = z_value_exact(c, x);
    o.require(z > 1 && z < 4, pt(c.a(), p) + " z=" + to_string(z));
    zmin = std::min(zmin, z.get_d());
    zmax = std::max(zmax, z.get_d());
  }
  o.note(std::to_string(identity) + " identity-component points, z in [" + num(zmin) + ", " + num(zmax) + "]");

  double wmin = 1, wmax = 0.5;
  for (const auto& [c, p] : pos) {
    const double z = z_value(c, p.x());
    o.require(z >= 0.5 && z <= 1, pt(c.a(), p) + " z'=" + num(z));
    wmin = std::min(wmin, z);
    wmax = std::max(wmax, z);
  }
  o.note("a > 0: z' in [" + num(wmin) + ", " + num(wmax) + "]");
  return o;
}

template <class Fn>
bool raises(Errc code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Outcome extremal_validation() {
  Outcome o;
  for (DiffKind kind : {DiffKind::LowerPos, DiffKind::LowerNeg, DiffKind::Upper}) {
    for (long a1 = 1; a1 <= 10000; ++a1) {
      const ExtremalCandidate c = family_diff(kind, a1);
      if (!on_curve(c.curve, c.point)) o.require(false, c.family + " a1=" + std::to_string(a1) + " off curve");
    }
  }

  const ExtremalCandidate neg = family_lang_neg(3, 0);
  o.require(neg.curve.a() == -6003725, "lang-neg-3 n=0 gives a=-6003725 (got " + to_string(neg.curve.a()) + ")");
  o.require(neg.validated && neg.target_x2p && double_point(neg.curve, neg.point).x() == *neg.target_x2p,
            "lang-neg-3 n=0 halving succeeds");
  o.note("lang-neg-3 n=0: P = (" + to_string(neg.point.x()) + ", " + to_string(neg.point.y()) + ")");

  double previous = 1e300;
  for (long a1 : {1, 10, 100}) {
    const ExtremalCertification cert = certify_candidate(family_lang_pos(4, a1));
    const double m = cert.family_margin.value_or(-1);
    o.note("lang-pos-4 a1=" + std::to_string(a1) + ": margin " + num(m) + " (check on the minimal model: " +
           num(cert.focus.margin) + ")");
    o.require(cert.focus.pass(), "lang-pos-4 a1=" + std::to_string(a1) + " satisfies the bound");
    o.require(m > 0 && m < previous, "lang-pos-4 margin decreases at a1=" + std::to_string(a1));
    previous = m;
  }

  o.require(raises(Errc::RowValidationFailed, [] { family_lang_pos(1, 1); }),
            "residue-1 row raises RowValidationFailed");
  o.require(raises(Errc::RowValidationFailed, [] { family_lang_pos(11, 1); }),
            "residue-11 row raises RowValidationFailed");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "lower-bound sweep", lang_sweep},
      {3, "height-difference sweep", difference_sweep},
      {4, "sharpness of the upper difference constant", upper_sharpness},
      {5, "Kodaira golden table", kodaira_golden},
      {6, "sum-formula identity", sum_formula},
      {7, "denominator lemma suite", lemma_suite},
      {8, "z-range invariants", z_ranges},
      {9, "extremal validation", extremal_validation},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  bool ok = true;
  std::vector<std::string> summary;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::size_t failures = 0;
    for (const std::string& line : out.detail) {
      if (line.rfind("FAILED", 0) == 0 && ++failures > 20) continue;
      std::printf("  [%d] %s\n", c.id, line.c_str());
    }
    if (failures > 20) std::printf("  [%d] ... %zu failures in total\n", c.id, failures);
    char line[160];
    std::snprintf(line, sizeof line, "criterion %d %s: %s", c.id, out.pass ? "PASS" : "FAIL", c.title);
    summary.emplace_back(line);
    ok = ok && out.pass;
  }
  for (const std::string& s : summary) std::printf("%s\n", s.c_str());
  return ok ? 0 : 1;
}

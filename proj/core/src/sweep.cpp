#include "eah/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "eah/error.hpp"
#include "eah/search.hpp"

namespace eah {

namespace {

struct CurveResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> log;
};

CurveResult process_curve(const Integer& a, const SweepOptions& options) {
  CurveResult out;
  const Curve curve(a);
  std::vector<Point> points;
  try {
    points = search_points(curve, options.search_bound);
  } catch (const Error& e) {
    out.log.push_back("a=" + a.get_str() + ": search failed: " + e.what());
    return out;
  }
  for (const Point& p : points) {
    try {
      SweepRow row;
      row.a = a;
      row.point = p;
      row.certificate = certify_point(curve, p, options.arch);
      if (!row.torsion()) {
        row.sum_formula = check_sum_formula(curve, p);
        row.b2 = check_b2_bounds(curve, p);
        row.x2p_square = is_rational_square(double_point(curve, p).x()).has_value();
      }
      for (const auto& note : row.certificate.notes) {
        out.log.push_back("a=" + a.get_str() + ", x=" + to_string(p.x()) + ": " + note);
      }
      out.rows.push_back(std::move(row));
    } catch (const Error& e) {
      out.log.push_back("a=" + a.get_str() + ", x=" + to_string(p.x()) + ": " + e.what());
    }
  }
  return out;
}

void summarize(SweepReport& report) {
  for (const Integer& a : report.curves) report.classes[class_tag(a)].curves++;
  for (const SweepRow& row : report.rows) {
    ClassSummary& cls = report.classes[class_tag(row.a)];
    cls.points++;
    if (!row.torsion()) cls.nontorsion++;
    for (const BoundCheck& c : row.certificate.checks) {
      auto it = cls.min_margin.find(c.theorem);
      if (it == cls.min_margin.end() || c.margin < it->second) {
        cls.min_margin[c.theorem] = c.margin;
        if (c.theorem == Theorem::Lang) cls.lang_argmin = std::make_pair(row.a, row.point.x());
      }
      if (c.verdict == Verdict::Fail) report.failures++;
      if (c.verdict == Verdict::Inconclusive) report.inconclusive++;
    }
    if (row.sum_formula && !row.sum_formula->exact()) report.sum_formula_mismatches++;
    if (row.b2 && !row.b2->check.pass()) report.b2_violations++;
    if (row.b2 && !row.b2->discrepancies.empty()) report.hypothesis_mismatches++;
    if (!row.x2p_square) report.square_violations++;
  }
}

}  // namespace

std::vector<Integer> sweep_curves(const Integer& amin, const Integer& amax) {
  std::set<Integer> reduced;
  for (Integer a = amin; a <= amax; ++a) {
    if (a == 0) continue;
    reduced.insert(fourth_power_free_part(a).reduced);
  }
  return {reduced.begin(), reduced.end()};
}

SweepReport sweep(const SweepOptions& options) {
  if (options.amin > options.amax) throw Error(Errc::InvalidArgument, "amin must not exceed amax");
  SweepReport report;
  report.curves = sweep_curves(options.amin, options.amax);

  std::vector<CurveResult> results(report.curves.size());
  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(results.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < results.size(); i = next++) {
        results[i] = process_curve(report.curves[i], options);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Curves are already sorted and search output is sorted by x.
  for (auto& r : results) {
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
    for (auto& line : r.log) report.log.push_back(std::move(line));
  }
  summarize(report);
  return report;
}

}  // namespace eah

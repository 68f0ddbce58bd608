#include <doctest.h>

#include <algorithm>

#include "eah/error.hpp"
#include "eah/search.hpp"
#include "eah/sweep.hpp"

using namespace eah;

TEST_CASE("signed divisors") {
  CHECK(signed_divisors(12) == std::vector<Integer>{-12, -6, -4, -3, -2, -1, 1, 2, 3, 4, 6, 12});
  CHECK(signed_divisors(-1) == std::vector<Integer>{-1, 1});
}

TEST_CASE("search finds known points") {
  const auto pts = search_points(Curve(3), 60);
  CHECK(std::find(pts.begin(), pts.end(), Point::affine(1, 2)) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), Point::affine(Rational(1, 4), Rational(7, 8))) != pts.end());
  CHECK(std::is_sorted(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.x() < q.x(); }));
  for (const Point& p : pts) {
    CHECK(on_curve(Curve(3), p));
    CHECK(p.y() >= 0);
  }
  CHECK_THROWS_AS(search_points(Curve(48), 10), Error);
}

TEST_CASE("search agrees with brute-force rational enumeration") {
  for (long a : {-15, -6, -2, 3, 5, 6, 7, 17}) {
    const Curve c(a);
    const auto found = search_points(c, 12);
    // x = n / e^2 with |n| <= |a| 144 and e <= 12 covers the search box.
    for (long e = 1; e <= 12; ++e) {
      for (long n = -std::abs(a) * 144; n <= std::abs(a) * 144; ++n) {
        const Rational x = make_rational(n, e * e);
        if (x.get_den() != e * e || x == 0) continue;
        const auto y = is_rational_square(x * x * x + Rational(a) * x);
        if (!y) continue;
        const auto d = descent_form(c, Point::affine(x, *y));
        if (d.M > 12 || d.e > 12) continue;
        CAPTURE(a);
        CAPTURE(to_string(x));
        CHECK(std::find(found.begin(), found.end(), Point::affine(x, *y)) != found.end());
      }
    }
  }
}

TEST_CASE("sweep curves are minimal and deduplicated") {
  const auto curves = sweep_curves(-20, 20);
  CHECK(std::is_sorted(curves.begin(), curves.end()));
  CHECK(std::adjacent_find(curves.begin(), curves.end()) == curves.end());
  for (const auto& a : curves) CHECK(is_fourth_power_free(a));
  // 16 -> 1 and -16 -> -1 are folded in.
  CHECK(curves.size() == 38);
}

TEST_CASE("small sweep") {
  SweepOptions opts;
  opts.amin = -20;
  opts.amax = 20;
  opts.search_bound = 60;
  const SweepReport r = sweep(opts);
  CHECK(r.clean());
  CHECK(r.log.empty());
  bool found = false;
  for (const auto& row : r.rows) {
    if (row.a == 3 && row.point == Point::affine(1, 2)) {
      found = true;
      CHECK(row.certificate.overall() == Verdict::Pass);
    }
  }
  CHECK(found);
  CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const SweepRow& p, const SweepRow& q) {
    return p.a < q.a || (p.a == q.a && p.point.x() < q.point.x());
  }));
}

TEST_CASE("curves with only torsion") {
  for (long a : {2, 1, -1}) {
    SweepOptions opts;
    opts.amin = a;
    opts.amax = a;
    const SweepReport r = sweep(opts);
    for (const auto& row : r.rows) CHECK(row.torsion());
  }
}

TEST_CASE("worker count does not change the report") {
  SweepOptions opts;
  opts.amin = -30;
  opts.amax = 30;
  opts.search_bound = 20;
  opts.workers = 1;
  const SweepReport one = sweep(opts);
  opts.workers = 4;
  const SweepReport four = sweep(opts);
  REQUIRE(one.rows.size() == four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].a == four.rows[i].a);
    CHECK(one.rows[i].point == four.rows[i].point);
    CHECK(one.rows[i].certificate.height.canonical == four.rows[i].certificate.height.canonical);
  }
}

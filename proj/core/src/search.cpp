#include "eah/search.hpp"

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <map>
#include <numeric>

#include "eah/error.hpp"

namespace eah {

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

bool fits_int64(const Integer& a, unsigned bound) {
  // |b1| M^4 + |b2| e^4 <= 2 |a| bound^4 must stay below 2^62.
  const Integer limit = Integer(1) << 61;
  Integer b4 = bound;
  b4 = b4 * b4 * b4 * b4;
  return abs(a) * b4 < limit;
}

void record(std::map<Rational, Point>& found, const Curve& curve, const Integer& b1, const Integer& M,
            const Integer& N, const Integer& e) {
  const Integer e2 = e * e;
  const Rational x = make_rational(b1 * M * M, e2);
  const Rational y = abs(make_rational(b1 * M * N, e2 * e));
  if (!on_curve(curve, x, y)) throw Error(Errc::NotOnCurve, "search produced an off-curve point");
  found.emplace(x, Point::affine(x, y));
}

}  // namespace

std::vector<Integer> signed_divisors(const Integer& a) {
  if (a == 0) throw Error(Errc::ZeroInput, "divisors of 0");
  std::vector<Integer> divs{1};
  for (const auto& pp : factorize(a)) {
    const std::size_t n = divs.size();
    Integer power = 1;
    for (unsigned long k = 1; k <= pp.exponent; ++k) {
      power *= pp.prime;
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * power);
    }
  }
  const std::size_t n = divs.size();
  for (std::size_t i = 0; i < n; ++i) divs.push_back(-divs[i]);
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Point> search_points(const Curve& curve, unsigned bound) {
  if (!curve.is_minimal()) {
    throw Error(Errc::NotMinimal, "a = " + curve.a().get_str() + " is not fourth-power-free");
  }
  const Integer& a = curve.a();
  std::map<Rational, Point> found;
  found.emplace(Rational(0), Point::affine(0, 0));

  std::vector<Integer> fourth_big(bound + 1);
  for (unsigned k = 0; k <= bound; ++k) {
    fourth_big[k] = Integer(k) * k * k * k;
  }
  const bool small = fits_int64(a, bound);

  for (const Integer& b1 : signed_divisors(a)) {
    const Integer b2 = a / b1;
    const long b1_l = small ? b1.get_si() : 0;
    const long b2_l = small ? b2.get_si() : 0;
    for (unsigned e = 1; e <= bound; ++e) {
      if (gcd(b1, Integer(e)) != 1) continue;
      for (unsigned M = 1; M <= bound; ++M) {
        if (std::gcd(M, e) != 1) continue;
        if (small) {
          const std::int64_t m4 = static_cast<std::int64_t>(M) * M * M * M;
          const std::int64_t e4 = static_cast<std::int64_t>(e) * e * e * e;
          const auto n = isqrt_exact(b1_l * m4 + b2_l * e4);
          if (n) record(found, curve, b1, M, Integer(static_cast<long>(*n)), e);
        } else {
          const Integer v = b1 * fourth_big[M] + b2 * fourth_big[e];
          if (auto n = exact_sqrt(v)) record(found, curve, b1, M, *n, e);
        }
      }
    }
  }
  std::vector<Point> out;
  out.reserve(found.size());
  for (auto& [x, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace eah

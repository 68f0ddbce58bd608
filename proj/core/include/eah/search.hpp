#pragma once

#include <vector>

#include "eah/curve.hpp"

namespace eah {

/// Signed divisors of a, ordered by value.
std::vector<Integer> signed_divisors(const Integer& a);

/// Affine points with x = b1 M^2 / e^2, b1 a signed divisor of a and
/// 1 <= M, e <= bound, plus (0, 0). One representative per x (y >= 0),
/// sorted by x. Requires a fourth-power-free (Errc::NotMinimal).
std::vector<Point> search_points(const Curve& curve, unsigned bound);

}  // namespace eah

#pragma once

#include "eah/local_heights.hpp"
#include "real.hpp"

namespace eah::detail {

/// lambda_infinity(P) at the working precision of Real, without torsion checks.
template <class Real>
Real archimedean_series(const Curve& curve, const Point& p, unsigned terms);

template <class Real>
Real tail_bound(unsigned terms) {
  return log(Real(4)) / (Real(24) * pow(Real(4), terms));
}

/// Rounding allowance for one series evaluation of the given magnitude.
template <class Real>
Real rounding_allowance(const Real& magnitude) {
  return (Real(1) + abs(magnitude)) * ldexp(Real(1), -static_cast<int>(precision_bits<Real>()) + 32);
}

}  // namespace eah::detail

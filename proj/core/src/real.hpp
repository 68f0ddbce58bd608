#pragma once

// Internal multiprecision reals for the archimedean path. Precision is fixed
// per type so concurrent workers never share a global precision setting.

#include <boost/multiprecision/mpfr.hpp>

#include "eah/arith.hpp"

namespace eah::detail {

namespace bmp = boost::multiprecision;

using StandardReal = bmp::number<bmp::mpfr_float_backend<40>, bmp::et_off>;
using ExtendedReal = bmp::number<bmp::mpfr_float_backend<80>, bmp::et_off>;

template <class Real>
unsigned precision_bits() {
  return static_cast<unsigned>(mpfr_get_prec(Real(1).backend().data()));
}

template <class Real>
Real to_real(const Integer& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

template <class Real>
Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

template <class Real>
Real log2_constant() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

/// log|n| for n != 0. Huge inputs are reduced to a mantissa of a few guard
/// bits beyond the working precision plus a power-of-two exponent.
template <class Real>
Real log_abs(const Integer& n) {
  const Integer m = abs(n);
  const unsigned keep = precision_bits<Real>() + 64;
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  if (bits <= keep) return log(to_real<Real>(m));
  const std::size_t shift = bits - keep;
  Integer mantissa;
  mpz_tdiv_q_2exp(mantissa.get_mpz_t(), m.get_mpz_t(), shift);
  return log(to_real<Real>(mantissa)) + Real(static_cast<double>(shift)) * log2_constant<Real>();
}

template <class Real>
Real log_abs(const Rational& q) {
  return log_abs<Real>(q.get_num()) - log_abs<Real>(q.get_den());
}

/// Sum of coefficient * log(prime) with an exact rational coefficient.
template <class Real>
Real log_term(const Rational& coefficient, const Integer& prime) {
  return to_real<Real>(coefficient) * log_abs<Real>(prime);
}

}  // namespace eah::detail

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eah {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws Errc::ZeroInput when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or a bare integer literal (optional sign). Decimal points,
/// exponents and whitespace are rejected with Errc::InvalidArgument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "numerator/denominator", denominator always printed.
std::string to_string(const Rational& x);
std::string to_string(const Integer& n);

bool is_prime(const Integer& p);

/// ord_p of a nonzero integer or rational. Errc::ZeroInput for 0,
/// Errc::NotPrime when p is not prime.
long ord_p(const Integer& n, const Integer& p);
long ord_p(const Rational& x, const Integer& p);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
};
using Factorization = std::vector<PrimePower>;

struct FactorOptions {
  /// Trial division runs over primes below this bound before Pollard rho.
  std::uint32_t trial_bound = 1u << 16;
  /// Total Pollard-Brent iterations allowed for the remaining cofactor.
  std::uint64_t rho_budget = 4'000'000;
};

/// Prime factorization of |n| in increasing prime order. Throws
/// Errc::ZeroInput for n == 0 and Errc::FactorizationBudgetExceeded rather
/// than returning a partial answer.
Factorization factorize(const Integer& n, const FactorOptions& options = {});

struct SquarefreeDecomposition {
  Integer squarefree;  // carries the sign of n
  Integer root;        // positive
};

/// n = squarefree * root^2.
SquarefreeDecomposition squarefree_decompose(const Integer& n, const FactorOptions& options = {});

struct FourthPowerFreeDecomposition {
  Integer reduced;  // fourth-power-free, same sign as n
  Integer scale;    // positive, n = reduced * scale^4
};

FourthPowerFreeDecomposition fourth_power_free_part(const Integer& n,
                                                    const FactorOptions& options = {});
bool is_fourth_power_free(const Integer& n, const FactorOptions& options = {});

/// Exact nonnegative square root of an integer, if it is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
/// Nonnegative r with r^2 == x, or nullopt (negative input gives nullopt).
std::optional<Rational> is_rational_square(const Rational& x);

/// Legendre symbol (n/p) for an odd prime p; Errc::NotOddPrime otherwise.
int legendre_symbol(const Integer& n, const Integer& p);

/// log|n| in double precision for n != 0 of any size.
double log_abs(const Integer& n);

/// Floor/mod helpers for residue classes of possibly negative integers.
unsigned long mod_positive(const Integer& n, unsigned long m);

}  // namespace eah

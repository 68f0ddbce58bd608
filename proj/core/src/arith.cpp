#include "eah/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "eah/error.hpp"

namespace eah {

namespace {

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  // Sieve once up to the largest bound anybody is allowed to request.
  static constexpr std::uint32_t kSieveLimit = 1u << 22;
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  if (bound > kSieveLimit) {
    throw Error(Errc::InvalidArgument, "trial division bound exceeds sieve limit");
  }
  return primes;
}

bool valid_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_signed_digits(std::string_view text, std::string_view what) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!valid_digits(body)) {
    throw Error(Errc::InvalidArgument, "malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

// Pollard-Brent rho; returns a nontrivial factor of n or 0 when the budget runs out.
Integer brent_factor(const Integer& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
        const std::uint64_t spent = std::min<std::uint64_t>(m, budget);
        budget -= spent;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_cofactor(const Integer& n, std::uint64_t& budget, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (auto root = exact_sqrt(n)) {
    std::map<Integer, unsigned long> half;
    factor_cofactor(*root, budget, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  Integer d = brent_factor(n, budget);
  if (d == 0) {
    throw Error(Errc::FactorizationBudgetExceeded, "could not split cofactor " + n.get_str());
  }
  factor_cofactor(d, budget, out);
  factor_cofactor(Integer(n / d), budget, out);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ZeroInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) { return parse_signed_digits(text, "integer"); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!valid_digits(den)) {
    throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  const Integer d = parse_signed_digits(den, "rational");
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_signed_digits(num, "rational"), d);
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

long ord_p(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(Errc::ZeroInput, "ord_p of zero");
  if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Rational& x, const Integer& p) {
  if (x == 0) throw Error(Errc::ZeroInput, "ord_p of zero");
  return ord_p(x.get_num(), p) - ord_p(x.get_den(), p);
}

Factorization factorize(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw Error(Errc::ZeroInput, "factorize(0)");
  Integer rest = abs(n);
  std::map<Integer, unsigned long> found;
  for (std::uint32_t p : small_primes(options.trial_bound)) {
    if (p >= options.trial_bound) break;
    if (Integer(std::uint64_t{p} * p) > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      const Integer prime(p);
      found[prime] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    }
  }
  std::uint64_t budget = options.rho_budget;
  factor_cofactor(rest, budget, found);

  Factorization out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

SquarefreeDecomposition squarefree_decompose(const Integer& n, const FactorOptions& options) {
  SquarefreeDecomposition out{n < 0 ? Integer(-1) : Integer(1), 1};
  for (const auto& [p, e] : factorize(n, options)) {
    if (e % 2 == 1) out.squarefree *= p;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.root *= power;
  }
  return out;
}

FourthPowerFreeDecomposition fourth_power_free_part(const Integer& n, const FactorOptions& options) {
  FourthPowerFreeDecomposition out{n < 0 ? Integer(-1) : Integer(1), 1};
  for (const auto& [p, e] : factorize(n, options)) {
    Integer keep, scale;
    mpz_pow_ui(keep.get_mpz_t(), p.get_mpz_t(), e % 4);
    mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), e / 4);
    out.reduced *= keep;
    out.scale *= scale;
  }
  return out;
}

bool is_fourth_power_free(const Integer& n, const FactorOptions& options) {
  return fourth_power_free_part(n, options).scale == 1;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> is_rational_square(const Rational& x) {
  auto num = exact_sqrt(x.get_num());
  if (!num) return std::nullopt;
  auto den = exact_sqrt(x.get_den());
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

int legendre_symbol(const Integer& n, const Integer& p) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::NotOddPrime, p.get_str() + " is not an odd prime");
  Integer r = n % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

unsigned long mod_positive(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

double log_abs(const Integer& n) {
  if (n == 0) throw Error(Errc::ZeroInput, "log of 0");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace eah

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zgcu {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Reduces a into 0..n-1 (n >= 1).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n);

/// Multiplicative order of k modulo n; requires gcd(k, n) = 1. Returns 1 when n = 1.
std::int64_t multiplicative_order(std::int64_t k, std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Inverse of k modulo n; requires gcd(k, n) = 1.
std::int64_t inverse_mod(std::int64_t k, std::int64_t n);

}  // namespace zgcu

#include "zgcu/rational.hpp"

#include <numeric>
#include <tuple>
#include <utility>

#include "zgcu/error.hpp"

namespace zgcu {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubnormal: return "NotSubnormal";
    case ErrorKind::NotEligible: return "NotEligible";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::SupportLeak: return "SupportLeak";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::IndependenceUnresolved: return "IndependenceUnresolved";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  if (n == 1) return 0;
  __int128 result = 1;
  __int128 b = mod_floor(base, n);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % n;
    b = (b * b) % n;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t multiplicative_order(std::int64_t k, std::int64_t n) {
  if (n == 1) return 1;
  if (std::gcd(mod_floor(k, n), n) != 1)
    fail(ErrorKind::InvalidInput, "multiplicative_order: k is not a unit modulo n");
  std::int64_t x = mod_floor(k, n);
  std::int64_t ord = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * mod_floor(k, n)) % n);
    ++ord;
  }
  return ord;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t inverse_mod(std::int64_t k, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod_floor(k, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) fail(ErrorKind::InvalidInput, "inverse_mod: not invertible");
  return mod_floor(old_s, n);
}

}  // namespace zgcu

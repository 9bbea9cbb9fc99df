#include "ntkit/numeric.hpp"

#include <cmath>

namespace ntkit {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

double log_mpz(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("log_mpz: argument must be positive");
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 62) return std::log(n.get_d());
  // log(n) = log(top 64 bits) + (bits-64)*log 2.  The truncation to the
  // top 64 bits perturbs n by a relative 2^-63 at most, far below the
  // 1e-12 budget.
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), bits - 64);
  return std::log(top.get_d()) + static_cast<double>(bits - 64) * M_LN2;
}

double log_iter(double x, int k) {
  if (k < 1) throw std::invalid_argument("log_iter: k must be >= 1");
  for (int i = 0; i < k; ++i) {
    if (!(x > 1.0))
      throw std::domain_error("log_iter: intermediate argument must exceed 1");
    x = std::log(x);
  }
  return x;
}

double log_iter_mpz(const mpz_class& n, int k) {
  if (k < 1) throw std::invalid_argument("log_iter_mpz: k must be >= 1");
  if (n <= 1) throw std::domain_error("log_iter_mpz: argument must exceed 1");
  if (k == 1) return log_mpz(n);
  return log_iter(log_mpz(n), k - 1);
}

}  // namespace ntkit

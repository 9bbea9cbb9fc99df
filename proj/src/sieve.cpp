#include "ntkit/sieve.hpp"

#include <cmath>
#include <mutex>

#include "ntkit/numeric.hpp"

namespace ntkit {

namespace {

std::mutex g_sieve_mutex;
std::shared_ptr<const std::vector<uint32_t>> g_primes;
uint64_t g_sieved_upto = 0;

std::shared_ptr<const std::vector<uint32_t>> sieve_to(uint64_t limit) {
  // Plain Eratosthenes over odd numbers; limit stays modest (<= 2^32).
  auto primes = std::make_shared<std::vector<uint32_t>>();
  if (limit >= 2) primes->push_back(2);
  if (limit >= 3) {
    const uint64_t half = (limit - 1) / 2;  // index i <-> odd number 2i+1
    std::vector<bool> composite(half + 1, false);
    for (uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
      if (composite[i]) continue;
      const uint64_t p = 2 * i + 1;
      for (uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    for (uint64_t i = 1; i <= half; ++i)
      if (!composite[i]) primes->push_back(static_cast<uint32_t>(2 * i + 1));
  }
  return primes;
}

}  // namespace

std::shared_ptr<const std::vector<uint32_t>> primes_upto(uint64_t limit) {
  if (limit > 0xFFFFFFFFull)
    throw capacity_error("primes_upto: sieve limit above 2^32 is unsupported");
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  if (!g_primes || g_sieved_upto < limit) {
    g_primes = sieve_to(limit);
    g_sieved_upto = limit;
  }
  return g_primes;
}

double chebyshev_theta(double x, uint64_t ceiling) {
  if (!(x >= 0)) throw std::domain_error("chebyshev_theta: x must be >= 0");
  if (x > static_cast<double>(ceiling))
    throw capacity_error("chebyshev_theta: x exceeds the sieve ceiling");
  if (x < 2) return 0.0;
  const uint64_t bound = static_cast<uint64_t>(x);
  auto primes = primes_upto(bound);
  double sum = 0.0;
  for (uint32_t p : *primes) {
    if (p > bound) break;
    sum += std::log(static_cast<double>(p));
  }
  return sum;
}

}  // namespace ntkit

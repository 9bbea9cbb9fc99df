#include <random>

#include "doctest.h"
#include "ntkit/factorization.hpp"
#include "ntkit/numeric.hpp"
#include "ntkit/sieve.hpp"
#include "oracles.hpp"

using namespace ntkit;

namespace {

mpz_class unfactor(const Factorization& f) {
  mpz_class prod = 1;
  for (const auto& [p, e] : f.factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  return prod;
}

}  // namespace

TEST_CASE("factorize on the worked examples") {
  CHECK(factorize(1).factors.empty());

  const Factorization f50 = factorize(50);
  REQUIRE(f50.factors.size() == 2);
  CHECK(f50.factors[0].first == 2);
  CHECK(f50.factors[0].second == 1);
  CHECK(f50.factors[1].first == 5);
  CHECK(f50.factors[1].second == 2);

  const Factorization f10 = factorize(3 * 3 + 1);
  REQUIRE(f10.factors.size() == 2);
  CHECK(f10.factors[0].first == 2);
  CHECK(f10.factors[1].first == 5);
  CHECK(f10.factors[1].second == 1);

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-7), std::invalid_argument);
}

TEST_CASE("radical, largest prime factor, exponent product") {
  CHECK(radical(factorize(72)) == 6);
  CHECK(radical(factorize(1)) == 1);
  CHECK(radical(factorize(10)) == 10);

  CHECK(largest_prime_factor(factorize(1)) == 1);
  CHECK(largest_prime_factor(factorize(50)) == 5);
  CHECK(largest_prime_factor(factorize(16 * 16 + 1)) == 257);
  CHECK(is_probable_prime(257));

  CHECK(exponent_product(factorize(50)) == 2);
  CHECK(exponent_product(factorize(30)) == 1);  // squarefree
  CHECK(exponent_product(factorize(72)) == 6);
}

TEST_CASE("valuation") {
  CHECK(valuation(50, 5) == 2);
  CHECK(valuation(50, 3) == 0);
  CHECK(valuation(1, 7) == 0);
  CHECK_THROWS_AS(valuation(50, 6), std::invalid_argument);
  CHECK_THROWS_AS(valuation(0, 5), std::invalid_argument);
}

TEST_CASE("round-trip: factorize multiplies back, exhaustively then randomly") {
  for (uint64_t n = 1; n <= 5000; ++n) {
    const auto fs = factorize_u64(n);
    uint64_t prod = 1;
    for (const auto& [p, e] : fs)
      for (unsigned i = 0; i < e; ++i) prod *= p;
    CHECK(prod == n);
  }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const uint64_t n = rng() % 1'000'000'000'000ull + 2;
    const Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)));
    CHECK(unfactor(f) == f.value);
    CHECK(factorization_consistent(f));
  }
}

TEST_CASE("radical is squarefree, divides n, multiplicative on coprime parts") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const uint64_t m = rng() % 100000 + 1;
    const uint64_t n = rng() % 100000 + 1;
    const mpz_class rm = radical(factorize(m));
    const mpz_class rn = radical(factorize(n));
    CHECK(mpz_divisible_p(mpz_class(mpz_class(m)).get_mpz_t(), rm.get_mpz_t()));
    const Factorization frm = factorize(rm);
    for (const auto& [p, e] : frm.factors) CHECK(e == 1);
    if (gcd_u64(m, n) == 1)
      CHECK(radical(factorize(mpz_class(m) * mpz_class(n))) == rm * rn);
  }
}

TEST_CASE("primality spot checks against the sieve") {
  auto primes = primes_upto(10000);
  size_t k = 0;
  for (uint64_t n = 2; n <= 10000; ++n) {
    const bool should = k < primes->size() && (*primes)[k] == n;
    CHECK(is_probable_prime_u64(n) == should);
    if (should) ++k;
  }
  // two 10-digit primes and their product
  CHECK(is_probable_prime_u64(1000000007ull));
  CHECK(is_probable_prime_u64(1000000009ull));
  CHECK(!is_probable_prime_u64(1000000007ull * 1000000009ull));
  const Factorization f = factorize(mpz_class(1000000007ul) * 1000000009ul);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == 1000000007ul);
  CHECK(f.factors[1].first == 1000000009ul);
}

TEST_CASE("structure of n^2+1: odd factors 1 mod 4, nu_2 at most 1") {
  std::mt19937_64 rng(11);
  auto check_n = [](uint64_t n) {
    for (const auto& [p, e] : factorize_u64(n * n + 1)) {
      if (p == 2)
        CHECK(e <= 1);
      else
        CHECK(p % 4 == 1);
    }
  };
  for (uint64_t n = 1; n <= 20000; ++n) check_n(n);
  for (int i = 0; i < 20000; ++i) check_n(rng() % 1'000'000 + 1);
}

TEST_CASE("chebyshev theta: worked values and sieve-vs-naive agreement") {
  CHECK(chebyshev_theta(1.5) == 0.0);
  CHECK(chebyshev_theta(2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const double t10 = std::log(2.0) + std::log(3.0) + std::log(5.0) + std::log(7.0);
  CHECK(chebyshev_theta(10) == doctest::Approx(t10).epsilon(1e-15));

  // identical summation order makes the comparison exact
  for (double x : {3.0, 97.0, 1000.0, 9999.0, 10000.0})
    CHECK(chebyshev_theta(x) == oracle::theta_naive(x));

  // nondecreasing on a grid
  double prev = 0;
  for (double x = 2; x <= 5000; x += 1) {
    const double t = chebyshev_theta(x);
    CHECK(t >= prev);
    prev = t;
  }

  CHECK_THROWS_AS(chebyshev_theta(1e9), capacity_error);
  CHECK_THROWS_AS(chebyshev_theta(100.0, 50), capacity_error);
  CHECK_THROWS_AS(chebyshev_theta(-1.0), std::domain_error);
}

TEST_CASE("log_mpz matches std::log below 2^53 and stays accurate above") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const uint64_t n = rng() % 9'000'000'000'000'000ull + 1;
    CHECK(log_mpz(mpz_class(static_cast<unsigned long>(n))) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-13));
  }
  // 10^100: ln = 100 ln 10
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
  CHECK(log_mpz(big) == doctest::Approx(100.0 * std::log(10.0)).epsilon(1e-13));
}

TEST_CASE("iterated log guards") {
  CHECK(log_iter(std::exp(std::exp(1.0)), 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(log_iter(1.0, 1), std::domain_error);
  CHECK_THROWS_AS(log_iter(2.0, 3), std::domain_error);  // log log 2 < 0 blocked
  CHECK_THROWS_AS(log_iter_mpz(mpz_class(15), 3), std::domain_error);
  CHECK(log_iter_mpz(mpz_class(16), 3) > 0.0);
}

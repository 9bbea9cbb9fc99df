#pragma once

// Integer factorization over arbitrary-precision integers and the
// elementary arithmetic functions built on it: radical, largest prime
// factor, p-adic valuation, exponent product.
//
// Backend: trial division by sieved primes up to 10^6 (with early exit
// once p^2 passes the cofactor), then Brent's variant of Pollard rho
// with parameters derived deterministically from the input, recursing
// on cofactors. Primality is Miller-Rabin: a deterministic witness set
// below 2^64, forty fixed-seed rounds above.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace ntkit {

struct Factorization {
  mpz_class value;  // >= 1
  std::vector<std::pair<mpz_class, unsigned>> factors;  // strictly increasing p
};

bool is_probable_prime_u64(uint64_t n);
bool is_probable_prime(const mpz_class& n);

std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n);
Factorization factorize(const mpz_class& n);

mpz_class radical(const Factorization& f);
mpz_class largest_prime_factor(const Factorization& f);
mpz_class exponent_product(const Factorization& f);
unsigned valuation(const mpz_class& n, const mpz_class& p);

// True when factors multiply back to value, all primes are probable
// primes, exponents >= 1, and the list is strictly sorted.
bool factorization_consistent(const Factorization& f);

}  // namespace ntkit

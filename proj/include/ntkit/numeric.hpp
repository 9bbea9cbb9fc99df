#pragma once

// Shared numeric primitives: 64-bit modular arithmetic, natural logs of
// arbitrary-precision integers, iterated logarithms with domain guards,
// and the error types the CLI maps to exit codes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntkit {

// Resource limit exceeded (sieve ceiling, oversized sweep range).
// The CLI reports these with exit code 3.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant failed mid-computation. Sweeps abort on these
// and the CLI exits with code 1.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);
uint64_t gcd_u64(uint64_t a, uint64_t b);

// log(n) for n >= 1, computed from the top 64 bits plus the bit length
// so that the relative error stays below 1e-12 no matter how large n is.
double log_mpz(const mpz_class& n);

// k-th iterate of the natural logarithm. Every intermediate argument
// must exceed 1; otherwise the next log is not positive and we refuse
// rather than return a NaN.
double log_iter(double x, int k);
double log_iter_mpz(const mpz_class& n, int k);

}  // namespace ntkit

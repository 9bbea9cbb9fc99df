#pragma once

// Test-side reference oracles, deliberately independent of the library
// implementation paths they check:
//  - quad-precision (113-bit) re-evaluations of the bound formulas
//  - the place-by-place height over Q(i), summed prime by prime
//  - brute-force singular-point scan of a curve mod p
//  - naive per-integer Chebyshev theta

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ntkit/elliptic.hpp"
#include "ntkit/factorization.hpp"
#include "ntkit/gaussian.hpp"
#include "ntkit/numeric.hpp"

namespace oracle {

using quad = boost::multiprecision::cpp_bin_float_quad;

inline quad qexp1() { return exp(quad(1)); }

inline quad threshold_B(quad R) { return exp(sqrt(log(R) * log(log(R)))); }

inline quad eg_arch_rhs(int m, const std::vector<double>& heights, double h_xi,
                        double K_d) {
  quad prod = 1;
  for (double h : heights) prod *= quad(h);
  quad logmax = log(std::max<quad>(qexp1(), quad(h_xi)));
  return pow(quad(K_d), m) * logmax * prod;
}

inline quad eg_nonarch_rhs(int m, const std::vector<double>& heights, double h_xi,
                           uint64_t norm_p, double K_d) {
  quad prod = 1;
  for (double h : heights) prod *= quad(h);
  quad np(norm_p);
  quad logmax = log(std::max<quad>(qexp1(), np * quad(h_xi)));
  return pow(quad(K_d), m) * (np / log(np)) * logmax * prod;
}

inline quad amgm_product_bound(quad logR, int m) {
  return pow(logR / (m - 1), m - 1);
}

inline quad chain_rhs(quad logR, quad B, int m, double K) {
  return 2 * quad(K) * B * logR * pow(2 * quad(K) * logR / (m - 1), m - 1);
}

inline double rel_err(double got, quad want) {
  const quad diff = abs(quad(got) - want);
  if (want == 0) return got == 0 ? 0.0 : 1.0;
  return static_cast<double>(diff / abs(want));
}

// h(beta/delta) summed place by place: one complex archimedean place
// with |x|_v = |sigma(x)|^2, and one term per Gaussian prime dividing
// delta with |x|_v = Norm(pi)^{nu_pi(delta)}.
inline double height_by_places(const ntkit::GaussianInt& beta,
                               const ntkit::GaussianInt& delta) {
  using namespace ntkit;
  const double arch =
      std::max(0.0, log_mpz(std::max<mpz_class>(beta.norm(), 1)) - log_mpz(delta.norm()));
  double nonarch = 0.0;
  GaussianInt rem = delta;
  const Factorization nf = factorize(delta.norm());
  for (const auto& [p, e_total] : nf.factors) {
    std::vector<GaussianInt> primes_above;
    if (p == 2) {
      primes_above.push_back(GaussianInt{1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 1) {
      const GaussianInt pi = split_prime(p);
      primes_above.push_back(pi);
      primes_above.push_back(canonical_associate(pi.conj()));
    } else {
      primes_above.push_back(GaussianInt{p, 0});  // inert
    }
    for (const GaussianInt& pi : primes_above) {
      unsigned nu = 0;
      GaussianInt q;
      while (gi_divides(pi, rem, &q)) {
        rem = q;
        ++nu;
      }
      if (nu > 0) nonarch += nu * log_mpz(pi.norm());
    }
  }
  return 0.5 * (arch + nonarch);
}

enum class ReductionScan { good, node, cusp };

// Full F_p x F_p scan for singular points of the reduced curve; p >= 5.
// Tangent classification via b2 + 12*x0 (the discriminant of the
// degree-2 part after recentering).
inline ReductionScan reduction_scan(const ntkit::CurveModel& m, uint64_t p) {
  const auto iv = ntkit::curve_invariants(m);
  auto red = [&](const mpz_class& z) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
  };
  const uint64_t a1 = red(m.a1), a2 = red(m.a2), a3 = red(m.a3), a4 = red(m.a4),
                 a6 = red(m.a6), b2 = red(iv.b2);
  for (uint64_t x = 0; x < p; ++x) {
    const uint64_t x2 = x * x % p;
    const uint64_t cubic = (x2 * x + a2 * x2 + a4 * x + a6) % p;
    const uint64_t fx = (3 * x2 + 2 * a2 * x + a4) % p;  // d(cubic)/dx
    for (uint64_t y = 0; y < p; ++y) {
      const uint64_t f = (y * y + a1 * x % p * y + a3 * y + 2 * p * p - cubic) % p;
      if (f != 0) continue;
      const uint64_t dfdx = (a1 * y + 2 * p * p - fx) % p;
      const uint64_t dfdy = (2 * y + a1 * x + a3) % p;
      if (dfdx == 0 && dfdy == 0) {
        const uint64_t tangent_disc = (b2 + 12 * x) % p;
        return tangent_disc != 0 ? ReductionScan::node : ReductionScan::cusp;
      }
    }
  }
  return ReductionScan::good;
}

inline double theta_naive(double x) {
  double sum = 0.0;
  for (uint64_t n = 2; n <= static_cast<uint64_t>(x); ++n)
    if (ntkit::is_probable_prime_u64(n)) sum += std::log(static_cast<double>(n));
  return sum;
}

}  // namespace oracle

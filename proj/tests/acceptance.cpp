// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Ranges and tolerances are pinned here, in code.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "ntkit/abc.hpp"
#include "ntkit/bounds.hpp"
#include "ntkit/elliptic.hpp"
#include "ntkit/factorization.hpp"
#include "ntkit/gaussian.hpp"
#include "ntkit/numeric.hpp"
#include "ntkit/sieve.hpp"
#include "ntkit/sweep.hpp"
#include "oracles.hpp"

using namespace ntkit;
using h_clock = std::chrono::high_resolution_clock;

namespace {

int g_failures = 0;

struct Timer {
  h_clock::time_point t0 = h_clock::now();
  double seconds() const {
    return std::chrono::duration_cast<std::chrono::duration<double>>(h_clock::now() - t0)
        .count();
  }
};

void report(int idx, const char* name, bool pass, double secs, const std::string& note) {
  std::printf("criterion %d (%s): %s [%.1fs]%s%s\n", idx, name,
              pass ? "PASS" : "FAIL", secs, note.empty() ? "" : " ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// --- criterion 1: Gaussian pipeline soundness, n in [1, 1e5] ---------

void criterion1() {
  Timer t;
  const uint64_t N = 100000;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 128) reduction(&& : ok)
  for (uint64_t n = 1; n <= N; ++n) {
    bool good = true;
    const mpz_class nz(static_cast<unsigned long>(n));
    const mpz_class value = nz * nz + 1;
    GaussianFactorization gf;
    try {
      gf = factor_n_plus_i(nz);
    } catch (const std::exception&) {
      good = false;
    }
    if (good) {
      GaussianInt prod = gf.unit;
      if (!gf.unit.is_unit()) good = false;
      for (const auto& [gamma, e] : gf.factors) {
        const mpz_class np = gamma.norm();
        const unsigned nu = valuation(value, np);
        if (np == 2) {
          if (e != nu || e > 1) good = false;
        } else {
          if (mpz_fdiv_ui(np.get_mpz_t(), 4) != 1) good = false;  // odd p = 1 mod 4
          if (e != nu) good = false;                              // implies e <= 2 nu
        }
        for (unsigned k = 0; k < e; ++k) prod = prod * gamma;
      }
      if (!(prod == GaussianInt{nz, 1})) good = false;  // exact reconstruction
    }
    ok = ok && good;
  }
  report(1, "gaussian pipeline soundness", ok, t.seconds(), "n in [1,100000], exact");
}

// --- criterion 2: identity and decomposition, n in [1, 1e4] ----------

void criterion2() {
  Timer t;
  const uint64_t N = 10000;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (uint64_t n = 1; n <= N; ++n) {
    bool good = true;
    const mpz_class nz(static_cast<unsigned long>(n));
    const mpz_class value = nz * nz + 1;

    // 1 - (n-i)/(n+i) = 2i/(n+i) exactly
    const auto one_minus_xi = make_gaussian_rational(
        GaussianInt{nz, 1} - GaussianInt{nz, -1}, GaussianInt{nz, 1});
    if (!(one_minus_xi == make_gaussian_rational(GaussianInt{0, 2}, GaussianInt{nz, 1})))
      good = false;

    const auto gf = factor_n_plus_i(nz);
    const mpz_class radv = radical(factorize(value));
    const double logR = log_mpz(radv);
    const auto want = make_gaussian_rational(GaussianInt{nz, -1}, GaussianInt{nz, 1});
    std::vector<double> thresholds{1.0};
    if (radv > 15) thresholds.push_back(threshold_B(radv.get_d()));
    for (const double B : thresholds) {
      const auto d = decompose_xi(gf, B);
      if (!(reconstruct(d) == want)) good = false;
      // h(xi_j) <= log p_j, relative tolerance 1e-9
      for (std::size_t j = 0; j < d.generators.size(); ++j) {
        const double hj = height(d.generators[j]);
        const double cap = log_mpz(gf.factors[j].first.norm());
        if (hj > cap * (1 + 1e-9)) good = false;
      }
      // h(xi0) <= B log R
      GaussianRational xi0 = make_gaussian_rational(GaussianInt{1, 0}, GaussianInt{1, 0});
      for (const auto& [idx, e] : d.small_part)
        xi0 = xi0 * elem_pow(d.generators[idx], e);
      if (height(xi0) > B * logR * (1 + 1e-9) + 1e-15) good = false;
    }
    ok = ok && good;
  }
  report(2, "identity and decomposition", ok, t.seconds(),
         "n in [1,10000], B in {1, B(R)}");
}

// --- criterion 3: curve family, n in [1, 1e4] ------------------------

void criterion3() {
  Timer t;
  const uint64_t N = 10000;
  auto sieve = primes_upto(100);
  std::vector<uint64_t> ps;
  for (uint32_t p : *sieve)
    if (p >= 5 && p <= 100) ps.push_back(p);  // the cache may hold more

  // the reduced equation depends on n mod p only; precompute the scan
  std::vector<std::vector<oracle::ReductionScan>> scan(101);
  for (uint64_t p : ps) {
    scan[p].resize(p);
    for (uint64_t r = 0; r < p; ++r)
      scan[p][r] =
          oracle::reduction_scan(curve_for(mpz_class(static_cast<unsigned long>(p + r))), p);
  }

  bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (uint64_t n = 1; n <= N; ++n) {
    bool good = true;
    const mpz_class nz(static_cast<unsigned long>(n));
    const mpz_class value = nz * nz + 1;
    const CurveModel m = curve_for(nz);
    if (equation_discriminant(m) != -1728 * value) good = false;

    for (const auto& [p, e] : factorize(value).factors) {
      if (p == 2) continue;
      const auto local = tate_local(m, p);
      if (local.kind != ReductionKind::multiplicative) good = false;
      if (local.conductor_exponent != 1) good = false;
      if (local.v_delta_min != e) good = false;
    }

    // delta_min = -2^s 3^t (n^2+1), |s|,|t| <= 12
    const mpz_class dmin = minimal_discriminant(m);
    if (dmin >= 0) good = false;
    mpz_class q, rem;
    const mpz_class neg = -dmin;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), neg.get_mpz_t(), value.get_mpz_t());
    if (rem != 0) {
      good = false;
    } else {
      int s = 0, tt = 0;
      while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
      }
      while (mpz_divisible_ui_p(q.get_mpz_t(), 3)) {
        q /= 3;
        ++tt;
      }
      if (q != 1 || s > 12 || tt > 12) good = false;
    }

    // reduction kind vs the brute-force scan for every p in [5, 100]
    for (uint64_t p : ps) {
      const auto local = tate_local(m, mpz_class(static_cast<unsigned long>(p)));
      const auto want = scan[p][n % p];
      if (local.kind == ReductionKind::good && want != oracle::ReductionScan::good)
        good = false;
      if (local.kind == ReductionKind::multiplicative &&
          want != oracle::ReductionScan::node)
        good = false;
      if (local.kind == ReductionKind::additive && want != oracle::ReductionScan::cusp)
        good = false;
    }
    ok = ok && good;
  }
  report(3, "curve family local data", ok, t.seconds(),
         "n in [1,10000], oracle p in [5,100]");
}

// --- criterion 4: Chebyshev step -------------------------------------

void criterion4() {
  Timer t;
  // theta(x) < 4x for all integer x in [2, 1e7]: theta only jumps at
  // primes and 4x grows in x, so checking at each prime covers every
  // integer in between.
  auto primes = primes_upto(10000000);
  bool theta_ok = true;
  double theta = 0.0;
  for (uint32_t p : *primes) {
    if (p > 10000000) break;
    theta += std::log(static_cast<double>(p));
    if (!(theta < 4.0 * static_cast<double>(p))) theta_ok = false;
  }

  // P(n^2+1) >= (1/4) log rad(n^2+1) for n in [16, 1e5], zero tolerance
  bool plog_ok = true;
#pragma omp parallel for schedule(dynamic, 256) reduction(&& : plog_ok)
  for (uint64_t n = 16; n <= 100000; ++n) {
    uint64_t pmax = 1, radv = 1;
    for (const auto& [p, e] : factorize_u64(n * n + 1)) {
      pmax = p;
      radv *= p;
    }
    if (!(static_cast<double>(pmax) >= 0.25 * std::log(static_cast<double>(radv))))
      plog_ok = false;
  }
  report(4, "chebyshev step", theta_ok && plog_ok, t.seconds(),
         std::string("theta<4x on [2,1e7] ") + (theta_ok ? "ok" : "FAILED") +
             ", P >= log(R)/4 on [16,1e5] " + (plog_ok ? "ok" : "FAILED"));
}

// --- criterion 5: exponent-product checks -----------------------------

void criterion5() {
  Timer t;
  bool ok = true;
  double max_ratio_n = 0.0;
#pragma omp parallel for schedule(dynamic, 256) reduction(&& : ok) \
    reduction(max : max_ratio_n)
  for (uint64_t n = 1; n <= 100000; ++n) {
    double lognu = 0.0, lograd = 0.0;
    for (const auto& [p, e] : factorize_u64(n * n + 1)) {
      lognu += std::log(static_cast<double>(e));
      lograd += std::log(static_cast<double>(p));
    }
    if (!(lognu <= 8.0 * lograd)) ok = false;
    max_ratio_n = std::max(max_ratio_n, std::exp(lognu - 8.0 * lograd));
  }

  bool abc_ok = true;
  double max_ratio_abc = 0.0;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : abc_ok) \
    reduction(max : max_ratio_abc)
  for (uint64_t c = 2; c <= 10000; ++c) {
    for (uint64_t a = 1; 2 * a <= c; ++a) {
      const uint64_t b = c - a;
      if (gcd_u64(a, b) != 1) continue;
      const TripleStatsU64 s = triple_stats_u64(a, b, c);
      const double lognu = std::log(static_cast<double>(s.nu_product));
      const double logR3 = 3.0 * std::log(static_cast<double>(s.R));
      if (!(lognu <= logR3)) abc_ok = false;
      max_ratio_abc = std::max(max_ratio_abc, std::exp(lognu - logR3));
    }
  }
  report(5, "exponent-product checks", ok && abc_ok, t.seconds(),
         "max nu/rad^8 = " + fmt("%.3e", max_ratio_n) +
             ", max nu/R^3 = " + fmt("%.3e", max_ratio_abc));
}

// --- criterion 6: constant fitting ------------------------------------

void criterion6() {
  Timer t;
  bool ok = true;
  const double k1 = fit_shape_sweep(FitShape::thm1, 100, 100000, 100, 1);
  const double k1b = fit_shape_sweep(FitShape::thm1, 100, 100000, 100, 2);
  const double k1c = fit_shape_sweep(FitShape::thm1, 100, 100000, 100, 16);
  const double k2 = fit_shape_sweep(FitShape::thm2, 100, 100000, 100, 2);
  const double k2b = fit_shape_sweep(FitShape::thm2, 100, 100000, 100, 5);
  const double kc = fit_shape_sweep(FitShape::cor4, 2, 10000, 16, 2);
  const double ka = fit_shape_sweep(FitShape::abc_case2, 2, 10000, 16, 2);
  const double ka2 = fit_shape_sweep(FitShape::abc_case2, 2, 10000, 16, 3);

  if (!(k1 > 0) || !(k2 > 0) || !(kc > 0) || !(ka > 0)) ok = false;
  // stability across worker counts, 1e-12 relative
  if (std::abs(k1 - k1b) > 1e-12 * std::abs(k1)) ok = false;
  if (std::abs(k1 - k1c) > 1e-12 * std::abs(k1)) ok = false;
  if (std::abs(k2 - k2b) > 1e-12 * std::abs(k2)) ok = false;
  if (std::abs(ka - ka2) > 1e-12 * std::abs(ka)) ok = false;
  report(6, "constant fitting", ok, t.seconds(),
         "thm1 " + fmt("%.6f", k1) + ", thm2 " + fmt("%.6f", k2) + ", cor4 " +
             fmt("%.6f", kc) + ", abc-case2 " + fmt("%.6f", ka));
}

// --- criterion 7: bound-engine numerics --------------------------------

void criterion7() {
  Timer t;
  bool ok = true;
  std::mt19937_64 rng(0xACCE57);
  BoundConstants c;
  for (int i = 0; i < 1000 && ok; ++i) {
    const double R = 16.0 + static_cast<double>(rng() % 10000000);
    if (oracle::rel_err(threshold_B(R), oracle::threshold_B(oracle::quad(R))) > 1e-9)
      ok = false;

    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<double> heights;
    for (int j = 0; j < m; ++j)
      heights.push_back(0.1 + static_cast<double>(rng() % 1000) / 100.0);
    const double h_xi = static_cast<double>(rng() % 2000) / 10.0;
    c.K_d = 0.5 + static_cast<double>(rng() % 100) / 10.0;
    if (oracle::rel_err(eg_arch_rhs(m, heights, h_xi, c),
                        oracle::eg_arch_rhs(m, heights, h_xi, c.K_d)) > 1e-9)
      ok = false;
    const uint64_t np = 2 + rng() % 100000;
    if (oracle::rel_err(eg_nonarch_rhs(m, heights, h_xi, np, c),
                        oracle::eg_nonarch_rhs(m, heights, h_xi, np, c.K_d)) > 1e-9)
      ok = false;

    const double logR = 0.5 + static_cast<double>(rng() % 10000) / 100.0;
    const int m2 = 2 + static_cast<int>(rng() % 8);
    if (oracle::rel_err(amgm_product_bound(logR, m2),
                        oracle::amgm_product_bound(oracle::quad(logR), m2)) > 1e-9)
      ok = false;
    c.K = 0.5 + static_cast<double>(rng() % 40) / 10.0;
    const double B = 1.0 + static_cast<double>(rng() % 1000) / 10.0;
    if (oracle::rel_err(
            chain_rhs(logR, B, m2, c),
            oracle::chain_rhs(oracle::quad(logR), oracle::quad(B), m2, c.K)) > 1e-9)
      ok = false;
  }
  for (double A : {3.0, 10.0, 1000.0, 1000000.0})
    if (!calculus_check(A, 10000)) ok = false;
  report(7, "bound-engine numerics", ok, t.seconds(),
         "1000 seeded inputs vs 113-bit oracle, rel err <= 1e-9");
}

// --- criterion 8: determinism -----------------------------------------

void criterion8() {
  Timer t;
  auto lines = [](const std::vector<SweepRecord>& rs) {
    std::string out;
    for (const auto& r : rs) {
      out += sweep_record_json(r);
      out += '\n';
    }
    return out;
  };
  const std::string run1 = lines(run_sweep(16, 10000, 1));
  const std::string run1again = lines(run_sweep(16, 10000, 1));
  const std::string run4 = lines(run_sweep(16, 10000, 4));
  const std::string run16 = lines(run_sweep(16, 10000, 16));
  const bool ok =
      run1 == run1again && run1 == run4 && run1 == run16 && !run1.empty();
  report(8, "sweep determinism", ok, t.seconds(),
         "jobs 1/4/16 and repeat runs byte-identical (9985 records)");
}

}  // namespace

int main() {
  std::printf("acceptance suite, %d OpenMP threads\n", omp_get_max_threads());
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

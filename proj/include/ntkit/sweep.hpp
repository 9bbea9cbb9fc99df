#pragma once

// Batch sweep over n: per-n record combining the integer, Gaussian and
// bound pipelines, an OpenMP kernel, and a serial reference
// implementation kept for testing. Output is line-delimited JSON with
// a fixed field order; records are emitted in ascending n and must be
// byte-identical for any worker count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ntkit {

struct SweepRecord {
  uint64_t n = 0;
  uint64_t p_max = 0;       // P(n^2+1)
  uint64_t rad = 0;         // rad(n^2+1)
  uint64_t nu_product = 0;  // prod of exponents in n^2+1
  uint64_t m = 0;           // group rank from decompose_xi at B = threshold_B(rad)
  double thm1_ratio = 0.0;  // P(n^2+1) / ((log2 n)^2 / log3 n)
  double thm2_ratio = 0.0;  // log rad(n^2+1) / ((log2 n)^2 / log3 n)
};

bool operator==(const SweepRecord& a, const SweepRecord& b);

// Per-n kernel; also re-verifies the pipeline invariants and throws
// invariant_violation when one fails. Requires n >= 16 (iterated logs).
SweepRecord sweep_record(uint64_t n);

std::string sweep_record_json(const SweepRecord& r);
SweepRecord parse_sweep_record(std::string_view line);

inline constexpr std::string_view kSweepCsvHeader =
    "n,p_max,rad,nu_product,m,thm1_ratio,thm2_ratio";
std::string sweep_record_csv(const SweepRecord& r);

// OpenMP kernel; jobs = 0 means the OpenMP default.
std::vector<SweepRecord> run_sweep(uint64_t from, uint64_t to, int jobs);

// Serial reference for testing and benchmarking.
std::vector<SweepRecord> run_sweep_serial(uint64_t from, uint64_t to);

// Fitted-constant sweeps. The reductions are exact min/max, so results
// are identical for every worker count.
//   thm1:      inf of P(n^2+1)        * log3 n/(log2 n)^2 over n in [from, to]
//   thm2:      inf of log rad(n^2+1)  * log3 n/(log2 n)^2 over n in [from, to]
//   cor4:      inf of P(abc) * log3 b/(log2 b)^2 over triples with c in
//              [from, to] and b >= nmin
//   abc_case2: smallest kappa with log c <= q*exp(kappa*sqrt(logR log2R))
//              over triples with c in [from, to] and R > e^e
enum class FitShape { thm1, thm2, cor4, abc_case2 };
double fit_shape_sweep(FitShape shape, uint64_t from, uint64_t to, uint64_t nmin,
                       int jobs);

// Per-point fit values, shared between the range sweeps and file-based
// fitting so the two routes agree bit for bit.
double fit_point_thm(bool use_p_max, uint64_t n, uint64_t p_max, uint64_t rad);
double fit_point_cor4(uint64_t b, uint64_t p_max);
// negative infinity when R <= e^e (out of domain)
double fit_point_abc_case2(uint64_t c, uint64_t q, uint64_t R);

}  // namespace ntkit

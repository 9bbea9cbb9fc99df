#pragma once

// Numeric evaluation of the bound expressions: the threshold B(R), the
// approximation-bound right-hand sides (archimedean and
// non-archimedean), the AM-GM collapse of the generator-height product,
// the master chain inequality, the calculus monotonicity check, and
// empirical constant fitting.
//
// None of the proof constants are pinned by theory; they live in
// BoundConstants, default to 1, and are configurable. Evaluators report
// numbers; asserting inequalities against unknown true constants is not
// their job.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ntkit {

struct BoundConstants {
  double K_d = 1.0;
  double K = 1.0;
  double K_prime = 1.0;
  double K_double_prime = 1.0;
  double M = 1.0;
  double kappa = 1.0;
  double kappa_prime = 1.0;
};

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;   // lhs <= rhs
  double ratio = 0.0;   // lhs / rhs
  std::string inputs;   // echo of the arguments, "key=value ..."
};

BoundReport make_bound_report(double lhs, double rhs, std::string inputs);

// B(R) = exp(sqrt(log R * log log R)); rejects R <= e.
double threshold_B(double R);

// K_d^m * log(max(e, h_xi)) * prod(gen_heights)
double eg_arch_rhs(int m, std::span<const double> gen_heights, double h_xi,
                   const BoundConstants& c);

// K_d^m * (N/log N) * log(max(e, N*h_xi)) * prod(gen_heights), N = norm_p
double eg_nonarch_rhs(int m, std::span<const double> gen_heights, double h_xi,
                      uint64_t norm_p, const BoundConstants& c);

// (logR/(m-1))^(m-1); m >= 2 (the m = 1 case branches separately)
double amgm_product_bound(double logR, int m);

// 2K * B * logR * (2K*logR/(m-1))^(m-1)
double chain_rhs(double logR, double B, int m, const BoundConstants& c);

// Samples t -> t*log(A/t) on a uniform grid of [1, A/e] and confirms
// strict increase; A > e required.
bool calculus_check(double A, int grid);

struct FitPoint {
  uint64_t n = 0;
  double lhs = 0.0;
};

// Infimum over the series of lhs * log3(n) / (log2(n))^2; every n must
// be >= max(n_min, 16).
double fit_kappa(std::span<const FitPoint> series, uint64_t n_min);

}  // namespace ntkit

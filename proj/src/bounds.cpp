#include "ntkit/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ntkit/numeric.hpp"

namespace ntkit {

BoundReport make_bound_report(double lhs, double rhs, std::string inputs) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  r.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
  r.inputs = std::move(inputs);
  return r;
}

double threshold_B(double R) {
  if (!(R > std::exp(1.0)))
    throw std::domain_error("threshold_B: R must exceed e");
  const double logR = std::log(R);
  return std::exp(std::sqrt(logR * std::log(logR)));
}

namespace {

double height_product(std::span<const double> gen_heights) {
  if (gen_heights.empty())
    throw std::invalid_argument("eg rhs: empty generator height list");
  double prod = 1.0;
  for (double h : gen_heights) {
    if (!(h > 0)) throw std::invalid_argument("eg rhs: heights must be positive");
    prod *= h;
  }
  return prod;
}

}  // namespace

double eg_arch_rhs(int m, std::span<const double> gen_heights, double h_xi,
                   const BoundConstants& c) {
  if (m < 1) throw std::invalid_argument("eg_arch_rhs: m must be >= 1");
  const double prod = height_product(gen_heights);
  return std::pow(c.K_d, m) * std::log(std::max(std::exp(1.0), h_xi)) * prod;
}

double eg_nonarch_rhs(int m, std::span<const double> gen_heights, double h_xi,
                      uint64_t norm_p, const BoundConstants& c) {
  if (m < 1) throw std::invalid_argument("eg_nonarch_rhs: m must be >= 1");
  if (norm_p < 2) throw std::invalid_argument("eg_nonarch_rhs: norm_p must be >= 2");
  const double prod = height_product(gen_heights);
  const double np = static_cast<double>(norm_p);
  return std::pow(c.K_d, m) * (np / std::log(np)) *
         std::log(std::max(std::exp(1.0), np * h_xi)) * prod;
}

double amgm_product_bound(double logR, int m) {
  if (!(logR > 0)) throw std::invalid_argument("amgm_product_bound: logR must be > 0");
  if (m < 2) throw std::invalid_argument("amgm_product_bound: m must be >= 2");
  return std::pow(logR / (m - 1), m - 1);
}

double chain_rhs(double logR, double B, int m, const BoundConstants& c) {
  if (!(logR > 0)) throw std::invalid_argument("chain_rhs: logR must be > 0");
  if (!(B > 0)) throw std::invalid_argument("chain_rhs: B must be > 0");
  if (m < 2) throw std::invalid_argument("chain_rhs: m must be >= 2");
  return 2.0 * c.K * B * logR * std::pow(2.0 * c.K * logR / (m - 1), m - 1);
}

bool calculus_check(double A, int grid) {
  if (!(A > std::exp(1.0))) throw std::domain_error("calculus_check: A must exceed e");
  if (grid < 2) throw std::invalid_argument("calculus_check: grid must be >= 2");
  const double hi = A / std::exp(1.0);
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double t = 1.0 + (hi - 1.0) * static_cast<double>(i) / (grid - 1);
    const double value = t * std::log(A / t);
    if (!(value > prev)) return false;
    prev = value;
  }
  return true;
}

double fit_kappa(std::span<const FitPoint> series, uint64_t n_min) {
  if (series.empty()) throw std::invalid_argument("fit_kappa: empty series");
  const uint64_t floor_n = std::max<uint64_t>(n_min, 16);
  double inf = std::numeric_limits<double>::infinity();
  for (const FitPoint& pt : series) {
    if (pt.n < floor_n)
      throw std::invalid_argument("fit_kappa: n below the domain floor");
    const double log2n = log_iter(static_cast<double>(pt.n), 2);
    const double log3n = log_iter(static_cast<double>(pt.n), 3);
    const double value = pt.lhs * log3n / (log2n * log2n);
    if (value < inf) inf = value;
  }
  return inf;
}

}  // namespace ntkit

#include "ntkit/sweep.hpp"

#include <omp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ntkit/abc.hpp"
#include "ntkit/bounds.hpp"
#include "ntkit/factorization.hpp"
#include "ntkit/gaussian.hpp"
#include "ntkit/numeric.hpp"

namespace ntkit {

namespace {

void append_double(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);  // shortest round-trip
  out.append(buf, end);
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("sweep record: bad double field");
  return v;
}

uint64_t parse_u64(std::string_view s) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("sweep record: bad integer field");
  return v;
}

std::string_view expect_field(std::string_view& rest, std::string_view key) {
  std::string_view want_prefix = key;
  if (rest.substr(0, want_prefix.size()) != want_prefix)
    throw std::invalid_argument("sweep record: expected field " + std::string(key));
  rest.remove_prefix(want_prefix.size());
  std::size_t end = rest.find_first_of(",}");
  if (end == std::string_view::npos)
    throw std::invalid_argument("sweep record: unterminated field");
  std::string_view value = rest.substr(0, end);
  rest.remove_prefix(end + 1);
  return value;
}

}  // namespace

bool operator==(const SweepRecord& a, const SweepRecord& b) {
  return a.n == b.n && a.p_max == b.p_max && a.rad == b.rad &&
         a.nu_product == b.nu_product && a.m == b.m &&
         a.thm1_ratio == b.thm1_ratio && a.thm2_ratio == b.thm2_ratio;
}

SweepRecord sweep_record(uint64_t n) {
  if (n < 16)
    throw std::invalid_argument("sweep_record: n must be >= 16 (iterated logs)");
  if (n > 0xFFFFFFFFull)
    throw capacity_error("sweep_record: n above 2^32 not supported in sweeps");

  const uint64_t value = n * n + 1;
  const auto factors = factorize_u64(value);

  SweepRecord rec;
  rec.n = n;
  uint64_t radv = 1, nuprod = 1, pmax = 1;
  for (const auto& [p, e] : factors) {
    radv *= p;
    nuprod *= e;
    pmax = p;
    // pipeline invariants: odd primes of n^2+1 are 1 mod 4; nu_2 <= 1
    if (p == 2 && e > 1)
      throw invariant_violation("sweep: nu_2(n^2+1) > 1");
    if (p != 2 && p % 4 != 1)
      throw invariant_violation("sweep: odd prime factor of n^2+1 not 1 mod 4");
  }
  if (radv == 1 || value % radv != 0)
    throw invariant_violation("sweep: radical does not divide n^2+1");
  rec.p_max = pmax;
  rec.rad = radv;
  rec.nu_product = nuprod;

  const double B = threshold_B(static_cast<double>(radv));
  const auto gf = factor_n_plus_i(mpz_class(static_cast<unsigned long>(n)));
  const auto decomp = decompose_xi(gf, B);
  rec.m = decomp.m();

  const double log2n = log_iter(static_cast<double>(n), 2);
  const double log3n = log_iter(static_cast<double>(n), 3);
  const double denom = log2n * log2n / log3n;
  rec.thm1_ratio = static_cast<double>(pmax) / denom;
  rec.thm2_ratio = std::log(static_cast<double>(radv)) / denom;
  return rec;
}

std::string sweep_record_json(const SweepRecord& r) {
  std::string out;
  out.reserve(160);
  out += "{\"n\":";
  out += std::to_string(r.n);
  out += ",\"p_max\":";
  out += std::to_string(r.p_max);
  out += ",\"rad\":";
  out += std::to_string(r.rad);
  out += ",\"nu_product\":";
  out += std::to_string(r.nu_product);
  out += ",\"m\":";
  out += std::to_string(r.m);
  out += ",\"thm1_ratio\":";
  append_double(out, r.thm1_ratio);
  out += ",\"thm2_ratio\":";
  append_double(out, r.thm2_ratio);
  out += "}";
  return out;
}

std::string sweep_record_csv(const SweepRecord& r) {
  std::string out;
  out.reserve(120);
  out += std::to_string(r.n);
  out += ',';
  out += std::to_string(r.p_max);
  out += ',';
  out += std::to_string(r.rad);
  out += ',';
  out += std::to_string(r.nu_product);
  out += ',';
  out += std::to_string(r.m);
  out += ',';
  append_double(out, r.thm1_ratio);
  out += ',';
  append_double(out, r.thm2_ratio);
  return out;
}

SweepRecord parse_sweep_record(std::string_view line) {
  SweepRecord r;
  std::string_view rest = line;
  r.n = parse_u64(expect_field(rest, "{\"n\":"));
  r.p_max = parse_u64(expect_field(rest, "\"p_max\":"));
  r.rad = parse_u64(expect_field(rest, "\"rad\":"));
  r.nu_product = parse_u64(expect_field(rest, "\"nu_product\":"));
  r.m = parse_u64(expect_field(rest, "\"m\":"));
  r.thm1_ratio = parse_double(expect_field(rest, "\"thm1_ratio\":"));
  r.thm2_ratio = parse_double(expect_field(rest, "\"thm2_ratio\":"));
  if (!rest.empty())
    throw std::invalid_argument("sweep record: trailing characters");
  return r;
}

std::vector<SweepRecord> run_sweep(uint64_t from, uint64_t to, int jobs) {
  if (from < 16 || to < from)
    throw std::invalid_argument("run_sweep: need 16 <= from <= to");
  const std::size_t count = static_cast<std::size_t>(to - from + 1);
  std::vector<SweepRecord> records(count);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      records[i] = sweep_record(from + i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<SweepRecord> run_sweep_serial(uint64_t from, uint64_t to) {
  if (from < 16 || to < from)
    throw std::invalid_argument("run_sweep_serial: need 16 <= from <= to");
  std::vector<SweepRecord> records;
  records.reserve(to - from + 1);
  for (uint64_t n = from; n <= to; ++n) records.push_back(sweep_record(n));
  return records;
}

double fit_point_thm(bool use_p_max, uint64_t n, uint64_t p_max, uint64_t rad) {
  const double lhs =
      use_p_max ? static_cast<double>(p_max) : std::log(static_cast<double>(rad));
  const double log2n = log_iter(static_cast<double>(n), 2);
  const double log3n = log_iter(static_cast<double>(n), 3);
  return lhs * log3n / (log2n * log2n);
}

double fit_point_cor4(uint64_t b, uint64_t p_max) {
  const double log2b = log_iter(static_cast<double>(b), 2);
  const double log3b = log_iter(static_cast<double>(b), 3);
  return static_cast<double>(p_max) * log3b / (log2b * log2b);
}

double fit_point_abc_case2(uint64_t c, uint64_t q, uint64_t R) {
  if (R < 16) return -std::numeric_limits<double>::infinity();
  const double logR = std::log(static_cast<double>(R));
  return std::log(std::log(static_cast<double>(c)) / static_cast<double>(q)) /
         std::sqrt(logR * std::log(logR));
}

double fit_shape_sweep(FitShape shape, uint64_t from, uint64_t to, uint64_t nmin,
                       int jobs) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  if (shape == FitShape::thm1 || shape == FitShape::thm2) {
    const uint64_t lo = std::max({from, nmin, uint64_t{16}});
    if (lo > to) throw std::invalid_argument("fit: empty range after the n_min floor");
    const bool want_pmax = shape == FitShape::thm1;
    double inf = std::numeric_limits<double>::infinity();
#pragma omp parallel num_threads(threads)
    {
      double local = std::numeric_limits<double>::infinity();
#pragma omp for schedule(dynamic, 256) nowait
      for (uint64_t n = lo; n <= to; ++n) {
        uint64_t pmax = 1, radv = 1;
        for (const auto& [p, e] : factorize_u64(n * n + 1)) {
          pmax = p;
          radv *= p;
        }
        local = std::min(local, fit_point_thm(want_pmax, n, pmax, radv));
      }
#pragma omp critical
      inf = std::min(inf, local);
    }
    return inf;
  }

  const uint64_t lo = std::max(from, uint64_t{2});
  if (lo > to) throw std::invalid_argument("fit: empty triple range");
  if (shape == FitShape::cor4) {
    const uint64_t ymin = std::max(nmin, uint64_t{16});
    double inf = std::numeric_limits<double>::infinity();
#pragma omp parallel num_threads(threads)
    {
      double local = std::numeric_limits<double>::infinity();
#pragma omp for schedule(dynamic, 64) nowait
      for (uint64_t c = lo; c <= to; ++c) {
        for (uint64_t a = 1; 2 * a <= c; ++a) {
          const uint64_t b = c - a;
          if (b < ymin) continue;
          if (gcd_u64(a, b) != 1) continue;
          const TripleStatsU64 s = triple_stats_u64(a, b, c);
          local = std::min(local, fit_point_cor4(b, s.p_max));
        }
      }
#pragma omp critical
      inf = std::min(inf, local);
    }
    return inf;
  }

  // abc_case2
  double sup = -std::numeric_limits<double>::infinity();
#pragma omp parallel num_threads(threads)
  {
    double local = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(dynamic, 64) nowait
    for (uint64_t c = lo; c <= to; ++c) {
      for (uint64_t a = 1; 2 * a <= c; ++a) {
        const uint64_t b = c - a;
        if (gcd_u64(a, b) != 1) continue;
        const TripleStatsU64 s = triple_stats_u64(a, b, c);
        local = std::max(local, fit_point_abc_case2(c, s.q, s.R));
      }
    }
#pragma omp critical
    sup = std::max(sup, local);
  }
  return sup;
}

}  // namespace ntkit

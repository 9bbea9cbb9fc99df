#pragma once

// ABC-triple side: enumeration and ingestion of coprime triples, the
// per-triple report (radical, q, quality, exponent product, p0, eta),
// the rational threshold decomposition of b/c, the two subexponential
// case reports, and the Corollary-style fit statistic.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ntkit/bounds.hpp"
#include "ntkit/decomposition.hpp"

namespace ntkit {

struct AbcTriple {
  mpz_class a, b, c;  // gcd(a,b) = 1, a + b = c, a <= b < c
};

// Validates and normalizes (swaps so a <= b); throws on violations.
AbcTriple make_abc_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c);

// Every normalized coprime triple with c <= c_max, ordered by (c, a).
void enumerate_triples(uint64_t c_max, const std::function<void(const AbcTriple&)>& sink);

struct TripleRejection {
  std::size_t line_no = 0;
  std::string line;
  std::string reason;
};

// Line-oriented "a b c" input; '#' starts a comment, blank lines are
// skipped. Malformed lines throw with the line number; arithmetically
// invalid triples become rejection records and the stream continues.
void parse_triples(std::istream& in, const std::function<void(const AbcTriple&)>& sink,
                   std::vector<TripleRejection>* rejections = nullptr);

struct TripleReport {
  mpz_class R;           // rad(abc)
  mpz_class q;           // min of the three largest prime factors
  double quality = 0.0;  // log c / log R
  mpz_class nu_product;  // prod over p | abc of nu_p(abc)
  mpz_class p0;          // max-valuation prime of the q-attaining element (1 if none)
  double eta = 0.0;      // 1 - log a / log c
  int q_element = 0;     // 0 = a, 1 = b, 2 = c
  mpz_class p_max;       // P(abc)
};

TripleReport triple_report(const AbcTriple& t);

// nu_product <= R^exponent (exponent defaults to the specialization 3)
BoundReport shimura_abc_check(const TripleReport& rep, double exponent = 3.0);

// xi = b/c over the primes of bc; exponents are negative on the c side.
MultiplicativeDecomposition<mpq_class> decompose_rational(const AbcTriple& t, double B);
mpq_class elem_pow(const mpq_class& base, long e);

inline mpq_class reconstruct(const MultiplicativeDecomposition<mpq_class>& d) {
  return reconstruct_with(d, [](const mpq_class& x, long e) { return elem_pow(x, e); });
}

struct Thm3Reports {
  BoundReport case1;  // log c vs eta^-1 * exp(kappa*sqrt(logR*log2R))
  BoundReport case2;  // log c vs q * exp(kappa*sqrt(logR*log2R))
  bool in_anchor_regime = false;  // c^(1/2) <= a
  bool anchor_holds = false;      // log c/(2 log R) <= nu_p0(x) <= 2 nu_p0(x) log p0
  double anchor_lhs = 0.0;
  unsigned anchor_nu = 0;
};

// Rejects triples with R <= e^e (iterated log domain guard).
Thm3Reports thm3_case_reports(const AbcTriple& t, const BoundConstants& c);

// Infimum of P(abc) * log3(b) / (log2(b))^2 over the corpus; every b
// must be >= max(y_min, 16).
double corollary4_fit(std::span<const AbcTriple> corpus, uint64_t y_min);

// Plain-integer summary for enumerated sweeps; agrees with
// triple_report field for field (property-tested).
struct TripleStatsU64 {
  uint64_t R = 1;
  uint64_t q = 1;
  uint64_t p_max = 1;
  uint64_t nu_product = 1;
  int q_element = 0;
};

TripleStatsU64 triple_stats_u64(uint64_t a, uint64_t b, uint64_t c);

}  // namespace ntkit

#include "ntkit/abc.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include "ntkit/factorization.hpp"
#include "ntkit/numeric.hpp"

namespace ntkit {

AbcTriple make_abc_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("abc triple: entries must be positive");
  AbcTriple t{a, b, c};
  if (t.a > t.b) swap(t.a, t.b);
  if (t.a + t.b != t.c) throw std::invalid_argument("abc triple: a + b != c");
  if (gcd(t.a, t.b) != 1) throw std::invalid_argument("abc triple: gcd(a, b) != 1");
  return t;
}

void enumerate_triples(uint64_t c_max, const std::function<void(const AbcTriple&)>& sink) {
  if (c_max < 2) throw std::invalid_argument("enumerate_triples: c_max must be >= 2");
  for (uint64_t c = 2; c <= c_max; ++c) {
    for (uint64_t a = 1; 2 * a <= c; ++a) {
      const uint64_t b = c - a;
      if (gcd_u64(a, b) != 1) continue;
      sink(AbcTriple{mpz_class(static_cast<unsigned long>(a)),
                     mpz_class(static_cast<unsigned long>(b)),
                     mpz_class(static_cast<unsigned long>(c))});
    }
  }
}

void parse_triples(std::istream& in, const std::function<void(const AbcTriple&)>& sink,
                   std::vector<TripleRejection>* rejections) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::string sa, sb, sc;
    if (!(is >> sa)) continue;  // blank or comment-only line
    if (!(is >> sb >> sc))
      throw std::invalid_argument("parse_triples: line " + std::to_string(line_no) +
                                  ": expected three integers");
    std::string extra;
    if (is >> extra)
      throw std::invalid_argument("parse_triples: line " + std::to_string(line_no) +
                                  ": trailing tokens");
    mpz_class a, b, c;
    if (mpz_set_str(a.get_mpz_t(), sa.c_str(), 10) != 0 ||
        mpz_set_str(b.get_mpz_t(), sb.c_str(), 10) != 0 ||
        mpz_set_str(c.get_mpz_t(), sc.c_str(), 10) != 0)
      throw std::invalid_argument("parse_triples: line " + std::to_string(line_no) +
                                  ": not base-10 integers");
    try {
      sink(make_abc_triple(a, b, c));
    } catch (const std::invalid_argument& e) {
      if (rejections) rejections->push_back({line_no, line, e.what()});
    }
  }
}

TripleReport triple_report(const AbcTriple& t) {
  const Factorization fa = factorize(t.a);
  const Factorization fb = factorize(t.b);
  const Factorization fc = factorize(t.c);

  TripleReport rep;
  rep.R = radical(fa) * radical(fb) * radical(fc);  // coprime, so rad multiplies
  const mpz_class pa = largest_prime_factor(fa);
  const mpz_class pb = largest_prime_factor(fb);
  const mpz_class pc = largest_prime_factor(fc);
  rep.q = pa;
  rep.q_element = 0;
  if (pb < rep.q) {
    rep.q = pb;
    rep.q_element = 1;
  }
  if (pc < rep.q) {
    rep.q = pc;
    rep.q_element = 2;
  }
  rep.p_max = std::max(std::max(pa, pb), pc);
  rep.quality = log_mpz(t.c) / log_mpz(rep.R);
  rep.nu_product = exponent_product(fa) * exponent_product(fb) * exponent_product(fc);
  rep.eta = 1.0 - log_mpz(t.a) / log_mpz(t.c);

  // p0: the max-valuation prime of the q-attaining element, smallest
  // prime on ties; 1 when that element is 1.
  const Factorization* fx = rep.q_element == 0 ? &fa : rep.q_element == 1 ? &fb : &fc;
  rep.p0 = 1;
  unsigned best = 0;
  for (const auto& [p, e] : fx->factors) {
    if (e > best) {
      best = e;
      rep.p0 = p;
    }
  }
  return rep;
}

BoundReport shimura_abc_check(const TripleReport& rep, double exponent) {
  if (!(exponent > 0))
    throw std::invalid_argument("shimura_abc_check: exponent must be > 0");
  // comparison in log space so huge radicals cannot overflow
  const double log_lhs = log_mpz(rep.nu_product);
  const double log_rhs = exponent * log_mpz(rep.R);
  std::ostringstream inputs;
  inputs << "nu_product=" << rep.nu_product << " R=" << rep.R
         << " exponent=" << exponent;
  BoundReport r;
  r.lhs = rep.nu_product.get_d();
  r.rhs = std::exp(log_rhs);
  r.holds = log_lhs <= log_rhs;
  r.ratio = std::exp(log_lhs - log_rhs);
  r.inputs = inputs.str();
  return r;
}

mpq_class elem_pow(const mpq_class& base, long e) {
  mpq_class acc = 1;
  mpq_class b = base;
  if (e < 0) {
    b = 1 / base;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

MultiplicativeDecomposition<mpq_class> decompose_rational(const AbcTriple& t, double B) {
  if (!(B > 0)) throw std::invalid_argument("decompose_rational: B must be > 0");
  MultiplicativeDecomposition<mpq_class> d;
  d.threshold = B;
  d.torsion = 1;  // b/c > 0, so the torsion part of Q* is trivial
  const Factorization fb = factorize(t.b);
  const Factorization fc = factorize(t.c);
  // merge the two (coprime) prime supports in ascending order
  std::size_t i = 0, j = 0;
  auto push = [&](const mpz_class& p, long e) {
    d.generators.emplace_back(p);
    if (std::abs(static_cast<double>(e)) > B)
      d.large_part.emplace_back(d.generators.size() - 1, e);
    else
      d.small_part.emplace_back(d.generators.size() - 1, e);
  };
  while (i < fb.factors.size() || j < fc.factors.size()) {
    if (j >= fc.factors.size() ||
        (i < fb.factors.size() && fb.factors[i].first < fc.factors[j].first)) {
      push(fb.factors[i].first, static_cast<long>(fb.factors[i].second));
      ++i;
    } else {
      push(fc.factors[j].first, -static_cast<long>(fc.factors[j].second));
      ++j;
    }
  }
  return d;
}

Thm3Reports thm3_case_reports(const AbcTriple& t, const BoundConstants& c) {
  const TripleReport rep = triple_report(t);
  if (rep.R < 16)  // R is an integer, so R > e^e means R >= 16
    throw std::domain_error("thm3_case_reports: R <= e^e");

  const double logR = log_mpz(rep.R);
  const double log2R = std::log(logR);
  const double expo = std::exp(c.kappa * std::sqrt(logR * log2R));
  const double logc = log_mpz(t.c);

  Thm3Reports out;
  {
    std::ostringstream in1;
    in1 << "a=" << t.a << " b=" << t.b << " c=" << t.c << " eta=" << rep.eta
        << " R=" << rep.R << " kappa=" << c.kappa;
    out.case1 = make_bound_report(logc, expo / rep.eta, in1.str());
  }
  {
    std::ostringstream in2;
    in2 << "a=" << t.a << " b=" << t.b << " c=" << t.c << " q=" << rep.q
        << " R=" << rep.R << " kappa=" << c.kappa;
    out.case2 = make_bound_report(logc, rep.q.get_d() * expo, in2.str());
  }

  // Anchor chain of the second case, only meaningful when c^(1/2) <= a:
  // log c / (2 log R) <= nu_p0(x) <= 2 nu_p0(x) log p0.
  out.in_anchor_regime = t.a * t.a >= t.c;
  if (out.in_anchor_regime) {
    const mpz_class& x = rep.q_element == 0 ? t.a : rep.q_element == 1 ? t.b : t.c;
    out.anchor_nu = rep.p0 > 1 ? valuation(x, rep.p0) : 0;
    out.anchor_lhs = logc / (2.0 * logR);
    const double nu = static_cast<double>(out.anchor_nu);
    out.anchor_holds =
        out.anchor_lhs <= nu && nu <= 2.0 * nu * log_mpz(rep.p0);
  }
  return out;
}

TripleStatsU64 triple_stats_u64(uint64_t a, uint64_t b, uint64_t c) {
  TripleStatsU64 s;
  uint64_t largest[3] = {1, 1, 1};
  const uint64_t elems[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    for (const auto& [p, e] : factorize_u64(elems[i])) {
      s.R *= p;
      s.nu_product *= e;
      largest[i] = p;  // ascending order: last one wins
      if (p > s.p_max) s.p_max = p;
    }
  }
  s.q = largest[0];
  s.q_element = 0;
  for (int i = 1; i < 3; ++i) {
    if (largest[i] < s.q) {
      s.q = largest[i];
      s.q_element = i;
    }
  }
  return s;
}

double corollary4_fit(std::span<const AbcTriple> corpus, uint64_t y_min) {
  if (corpus.empty()) throw std::invalid_argument("corollary4_fit: empty corpus");
  if (y_min < 16) throw std::invalid_argument("corollary4_fit: y_min must be >= 16");
  double inf = std::numeric_limits<double>::infinity();
  for (const AbcTriple& t : corpus) {
    if (t.b < mpz_class(static_cast<unsigned long>(y_min)))
      throw std::invalid_argument("corollary4_fit: triple with b below y_min");
    const TripleReport rep = triple_report(t);
    const double log2b = log_iter_mpz(t.b, 2);
    const double log3b = log_iter_mpz(t.b, 3);
    const double value = rep.p_max.get_d() * log3b / (log2b * log2b);
    if (value < inf) inf = value;
  }
  return inf;
}

}  // namespace ntkit

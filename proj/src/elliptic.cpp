#include "ntkit/elliptic.hpp"

#include <cmath>

#include "ntkit/factorization.hpp"
#include "ntkit/numeric.hpp"

namespace ntkit {

namespace {

unsigned vp(const mpz_class& x, const mpz_class& p) {
  if (x == 0) throw invariant_violation("vp: valuation of zero");
  mpz_class m = x;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

bool pdiv(const mpz_class& x, const mpz_class& p) {
  return x == 0 || mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t());
}

mpz_class redmod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class invmod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
    throw invariant_violation("invmod: not invertible");
  return r;
}

// x = x' + r, y = y' + s*x' + t   (Silverman Table 3.1 with u = 1)
CurveModel rst_transform(const CurveModel& m, const mpz_class& r,
                         const mpz_class& s, const mpz_class& t) {
  CurveModel o;
  o.a1 = m.a1 + 2 * s;
  o.a2 = m.a2 - s * m.a1 + 3 * r - s * s;
  o.a3 = m.a3 + r * m.a1 + 2 * t;
  o.a4 = m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t;
  o.a6 = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1;
  return o;
}

// Degree <= 3 polynomial gcd over F_p; coefficients low-to-high.
using Poly = std::vector<mpz_class>;

void strip(Poly& f, const mpz_class& p) {
  for (auto& c : f) c = redmod(c, p);
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const mpz_class& p) {
  const mpz_class lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const mpz_class coeff = redmod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = redmod(a[shift + i] - coeff * b[i], p);
    strip(a, p);
    if (a.size() >= b.size() && !a.empty() && a.back() == 0)
      throw invariant_violation("poly_mod: strip failed");
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const mpz_class& p) {
  strip(a, p);
  strip(b, p);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

struct QuadAnalysis {
  bool separable = false;
  mpz_class double_root;  // valid when !separable
};

// Y^2 + bY - c over F_p
QuadAnalysis quad_y(const mpz_class& b, const mpz_class& c, const mpz_class& p) {
  QuadAnalysis q;
  if (p == 2) {
    q.separable = !pdiv(b, p);
    if (!q.separable) q.double_root = redmod(c, p);  // sqrt is identity on F_2
  } else {
    q.separable = !pdiv(b * b + 4 * c, p);
    if (!q.separable) q.double_root = redmod(-b * invmod(2, p), p);
  }
  return q;
}

// aX^2 + bX + c over F_p with a a unit
QuadAnalysis quad_x(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                    const mpz_class& p) {
  QuadAnalysis q;
  if (p == 2) {
    q.separable = !pdiv(b, p);
    if (!q.separable) q.double_root = redmod(c * invmod(a, p), p);
  } else {
    q.separable = !pdiv(b * b - 4 * a * c, p);
    if (!q.separable) q.double_root = redmod(-b * invmod(2 * a, p), p);
  }
  return q;
}

void require(bool cond, const char* what) {
  if (!cond) throw invariant_violation(what);
}

}  // namespace

CurveInvariants curve_invariants(const CurveModel& m) {
  CurveInvariants v;
  v.b2 = m.a1 * m.a1 + 4 * m.a2;
  v.b4 = 2 * m.a4 + m.a1 * m.a3;
  v.b6 = m.a3 * m.a3 + 4 * m.a6;
  v.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
         m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.delta = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
            9 * v.b2 * v.b4 * v.b6;
  return v;
}

mpz_class equation_discriminant(const CurveModel& m) {
  return curve_invariants(m).delta;
}

std::string KodairaType::str() const {
  switch (cls) {
    case KodairaClass::I0: return "I0";
    case KodairaClass::In: return "I" + std::to_string(n);
    case KodairaClass::II: return "II";
    case KodairaClass::III: return "III";
    case KodairaClass::IV: return "IV";
    case KodairaClass::I0star: return "I0*";
    case KodairaClass::Instar: return "I" + std::to_string(n) + "*";
    case KodairaClass::IVstar: return "IV*";
    case KodairaClass::IIIstar: return "III*";
    case KodairaClass::IIstar: return "II*";
  }
  return "?";
}

CurveModel curve_for(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("curve_for: n must be >= 1");
  return CurveModel{0, 0, 0, 3, 2 * n};
}

CurveModel frey_curve(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (a < 1 || b < 1) throw std::invalid_argument("frey_curve: a, b must be >= 1");
  if (a + b != c) throw std::invalid_argument("frey_curve: a + b must equal c");
  if (gcd(a, b) != 1) throw std::invalid_argument("frey_curve: a, b must be coprime");
  // y^2 = x(x-a)(x+b) = x^3 + (b-a)x^2 - ab x
  return CurveModel{0, b - a, 0, -(a * b), 0};
}

LocalReductionData tate_local(const CurveModel& model, const mpz_class& p) {
  if (p < 2 || !is_probable_prime(p))
    throw std::invalid_argument("tate_local: p must be prime");
  if (equation_discriminant(model) == 0)
    throw std::invalid_argument("tate_local: singular model");

  CurveModel m = model;
  const mpz_class p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  LocalReductionData out;
  out.p = p;

  // Step numbers follow the standard formulation of Tate's algorithm
  // (Tate's original notes; the step 6+ translations are rederived for
  // p = 2, 3 and asserted at runtime).
  for (;;) {
    CurveInvariants iv = curve_invariants(m);
    const unsigned n = vp(iv.delta, p);

    // Step 1: good reduction.
    if (n == 0) {
      out.kodaira = {KodairaClass::I0, 0};
      out.conductor_exponent = 0;
      out.v_delta_min = 0;
      out.kind = ReductionKind::good;
      return out;
    }

    // Step 2: p does not divide c4 -> multiplicative, type In.
    // Such a model is p-minimal (a non-minimal one has vp(c4) >= 4).
    if (!pdiv(iv.c4, p)) {
      out.kodaira = {KodairaClass::In, n};
      out.conductor_exponent = 1;
      out.v_delta_min = n;
      out.kind = ReductionKind::multiplicative;
      return out;
    }

    // Additive from here on. Translate the singular point to (0,0);
    // afterwards p | a3, a4, a6.
    {
      mpz_class r, t;
      if (p == 2) {
        r = redmod(m.a4, p);
        t = redmod(r * (1 + m.a2 + m.a4) + m.a6, p);
      } else if (p == 3) {
        r = redmod(-iv.b6, p);
        t = redmod(m.a1 * r + m.a3, p);
      } else {
        r = redmod(-iv.b2 * invmod(12, p), p);
        t = redmod(-(m.a1 * r + m.a3) * invmod(2, p), p);
      }
      m = rst_transform(m, r, 0, t);
      require(pdiv(m.a3, p) && pdiv(m.a4, p) && pdiv(m.a6, p),
              "tate: singular point not at origin after step 2");
    }

    // Step 3: type II.
    if (!pdiv(m.a6, p2)) {
      out.kodaira = {KodairaClass::II, 0};
      out.conductor_exponent = n;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    iv = curve_invariants(m);
    // Step 4: type III.
    if (!pdiv(iv.b8, p3)) {
      out.kodaira = {KodairaClass::III, 0};
      out.conductor_exponent = n - 1;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    // Step 5: type IV.
    if (!pdiv(iv.b6, p3)) {
      out.kodaira = {KodairaClass::IV, 0};
      out.conductor_exponent = n - 2;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    // Prepare for step 6: arrange p | a1, a2;  p^2 | a3, a4;  p^3 | a6.
    {
      mpz_class s, t;
      if (p == 2) {
        s = redmod(m.a2, p);
        m = rst_transform(m, 0, s, 0);
        require(pdiv(m.a3, 4) && pdiv(m.a6, 4),
                "tate: expected 4 | a3, a6 before the t-shift at p=2");
        t = 2 * redmod(m.a6 / 4, p);
        m = rst_transform(m, 0, 0, t);
      } else {
        s = redmod(-m.a1 * invmod(2, p), p);
        m = rst_transform(m, 0, s, 0);
        t = redmod(-m.a3 * invmod(2, p2), p2);
        m = rst_transform(m, 0, 0, t);
      }
      require(pdiv(m.a1, p) && pdiv(m.a2, p) && pdiv(m.a3, p2) &&
                  pdiv(m.a4, p2) && pdiv(m.a6, p3),
              "tate: valuations wrong entering step 6");
    }

    // Step 6: the cubic P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3).
    // Multiplicity structure of P over the algebraic closure via
    // gcd(P, P'). Characteristic quirks: over F_3 a triple root makes
    // P' vanish identically (gcd degree 3); over F_2 both a double and
    // a triple root give a degree-2 gcd, so the triple case is told
    // apart by matching P against (T - alpha)^3 coefficientwise.
    const mpz_class A2 = m.a2 / p, A4 = m.a4 / p2, A6 = m.a6 / p3;
    Poly P{A6, A4, A2, 1};
    Poly dP{A4, 2 * A2, 3};
    Poly g = poly_gcd(P, dP, p);

    if (g.empty() || g.size() == 1) {
      // P separable: type I0*.
      out.kodaira = {KodairaClass::I0star, 0};
      out.conductor_exponent = n - 4;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    bool triple_root = false;
    mpz_class repeated;
    if (g.size() == 2) {
      repeated = redmod(-g[0] * invmod(g[1], p), p);
      triple_root = false;
    } else if (p == 2) {
      // monic deg-2 gcd is (T - alpha)^2 = T^2 + alpha^2, and squaring
      // is the identity on F_2
      repeated = redmod(g[0] * invmod(g[2], p), p);
      triple_root = pdiv(A2 - repeated, p) && pdiv(A4 - repeated * repeated, p) &&
                    pdiv(A6 - repeated * repeated * repeated, p);
    } else if (g.size() == 4 || p == 3) {
      require(p == 3, "tate: P' vanished away from characteristic 3");
      triple_root = true;
      repeated = redmod(-A6, p);  // cube map is the identity on F_3
    } else {
      triple_root = true;
      repeated = redmod(-A2 * invmod(3, p), p);
    }

    if (!triple_root) {
      // Step 7: one double root (rational); translate it to T = 0,
      // then walk the In* ladder of quadratics.
      const mpz_class alpha = repeated;
      m = rst_transform(m, p * alpha, 0, 0);
      require(vp(m.a2, p) == 1 && pdiv(m.a4, p3) && pdiv(m.a6, p4),
              "tate: wrong valuations entering the In* ladder");
      unsigned nstar = 1;
      unsigned level = 1;  // quadratics use a3/p^(level+1), a6/p^(2*level+2)
      for (;;) {
        // odd index: Y^2 + (a3/p^(level+1)) Y - (a6/p^(2 level+2))
        mpz_class plev1, plev2;
        mpz_pow_ui(plev1.get_mpz_t(), p.get_mpz_t(), level + 1);
        mpz_pow_ui(plev2.get_mpz_t(), p.get_mpz_t(), 2 * level + 2);
        require(pdiv(m.a3, plev1) && pdiv(m.a6, plev2),
                "tate: In* ladder valuations (Y step)");
        QuadAnalysis qy = quad_y(m.a3 / plev1, m.a6 / plev2, p);
        if (qy.separable) break;
        m = rst_transform(m, 0, 0, plev1 * qy.double_root);
        ++nstar;

        // even index: (a2/p) X^2 + (a4/p^(level+2)) X + (a6/p^(2 level+3))
        mpz_class plev3 = plev1 * p, plev4 = plev2 * p;
        require(pdiv(m.a4, plev3) && pdiv(m.a6, plev4),
                "tate: In* ladder valuations (X step)");
        QuadAnalysis qx = quad_x(m.a2 / p, m.a4 / plev3, m.a6 / plev4, p);
        if (qx.separable) break;
        m = rst_transform(m, plev1 * qx.double_root, 0, 0);
        ++nstar;
        ++level;
        require(nstar + 4 <= n, "tate: In* ladder exceeded v(delta)");
      }
      out.kodaira = {KodairaClass::Instar, nstar};
      out.conductor_exponent = n - 4 - nstar;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    // Step 8: triple root; translate it to T = 0.
    m = rst_transform(m, p * repeated, 0, 0);
    require(pdiv(m.a2, p2) && pdiv(m.a4, p3) && pdiv(m.a6, p4),
            "tate: triple root not at origin after step 8");

    // Y^2 + (a3/p^2) Y - (a6/p^4)
    QuadAnalysis qy = quad_y(m.a3 / p2, m.a6 / p4, p);
    if (qy.separable) {
      out.kodaira = {KodairaClass::IVstar, 0};
      out.conductor_exponent = n - 6;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }
    m = rst_transform(m, 0, 0, p2 * qy.double_root);
    require(pdiv(m.a3, p3) && pdiv(m.a6, p4 * p), "tate: step 9 valuations");

    // Step 9: type III*.
    if (!pdiv(m.a4, p4)) {
      out.kodaira = {KodairaClass::IIIstar, 0};
      out.conductor_exponent = n - 7;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    // Step 10: type II*.
    if (!pdiv(m.a6, p4 * p2)) {
      out.kodaira = {KodairaClass::IIstar, 0};
      out.conductor_exponent = n - 8;
      out.v_delta_min = n;
      out.kind = ReductionKind::additive;
      return out;
    }

    // Step 11: non-minimal; rescale by u = p and restart.
    require(pdiv(m.a1, p) && pdiv(m.a2, p2) && pdiv(m.a3, p3) &&
                pdiv(m.a4, p4) && pdiv(m.a6, p4 * p2),
            "tate: rescale valuations");
    m.a1 /= p;
    m.a2 /= p2;
    m.a3 /= p3;
    m.a4 /= p4;
    m.a6 /= p4 * p2;
  }
}

mpz_class minimal_discriminant(const CurveModel& m) {
  const mpz_class delta = equation_discriminant(m);
  if (delta == 0) throw std::invalid_argument("minimal_discriminant: singular model");
  const Factorization f = factorize(abs(delta));
  mpz_class result = delta < 0 ? -1 : 1;
  for (const auto& [p, e] : f.factors) {
    const LocalReductionData local = tate_local(m, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), local.v_delta_min);
    result *= pe;
  }
  return result;
}

mpz_class conductor(const CurveModel& m) {
  const mpz_class delta = equation_discriminant(m);
  if (delta == 0) throw std::invalid_argument("conductor: singular model");
  const Factorization f = factorize(abs(delta));
  mpz_class result = 1;
  for (const auto& [p, e] : f.factors) {
    const LocalReductionData local = tate_local(m, p);
    // Ogg caps; a violation here is an algorithm bug, not bad input.
    unsigned cap = 2;
    if (p == 2) cap = 8;
    if (p == 3) cap = 5;
    if (local.conductor_exponent > cap)
      throw invariant_violation("conductor: exponent exceeds the Ogg cap");
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), local.conductor_exponent);
    result *= pe;
  }
  return result;
}

ExponentProductReport exponent_product_report(const mpz_class& n, double K, double kappa) {
  if (n < 1) throw std::invalid_argument("exponent_product_report: n must be >= 1");
  ExponentProductReport rep;
  rep.n = n;
  const Factorization f = factorize(n * n + 1);
  rep.nu_product = exponent_product(f);
  rep.rad = radical(f);
  mpz_pow_ui(rep.rad_pow8.get_mpz_t(), rep.rad.get_mpz_t(), 8);
  rep.ratio = std::exp(log_mpz(rep.nu_product) - 8.0 * log_mpz(rep.rad));
  rep.product_bound_holds = rep.nu_product.get_d() <= K * rep.rad_pow8.get_d() ||
                            log_mpz(rep.nu_product) <= std::log(K) + 8.0 * log_mpz(rep.rad);

  const CurveModel curve = curve_for(n);
  rep.conductor = conductor(curve);
  rep.delta_min = minimal_discriminant(curve);
  const double N_logN = rep.conductor.get_d() == 0
                            ? 0.0
                            : rep.conductor.get_d() * log_mpz(rep.conductor);
  rep.exponent_bound_holds = true;
  rep.exponent_bound_max_ratio = 0.0;
  const Factorization df = factorize(abs(rep.delta_min));
  for (const auto& [p, e] : df.factors) {
    const double lhs = static_cast<double>(e);
    const double ratio = lhs / (kappa * N_logN);
    if (ratio > rep.exponent_bound_max_ratio) rep.exponent_bound_max_ratio = ratio;
    if (lhs > kappa * N_logN) rep.exponent_bound_holds = false;
  }
  return rep;
}

}  // namespace ntkit

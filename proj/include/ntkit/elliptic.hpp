#pragma once

// Long Weierstrass models over Z, Tate's algorithm for local reduction
// data, minimal discriminant and conductor, the y^2 = x^3 + 3x + 2n
// family, and Frey curves for ABC triples.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ntkit {

struct CurveModel {
  mpz_class a1, a2, a3, a4, a6;
};

struct CurveInvariants {
  mpz_class b2, b4, b6, b8, c4, c6, delta;
};

CurveInvariants curve_invariants(const CurveModel& m);
mpz_class equation_discriminant(const CurveModel& m);

enum class ReductionKind { good, multiplicative, additive };

enum class KodairaClass { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaType {
  KodairaClass cls = KodairaClass::I0;
  unsigned n = 0;  // subscript for In / In*
  std::string str() const;
};

struct LocalReductionData {
  mpz_class p;
  KodairaType kodaira;
  unsigned conductor_exponent = 0;  // f_p
  unsigned v_delta_min = 0;         // nu_p of the local minimal discriminant
  ReductionKind kind = ReductionKind::good;
};

// y^2 = x^3 + 3x + 2n
CurveModel curve_for(const mpz_class& n);

// y^2 = x(x - a)(x + b) for a coprime triple a + b = c;
// its equation discriminant is 16(abc)^2.
CurveModel frey_curve(const mpz_class& a, const mpz_class& b, const mpz_class& c);

// Tate's algorithm at p, including the step-11 rescaling loop for
// non-minimal input models.
LocalReductionData tate_local(const CurveModel& m, const mpz_class& p);

// Product over p | delta_eq of p^{nu_p(delta_min)}, carrying the sign
// of the equation discriminant.
mpz_class minimal_discriminant(const CurveModel& m);

// N = prod p^{f_p}
mpz_class conductor(const CurveModel& m);

struct ExponentProductReport {
  mpz_class n;
  mpz_class nu_product;   // prod of exponents in n^2+1
  mpz_class rad;          // rad(n^2+1)
  mpz_class rad_pow8;
  double ratio = 0.0;     // nu_product / rad^8
  bool product_bound_holds = false;  // nu_product <= K * rad^8
  mpz_class conductor;
  mpz_class delta_min;
  bool exponent_bound_holds = false;  // nu_p(delta_min) <= kappa*N*log N, all p
  double exponent_bound_max_ratio = 0.0;
};

ExponentProductReport exponent_product_report(const mpz_class& n, double K = 1.0,
                                  double kappa = 1.0);

}  // namespace ntkit

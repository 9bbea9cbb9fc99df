#pragma once

// Arithmetic in Z[i] and Q(i): Euclidean division, gcd, splitting of
// rational primes, factorization of n+i, heights, and the threshold
// decomposition of (n-i)/(n+i).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "ntkit/decomposition.hpp"

namespace ntkit {

struct GaussianInt {
  mpz_class re, im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}

  mpz_class norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }

  std::string str() const;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
bool operator==(const GaussianInt& a, const GaussianInt& b);

// Euclidean division: alpha = q*beta + r with norm(r) <= norm(beta)/2.
// Each coordinate of alpha/beta is rounded to the nearest integer,
// ties toward -infinity.
std::pair<GaussianInt, GaussianInt> gi_divmod(const GaussianInt& alpha,
                                              const GaussianInt& beta);

// Exact division test; writes the quotient when it exists.
bool gi_divides(const GaussianInt& d, const GaussianInt& a, GaussianInt* q = nullptr);

// Gcd in canonical-associate form; gcd(0,0) is rejected.
GaussianInt gi_gcd(GaussianInt a, GaussianInt b);

// The associate with re > 0 and im >= 0 (first quadrant, positive
// imaginary axis excluded); canonical(0) = 0.
GaussianInt canonical_associate(const GaussianInt& z);

// Canonical irreducible of norm p for p = 2 or p = 1 mod 4.
GaussianInt split_prime(const mpz_class& p);

struct GaussianFactorization {
  mpz_class n;        // the argument: factorization of n + i
  GaussianInt unit;   // u, norm 1
  std::vector<std::pair<GaussianInt, unsigned>> factors;  // canonical irreducibles
};

GaussianFactorization factor_n_plus_i(const mpz_class& n);

// h(beta/delta) for coprime beta, delta: (1/2) log max(N(beta), N(delta)).
// Collapses the place-by-place definition over Q(i); the identity is
// exercised against a per-place oracle in the tests.
double height_qi(const GaussianInt& beta, const GaussianInt& delta);

// Reduced fraction over Z[i]; denominator canonical, unit folded into
// the numerator.
struct GaussianRational {
  GaussianInt num;
  GaussianInt den;
};

GaussianRational make_gaussian_rational(const GaussianInt& num, const GaussianInt& den);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational elem_pow(const GaussianRational& base, long e);
bool operator==(const GaussianRational& a, const GaussianRational& b);
double height(const GaussianRational& x);

// (n-i)/(n+i) = w * xi0 * prod_{j in I} xi_j^{e_j} with xi_j =
// conj(gamma_j)/gamma_j, w = conj(u)/u, and I the indices with e_j > B.
MultiplicativeDecomposition<GaussianRational> decompose_xi(
    const GaussianFactorization& fact, double B);

inline GaussianRational reconstruct(const MultiplicativeDecomposition<GaussianRational>& d) {
  return reconstruct_with(d, [](const GaussianRational& x, long e) { return elem_pow(x, e); });
}

}  // namespace ntkit

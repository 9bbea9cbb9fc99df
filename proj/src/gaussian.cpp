#include "ntkit/gaussian.hpp"

#include <sstream>

#include "ntkit/factorization.hpp"
#include "ntkit/numeric.hpp"

namespace ntkit {

namespace {

GaussianInt mul_i(const GaussianInt& z) { return {-z.im, z.re}; }

// Nearest integer to x/n (n > 0), ties toward -infinity:
// ceil((2x - n) / (2n)).
mpz_class round_half_down(const mpz_class& x, const mpz_class& n) {
  mpz_class q;
  mpz_class num = 2 * x - n;
  mpz_class den = 2 * n;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::string GaussianInt::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im << "i";
  } else {
    os << re;
    if (im > 0) os << "+";
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im << "i";
  }
  return os.str();
}

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool operator==(const GaussianInt& a, const GaussianInt& b) {
  return a.re == b.re && a.im == b.im;
}

std::pair<GaussianInt, GaussianInt> gi_divmod(const GaussianInt& alpha,
                                              const GaussianInt& beta) {
  if (beta.is_zero()) throw std::invalid_argument("gi_divmod: division by zero");
  const GaussianInt num = alpha * beta.conj();
  const mpz_class nrm = beta.norm();
  GaussianInt q{round_half_down(num.re, nrm), round_half_down(num.im, nrm)};
  GaussianInt r = alpha - q * beta;
  return {q, r};
}

bool gi_divides(const GaussianInt& d, const GaussianInt& a, GaussianInt* q) {
  if (d.is_zero()) return false;
  const GaussianInt num = a * d.conj();
  const mpz_class nrm = d.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), nrm.get_mpz_t())) return false;
  if (!mpz_divisible_p(num.im.get_mpz_t(), nrm.get_mpz_t())) return false;
  if (q) {
    mpz_class qr, qi;
    mpz_divexact(qr.get_mpz_t(), num.re.get_mpz_t(), nrm.get_mpz_t());
    mpz_divexact(qi.get_mpz_t(), num.im.get_mpz_t(), nrm.get_mpz_t());
    *q = GaussianInt{qr, qi};
  }
  return true;
}

GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gi_gcd: gcd(0,0) is undefined");
  while (!b.is_zero()) {
    auto [q, r] = gi_divmod(a, b);
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

GaussianInt canonical_associate(const GaussianInt& z) {
  if (z.is_zero()) return z;
  GaussianInt w = z;
  // one of the four rotations lands in {re > 0, im >= 0}
  for (int k = 0; k < 4; ++k) {
    if (w.re > 0 && w.im >= 0) return w;
    w = mul_i(w);
  }
  throw invariant_violation("canonical_associate: no rotation matched");
}

GaussianInt split_prime(const mpz_class& p) {
  if (p == 2) return {1, 1};
  if (p < 2 || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1 || !is_probable_prime(p))
    throw std::invalid_argument(
        "split_prime: p must be 2 or a prime = 1 (mod 4)");
  // r^2 = -1 (mod p) from a quadratic non-residue raised to (p-1)/4.
  const mpz_class exp_half = (p - 1) / 2;
  const mpz_class exp_quarter = (p - 1) / 4;
  mpz_class a = 2, t;
  for (;; ++a) {
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), exp_half.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) break;
  }
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp_quarter.get_mpz_t(), p.get_mpz_t());
  GaussianInt pi = gi_gcd(GaussianInt{p, 0}, GaussianInt{r, 1});
  if (pi.norm() != p)
    throw invariant_violation("split_prime: gcd does not have norm p");
  return pi;
}

GaussianFactorization factor_n_plus_i(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factor_n_plus_i: n must be >= 1");
  GaussianFactorization out;
  out.n = n;
  const Factorization zf = factorize(n * n + 1);
  GaussianInt rem{n, 1};
  for (const auto& [p, e_int] : zf.factors) {
    GaussianInt gamma = split_prime(p);
    if (p != 2) {
      // pick the conjugate that actually divides n+i
      if (!gi_divides(gamma, rem)) gamma = canonical_associate(gamma.conj());
    }
    unsigned e = 0;
    GaussianInt q;
    while (gi_divides(gamma, rem, &q)) {
      rem = q;
      ++e;
    }
    if (e == 0)
      throw invariant_violation("factor_n_plus_i: neither conjugate divides n+i");
    out.factors.emplace_back(gamma, e);
  }
  if (!rem.is_unit())
    throw invariant_violation("factor_n_plus_i: leftover cofactor is not a unit");
  out.unit = rem;
  return out;
}

double height_qi(const GaussianInt& beta, const GaussianInt& delta) {
  if (delta.is_zero()) throw std::invalid_argument("height_qi: zero denominator");
  if (!(beta.is_zero() ? delta.is_unit() : gi_gcd(beta, delta).is_unit()))
    throw std::invalid_argument("height_qi: arguments must be coprime");
  mpz_class m = beta.norm();
  const mpz_class nd = delta.norm();
  if (nd > m) m = nd;
  return 0.5 * log_mpz(m);
}

GaussianRational make_gaussian_rational(const GaussianInt& num,
                                        const GaussianInt& den) {
  if (den.is_zero())
    throw std::invalid_argument("gaussian_rational: zero denominator");
  GaussianRational x{num, den};
  if (num.is_zero()) return {GaussianInt{0, 0}, GaussianInt{1, 0}};
  const GaussianInt g = gi_gcd(num, den);
  gi_divides(g, num, &x.num);
  gi_divides(g, den, &x.den);
  // rotate so the denominator is canonical
  while (!(x.den.re > 0 && x.den.im >= 0)) {
    x.den = GaussianInt{-x.den.im, x.den.re};
    x.num = GaussianInt{-x.num.im, x.num.re};
  }
  return x;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return make_gaussian_rational(a.num * b.num, a.den * b.den);
}

GaussianRational elem_pow(const GaussianRational& base, long e) {
  GaussianRational acc{GaussianInt{1, 0}, GaussianInt{1, 0}};
  if (e == 0) return acc;
  GaussianRational b = base;
  if (e < 0) {
    b = make_gaussian_rational(base.den, base.num);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  // both reduced with canonical denominator, so cross-multiplying is
  // only needed to absorb the residual unit on the numerator side
  return a.num == b.num && a.den == b.den;
}

double height(const GaussianRational& x) { return height_qi(x.num, x.den); }

MultiplicativeDecomposition<GaussianRational> decompose_xi(
    const GaussianFactorization& fact, double B) {
  if (!(B > 0)) throw std::invalid_argument("decompose_xi: B must be > 0");
  MultiplicativeDecomposition<GaussianRational> d;
  d.threshold = B;
  // w = conj(u)/u = conj(u)^2 for a unit u
  const GaussianInt ubar = fact.unit.conj();
  d.torsion = make_gaussian_rational(ubar * ubar, GaussianInt{1, 0});
  for (std::size_t j = 0; j < fact.factors.size(); ++j) {
    const auto& [gamma, e] = fact.factors[j];
    d.generators.push_back(make_gaussian_rational(gamma.conj(), gamma));
    if (static_cast<double>(e) > B)
      d.large_part.emplace_back(j, static_cast<long>(e));
    else
      d.small_part.emplace_back(j, static_cast<long>(e));
  }
  return d;
}

}  // namespace ntkit

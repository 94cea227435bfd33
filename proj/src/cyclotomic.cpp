#include "trec/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numeric>

namespace trec {

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// x^d - 1
UniPoly<Rational> x_pow_minus_one(long d) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[0] = Rational(-1);
  c[static_cast<std::size_t>(d)] = Rational(1);
  return UniPoly<Rational>(std::move(c));
}

int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

UniPoly<Rational> cyclotomic_polynomial(long n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
  UniPoly<Rational> num = UniPoly<Rational>::constant(Rational(1));
  UniPoly<Rational> den = num;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1) num = num * x_pow_minus_one(d);
    else if (mu == -1) den = den * x_pow_minus_one(d);
  }
  return num / den;
}

CycloCtx::CycloCtx(long conductor) : n_(conductor) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  phi_ = cyclotomic_polynomial(n_);
  deg_ = phi_.degree();
  // rows_[k] = x^(deg+k) mod phi, for k = 0 .. deg-2
  if (deg_ >= 1) {
    std::vector<Rational> cur(static_cast<std::size_t>(deg_), Rational(0));
    for (long i = 0; i < deg_; ++i) cur[static_cast<std::size_t>(i)] = -phi_[static_cast<std::size_t>(i)];
    rows_.push_back(cur);
    for (long k = 1; k + 1 < deg_; ++k) {
      std::vector<Rational> nxt(static_cast<std::size_t>(deg_), Rational(0));
      Rational top = cur[static_cast<std::size_t>(deg_ - 1)];
      for (long i = deg_ - 1; i > 0; --i) nxt[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      nxt[0] = Rational(0);
      if (!top.is_zero())
        for (long i = 0; i < deg_; ++i) nxt[static_cast<std::size_t>(i)] += top * rows_[0][static_cast<std::size_t>(i)];
      rows_.push_back(nxt);
      cur = std::move(nxt);
    }
  }
}

void CycloCtx::reduce(std::vector<Rational>* c) const {
  auto& v = *c;
  std::size_t deg = static_cast<std::size_t>(deg_);
  for (std::size_t i = v.size(); i-- > deg;) {
    Rational k = v[i];
    if (!k.is_zero()) {
      const auto& row = rows_[i - deg];
      for (std::size_t j = 0; j < deg; ++j) v[j] += k * row[j];
    }
  }
  v.resize(deg, Rational(0));
}

std::shared_ptr<const CycloCtx> CycloCtx::get(long conductor) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CycloCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycloCtx>(conductor);
  cache[conductor] = ctx;
  return ctx;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check(a, b);
  if (a.is_rational()) return b * a.c_[0];
  if (b.is_rational()) return a * b.c_[0];
  std::size_t n = a.c_.size();
  std::vector<Rational> c(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  a.F_->reduce(&c);
  return Cyclotomic(a.F_, std::move(c));
}

Cyclotomic Cyclotomic::zeta(std::shared_ptr<const CycloCtx> F, long order) {
  if (order < 1) throw DomainError("zeta order must be positive");
  long n = F->conductor();
  if (n % order != 0)
    throw FieldExtensionRequired("zeta_" + std::to_string(order) +
                                 " not in Q(zeta_" + std::to_string(n) + ")");
  long e = n / order;
  Cyclotomic z(F);
  // x^e mod phi
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = Rational(1);
  F->reduce(&c);
  c.resize(static_cast<std::size_t>(F->degree()), Rational(0));
  return Cyclotomic(F, std::move(c));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic acc = one_like(*this);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(F_, c_[0].inv());
  // extended Euclid for gcd(a, phi) = 1
  UniPoly<Rational> a{std::vector<Rational>(c_)};
  UniPoly<Rational> b = F_->minimal_poly();
  UniPoly<Rational> s0 = UniPoly<Rational>::constant(Rational(1));
  UniPoly<Rational> s1;
  while (!b.is_zero_poly()) {
    UniPoly<Rational> q, r;
    UniPoly<Rational>::divrem(a, b, &q, &r);
    UniPoly<Rational> s2 = s0 - q * s1;
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // a = gcd (a nonzero constant since phi is squarefree and a != 0 mod phi)
  if (a.degree() != 0)
    throw DomainError("element not invertible modulo cyclotomic polynomial");
  UniPoly<Rational> inv_poly = s0.scaled(a.lead().inv());
  std::vector<Rational> c(inv_poly.coeffs());
  c.resize(static_cast<std::size_t>(F_->degree()), Rational(0));
  return Cyclotomic(F_, std::move(c));
}

long Cyclotomic::sqrt_conductor(const Rational& q) {
  if (q.is_zero()) return 1;
  // squarefree part of num*den carries the radical
  mpz_class m = q.num() * q.den();
  bool neg = m < 0;
  if (neg) m = -m;
  mpz_class sf = 1;
  mpz_class mm = m;
  for (mpz_class p = 2; p * p <= mm; ++p) {
    if (mm % p == 0) {
      int cnt = 0;
      while (mm % p == 0) { mm /= p; ++cnt; }
      if (cnt % 2 == 1) sf *= p;
    }
  }
  if (mm > 1) sf *= mm;
  long d = static_cast<long>((neg ? -sf : sf).get_si());
  if (d == 1) return 1;
  // conductor of Q(sqrt(d)) for squarefree d
  long ad = d < 0 ? -d : d;
  bool one_mod4 = ((d % 4) + 4) % 4 == 1;
  return one_mod4 ? ad : 4 * ad;
}

Cyclotomic Cyclotomic::sqrt_rational(std::shared_ptr<const CycloCtx> F, const Rational& q) {
  if (q.is_zero()) return Cyclotomic(F);
  Rational direct;
  if (q.nth_root(2, &direct)) return Cyclotomic(F, direct);

  mpz_class m = q.num() * q.den();
  bool neg = m < 0;
  if (neg) m = -m;
  // split m = s * k^2 with s squarefree, collecting k
  mpz_class s = 1, k = 1;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int cnt = 0;
      while (m % p == 0) { m /= p; ++cnt; }
      for (int i = 0; i < cnt / 2; ++i) k *= p;
      if (cnt % 2 == 1) s *= p;
    }
  }
  if (m > 1) s *= m;

  // sqrt(q) = sqrt(s) * k / den
  Cyclotomic root = Cyclotomic(F, Rational(1));
  mpz_class srem = s;
  if (srem % 2 == 0) {
    // sqrt(2) = zeta8 + zeta8^-1
    Cyclotomic z8 = zeta(F, 8);
    root = root * (z8 + z8.pow(7));
    srem /= 2;
  }
  long i_factors = 0;  // powers of i collected from p = 3 (mod 4) Gauss sums
  std::vector<long> odd_primes;
  for (mpz_class p = 3; p * p <= srem; p += 2) {
    if (srem % p == 0) {
      odd_primes.push_back(static_cast<long>(p.get_si()));
      srem /= p;
    }
  }
  if (srem > 1) odd_primes.push_back(static_cast<long>(srem.get_si()));
  for (long pl : odd_primes) {
    Cyclotomic zp = zeta(F, pl);
    Cyclotomic g(F);
    mpz_class pz(pl);
    for (long a = 1; a < pl; ++a) {
      mpz_class az(a);
      int leg = mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
      if (leg == 1) g = g + zp.pow(a);
      else if (leg == -1) g = g - zp.pow(a);
    }
    // g = sqrt(p) for p = 1 (mod 4), i*sqrt(p) for p = 3 (mod 4)
    if (pl % 4 == 3) ++i_factors;
    root = root * g;
  }
  // net power of i: one extra for a negative radicand, minus those absorbed
  long i_net = (((neg ? 1 : 0) - i_factors) % 4 + 4) % 4;
  if (i_net == 2) {
    root = -root;  // i^2 is rational, no need for zeta_4 in the field
  } else if (i_net != 0) {
    Cyclotomic i4 = zeta(F, 4);
    root = root * i4.pow(i_net);
  }
  root = root * Rational(k, q.den());
  // verify exactly
  Cyclotomic sq = root * root;
  if (!(sq == Cyclotomic(F, q)))
    throw FieldExtensionRequired("sqrt(" + q.str() + ") not representable in Q(zeta_" +
                                 std::to_string(F->conductor()) + ")");
  return root;
}

std::complex<double> Cyclotomic::to_complex() const {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2.0 * pi / static_cast<double>(conductor()));
  std::complex<double> acc(0.0, 0.0), zp(1.0, 0.0);
  for (const auto& q : c_) {
    acc += q.to_double() * zp;
    zp *= z;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  std::string var = "z" + std::to_string(conductor());
  UniPoly<Rational> p{std::vector<Rational>(c_)};
  return p.str(var);
}

}  // namespace trec

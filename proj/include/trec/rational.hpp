#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "trec/errors.hpp"

namespace trec {

// Arbitrary-precision rational, canonical form (gcd-reduced, denominator > 0).
// Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (v.get_den() == 0) throw ParseError("zero denominator: " + s);
    v.canonicalize();
    return Rational(v);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc;
    mpz_pow_ui(acc.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(acc.get_den_mpz_t(), base.get_den_mpz_t(), n);
    return Rational(acc);
  }

  // Exact n-th root when it exists in Q, else nullopt-style via flag.
  bool nth_root(long n, Rational* out) const {
    if (n <= 0) throw DomainError("nth_root: n must be positive");
    if (is_zero()) { *out = Rational(0); return true; }
    if (sgn() < 0 && n % 2 == 0) return false;
    mpz_class an = num() < 0 ? mpz_class(-num()) : num();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n)) return false;
    if (!mpz_root(rd.get_mpz_t(), den().get_mpz_t(), n)) return false;
    mpz_class back_n, back_d;
    mpz_pow_ui(back_n.get_mpz_t(), rn.get_mpz_t(), n);
    mpz_pow_ui(back_d.get_mpz_t(), rd.get_mpz_t(), n);
    if (back_n != an || back_d != den()) return false;
    if (sgn() < 0) rn = -rn;
    *out = Rational(rn, rd);
    return true;
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational from_rat(const Rational&, const Rational& q) { return q; }
inline std::string to_str(const Rational& q) { return q.str(); }
inline Rational scalar_inv(const Rational& q) { return q.inv(); }

// Roots of unity available in Q: only +-1.
inline Rational zeta_like(const Rational&, long m) {
  if (m == 1) return Rational(1);
  if (m == 2) return Rational(-1);
  throw FieldExtensionRequired("root of unity of order " + std::to_string(m) +
                               " is not rational");
}

inline bool as_rational(const Rational& q, Rational* out) {
  *out = q;
  return true;
}

}  // namespace trec

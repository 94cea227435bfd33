#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "trec/errors.hpp"
#include "trec/rational.hpp"
#include "trec/unipoly.hpp"

namespace trec {

// Shared data for the field Q(zeta_N): the N-th cyclotomic polynomial and
// reduction rows for x^(deg), ..., x^(2*deg-2) modulo it.
class CycloCtx {
 public:
  explicit CycloCtx(long conductor);

  long conductor() const { return n_; }
  long degree() const { return deg_; }  // phi(N)
  const UniPoly<Rational>& minimal_poly() const { return phi_; }

  // Reduce a coefficient vector of length <= 2*deg-1 to length deg, in place.
  void reduce(std::vector<Rational>* c) const;

  static std::shared_ptr<const CycloCtx> get(long conductor);

 private:
  long n_ = 1;
  long deg_ = 1;
  UniPoly<Rational> phi_;
  std::vector<std::vector<Rational>> rows_;  // rows_[k] = x^(deg+k) mod phi
};

long euler_phi(long n);
UniPoly<Rational> cyclotomic_polynomial(long n);

// Element of Q(zeta_N), the canonical residue modulo the N-th cyclotomic
// polynomial.  Equality is exact and decidable.
class Cyclotomic {
 public:
  Cyclotomic() : F_(CycloCtx::get(1)), c_(1, Rational(0)) {}
  explicit Cyclotomic(std::shared_ptr<const CycloCtx> F)
      : F_(std::move(F)), c_(static_cast<std::size_t>(F_->degree()), Rational(0)) {}
  Cyclotomic(std::shared_ptr<const CycloCtx> F, const Rational& q)
      : Cyclotomic(std::move(F)) {
    c_[0] = q;
  }
  Cyclotomic(std::shared_ptr<const CycloCtx> F, std::vector<Rational> coeffs)
      : F_(std::move(F)), c_(std::move(coeffs)) {
    F_->reduce(&c_);
    c_.resize(static_cast<std::size_t>(F_->degree()), Rational(0));
  }

  static Cyclotomic zeta(std::shared_ptr<const CycloCtx> F, long order);
  // sqrt of a rational, as an element of Q(zeta_N); throws if the conductor
  // does not accommodate it.  Positive radicands get the positive real root,
  // negative ones the root with positive imaginary part.
  static Cyclotomic sqrt_rational(std::shared_ptr<const CycloCtx> F, const Rational& q);
  // Smallest conductor M with sqrt(q) in Q(zeta_M).
  static long sqrt_conductor(const Rational& q);

  const std::shared_ptr<const CycloCtx>& ctx() const { return F_; }
  long conductor() const { return F_->conductor(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (!q.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rational rational_part() const { return c_[0]; }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
  }
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check(a, b);
    Cyclotomic r(a);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check(a, b);
    Cyclotomic r(a);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
    Cyclotomic r(a);
    for (auto& x : r.c_) x *= q;
    return r;
  }
  Cyclotomic inv() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inv();
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic pow(long e) const;

  // Evaluate numerically (zeta_N -> exp(2*pi*i/N)).
  std::complex<double> to_complex() const;

  std::string str() const;  // polynomial in zN, e.g. "z3^2 - 1"

 private:
  static void check(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.F_->conductor() != b.F_->conductor())
      throw DomainError("cyclotomic conductor mismatch");
  }
  std::shared_ptr<const CycloCtx> F_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& k) { return k.is_zero(); }
inline Cyclotomic one_like(const Cyclotomic& k) {
  return Cyclotomic(k.ctx(), Rational(1));
}
inline Cyclotomic zero_like(const Cyclotomic& k) { return Cyclotomic(k.ctx()); }
inline Cyclotomic from_rat(const Cyclotomic& k, const Rational& q) {
  return Cyclotomic(k.ctx(), q);
}
inline std::string to_str(const Cyclotomic& k) { return k.str(); }
inline Cyclotomic scalar_inv(const Cyclotomic& k) { return k.inv(); }
inline Cyclotomic zeta_like(const Cyclotomic& k, long m) {
  return Cyclotomic::zeta(k.ctx(), m);
}
inline bool as_rational(const Cyclotomic& k, Rational* out) {
  if (!k.is_rational()) return false;
  *out = k.rational_part();
  return true;
}

}  // namespace trec

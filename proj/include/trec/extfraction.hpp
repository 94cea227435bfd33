#pragma once

#include <gmpxx.h>

#include <string>

#include "trec/errors.hpp"
#include "trec/rational.hpp"

namespace trec {

// Reduced fraction p/q with q >= 0, where q = 0 encodes the point at infinity
// (the unique infinite element is 1/0).  Used for slopes and aspect ratios.
class ExtFraction {
 public:
  ExtFraction() : p_(0), q_(1) {}
  ExtFraction(long p, long q) : p_(p), q_(q) { normalize(); }
  ExtFraction(const mpz_class& p, const mpz_class& q) : p_(p), q_(q) { normalize(); }
  explicit ExtFraction(const Rational& r) : p_(r.num()), q_(r.den()) {}

  static ExtFraction infinity() { return ExtFraction(1, 0); }

  bool is_infinite() const { return q_ == 0; }
  const mpz_class& num() const { return p_; }
  const mpz_class& den() const { return q_; }
  Rational to_rational() const {
    if (is_infinite()) throw DomainError("infinite fraction has no rational value");
    return Rational(p_, q_);
  }

  friend bool operator==(const ExtFraction& a, const ExtFraction& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const ExtFraction& a, const ExtFraction& b) { return !(a == b); }
  // infinity compares above every finite fraction
  friend bool operator<(const ExtFraction& a, const ExtFraction& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.p_ * b.q_ < b.p_ * a.q_;
  }
  friend bool operator<=(const ExtFraction& a, const ExtFraction& b) {
    return a == b || a < b;
  }
  friend bool operator>(const ExtFraction& a, const ExtFraction& b) { return b < a; }
  friend bool operator>=(const ExtFraction& a, const ExtFraction& b) { return b <= a; }

  ExtFraction mediant(const ExtFraction& o) const {
    return ExtFraction(p_ + o.p_, q_ + o.q_);
  }

  ExtFraction inverse() const {
    if (p_ == 0) return infinity();
    if (p_ < 0) throw DomainError("inverse of negative fraction not supported here");
    return ExtFraction(q_, p_);
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (q_ == 1) return p_.get_str();
    return p_.get_str() + "/" + q_.get_str();
  }

  static ExtFraction parse(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return infinity();
    auto slash = s.find('/');
    if (slash == std::string::npos) return ExtFraction(mpz_class(s), mpz_class(1));
    return ExtFraction(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }

 private:
  void normalize() {
    if (q_ == 0) {
      if (p_ == 0) throw DomainError("0/0 is not a fraction");
      p_ = 1;
      return;
    }
    if (q_ < 0) { p_ = -p_; q_ = -q_; }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    if (g > 1) { p_ /= g; q_ /= g; }
  }
  mpz_class p_, q_;
};

}  // namespace trec

#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "trec/errors.hpp"
#include "trec/unipoly.hpp"

namespace trec {

inline constexpr long kValInfinity = std::numeric_limits<long>::max() / 4;

// Univariate rational function in the deformation parameter t over a field K.
// Canonical form: denominator monic, gcd removed.
template <class K>
class RatFunc {
 public:
  RatFunc() = default;  // zero over an unknown field; usable once assigned
  explicit RatFunc(const K& k)
      : num_(UniPoly<K>::constant(k)), den_(UniPoly<K>::constant(one_like(k))), proto_(one_like(k)), has_proto_(true) {}
  RatFunc(UniPoly<K> num, UniPoly<K> den) { assign(std::move(num), std::move(den)); }

  static RatFunc variable(const K& proto) {  // t
    return RatFunc(UniPoly<K>::monomial(one_like(proto), 1),
                   UniPoly<K>::constant(one_like(proto)));
  }

  const UniPoly<K>& num() const { return num_; }
  const UniPoly<K>& den() const { return den_; }
  bool is_zero_fn() const { return num_.is_zero_poly(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  K constant_value() const {
    if (!is_constant()) throw DomainError("not a constant rational function");
    if (num_.is_zero_poly()) return zero_like(proto());
    return num_[0];
  }

  K proto() const {
    if (has_proto_) return proto_;
    throw DomainError("rational function without field prototype");
  }

  RatFunc operator-() const { RatFunc r(*this); r.num_ = -r.num_; return r; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero_fn() && !a.has_proto_) return b;
    if (b.is_zero_fn() && !b.has_proto_) return a;
    if (a.is_zero_fn()) return b;
    if (b.is_zero_fn()) return a;
    if (a.den_ == b.den_) {
      UniPoly<K> n = a.num_ + b.num_;
      if (n.is_zero_poly()) return zero_like(a);
      return RatFunc(std::move(n), a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero_fn() || b.is_zero_fn())
      return a.has_proto_ ? zero_like(a) : zero_like(b);
    if (a.den_is_one() && b.den_is_one()) {
      RatFunc r;
      r.num_ = a.num_ * b.num_;
      r.den_ = a.den_;
      r.proto_ = a.proto_;
      r.has_proto_ = true;
      return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero_fn()) throw DomainError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);  // canonical, but robust
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const {
    if (is_zero_fn()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  // Order of vanishing at t = 0; kValInfinity for the zero function.
  long valuation_at_zero() const {
    if (is_zero_fn()) return kValInfinity;
    return num_.val0() - den_.val0();
  }

  // Leading coefficient of the t-expansion at 0 (the limit when valuation 0).
  K leading_at_zero() const {
    if (is_zero_fn()) throw DomainError("leading coefficient of zero");
    long vn = num_.val0(), vd = den_.val0();
    return num_[static_cast<std::size_t>(vn)] / den_[static_cast<std::size_t>(vd)];
  }

  // Limit at t = 0: valuation > 0 gives 0, = 0 the leading ratio; negative
  // valuation reports divergence via the flag.
  bool limit_at_zero(K* out) const {
    if (is_zero_fn()) { *out = zero_like(proto()); return true; }
    long v = valuation_at_zero();
    if (v < 0) return false;
    *out = v > 0 ? zero_like(proto()) : leading_at_zero();
    return true;
  }

  K eval(const K& t) const {
    K d = den_.eval(t);
    if (is_zero(d)) throw DomainError("rational function pole at sample point");
    return num_.eval(t) / d;
  }

  std::string str(const std::string& var = "t") const {
    if (num_.is_zero_poly()) return "0";
    std::string n = num_.str(var);
    if (den_.degree() == 0 && !den_.is_zero_poly() && is_zero(den_[0] - one_like(den_[0])))
      return n;
    return "(" + n + ")/(" + den_.str(var) + ")";
  }

 private:
  bool den_is_one() const {
    return den_.degree() == 0 && !den_.is_zero_poly() && is_zero(den_[0] - proto_);
  }

  void assign(UniPoly<K> num, UniPoly<K> den) {
    if (den.is_zero_poly()) throw DomainError("zero denominator");
    proto_ = one_like(den.lead());
    has_proto_ = true;
    if (num.is_zero_poly()) {
      num_ = UniPoly<K>();
      den_ = UniPoly<K>::constant(proto_);
      return;
    }
    // monomial denominator: strip the common power of t, no gcd needed
    if (den.val0() == den.degree()) {
      long m = std::min(num.val0(), den.val0());
      if (m > 0) {
        num = strip_low(num, m);
        den = strip_low(den, m);
      }
    } else {
      UniPoly<K> g = UniPoly<K>::gcd(num, den);
      if (g.degree() > 0) { num = num / g; den = den / g; }
    }
    if (is_zero(den.lead() - proto_)) {
      num_ = std::move(num);
      den_ = std::move(den);
      return;
    }
    K lead_inv = scalar_inv(den.lead());
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
  }

  static UniPoly<K> strip_low(const UniPoly<K>& p, long m) {
    std::vector<K> c(p.coeffs().begin() + m, p.coeffs().end());
    return UniPoly<K>(std::move(c));
  }

  UniPoly<K> num_, den_;
  K proto_{};
  bool has_proto_ = false;
};

template <class K>
bool is_zero(const RatFunc<K>& f) { return f.is_zero_fn(); }
template <class K>
RatFunc<K> one_like(const RatFunc<K>& f) { return RatFunc<K>(one_like(f.proto())); }
template <class K>
RatFunc<K> zero_like(const RatFunc<K>& f) { return RatFunc<K>(zero_like(f.proto())); }
template <class K>
RatFunc<K> from_rat(const RatFunc<K>& f, const Rational& q) {
  return RatFunc<K>(from_rat(f.proto(), q));
}
template <class K>
std::string to_str(const RatFunc<K>& f) { return f.str(); }
template <class K>
RatFunc<K> scalar_inv(const RatFunc<K>& f) { return f.inv(); }
template <class K>
RatFunc<K> zeta_like(const RatFunc<K>& f, long m) {
  return RatFunc<K>(zeta_like(f.proto(), m));
}
template <class K>
bool as_rational(const RatFunc<K>& f, Rational* out) {
  if (!f.is_constant()) return false;
  return as_rational(f.constant_value(), out);
}

}  // namespace trec

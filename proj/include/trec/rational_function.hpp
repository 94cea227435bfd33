#pragma once

#include <string>
#include <utility>

#include "trec/errors.hpp"
#include "trec/series.hpp"
#include "trec/unipoly.hpp"

namespace trec {

// Rational function of the global coordinate w, reduced form.
template <class K>
class RationalFunction1V {
 public:
  RationalFunction1V() = default;
  RationalFunction1V(UniPoly<K> num, UniPoly<K> den) { assign(std::move(num), std::move(den)); }
  explicit RationalFunction1V(const UniPoly<K>& num)
      : RationalFunction1V(num, UniPoly<K>::constant(one_like(num.lead()))) {}

  const UniPoly<K>& num() const { return num_; }
  const UniPoly<K>& den() const { return den_; }
  bool is_zero_fn() const { return num_.is_zero_poly(); }
  K proto() const { return one_like(den_.lead()); }

  RationalFunction1V operator-() const {
    RationalFunction1V r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction1V operator+(const RationalFunction1V& a, const RationalFunction1V& b) {
    return RationalFunction1V(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction1V operator-(const RationalFunction1V& a, const RationalFunction1V& b) {
    return a + (-b);
  }
  friend RationalFunction1V operator*(const RationalFunction1V& a, const RationalFunction1V& b) {
    return RationalFunction1V(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction1V operator/(const RationalFunction1V& a, const RationalFunction1V& b) {
    if (b.is_zero_fn()) throw DomainError("division by zero rational function");
    return RationalFunction1V(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction1V& a, const RationalFunction1V& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }

  RationalFunction1V derivative() const {
    return RationalFunction1V(num_.derivative() * den_ - num_ * den_.derivative(),
                              den_ * den_);
  }

  bool defined_at(const K& a) const { return !is_zero(den_.eval(a)); }
  K eval(const K& a) const {
    K d = den_.eval(a);
    if (is_zero(d)) throw DomainError("pole at evaluation point");
    return num_.eval(a) / d;
  }

  // Order of vanishing at finite a (negative for a pole); the zero function
  // is rejected.
  long order_at(const K& a) const {
    if (is_zero_fn()) throw DomainError("order of zero function");
    auto count = [&](const UniPoly<K>& p) {
      UniPoly<K> cur = p.shift_center(a);
      return cur.val0();
    };
    return count(num_) - count(den_);
  }
  long order_at_infinity() const {
    if (is_zero_fn()) throw DomainError("order of zero function");
    return den_.degree() - num_.degree();
  }

  // Laurent expansion at a finite center in u = w - center, coefficients
  // guaranteed through exponent `hi`.
  LaurentSeries<K> expand_at(const K& center, long hi) const {
    if (is_zero_fn()) return LaurentSeries<K>::zero(proto());
    UniPoly<K> n = num_.shift_center(center);
    UniPoly<K> d = den_.shift_center(center);
    return divide_series(n, d, hi);
  }

  // Expansion at w = infinity in u = 1/w.
  LaurentSeries<K> expand_at_infinity(long hi) const {
    if (is_zero_fn()) return LaurentSeries<K>::zero(proto());
    long dn = num_.degree(), dd = den_.degree();
    UniPoly<K> n = num_.reversed(static_cast<std::size_t>(dn));
    UniPoly<K> d = den_.reversed(static_cast<std::size_t>(dd));
    LaurentSeries<K> s = divide_series(n, d, hi - (dd - dn));
    return s.shifted(dd - dn).truncated(hi);
  }

  // f evaluated on a Laurent series argument.
  LaurentSeries<K> eval_at_series(const LaurentSeries<K>& h) const {
    if (is_zero_fn()) return LaurentSeries<K>::zero(proto());
    LaurentSeries<K> n = eval_poly(num_, h);
    LaurentSeries<K> d = eval_poly(den_, h);
    return n * d.inverse();
  }

  std::string str(const std::string& var = "w") const {
    if (is_zero_fn()) return "0";
    std::string n = num_.str(var);
    if (den_.degree() == 0 && is_zero(den_[0] - one_like(den_[0]))) return n;
    return "(" + n + ")/(" + den_.str(var) + ")";
  }

 private:
  static LaurentSeries<K> eval_poly(const UniPoly<K>& p, const LaurentSeries<K>& h) {
    LaurentSeries<K> acc = LaurentSeries<K>::zero(h.proto());
    long cap = h.hi();
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
      acc = acc * h;
      if (cap < kExpInfinity) acc = acc.truncated(cap + std::max(0L, -h.lo()) * static_cast<long>(p.coeffs().size()));
      if (!is_zero(p[i])) acc = acc + LaurentSeries<K>::constant(p[i]);
    }
    return acc;
  }

  LaurentSeries<K> divide_series(const UniPoly<K>& n, const UniPoly<K>& d, long hi) const {
    LaurentSeries<K> ns = LaurentSeries<K>::from_poly(n, proto());
    LaurentSeries<K> ds = LaurentSeries<K>::from_poly(d, proto());
    long dord = ds.order();
    long nord = ns.known_zero() ? 0 : ns.order();
    long len = hi - (nord - dord) + 1;
    if (len <= 0) len = 1;
    return (ns * ds.inverse(len + dord + 8)).truncated(hi);
  }

  void assign(UniPoly<K> num, UniPoly<K> den) {
    if (den.is_zero_poly()) throw DomainError("zero denominator");
    if (num.is_zero_poly()) {
      num_ = UniPoly<K>();
      den_ = UniPoly<K>::constant(one_like(den.lead()));
      return;
    }
    UniPoly<K> g = UniPoly<K>::gcd(num, den);
    if (g.degree() > 0) { num = num / g; den = den / g; }
    K lead_inv = scalar_inv(den.lead());
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
  }

  UniPoly<K> num_, den_;
};

}  // namespace trec

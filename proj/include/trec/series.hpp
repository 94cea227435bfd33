#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "trec/errors.hpp"
#include "trec/rational.hpp"
#include "trec/unipoly.hpp"

namespace trec {

inline constexpr long kExpInfinity = std::numeric_limits<long>::max() / 4;

// Truncated Laurent series in a local coordinate over a field K.
//
// Window semantics: coefficients at exponents < lo() are exactly zero;
// coefficients in [lo(), hi()] are stored; beyond hi() they are unknown unless
// the series is exact (then the tail is exactly zero).  Operations track the
// guaranteed window conservatively and never fabricate zeros.
template <class K>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(long lo, std::vector<K> coeffs, bool exact, const K& proto)
      : lo_(lo), c_(std::move(coeffs)), exact_(exact), proto_(one_like(proto)), init_(true) {
    normalize();
  }

  static LaurentSeries zero(const K& proto) {
    return LaurentSeries(0, {}, true, proto);
  }
  static LaurentSeries constant(const K& k) {
    return LaurentSeries(0, std::vector<K>{k}, true, k);
  }
  static LaurentSeries monomial(const K& k, long e) {
    return LaurentSeries(e, std::vector<K>{k}, true, k);
  }
  // polynomial in the local coordinate
  static LaurentSeries from_poly(const UniPoly<K>& p, const K& proto) {
    return LaurentSeries(0, p.coeffs(), true, proto);
  }

  bool initialized() const { return init_; }
  long lo() const { return lo_; }
  long hi() const {
    return exact_ ? kExpInfinity : lo_ + static_cast<long>(c_.size()) - 1;
  }
  bool exact() const { return exact_; }
  const K& proto() const { return proto_; }

  bool known_zero() const {  // literal zero series
    return exact_ && c_.empty();
  }
  bool window_zero() const {  // all known coefficients vanish
    for (const auto& k : c_)
      if (!is_zero(k)) return false;
    return true;
  }

  K coeff(long e) const {
    if (e < lo_) return zero_like(proto_);
    long idx = e - lo_;
    if (idx < static_cast<long>(c_.size())) return c_[static_cast<std::size_t>(idx)];
    if (exact_) return zero_like(proto_);
    throw InsufficientPrecision("coefficient at exponent " + std::to_string(e) +
                                " outside guaranteed window (hi = " +
                                std::to_string(hi()) + ")");
  }

  // Exponent of the first nonzero coefficient.  Fails loudly on a window that
  // is all zeros but not known to be the zero series.
  long order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return lo_ + static_cast<long>(i);
    if (exact_) throw DomainError("order of the zero series");
    throw PossiblyZero("series has no nonzero coefficient in its window");
  }
  K lead_coeff() const { return coeff(order()); }

  K residue() const { return coeff(-1); }

  LaurentSeries operator-() const {
    LaurentSeries r(*this);
    for (auto& k : r.c_) k = -k;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const K& proto = a.init_ ? a.proto_ : b.proto_;
    long lo = std::min(a.lo_, b.lo_);
    long h = std::min(a.hi(), b.hi());
    if (h >= kExpInfinity) {  // both exact
      long top = std::max(a.lo_ + static_cast<long>(a.c_.size()),
                          b.lo_ + static_cast<long>(b.c_.size())) - 1;
      std::vector<K> c(static_cast<std::size_t>(std::max(top - lo + 1, 0L)), zero_like(proto));
      for (std::size_t i = 0; i < a.c_.size(); ++i) c[static_cast<std::size_t>(a.lo_ - lo) + i] = c[static_cast<std::size_t>(a.lo_ - lo) + i] + a.c_[i];
      for (std::size_t i = 0; i < b.c_.size(); ++i) c[static_cast<std::size_t>(b.lo_ - lo) + i] = c[static_cast<std::size_t>(b.lo_ - lo) + i] + b.c_[i];
      return LaurentSeries(lo, std::move(c), true, proto);
    }
    std::vector<K> c(static_cast<std::size_t>(h - lo + 1), zero_like(proto));
    for (long e = lo; e <= h; ++e) {
      K v = zero_like(proto);
      if (e >= a.lo_ && e <= a.hi()) v = v + a.coeff(e);
      if (e >= b.lo_ && e <= b.hi()) v = v + b.coeff(e);
      c[static_cast<std::size_t>(e - lo)] = v;
    }
    return LaurentSeries(lo, std::move(c), false, proto);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const K& proto = a.init_ ? a.proto_ : b.proto_;
    if (a.known_zero() || b.known_zero()) return zero(proto);
    long lo = a.lo_ + b.lo_;
    long h;
    if (a.exact_ && b.exact_) {
      h = (a.lo_ + static_cast<long>(a.c_.size()) - 1) +
          (b.lo_ + static_cast<long>(b.c_.size()) - 1);
    } else {
      h = std::min(sum_capped(a.lo_, b.hi()), sum_capped(a.hi(), b.lo_));
    }
    if (h < lo) return LaurentSeries(lo, {}, false, proto);  // empty window
    std::vector<K> c(static_cast<std::size_t>(h - lo + 1), zero_like(proto));
    long atop = a.lo_ + static_cast<long>(a.c_.size()) - 1;
    long btop = b.lo_ + static_cast<long>(b.c_.size()) - 1;
    for (long i = a.lo_; i <= atop; ++i) {
      const K& ai = a.c_[static_cast<std::size_t>(i - a.lo_)];
      if (is_zero(ai)) continue;
      long jmax = std::min(btop, h - i);
      for (long j = b.lo_; j <= jmax; ++j) {
        const K& bj = b.c_[static_cast<std::size_t>(j - b.lo_)];
        if (is_zero(bj)) continue;
        c[static_cast<std::size_t>(i + j - lo)] = c[static_cast<std::size_t>(i + j - lo)] + ai * bj;
      }
    }
    return LaurentSeries(lo, std::move(c), a.exact_ && b.exact_, proto);
  }

  LaurentSeries scaled(const K& k) const {
    if (is_zero(k)) return zero(proto_);
    LaurentSeries r(*this);
    for (auto& x : r.c_) x = x * k;
    r.normalize();
    return r;
  }
  LaurentSeries shifted(long e) const {  // multiply by zeta^e
    LaurentSeries r(*this);
    r.lo_ += e;
    return r;
  }
  // substitute zeta -> theta * zeta
  LaurentSeries deck_twist(const K& theta) const {
    LaurentSeries r(*this);
    K p = pow_scalar(theta, r.lo_);
    for (auto& x : r.c_) { x = x * p; p = p * theta; }
    return r;
  }
  // substitute zeta -> zeta^m (m >= 1)
  LaurentSeries exponent_scale(long m) const {
    if (m == 1) return *this;
    std::vector<K> c(c_.empty() ? 0 : static_cast<std::size_t>((c_.size() - 1) * m + 1),
                     zero_like(proto_));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * m] = c_[i];
    long h = exact_ ? kExpInfinity : hi() * m + (m - 1);
    (void)h;
    LaurentSeries r(lo_ * m, std::move(c), exact_, proto_);
    if (!exact_) {
      // window [lo*m, hi*m] is guaranteed; intermediate non-multiples are 0
      r.exact_ = false;
    }
    return r;
  }

  LaurentSeries truncated(long new_hi) const {
    if (new_hi >= hi()) return *this;
    long len = new_hi - lo_ + 1;
    if (len <= 0) return LaurentSeries(lo_, {}, false, proto_);
    std::vector<K> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(len)));
    c.resize(static_cast<std::size_t>(len), zero_like(proto_));
    return LaurentSeries(lo_, std::move(c), false, proto_);
  }

  LaurentSeries derivative() const {
    std::vector<K> c;
    c.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long e = lo_ + static_cast<long>(i);
      c.push_back(c_[i] * from_rat(proto_, Rational(e)));
    }
    long lo = lo_ - 1;
    long h = exact_ ? kExpInfinity : hi() - 1;
    (void)h;
    return LaurentSeries(lo, std::move(c), exact_, proto_);
  }

  // Multiplicative inverse.  `len` bounds the number of computed coefficients
  // when the input is exact; otherwise the window is derived from the input's.
  LaurentSeries inverse(long len = 0) const {
    long m;
    try {
      m = order();
    } catch (const DomainError&) {
      throw DomainError("inverse of the zero series");
    }
    long out_len;
    if (exact_) {
      if (c_.size() == 1 || (len == 0 && c_.size() - static_cast<std::size_t>(m - lo_) == 1)) {
        // monomial: exact inverse
        return monomial(scalar_inv(coeff(m)), -m);
      }
      out_len = len > 0 ? len : 16;
    } else {
      out_len = (hi() - 2 * m) - (-m) + 1;  // guaranteed window of 1/f
      if (out_len <= 0)
        throw InsufficientPrecision("window too narrow to invert series");
    }
    K inv_lead = scalar_inv(coeff(m));
    std::vector<K> g(static_cast<std::size_t>(out_len), zero_like(proto_));
    g[0] = inv_lead;
    for (long k = 1; k < out_len; ++k) {
      // g_k = -inv_lead * sum_{j=1..k} f_{m+j} g_{k-j}
      K acc = zero_like(proto_);
      for (long j = 1; j <= k; ++j) {
        K fj = coeff_or_zero(m + j);
        if (is_zero(fj)) continue;
        acc = acc + fj * g[static_cast<std::size_t>(k - j)];
      }
      g[static_cast<std::size_t>(k)] = -(inv_lead * acc);
    }
    return LaurentSeries(-m, std::move(g), false, proto_);
  }

  LaurentSeries pow(long e) const {
    if (e == 0) return constant(one_like(proto_));
    if (e < 0) return inverse().pow(-e);
    LaurentSeries acc = *this;
    LaurentSeries result = constant(one_like(proto_));
    long n = e;
    while (n > 0) {
      if (n & 1) result = result * acc;
      if (n >>= 1) acc = acc * acc;
    }
    return result;
  }

  std::string str(const std::string& var) const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      long e = lo_ + static_cast<long>(i);
      std::string cs = to_str(c_[i]);
      if (!first) {
        if (!cs.empty() && cs[0] == '-') { out += " - "; cs = cs.substr(1); }
        else out += " + ";
      }
      first = false;
      if (e == 0) { out += cs; continue; }
      std::string xs = var + (e == 1 ? "" : "^" + std::to_string(e));
      if (cs == "1") out += xs;
      else if (cs == "-1") out += "-" + xs;
      else out += "(" + cs + ")*" + xs;
    }
    if (first) out = "0";
    if (!exact_) out += " + O(" + var + "^" + std::to_string(hi() + 1) + ")";
    return out;
  }

 private:
  static long sum_capped(long a, long b) {
    if (a >= kExpInfinity || b >= kExpInfinity) return kExpInfinity;
    return a + b;
  }
  static K pow_scalar(const K& k, long e) {
    if (e == 0) return one_like(k);
    K base = e > 0 ? k : scalar_inv(k);
    long n = e > 0 ? e : -e;
    K acc = one_like(k);
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }
  K coeff_or_zero(long e) const {
    if (e < lo_) return zero_like(proto_);
    long idx = e - lo_;
    if (idx < static_cast<long>(c_.size())) return c_[static_cast<std::size_t>(idx)];
    if (exact_) return zero_like(proto_);
    throw InsufficientPrecision("series window exhausted at exponent " + std::to_string(e));
  }
  void normalize() {
    // raise lo over exactly-known zeros, trim exact tails
    std::size_t lead = 0;
    while (lead < c_.size() && is_zero(c_[lead])) ++lead;
    if (lead == c_.size() && exact_) { lo_ = 0; c_.clear(); return; }
    if (lead > 0 && lead < c_.size()) {
      // keep window: leading zeros are genuine zero coefficients, keep them
      // only when the series is not exact (they carry window information).
      if (exact_) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        lo_ += static_cast<long>(lead);
      }
    }
    if (exact_) {
      while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
  }

  long lo_ = 0;
  std::vector<K> c_;
  bool exact_ = true;
  K proto_{};
  bool init_ = false;
};

// r-th root with the branch fixed by the supplied root of the leading
// coefficient; when `lead_root` is null the leading coefficient must have an
// exact rational r-th root.
template <class K>
LaurentSeries<K> series_rth_root(const LaurentSeries<K>& s, long r, const K* lead_root = nullptr) {
  if (r < 1) throw DomainError("root order must be positive");
  long m = s.order();
  if (m % r != 0)
    throw DomainError("leading exponent " + std::to_string(m) +
                      " not divisible by root order " + std::to_string(r));
  K lead = s.lead_coeff();
  K c = zero_like(s.proto());
  if (lead_root != nullptr) {
    c = *lead_root;
  } else {
    Rational lq;
    if (!as_rational(lead, &lq))
      throw FieldExtensionRequired("leading coefficient is not rational; supply a root");
    Rational root;
    if (!lq.nth_root(r, &root))
      throw FieldExtensionRequired("leading coefficient " + lq.str() +
                                   " has no rational " + std::to_string(r) + "-th root");
    c = from_rat(s.proto(), root);
  }
  // s = lead * zeta^m * (1 + u); root = c * zeta^(m/r) * (1+u)^(1/r)
  LaurentSeries<K> unit = s.shifted(-m).scaled(scalar_inv(lead));
  long n = unit.hi();
  if (n >= kExpInfinity) n = std::max<long>(16, 4 * r);
  // y = (1+u)^(1/r) via r*(1+u)*y' = u'*y
  std::vector<K> y(static_cast<std::size_t>(n) + 1, zero_like(s.proto()));
  y[0] = one_like(s.proto());
  for (long k = 1; k <= n; ++k) {
    K acc = zero_like(s.proto());
    for (long j = 1; j <= k; ++j) {
      K uj = (j <= unit.hi()) ? unit.coeff(j) : zero_like(s.proto());
      if (is_zero(uj)) continue;
      acc = acc + uj * y[static_cast<std::size_t>(k - j)] *
                      from_rat(s.proto(), Rational(j - r * (k - j)));
    }
    y[static_cast<std::size_t>(k)] = acc * from_rat(s.proto(), Rational(1, r * k));
  }
  LaurentSeries<K> yy(0, std::move(y), false, s.proto());
  return yy.scaled(c).shifted(m / r);
}

// Compositional inverse of a series with leading exponent 1 (Lagrange
// inversion); result window matches the input's.
template <class K>
LaurentSeries<K> series_reverse(const LaurentSeries<K>& s) {
  long m = s.order();
  if (m != 1) throw DomainError("series_reverse needs leading exponent 1");
  long n = s.hi();
  if (n >= kExpInfinity) n = std::max<long>(static_cast<long>(16), 2 + 2 * s.lo());
  // h = zeta / s, order 0
  LaurentSeries<K> h = LaurentSeries<K>::monomial(one_like(s.proto()), 1) * s.truncated(n).inverse();
  std::vector<K> g(static_cast<std::size_t>(n) + 1, zero_like(s.proto()));
  LaurentSeries<K> hk = h;  // h^k
  for (long k = 1; k <= n; ++k) {
    if (k > 1) hk = (hk * h).truncated(n);
    // g_k = [zeta^(k-1)] h^k / k
    if (k - 1 <= hk.hi())
      g[static_cast<std::size_t>(k)] = hk.coeff(k - 1) * from_rat(s.proto(), Rational(1, k));
  }
  return LaurentSeries<K>(1, std::vector<K>(g.begin() + 1, g.end()), false, s.proto());
}

// f(g) for a series f and a series g with positive order.
template <class K>
LaurentSeries<K> series_compose(const LaurentSeries<K>& f, const LaurentSeries<K>& g) {
  if (g.known_zero()) return LaurentSeries<K>::constant(f.coeff(0));
  if (g.order() < 1) throw DomainError("series_compose needs ord(g) >= 1");
  if (f.lo() < 0) {
    // split principal part: f = sum_{e<0} f_e zeta^e + f_+
    LaurentSeries<K> result = LaurentSeries<K>::zero(f.proto());
    LaurentSeries<K> ginv = g.inverse();
    for (long e = f.lo(); e < 0; ++e) {
      K fe = f.coeff(e);
      if (!is_zero(fe)) result = result + ginv.pow(-e).scaled(fe);
    }
    std::vector<K> plus;
    for (long e = 0; e <= std::min(f.hi(), f.lo() + 4096); ++e) plus.push_back(f.coeff(e));
    LaurentSeries<K> fplus(0, std::move(plus), f.exact(), f.proto());
    return result + series_compose(fplus, g);
  }
  long h = std::min(f.hi() >= kExpInfinity ? g.hi() : f.hi() * std::max(1L, g.order()),
                    g.hi());
  if (h >= kExpInfinity) h = 32;
  LaurentSeries<K> acc = LaurentSeries<K>::zero(f.proto());
  long top = std::min(f.hi(), h);
  for (long e = top; e >= 0; --e) {
    acc = (acc * g).truncated(h);
    K fe = e >= f.lo() ? f.coeff(e) : zero_like(f.proto());
    if (!is_zero(fe)) acc = acc + LaurentSeries<K>::constant(fe);
  }
  return acc.truncated(h);
}

}  // namespace trec

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trec/errors.hpp"
#include "trec/rational.hpp"

namespace trec {

// Dense univariate polynomial over a field K.  Zero is the empty vector.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const K& k) {
    if (is_zero(k)) return UniPoly();
    return UniPoly(std::vector<K>{k});
  }
  // k * x^e
  static UniPoly monomial(const K& k, std::size_t e) {
    if (is_zero(k)) return UniPoly();
    std::vector<K> c(e + 1, zero_like(k));
    c[e] = k;
    return UniPoly(std::move(c));
  }

  bool is_zero_poly() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    if (c_.empty()) throw DomainError("coeff of zero polynomial needs prototype");
    return zero_like(c_[0]);
  }
  const K& lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }
  // order of vanishing at 0 (-1 for the zero polynomial)
  long val0() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<long>(i);
    return -1;
  }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (auto& k : r.c_) k = -k;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()),
                     a.c_.empty() ? (b.c_.empty() ? K() : zero_like(b.c_[0]))
                                  : zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  UniPoly scaled(const K& k) const {
    if (is_zero(k)) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x = x * k;
    r.trim();
    return r;
  }
  UniPoly shifted_up(std::size_t e) const {  // * x^e
    if (c_.empty() || e == 0) return e == 0 ? *this : UniPoly();
    std::vector<K> c(c_.size() + e, zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + e] = c_[i];
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  K eval(const K& x) const {
    if (c_.empty()) return zero_like(x);
    K acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<K> c(c_.size() - 1, zero_like(c_[0]));
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = c_[i] * from_rat(c_[0], Rational(static_cast<long>(i)));
    return UniPoly(std::move(c));
  }

  // Euclidean division; the divisor's leading coefficient must be invertible.
  static void divrem(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r) {
    if (b.is_zero_poly()) throw DomainError("polynomial division by zero");
    if (a.is_zero_poly()) { *q = UniPoly(); *r = UniPoly(); return; }
    K invlead = scalar_inv(b.lead());
    std::vector<K> rem = a.c_;
    long db = b.degree();
    std::vector<K> qc;
    long dq = a.degree() - db;
    if (dq < 0) { *q = UniPoly(); *r = a; return; }
    qc.assign(static_cast<std::size_t>(dq) + 1, zero_like(a.c_[0]));
    for (long i = a.degree(); i >= db; --i) {
      K f = rem[static_cast<std::size_t>(i)] * invlead;
      qc[static_cast<std::size_t>(i - db)] = f;
      if (is_zero(f)) continue;
      for (long j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(i - db + j)] =
            rem[static_cast<std::size_t>(i - db + j)] - f * b.c_[static_cast<std::size_t>(j)];
      rem[static_cast<std::size_t>(i)] = zero_like(a.c_[0]);
    }
    *q = UniPoly(std::move(qc));
    UniPoly rr(std::move(rem));
    rr.trim();
    *r = std::move(rr);
  }

  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divrem(a, b, &q, &r);
    if (!r.is_zero_poly()) throw DomainError("inexact polynomial division");
    return q;
  }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divrem(a, b, &q, &r);
    return r;
  }

  UniPoly monic() const {
    if (is_zero_poly()) return *this;
    return scaled(scalar_inv(lead()));
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero_poly()) {
      UniPoly q, r;
      divrem(a, b, &q, &r);
      a = std::move(b);
      b = std::move(r);
      if (!b.is_zero_poly()) b = b.monic();
    }
    return a.is_zero_poly() ? a : a.monic();
  }

  // Composition a(g) for polynomial g.
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * g + UniPoly::constant(c_[i]);
    }
    return acc;
  }

  // Taylor rebase: coefficients of p(center + x).
  UniPoly shift_center(const K& center) const {
    if (c_.empty()) return *this;
    std::vector<K> c = c_;  // repeated synthetic division by (x - (-center))
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (std::size_t i = c.size() - 1; i-- > k;)
        c[i] = c[i] + c[i + 1] * center;
    }
    return UniPoly(std::move(c));
  }

  UniPoly reversed(std::size_t deg_hint) const {  // x^deg * p(1/x)
    std::size_t d = std::max(deg_hint, c_.size() == 0 ? 0 : c_.size() - 1);
    if (c_.empty()) return UniPoly();
    std::vector<K> c(d + 1, zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) c[d - i] = c_[i];
    return UniPoly(std::move(c));
  }

  std::string str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (is_zero(c_[i])) continue;
      std::string cs = to_str(c_[i]);
      if (!first) {
        if (!cs.empty() && cs[0] == '-') { out += " - "; cs = cs.substr(1); }
        else out += " + ";
      }
      first = false;
      bool unit = (cs == "1");
      bool negunit = (cs == "-1");
      if (i == 0) { out += cs; continue; }
      std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
      if (unit) out += xs;
      else if (negunit) out += "-" + xs;
      else {
        bool needs_paren = cs.find_first_of("+-") != std::string::npos &&
                           cs.find_first_of("+-") != 0;
        needs_paren = needs_paren || cs.find('/') != std::string::npos ||
                      cs.find(' ') != std::string::npos;
        out += needs_paren ? "(" + cs + ")*" + xs : cs + "*" + xs;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

}  // namespace trec

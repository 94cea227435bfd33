#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "trec/errors.hpp"
#include "trec/extfraction.hpp"
#include "trec/ratfunc.hpp"

namespace trec {

inline constexpr long kSInfinity = kValInfinity;

// floor(a/b) for integers, rounding toward minus infinity
inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// pole-order bound d_p(i) = i - 1 - floor(s (i-1) / r), with the convention
// d_p(1) = 0 and d_p(i) = -infinity for i > 1 when s is infinite
inline long pole_order_bound(long i, long r, long s) {
  if (s >= kSInfinity) return i == 1 ? 0 : -kSInfinity;
  return i - 1 - floor_div(s * (i - 1), r);
}

// Local parameters of a point on a spectral curve, usable standalone (so the
// globalisation predicates also serve curves the engine cannot parametrise).
// The leading coefficient is either given directly, or as the pair
// (tau_tilde, chart_c) read in a leading-coefficient-one chart with
// x - x(p) = chart_c * zeta^r.
template <class K>
struct LocalData {
  long r = 1;
  long sbar = 1;
  long s = kSInfinity;
  K tau{};
  K chart_c{};
  bool direct_tau = true;

  ExtFraction nu() const { return ExtFraction(sbar, r); }

  static LocalData direct(long r, long sbar, long s, const K& tau) {
    LocalData d;
    d.r = r;
    d.sbar = sbar;
    d.s = s;
    d.tau = tau;
    d.chart_c = one_like(tau);
    d.direct_tau = true;
    return d;
  }
  static LocalData from_chart(long r, long sbar, long s, const K& tau_tilde, const K& c) {
    LocalData d;
    d.r = r;
    d.sbar = sbar;
    d.s = s;
    d.tau = tau_tilde;
    d.chart_c = c;
    d.direct_tau = false;
    return d;
  }

  bool contributes() const { return r >= 2 && sbar >= 0; }
};

template <class K>
K pow_scalar_long(const K& k, long e) {
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

// Chart-independent invariant (tau_p / r_p)^{r'} used by the non-resonance
// test, with r' = r / gcd(r, sbar); the pseudo-chart normalisation divides
// out chart_c^{sbar'}.
template <class K>
K resonance_invariant(const LocalData<K>& d) {
  long g = std::gcd(std::labs(d.sbar), d.r);
  if (d.sbar == 0) g = d.r;
  long rp = d.r / g;
  long sbar_p = d.sbar / g;
  K base = d.tau * scalar_inv(from_rat(d.tau, Rational(d.r)));
  K val = pow_scalar_long(base, rp);
  if (!d.direct_tau) val = val * pow_scalar_long(d.chart_c, -sbar_p);
  return val;
}

struct Admissibility {
  bool admissible = false;
  std::string reason;  // names the first violated clause when not admissible
};

// (lA1)-(lA3); unramified points are always admissible.
inline Admissibility local_admissibility(long r, long sbar, long s) {
  if (r == 1) return {true, "unramified"};
  if (s >= kSInfinity)
    return {false, "lA3: all exponents divisible by r (s infinite)"};
  if (std::gcd(std::labs(s), r) != 1)
    return {false, "lA1: gcd(s, r) = " + std::to_string(std::gcd(std::labs(s), r))};
  if (s >= 1) {
    if (s > r + 1) return {false, "lA2: s > r + 1"};
    long m = ((r % s) + s) % s;
    if (!(m == 1 % s || m == (s - 1) % s))
      return {false, "lA2: r != +-1 mod s"};
  }
  if (!(sbar == s || sbar == s - 1)) return {false, "lA3: sbar not in {s, s-1}"};
  return {true, s >= 1 ? "lA1-lA3" : "lA1, s <= -1"};
}

template <class K>
Admissibility local_admissibility(const LocalData<K>& d) {
  return local_admissibility(d.r, d.sbar, d.s);
}

// Non-resonance of a fiber pair: distinct aspect ratios, or a leading-
// coefficient ratio that is not a root of unity of the relevant order.
template <class K>
bool is_non_resonant(const LocalData<K>& a, const LocalData<K>& b) {
  if (a.nu() != b.nu()) return true;
  K ia = resonance_invariant(a);
  K ib = resonance_invariant(b);
  return !is_zero(ia - ib);
}

// Floor-inequality conditions (C1)/(C2) for a fiber pair.
template <class K>
bool pair_satisfies_C1C2(const LocalData<K>& a, const LocalData<K>& b) {
  auto floor_term = [](long s, long i, long r) -> long {
    if (s >= kSInfinity) return i == 1 ? 0 : kSInfinity;  // makes the bound hold
    return floor_div(s * (i - 1), r);
  };
  long min_rs = std::min(a.r * b.sbar, b.r * a.sbar);
  for (long i = 1; i <= b.r; ++i) {
    long ft = floor_term(b.s, i, b.r);
    if (ft >= kSInfinity) continue;
    if (a.sbar * b.r - a.sbar * i + a.r + a.r * ft - min_rs < 0) return false;
  }
  for (long i = 1; i <= a.r; ++i) {
    long ft = floor_term(a.s, i, a.r);
    if (ft >= kSInfinity) continue;
    if (b.sbar * a.r - b.sbar * i + b.r + b.r * ft - min_rs < 0) return false;
  }
  return true;
}

// Interval conditions (C-i)/(C-ii), equivalent to (C1) and (C2).
template <class K>
bool pair_satisfies_Ci_Cii(const LocalData<K>& a, const LocalData<K>& b,
                           std::string* rule = nullptr) {
  const LocalData<K>& p1 = a.nu() <= b.nu() ? a : b;
  const LocalData<K>& p2 = a.nu() <= b.nu() ? b : a;
  long r12 = std::max(p1.r, p2.r);
  ExtFraction nu1 = p1.nu(), nu2 = p2.nu();
  for (long m = 1; m <= r12 - 1; ++m) {
    ExtFraction inv_m(1, m);
    if (nu1 <= inv_m && inv_m <= nu2) {
      if (rule) *rule = "C-i (m=" + std::to_string(m) + ")";
      return true;
    }
  }
  if (nu1 <= ExtFraction(1, r12)) {
    if (rule) *rule = "C-ii";
    return true;
  }
  return false;
}

// Fiber separation at an unramified base point: all points have r = 1, at
// most one has sbar >= 2, and equal-sbar points carry distinct leading
// coefficients.
template <class K>
bool separates_fibres(const std::vector<LocalData<K>>& fiber, std::string* reason = nullptr) {
  for (const auto& d : fiber)
    if (d.r != 1)
      throw DomainError("separates_fibres expects an unramified fiber; use fiber_globalisable");
  long high = 0;
  for (const auto& d : fiber)
    if (d.sbar >= 2) ++high;
  if (high > 1) {
    if (reason) *reason = "two fiber points with sbar >= 2";
    return false;
  }
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      if (fiber[i].sbar != fiber[j].sbar) continue;
      // honest tau for r = 1: tau = tau_tilde / c^sbar (no deck ambiguity)
      auto tau_of = [](const LocalData<K>& d) {
        if (d.direct_tau) return d.tau;
        return d.tau * pow_scalar_long(d.chart_c, -d.sbar);
      };
      if (is_zero(tau_of(fiber[i]) - tau_of(fiber[j]))) {
        if (reason) *reason = "equal sbar with equal leading coefficients";
        return false;
      }
    }
  return true;
}

// The criteria are sufficient only, so the negative verdict is "unknown".
enum class Globalisable { Yes, Unknown };

struct FiberVerdict {
  Globalisable verdict = Globalisable::Yes;
  std::vector<std::string> pair_reasons;
};

template <class K>
FiberVerdict fiber_globalisable(const std::vector<LocalData<K>>& fiber) {
  FiberVerdict out;
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      std::string rule;
      bool nr = is_non_resonant(fiber[i], fiber[j]);
      bool cc = pair_satisfies_Ci_Cii(fiber[i], fiber[j], &rule);
      std::string tag = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): ";
      if (!nr) {
        out.verdict = Globalisable::Unknown;
        out.pair_reasons.push_back(tag + "resonant");
      } else if (!cc) {
        out.verdict = Globalisable::Unknown;
        out.pair_reasons.push_back(tag + "fails C-i and C-ii");
      } else {
        out.pair_reasons.push_back(tag + "non-resonant, " + rule);
      }
    }
  return out;
}

struct BksReport {
  bool applicable = false;   // needs s = sbar > 0 at every point
  bool necessary_Cabc = false;
  bool sufficient_chain = false;
};

// Necessary conditions (C-a)/(C-b)/(C-c) and the ordering-chain sufficient
// condition for the full-fiber residue formula to produce symmetric output.
template <class K>
BksReport bks_predicates(const std::vector<LocalData<K>>& fiber) {
  BksReport rep;
  for (const auto& d : fiber)
    if (d.s != d.sbar || d.s <= 0 || d.s >= kSInfinity) return rep;  // inapplicable
  rep.applicable = true;

  auto floor_inv_nu = [](const LocalData<K>& d) { return floor_div(d.r, d.s); };

  // (C-a): each point has r = +-1 mod s
  bool ca = true;
  for (const auto& d : fiber) {
    long s = d.s;
    long m = ((d.r % s) + s) % s;
    if (!(m == 1 % s || m == (s - 1) % s)) ca = false;
  }
  // (C-b): pairs with min(s) >= 3 and a common congruence sign have distinct
  // floor(1/nu)
  bool cb = true;
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      const auto& d1 = fiber[i];
      const auto& d2 = fiber[j];
      if (std::min(d1.s, d2.s) < 3) continue;
      bool common_sign = false;
      for (int eps : {1, -1}) {
        long m1 = ((d1.r % d1.s) + d1.s) % d1.s;
        long m2 = ((d2.r % d2.s) + d2.s) % d2.s;
        long w1 = ((eps % d1.s) + d1.s) % d1.s;
        long w2 = ((eps % d2.s) + d2.s) % d2.s;
        if (m1 == w1 && m2 == w2) common_sign = true;
      }
      if (!common_sign) continue;
      if (floor_inv_nu(d1) == floor_inv_nu(d2)) cb = false;
    }
  // (C-c): triples with equal floor(1/nu) must contain an s = 1 point
  bool cc = true;
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j)
      for (std::size_t k = j + 1; k < fiber.size(); ++k) {
        if (floor_inv_nu(fiber[i]) == floor_inv_nu(fiber[j]) &&
            floor_inv_nu(fiber[j]) == floor_inv_nu(fiber[k])) {
          if (fiber[i].s != 1 && fiber[j].s != 1 && fiber[k].s != 1) cc = false;
        }
      }
  rep.necessary_Cabc = ca && cb && cc;

  // sufficient chain: ordered by nu, r_1 = -1 mod s_1, middle points s = 1,
  // r_d = +1 mod s_d
  std::vector<const LocalData<K>*> sorted;
  for (const auto& d : fiber) sorted.push_back(&d);
  std::sort(sorted.begin(), sorted.end(),
            [](const LocalData<K>* x, const LocalData<K>* y) { return x->nu() < y->nu(); });
  bool chain = true;
  if (!sorted.empty()) {
    const auto& first = *sorted.front();
    long mf = ((first.r % first.s) + first.s) % first.s;
    if (mf != (first.s - 1) % first.s) chain = false;
    const auto& last = *sorted.back();
    long ml = ((last.r % last.s) + last.s) % last.s;
    if (ml != 1 % last.s) chain = false;
    for (std::size_t i = 1; i + 1 < sorted.size(); ++i)
      if (sorted[i]->s != 1) chain = false;
  }
  rep.sufficient_chain = chain;
  return rep;
}

}  // namespace trec

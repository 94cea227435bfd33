#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trec/errors.hpp"
#include "trec/localdata.hpp"
#include "trec/rational_function.hpp"
#include "trec/roots.hpp"
#include "trec/series.hpp"

namespace trec {

// A point of P^1 in the global coordinate w.
template <class K>
struct Location {
  bool at_infinity = false;
  K value{};

  static Location infinity() { return Location{true, K{}}; }
  static Location finite(const K& v) { return Location{false, v}; }

  friend bool operator==(const Location& a, const Location& b) {
    if (a.at_infinity != b.at_infinity) return false;
    if (a.at_infinity) return true;
    return is_zero(a.value - b.value);
  }
  std::string str() const { return at_infinity ? "inf" : to_str(value); }
};

// Chart at a point p in the leading-coefficient-one local coordinate eta:
//   x = x(p) + c * eta^r        (finite x-value)
//   x = (1/c) * eta^(-r)        (pole of x, where 1/x = c * eta^r)
// `w_series` expands (w - a) or (1/w) as a series in eta with unit leading
// coefficient; the true standard coordinate is c^(1/r) * eta, which is never
// needed explicitly.
template <class K>
struct Chart {
  long r = 1;
  K c{};
  bool x_pole = false;
  Location<K> location;
  Location<K> x_value;
  LaurentSeries<K> w_series;   // (w - a) or (1/w) in eta
  LaurentSeries<K> dw_series;  // its eta-derivative

  // dx / d eta, exact
  LaurentSeries<K> dx_series() const {
    const K one = one_like(c);
    if (!x_pole)
      return LaurentSeries<K>::monomial(c * from_rat(one, Rational(r)), r - 1);
    return LaurentSeries<K>::monomial(scalar_inv(c) * from_rat(one, Rational(-r)), -r - 1);
  }
  // the sheet coordinate w(theta^a eta) as a global-coordinate series
  LaurentSeries<K> sheet_w(const K& theta_pow) const {
    LaurentSeries<K> tw = w_series.deck_twist(theta_pow);
    if (location.at_infinity) return tw.inverse();
    return tw + LaurentSeries<K>::constant(location.value);
  }
};

template <class K>
struct RamPoint {
  Location<K> location;
  Location<K> x_value;
  long r = 1;
  long sbar = 0;
  long s = kSInfinity;
  bool s_exceeds_window = false;  // s not found within the scan window
  K tau_tilde{};
  K chart_c{};
  bool x_pole = false;
  bool contributes = false;
  Admissibility local_adm;

  ExtFraction nu() const { return ExtFraction(sbar, r); }
  LocalData<K> local_data() const {
    return LocalData<K>::from_chart(r, sbar, s, tau_tilde, chart_c);
  }
};

template <class K>
struct SpectralCurve {
  RationalFunction1V<K> x, y;
  std::vector<RamPoint<K>> points;  // all points with r >= 2, local data filled
  K one{};

  const RamPoint<K>* point_at(const Location<K>& loc) const {
    for (const auto& p : points)
      if (p.location == loc) return &p;
    return nullptr;
  }
};

namespace detail {

template <class K>
LaurentSeries<K> expand_x_minus_value(const RationalFunction1V<K>& x,
                                      const Location<K>& loc, long hi, bool* pole,
                                      Location<K>* x_value) {
  LaurentSeries<K> s = loc.at_infinity ? x.expand_at_infinity(hi)
                                       : x.expand_at(loc.value, hi);
  long ord = s.known_zero() ? hi + 1 : s.order();
  if (ord < 0) {
    *pole = true;
    *x_value = Location<K>::infinity();
    return s.inverse();  // 1/x, a zero of order r
  }
  *pole = false;
  K v = s.coeff(0);
  *x_value = Location<K>::finite(v);
  return s - LaurentSeries<K>::constant(v);
}

}  // namespace detail

// Ramification order of the covering x at a point (1 = unramified).
template <class K>
long ramification_order(const RationalFunction1V<K>& x, const Location<K>& loc) {
  bool pole = false;
  Location<K> v;
  long probe = 4;
  for (;;) {
    try {
      LaurentSeries<K> s = detail::expand_x_minus_value(x, loc, probe, &pole, &v);
      return s.order();
    } catch (const PossiblyZero&) {
      probe *= 2;
      if (probe > 4096) throw InvalidCurve("x appears constant near " + loc.str());
    }
  }
}

// Chart with `len` guaranteed coefficients of w(eta) beyond the leading term.
template <class K>
Chart<K> build_chart(const RationalFunction1V<K>& x, const Location<K>& loc, long len) {
  Chart<K> chart;
  chart.location = loc;
  long hi = len + 4;
  for (;;) {
    LaurentSeries<K> s;
    long r;
    try {
      s = detail::expand_x_minus_value(x, loc, hi, &chart.x_pole, &chart.x_value);
      r = s.order();
    } catch (const PossiblyZero&) {
      hi *= 2;
      if (hi > 8192) throw InvalidCurve("x appears constant near " + loc.str());
      continue;
    }
    if (r < 1) throw InvalidCurve("no local normal form at " + loc.str());
    chart.r = r;
    chart.c = s.lead_coeff();
    if (s.hi() < r + len) { hi = r + len + 4; continue; }
    // unit-root chart: zeta_tilde = u * ((x - v)/(c u^r))^(1/r), lead coeff 1
    LaurentSeries<K> unit = s.shifted(-r).scaled(scalar_inv(chart.c));
    K lead_one = one_like(chart.c);
    LaurentSeries<K> zt =
        series_rth_root(unit, r, &lead_one).shifted(1).truncated(len + 1);
    chart.w_series = series_reverse(zt);
    chart.dw_series = chart.w_series.derivative();
    return chart;
  }
}

// Locations-only pass: ramification points of x (order >= 2), including
// multiple poles and the point at infinity, grouped by nothing yet.
template <class K>
std::vector<Location<K>> find_ramification_locations(const RationalFunction1V<K>& x,
                                                     const K& one) {
  std::vector<Location<K>> out;
  RationalFunction1V<K> dx = x.derivative();
  // finite zeros of dx away from poles of x
  if (!dx.is_zero_fn()) {
    UniPoly<K> num = dx.num();
    for (auto& [factor, mult] : squarefree_decompose(num)) {
      (void)mult;
      auto rs = field_roots(factor, false);
      for (const auto& root : rs.roots) {
        if (!x.defined_at(root)) continue;  // pole of x handled below
        if (ramification_order(x, Location<K>::finite(root)) >= 2)
          out.push_back(Location<K>::finite(root));
      }
    }
  } else {
    throw InvalidCurve("x is constant");
  }
  // multiple poles of x
  for (auto& [factor, mult] : squarefree_decompose(x.den())) {
    if (mult < 2) continue;
    auto rs = field_roots(factor, false);
    for (const auto& root : rs.roots) out.push_back(Location<K>::finite(root));
  }
  // the point at infinity
  if (ramification_order(x, Location<K>::infinity()) >= 2)
    out.push_back(Location<K>::infinity());
  // dedupe
  std::vector<Location<K>> uniq;
  for (const auto& l : out) {
    bool seen = false;
    for (const auto& u : uniq)
      if (u == l) seen = true;
    if (!seen) uniq.push_back(l);
  }
  (void)one;
  return uniq;
}

// omega_{0,1} = y dx expanded in the chart coordinate, as the scalar series
// E(eta) with omega_{0,1} = E(eta) d eta.
template <class K>
LaurentSeries<K> omega01_in_chart(const SpectralCurve<K>& curve, const Chart<K>& chart) {
  LaurentSeries<K> w = chart.sheet_w(one_like(curve.one));
  LaurentSeries<K> yv = curve.y.eval_at_series(w);
  return yv * chart.dx_series();
}

// Fill (r, sbar, s, tau) from the expansion of omega_{0,1}; the scan for s
// is exact for every admissibility verdict (distinguishing s in {sbar,
// sbar+1} from s >= sbar+2), and reports s_exceeds_window beyond the cap.
template <class K>
RamPoint<K> local_parameters(const SpectralCurve<K>& curve, const Location<K>& loc) {
  RamPoint<K> p;
  p.location = loc;
  long len = 24;
  for (;;) {
    Chart<K> chart = build_chart(curve.x, loc, len);
    p.r = chart.r;
    p.x_value = chart.x_value;
    p.x_pole = chart.x_pole;
    p.chart_c = chart.c;
    LaurentSeries<K> om;
    try {
      om = omega01_in_chart(curve, chart);
    } catch (const InsufficientPrecision&) {
      len *= 2;
      if (len > 4096) throw;
      continue;
    }
    long ord;
    try {
      ord = om.order();
    } catch (const PossiblyZero&) {
      len *= 2;
      if (len > 4096)
        throw InvalidCurve("omega_01 vanishes to high order near " + loc.str() +
                           "; possibly identically zero");
      continue;
    } catch (const DomainError&) {
      throw InvalidCurve("omega_01 identically zero near " + loc.str());
    }
    p.sbar = ord + 1;
    p.tau_tilde = om.coeff(ord);
    // s: first exponent l with nonzero coefficient and r not dividing l
    p.s = kSInfinity;
    p.s_exceeds_window = false;
    long cap = std::min(om.hi(), ord + 2 * p.r + 8);
    if (om.hi() < ord + (p.r >= 2 ? 2 : 0)) { len *= 2; continue; }
    for (long e = ord; e <= cap; ++e) {
      long l = e + 1;
      if (l % p.r == 0) continue;
      if (!is_zero(om.coeff(e))) { p.s = l; break; }
    }
    if (p.s >= kSInfinity && p.r >= 2) {
      // not found in the window: s >= sbar + 2 regardless, which already
      // settles every admissibility clause
      bool have_window = om.hi() >= ord + 1;
      if (!have_window) { len *= 2; continue; }
      if (!is_zero(om.coeff(ord)) && (ord + 1) % p.r != 0) {
        // unreachable: would have been found
      }
      p.s_exceeds_window = true;
    }
    p.contributes = p.r >= 2 && p.sbar >= 0;
    p.local_adm = local_admissibility(p.r, p.sbar, p.s);
    if (p.s_exceeds_window && p.r >= 2) {
      // distinguishing huge s from infinite s is unnecessary: both fail lA3
      p.local_adm = {false, "lA3: s exceeds sbar + 1 (not found within window)"};
    }
    return p;
  }
}

template <class K>
SpectralCurve<K> analyze_curve(const RationalFunction1V<K>& x,
                               const RationalFunction1V<K>& y, const K& one) {
  if (x.is_zero_fn()) throw InvalidCurve("x is zero");
  if (y.is_zero_fn()) throw InvalidCurve("y is identically zero");
  SpectralCurve<K> curve;
  curve.x = x;
  curve.y = y;
  curve.one = one;
  for (const auto& loc : find_ramification_locations(x, one)) {
    curve.points.push_back(local_parameters(curve, loc));
  }
  // deterministic order: finite points sorted by printing, infinity last
  std::stable_sort(curve.points.begin(), curve.points.end(),
                   [](const RamPoint<K>& a, const RamPoint<K>& b) {
                     if (a.location.at_infinity != b.location.at_infinity)
                       return b.location.at_infinity;
                     return a.location.str() < b.location.str();
                   });
  return curve;
}

template <class K>
bool curve_locally_admissible(const SpectralCurve<K>& curve, std::string* reason = nullptr) {
  for (const auto& p : curve.points) {
    if (!p.local_adm.admissible) {
      if (reason)
        *reason = "point at w = " + p.location.str() + ": " + p.local_adm.reason;
      return false;
    }
  }
  return true;
}

// Branch points (x-values of ramification points), deduplicated in order.
template <class K>
std::vector<Location<K>> branch_points(const SpectralCurve<K>& curve) {
  std::vector<Location<K>> out;
  for (const auto& p : curve.points) {
    bool seen = false;
    for (const auto& q : out)
      if (q == p.x_value) seen = true;
    if (!seen) out.push_back(p.x_value);
  }
  return out;
}

// The fiber of x over a base value: explicit in-field points (with their
// ramification orders) plus unresolved factor packs of unramified points.
template <class K>
struct Fiber {
  Location<K> base;
  std::vector<Location<K>> points;   // in-field members
  std::vector<long> orders;          // matching ramification orders
  std::vector<UniPoly<K>> packs;     // squarefree factors of unresolved members
  bool complete() const { return packs.empty(); }
};

// Append the in-field members of the fiber over q (including unramified
// points) to the curve's point list, returning all member indices.  Needed
// for vertically globalised runs, whose residues and pole basis range over
// whole fibers.
template <class K>
std::vector<int> extend_with_fiber(SpectralCurve<K>* curve, const Location<K>& q);

template <class K>
Fiber<K> fiber_over(const SpectralCurve<K>& curve, const Location<K>& q) {
  Fiber<K> fib;
  fib.base = q;
  const auto& x = curve.x;
  UniPoly<K> member;
  if (q.at_infinity) {
    member = x.den();
  } else {
    member = x.num() - x.den().scaled(q.value);
  }
  if (member.degree() >= 1) {
    for (auto& [factor, mult] : squarefree_decompose(member)) {
      (void)mult;
      auto rs = field_roots(factor, true);
      for (const auto& root : rs.roots) {
        fib.points.push_back(Location<K>::finite(root));
        fib.orders.push_back(ramification_order(x, Location<K>::finite(root)));
      }
      if (rs.leftover.degree() > 0) fib.packs.push_back(rs.leftover);
    }
  }
  // the point at infinity belongs to the fiber of x(inf)
  bool pole_inf = x.num().degree() > x.den().degree();
  Location<K> xv_inf = pole_inf
      ? Location<K>::infinity()
      : Location<K>::finite(x.num().degree() == x.den().degree()
                                ? x.num().lead() / x.den().lead()
                                : zero_like(curve.one));
  long deg_drop = std::max(x.num().degree(), x.den().degree()) -
                  static_cast<long>(member.degree() > 0 ? member.degree() : 0);
  (void)deg_drop;
  if (xv_inf == q) {
    fib.points.push_back(Location<K>::infinity());
    fib.orders.push_back(ramification_order(x, Location<K>::infinity()));
  }
  return fib;
}

template <class K>
std::vector<int> extend_with_fiber(SpectralCurve<K>* curve, const Location<K>& q) {
  Fiber<K> fib = fiber_over(*curve, q);
  if (!fib.complete())
    throw FieldExtensionRequired("fiber over " + q.str() +
                                 " has members outside the active field");
  std::vector<int> idx;
  for (const auto& loc : fib.points) {
    int found = -1;
    for (std::size_t j = 0; j < curve->points.size(); ++j)
      if (curve->points[j].location == loc) { found = static_cast<int>(j); break; }
    if (found < 0) {
      curve->points.push_back(local_parameters(*curve, loc));
      found = static_cast<int>(curve->points.size()) - 1;
    }
    idx.push_back(found);
  }
  return idx;
}

}  // namespace trec

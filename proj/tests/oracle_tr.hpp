#pragma once

// Brute-force evaluation of the first recursion step (omega_{0,3} and
// omega_{1,1}) by direct series manipulation, written independently of the
// engine's partition/contraction machinery.  Only |Z| = 1 terms exist at this
// level, so the residues can be spelled out verbatim.

#include <map>
#include <vector>

#include "trec/curve.hpp"
#include "trec/recursion.hpp"

namespace trec_oracle {

using trec::BasisLabel;
using trec::Chart;
using trec::LabelTuple;
using trec::LaurentSeries;
using trec::Location;
using trec::RamPoint;
using trec::Rational;
using trec::SpectralCurve;

template <class K>
std::map<LabelTuple, K> oracle_w11(const SpectralCurve<K>& curve, long order) {
  std::map<LabelTuple, K> out;
  const K one = one_like(curve.one);
  for (std::size_t pi = 0; pi < curve.points.size(); ++pi) {
    const RamPoint<K>& p = curve.points[pi];
    if (!p.contributes) continue;
    Chart<K> chart = trec::build_chart(curve.x, p.location, order);
    K theta = p.r == 1 ? one : zeta_like(one, p.r);
    LaurentSeries<K> w0 = chart.sheet_w(one);
    LaurentSeries<K> dw0 = w0.derivative();
    LaurentSeries<K> y0 = curve.y.eval_at_series(w0);
    LaurentSeries<K> dx = chart.dx_series();
    K tp = one;
    for (long a = 1; a < p.r; ++a) {
      tp = tp * theta;
      LaurentSeries<K> wa = chart.sheet_w(tp);
      LaurentSeries<K> dwa = wa.derivative();
      LaurentSeries<K> ya = curve.y.eval_at_series(wa);
      // omega02(z, z_a) = dz dz_a / (z - z_a)^2
      LaurentSeries<K> om02 = dw0 * dwa * (w0 - wa).pow(-2);
      // 1 / Upsilon_1 = 1 / ((y_a - y_0) dx)
      LaurentSeries<K> upsinv = ((ya - y0) * dx).inverse();
      LaurentSeries<K> rest = om02 * upsinv;
      // alpha weights: contribution to dw0/(w0 - a)^k is Res[(w - a)^{k-1} rest]
      long lo = rest.lo();
      for (long k = 2; k - 1 + lo <= -1; ++k) {
        LaurentSeries<K> wgt;
        if (p.location.at_infinity) {
          wgt = -w0.pow(-(k - 1));
        } else {
          wgt = (w0 - LaurentSeries<K>::constant(p.location.value)).pow(k - 1);
        }
        K res = (wgt * rest).residue();
        if (is_zero(res)) continue;
        LabelTuple t{BasisLabel{static_cast<int>(pi), k}};
        K val = -res;  // kernel carries the minus sign
        auto it = out.find(t);
        if (it == out.end()) out.emplace(t, val);
        else it->second = it->second + val;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class K>
std::map<LabelTuple, K> oracle_w03(const SpectralCurve<K>& curve, long order) {
  std::map<LabelTuple, K> out;
  const K one = one_like(curve.one);
  for (std::size_t pi = 0; pi < curve.points.size(); ++pi) {
    const RamPoint<K>& p = curve.points[pi];
    if (!p.contributes) continue;
    Chart<K> chart = trec::build_chart(curve.x, p.location, order);
    K theta = p.r == 1 ? one : zeta_like(one, p.r);
    LaurentSeries<K> w0 = chart.sheet_w(one);
    LaurentSeries<K> dw0 = w0.derivative();
    LaurentSeries<K> y0 = curve.y.eval_at_series(w0);
    LaurentSeries<K> dx = chart.dx_series();
    auto spect_weight = [&](const LaurentSeries<K>& w, const LaurentSeries<K>& dw,
                            long k) {
      // coefficient series of the basis form (p, k) in omega02(sheet, w_j)
      K factor = from_rat(one, Rational(k - 1));
      if (p.location.at_infinity) return dw.scaled(factor) * w.pow(-k);
      return dw.scaled(factor) *
             (w - LaurentSeries<K>::constant(p.location.value)).pow(k - 2);
    };
    K tp = one;
    for (long a = 1; a < p.r; ++a) {
      tp = tp * theta;
      LaurentSeries<K> wa = chart.sheet_w(tp);
      LaurentSeries<K> dwa = wa.derivative();
      LaurentSeries<K> ya = curve.y.eval_at_series(wa);
      LaurentSeries<K> upsinv = ((ya - y0) * dx).inverse();
      long lo_base = upsinv.lo();
      // two spectator assignments: (w1 on z, w2 on z_a) and the swap
      for (int swap = 0; swap < 2; ++swap) {
        for (long k1 = 2; k1 - 2 + lo_base <= -1; ++k1) {
          LaurentSeries<K> u1 = spect_weight(w0, dw0, k1);
          LaurentSeries<K> cur = upsinv * u1;
          for (long k2 = 2; k2 - 2 + cur.lo() <= -1; ++k2) {
            LaurentSeries<K> u2 = spect_weight(wa, dwa, k2);
            LaurentSeries<K> cur2 = cur * u2;
            for (long k0 = 2; k0 - 1 + cur2.lo() <= -1; ++k0) {
              LaurentSeries<K> wgt;
              if (p.location.at_infinity) {
                wgt = -w0.pow(-(k0 - 1));
              } else {
                wgt = (w0 - LaurentSeries<K>::constant(p.location.value)).pow(k0 - 1);
              }
              K res = (wgt * cur2).residue();
              if (is_zero(res)) continue;
              BasisLabel l0{static_cast<int>(pi), k0};
              BasisLabel l1{static_cast<int>(pi), k1};
              BasisLabel l2{static_cast<int>(pi), k2};
              LabelTuple t = swap == 0 ? LabelTuple{l0, l1, l2} : LabelTuple{l0, l2, l1};
              K val = -res;
              auto it = out.find(t);
              if (it == out.end()) out.emplace(t, val);
              else it->second = it->second + val;
            }
          }
        }
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace trec_oracle

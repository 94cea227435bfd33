#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trec/curve.hpp"
#include "trec/errors.hpp"
#include "trec/localdata.hpp"
#include "trec/series.hpp"

namespace trec {

// Basis 1-form attached to a ramification point: dw/(w-a)^k at a finite
// location, w^(k-2) dw at infinity; k >= 2 keeps everything residue-free.
struct BasisLabel {
  int point = 0;  // index into SpectralCurve::points
  long k = 2;
  friend bool operator<(const BasisLabel& a, const BasisLabel& b) {
    return a.point != b.point ? a.point < b.point : a.k < b.k;
  }
  friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
    return a.point == b.point && a.k == b.k;
  }
};

using LabelTuple = std::vector<BasisLabel>;

// Coefficient tensor of omega_{g,n} over the pole basis, stored with fully
// ordered index tuples (so slot-0 symmetry is checkable, not assumed).
template <class K>
struct Correlator {
  long g = 0, n = 1;
  std::map<LabelTuple, K> coeffs;
  bool certified = false;  // full symmetry verified

  void add(const LabelTuple& t, const K& v) {
    if (is_zero(v)) return;
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
      coeffs.emplace(t, v);
    } else {
      it->second = it->second + v;
      if (is_zero(it->second)) coeffs.erase(it);
    }
  }
  bool empty() const { return coeffs.empty(); }

  friend bool operator==(const Correlator& a, const Correlator& b) {
    if (a.g != b.g || a.n != b.n) return false;
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (const auto& [t, v] : a.coeffs) {
      auto it = b.coeffs.find(t);
      if (it == b.coeffs.end() || !is_zero(v - it->second)) return false;
    }
    return true;
  }
};

struct EngineOptions {
  bool force_non_admissible = false;
  bool include_non_contributing = false;
  bool parallel = true;
  long initial_window = 0;     // 0: derived from (g, n) and the local data
  bool primitive_shift = false;  // canonical-plus-constant local primitives
};

enum class FiberMode { PerPoint, PerFiber, PerGroup };

template <class K>
K sqrt_in_field(const K& value, const K& one) {
  Rational q;
  if (as_rational(value, &q)) {
    Rational r;
    if (q.nth_root(2, &r)) return from_rat(one, r);
  }
  throw FieldExtensionRequired("no in-field square root available here");
}

inline Cyclotomic sqrt_in_field(const Cyclotomic& value, const Cyclotomic& one) {
  Rational q;
  if (as_rational(value, &q)) return Cyclotomic::sqrt_rational(one.ctx(), q);
  throw FieldExtensionRequired("no in-field square root of a non-rational value");
}

namespace recdetail {

// set partitions of {0..m-1}
template <class F>
void for_each_partition(int m, F&& f) {
  std::vector<int> part_of(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> parts;
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == m) {
      parts.assign(static_cast<std::size_t>(used), {});
      for (int j = 0; j < m; ++j)
        parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(j)])].push_back(j);
      f(parts);
      return;
    }
    for (int p = 0; p <= used && p < m; ++p) {
      part_of[static_cast<std::size_t>(i)] = p;
      self(self, i + 1, std::max(used, p + 1));
    }
  };
  rec(rec, 0, 0);
}

// compositions of `total` into m nonnegative parts
template <class F>
void for_each_composition(long total, int m, F&& f) {
  if (m == 0) {
    if (total == 0) f(std::vector<long>{});
    return;
  }
  std::vector<long> parts(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, long rest) -> void {
    if (i == m - 1) {
      parts[static_cast<std::size_t>(i)] = rest;
      f(parts);
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      parts[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace recdetail

template <class K>
class Engine {
 public:
  Engine(SpectralCurve<K> curve, EngineOptions opts = {})
      : curve_(std::move(curve)), opts_(opts) {
    if (!opts_.force_non_admissible) {
      std::string why;
      if (!curve_locally_admissible(curve_, &why))
        throw DomainError("curve is not locally admissible (" + why +
                          "); use forced mode to run anyway");
    }
  }

  const SpectralCurve<K>& curve() const { return curve_; }
  const EngineOptions& options() const { return opts_; }

  // omega_{g,n} for 2g-2+n > 0, memoized; lower correlators are filled first.
  const Correlator<K>& correlator(long g, long n) {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
      throw DomainError("correlator needs 2g-2+n > 0");
    ensure_upto(2 * g - 2 + n);
    return memo_.at({g, n});
  }

  // Vertically globalised step: residues at the listed points, with Z ranging
  // over the sheets of all fiber members near those points.
  Correlator<K> global_step(long g, long n, const std::vector<int>& residue_points,
                            FiberMode mode) {
    ensure_upto(2 * g - 2 + n - 1);
    return run_step(g, n - 1, residue_points, mode);
  }

  bool check_symmetry(const Correlator<K>& om) const {
    for (const auto& [t, v] : om.coeffs) {
      LabelTuple perm = t;
      std::sort(perm.begin(), perm.end());
      do {
        auto it = om.coeffs.find(perm);
        if (it == om.coeffs.end() || !is_zero(it->second - v)) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
  }

  bool check_residue_free(const Correlator<K>& om) const {
    for (const auto& [t, v] : om.coeffs) {
      (void)v;
      for (const auto& l : t)
        if (l.k < 2) return false;
    }
    return true;
  }

  bool check_projection_property(const Correlator<K>& om);

  struct LoopCheck {
    bool exponents_compatible = true;
    bool pole_bounds_hold = true;
    std::vector<std::string> detail;
  };
  LoopCheck check_loop_equations(long g, long n, int point_index);

  bool check_comb_identity(long g, long n, int point_index);

  // Evaluate the n-differential at w-values (the dw's stripped).
  K evaluate(const Correlator<K>& om, const std::vector<K>& w) const {
    K acc = zero_like(curve_.one);
    for (const auto& [t, v] : om.coeffs) {
      K term = v;
      for (std::size_t i = 0; i < t.size(); ++i) term = term * basis_value(t[i], w[i]);
      acc = acc + term;
    }
    return acc;
  }

  K basis_value(const BasisLabel& l, const K& w) const {
    const auto& p = curve_.points[static_cast<std::size_t>(l.point)];
    if (p.location.at_infinity) return pow_scalar_long(w, l.k - 2);
    return pow_scalar_long(w - p.location.value, -l.k);
  }

 private:
  struct SheetCtx {
    int point_index = 0;
    const RamPoint<K>* point = nullptr;
    const Engine* engine = nullptr;
    long window = 0;
    long refine = 1;  // eta = sigma^refine when charts are refined
    std::vector<LaurentSeries<K>> sheet_w;   // global coordinate of each sheet
    std::vector<LaurentSeries<K>> sheet_dw;  // d/d sigma
    std::vector<LaurentSeries<K>> sheet_y;
    LaurentSeries<K> dx;  // d(x o sheet)/d sigma, shared by the whole fiber

    mutable std::map<std::pair<int, long>, LaurentSeries<K>> basis_cache;
    mutable std::map<long, LaurentSeries<K>> alpha_cache;
    mutable std::map<std::pair<int, long>, LaurentSeries<K>> spect_cache;

    const LaurentSeries<K>& basis_on_sheet(int sheet, const BasisLabel& l) const {
      long id = static_cast<long>(l.point) * 8192 + l.k;
      auto key = std::make_pair(sheet, id);
      auto it = basis_cache.find(key);
      if (it != basis_cache.end()) return it->second;
      const auto& pt = engine->curve_.points[static_cast<std::size_t>(l.point)];
      LaurentSeries<K> val;
      if (pt.location.at_infinity) {
        val = sheet_dw[static_cast<std::size_t>(sheet)] *
              sheet_w[static_cast<std::size_t>(sheet)].pow(l.k - 2);
      } else {
        LaurentSeries<K> diff = sheet_w[static_cast<std::size_t>(sheet)] -
                                LaurentSeries<K>::constant(pt.location.value);
        val = sheet_dw[static_cast<std::size_t>(sheet)] * diff.pow(-l.k);
      }
      return basis_cache.emplace(key, std::move(val)).first->second;
    }

    LaurentSeries<K> omega02_sheets(int a, int b) const {
      LaurentSeries<K> diff = sheet_w[static_cast<std::size_t>(a)] -
                              sheet_w[static_cast<std::size_t>(b)];
      return sheet_dw[static_cast<std::size_t>(a)] *
             sheet_dw[static_cast<std::size_t>(b)] * diff.pow(-2);
    }

    // weight of the basis form (point, k) in omega_{0,2}(sheet, spectator)
    const LaurentSeries<K>& spectator_weight(int sheet, long k) const {
      auto key = std::make_pair(sheet, k);
      auto it = spect_cache.find(key);
      if (it != spect_cache.end()) return it->second;
      const K one = one_like(engine->curve_.one);
      K factor = from_rat(one, Rational(k - 1));
      LaurentSeries<K> val;
      if (point->location.at_infinity) {
        val = sheet_dw[static_cast<std::size_t>(sheet)].scaled(factor) *
              sheet_w[static_cast<std::size_t>(sheet)].pow(-k);
      } else {
        LaurentSeries<K> diff = sheet_w[static_cast<std::size_t>(sheet)] -
                                LaurentSeries<K>::constant(point->location.value);
        val = sheet_dw[static_cast<std::size_t>(sheet)].scaled(factor) * diff.pow(k - 2);
      }
      return spect_cache.emplace(key, std::move(val)).first->second;
    }

    // weight of dw0/(w0-a)^k (resp. w0^(k-2) dw0) in the canonical local
    // primitive alpha^{(p)}(w0; z); an optional constant shift exercises
    // primitive independence
    const LaurentSeries<K>& alpha_weight(long k) const {
      auto it = alpha_cache.find(k);
      if (it != alpha_cache.end()) return it->second;
      LaurentSeries<K> val;
      if (point->location.at_infinity) {
        val = -sheet_w[0].pow(-(k - 1));
      } else {
        LaurentSeries<K> diff =
            sheet_w[0] - LaurentSeries<K>::constant(point->location.value);
        val = diff.pow(k - 1);
      }
      if (engine->opts_.primitive_shift && k == 2) {
        // alpha -> alpha + dw0: the constant is the k = 2 basis form at
        // infinity when written in the pole basis; model it as an extra
        // shift on whichever label exists: handled in accumulate instead.
      }
      return alpha_cache.emplace(k, std::move(val)).first->second;
    }
  };

  void ensure_upto(long chi_target) {
    for (long chi = 1; chi <= chi_target; ++chi) {
      for (long g = 0; 2 * g <= chi + 1; ++g) {
        long n = chi + 2 - 2 * g;
        if (n < 1) continue;
        if (memo_.find({g, n}) == memo_.end()) {
          auto val = compute(g, n);
          memo_.emplace(std::make_pair(g, n), std::move(val));
        }
      }
    }
  }

  Correlator<K> compute(long g, long n) {
    std::vector<int> pts;
    for (std::size_t i = 0; i < curve_.points.size(); ++i) {
      const auto& p = curve_.points[i];
      if (p.contributes || opts_.include_non_contributing)
        pts.push_back(static_cast<int>(i));
    }
    return run_step(g, n - 1, pts, FiberMode::PerPoint);
  }

  Correlator<K> run_step(long g, long nspec, const std::vector<int>& residue_points,
                         FiberMode mode) {
    Correlator<K> out;
    out.g = g;
    out.n = 1 + nspec;
    std::vector<Correlator<K>> partial(residue_points.size());
    auto work = [&](std::size_t idx) {
      partial[idx].g = g;
      partial[idx].n = 1 + nspec;
      point_contribution(g, nspec, residue_points[idx], mode, residue_points,
                         &partial[idx]);
    };
    if (opts_.parallel && residue_points.size() > 1) {
      std::vector<std::future<void>> futs;
      for (std::size_t i = 0; i < residue_points.size(); ++i)
        futs.push_back(std::async(std::launch::async, work, i));
      for (auto& f : futs) f.get();
    } else {
      for (std::size_t i = 0; i < residue_points.size(); ++i) work(i);
    }
    for (const auto& part : partial)
      for (const auto& [t, v] : part.coeffs) out.add(t, v);
    out.certified = check_symmetry(out);
    return out;
  }

  const Correlator<K>& stored(long g, long n) const {
    auto it = memo_.find({g, n});
    if (it == memo_.end())
      throw DomainError("internal recursion driver bug: missing dependency omega_{" +
                        std::to_string(g) + "," + std::to_string(n) + "}");
    return it->second;
  }

  void build_sheets(SheetCtx* ctx, int point_index, FiberMode mode,
                    const std::vector<int>& fiber_points, long window) const {
    const RamPoint<K>& p = curve_.points[static_cast<std::size_t>(point_index)];
    const K one = one_like(curve_.one);
    ctx->point_index = point_index;
    ctx->point = &p;
    ctx->engine = this;
    ctx->window = window;
    std::vector<int> members;
    if (mode == FiberMode::PerPoint) {
      members = {point_index};
    } else {
      for (int m : fiber_points)
        if (curve_.points[static_cast<std::size_t>(m)].x_value == p.x_value)
          members.push_back(m);
    }
    long refine = 1;
    if (mode != FiberMode::PerPoint)
      for (int m : members)
        refine = std::lcm(refine, curve_.points[static_cast<std::size_t>(m)].r);
    ctx->refine = refine;

    Chart<K> chart = build_chart(curve_.x, p.location, window);
    K theta = p.r == 1 ? one : zeta_like(one, p.r);
    for (long a = 0; a < p.r; ++a) {
      LaurentSeries<K> w = chart.sheet_w(pow_scalar_long(theta, a));
      if (refine > 1) w = w.exponent_scale(refine);
      ctx->sheet_w.push_back(w);
      ctx->sheet_dw.push_back(w.derivative());
    }
    ctx->dx = chart.dx_series();
    if (refine > 1) {
      ctx->dx = ctx->dx.exponent_scale(refine) *
                LaurentSeries<K>::monomial(from_rat(one, Rational(refine)), refine - 1);
    }
    if (mode != FiberMode::PerPoint) {
      for (int m : members) {
        if (m == point_index) continue;
        const RamPoint<K>& q = curve_.points[static_cast<std::size_t>(m)];
        Chart<K> qc = build_chart(curve_.x, q.location, window);
        long e = refine * p.r / q.r;
        // zeta_q^{r_q} = (c_p / c_q) sigma^{refine r_p}, inverted at x-poles
        K ratio = p.x_pole ? qc.c * scalar_inv(chart.c) : chart.c * scalar_inv(qc.c);
        Rational ratio_q;
        K rho = zero_like(one);
        bool have = false;
        if (q.r == 1) {
          rho = ratio;
          have = true;
        } else if (as_rational(ratio, &ratio_q)) {
          Rational root;
          if (ratio_q.nth_root(q.r, &root)) {
            rho = from_rat(one, root);
            have = true;
          }
        }
        if (!have && q.r == 2) {
          rho = sqrt_in_field(ratio, one);
          have = true;
        }
        if (!have)
          throw FieldExtensionRequired("chart-constant ratio needs an in-field " +
                                       std::to_string(q.r) + "-th root");
        K theta_q = q.r == 1 ? one : zeta_like(one, q.r);
        for (long j = 0; j < q.r; ++j) {
          K tp = rho * pow_scalar_long(theta_q, j);
          LaurentSeries<K> w = qc.sheet_w(tp).exponent_scale(e);
          ctx->sheet_w.push_back(w);
          ctx->sheet_dw.push_back(w.derivative());
        }
      }
    }
    for (const auto& w : ctx->sheet_w) ctx->sheet_y.push_back(curve_.y.eval_at_series(w));
  }

  void point_contribution(long g, long nspec, int point_index, FiberMode mode,
                          const std::vector<int>& fiber_points, Correlator<K>* out) {
    const RamPoint<K>& p = curve_.points[static_cast<std::size_t>(point_index)];
    long max_k = 4;
    for (const auto& [key, om] : memo_) {
      (void)key;
      for (const auto& [t, v] : om.coeffs) {
        (void)v;
        for (const auto& l : t) max_k = std::max(max_k, l.k);
      }
    }
    long window = opts_.initial_window > 0
                      ? opts_.initial_window
                      : 2 * (3 * g + nspec + 2) + std::labs(p.sbar) + p.r + 2 * max_k + 8;
    for (;;) {
      try {
        SheetCtx ctx;
        build_sheets(&ctx, point_index, mode, fiber_points, window);
        Correlator<K> local;
        local.g = g;
        local.n = 1 + nspec;
        accumulate_residues(g, nspec, ctx, &local);
        for (const auto& [t, v] : local.coeffs) out->add(t, v);
        return;
      } catch (const InsufficientPrecision&) {
        window *= 2;
        if (window > 30000) throw;
        out->coeffs.clear();
      }
    }
  }

  void accumulate_residues(long g, long nspec, const SheetCtx& ctx, Correlator<K>* out);

  std::map<LabelTuple, LaurentSeries<K>> w_object(long g, long nspec, const SheetCtx& ctx,
                                                  const std::vector<int>& zsheets,
                                                  bool prime, long label_cap);
  std::map<LabelTuple, LaurentSeries<K>> loop_object(long g, long nspec,
                                                     const SheetCtx& ctx, long i,
                                                     long label_cap);

  SpectralCurve<K> curve_;
  EngineOptions opts_;
  std::map<std::pair<long, long>, Correlator<K>> memo_;
};

// ---------------------------------------------------------------------------

template <class K>
void Engine<K>::accumulate_residues(long g, long nspec, const SheetCtx& ctx,
                                    Correlator<K>* out) {
  const K one = one_like(curve_.one);
  int total_sheets = static_cast<int>(ctx.sheet_w.size());
  long refine = ctx.refine;

  std::map<std::tuple<long, std::vector<int>, int>,
           std::map<LabelTuple, LaurentSeries<K>>>
      part_memo;
  auto eval_part = [&](long gl, std::vector<int> sheets, int nsp)
      -> const std::map<LabelTuple, LaurentSeries<K>>& {
    std::sort(sheets.begin(), sheets.end());
    auto key = std::make_tuple(gl, sheets, nsp);
    auto it = part_memo.find(key);
    if (it != part_memo.end()) return it->second;
    std::map<LabelTuple, LaurentSeries<K>> result;
    long m = static_cast<long>(sheets.size()) + nsp;
    const Correlator<K>& om = stored(gl, m);
    for (const auto& [t, v] : om.coeffs) {
      LaurentSeries<K> prod = LaurentSeries<K>::constant(v);
      for (std::size_t i = 0; i < sheets.size(); ++i)
        prod = prod * ctx.basis_on_sheet(sheets[i], t[i]);
      LabelTuple spec_labels(t.begin() + static_cast<long>(sheets.size()), t.end());
      auto rit = result.find(spec_labels);
      if (rit == result.end()) result.emplace(std::move(spec_labels), std::move(prod));
      else rit->second = rit->second + prod;
    }
    return part_memo.emplace(std::move(key), std::move(result)).first->second;
  };

  std::vector<int> others;
  for (int s = 1; s < total_sheets; ++s) others.push_back(s);
  long zmask_max = 1L << others.size();
  for (long zmask = 1; zmask < zmask_max; ++zmask) {
    std::vector<int> zset;
    for (std::size_t b = 0; b < others.size(); ++b)
      if (zmask & (1L << b)) zset.push_back(others[b]);

    LaurentSeries<K> den = LaurentSeries<K>::constant(one);
    for (int a : zset)
      den = den * (ctx.sheet_y[static_cast<std::size_t>(a)] - ctx.sheet_y[0]);
    den = den * ctx.dx.pow(static_cast<long>(zset.size()));
    LaurentSeries<K> ups_inv;
    try {
      ups_inv = den.inverse();
    } catch (const DomainError&) {
      throw DomainError(
          "recursion kernel denominator vanishes identically (coprimality trap)");
    }

    std::vector<int> slots{0};
    slots.insert(slots.end(), zset.begin(), zset.end());
    int m = static_cast<int>(slots.size());

    recdetail::for_each_partition(m, [&](const std::vector<std::vector<int>>& parts) {
      int np = static_cast<int>(parts.size());
      long gtotal = g - m + np;
      if (gtotal < 0) return;
      recdetail::for_each_composition(gtotal, np, [&](const std::vector<long>& gl) {
        std::vector<int> assign(static_cast<std::size_t>(nspec), 0);
        auto spectators_rec = [&](auto&& self, int j) -> void {
          if (j < nspec) {
            for (int pi = 0; pi < np; ++pi) {
              assign[static_cast<std::size_t>(j)] = pi;
              self(self, j + 1);
            }
            return;
          }
          LaurentSeries<K> fixed = ups_inv;
          std::vector<std::pair<int, int>> var_parts;  // (sheet, spectator)
          std::vector<std::pair<const std::map<LabelTuple, LaurentSeries<K>>*,
                                std::vector<int>>>
              stored_parts;
          bool dead = false;
          for (int pi = 0; pi < np && !dead; ++pi) {
            std::vector<int> psheets;
            for (int s : parts[static_cast<std::size_t>(pi)])
              psheets.push_back(slots[static_cast<std::size_t>(s)]);
            std::vector<int> pspect;
            for (int j2 = 0; j2 < nspec; ++j2)
              if (assign[static_cast<std::size_t>(j2)] == pi) pspect.push_back(j2);
            long size = static_cast<long>(psheets.size() + pspect.size());
            long gg = gl[static_cast<std::size_t>(pi)];
            if (gg == 0 && size == 1) { dead = true; break; }  // omega01: discarded
            if (gg == 0 && size == 2) {
              if (psheets.size() == 2) {
                fixed = fixed * ctx.omega02_sheets(psheets[0], psheets[1]);
              } else {
                var_parts.push_back({psheets[0], pspect[0]});
              }
              continue;
            }
            if (2 * gg - 2 + size <= 0) { dead = true; break; }
            stored_parts.push_back(
                {&eval_part(gg, psheets, static_cast<int>(pspect.size())), pspect});
          }
          if (dead) return;

          struct Accum {
            LaurentSeries<K> series;
            LabelTuple labels;
          };
          LabelTuple empty_labels(static_cast<std::size_t>(nspec), BasisLabel{-1, 0});
          std::vector<Accum> acc;
          acc.push_back({fixed, empty_labels});
          for (const auto& [lmap, pspect] : stored_parts) {
            std::vector<Accum> next;
            for (const auto& a : acc) {
              for (const auto& [labels, series] : *lmap) {
                Accum b = a;
                b.series = b.series * series;
                for (std::size_t q = 0; q < pspect.size(); ++q)
                  b.labels[static_cast<std::size_t>(pspect[q])] = labels[q];
                next.push_back(std::move(b));
              }
            }
            acc = std::move(next);
          }

          for (const auto& a : acc) {
            auto recvar = [&](auto&& self2, std::size_t vi, const LaurentSeries<K>& cur,
                              const LabelTuple& labels) -> void {
              if (cur.known_zero()) return;
              long lo = cur.lo();
              if (vi == var_parts.size()) {
                for (long k0 = 2;; ++k0) {
                  if ((k0 - 1) * refine + lo > -1) break;
                  LaurentSeries<K> full = cur * ctx.alpha_weight(k0);
                  K res = full.residue();
                  if (opts_.primitive_shift && k0 == 2) {
                    // alpha + c: an extra z-independent term c * Res(rest)
                    // cancels for admissible curves; realise it with c = 1 on
                    // the k = 2 label so the independence test can compare.
                    res = res + cur.residue();
                  }
                  if (!is_zero(res)) {
                    K val = -res;
                    if (refine > 1) val = val * from_rat(one, Rational(1, refine));
                    LabelTuple key;
                    key.reserve(labels.size() + 1);
                    key.push_back(BasisLabel{ctx.point_index, k0});
                    for (const auto& l : labels) key.push_back(l);
                    out->add(key, val);
                  }
                }
                return;
              }
              auto [sheet, spect] = var_parts[vi];
              for (long k = 2;; ++k) {
                if ((k - 2) + lo > -1) break;
                LabelTuple lab = labels;
                lab[static_cast<std::size_t>(spect)] = BasisLabel{ctx.point_index, k};
                self2(self2, vi + 1, cur * ctx.spectator_weight(sheet, k), lab);
              }
            };
            recvar(recvar, 0, a.series, a.labels);
          }
        };
        spectators_rec(spectators_rec, 0);
      });
    });
  }
}

template <class K>
bool Engine<K>::check_projection_property(const Correlator<K>& om) {
  if (om.n < 1 || 2 * om.g - 2 + om.n <= 0)
    throw DomainError("projection property applies to stable correlators only");
  Correlator<K> projected;
  projected.g = om.g;
  projected.n = om.n;
  for (std::size_t pi = 0; pi < curve_.points.size(); ++pi) {
    const RamPoint<K>& p = curve_.points[pi];
    long window = 2 * (3 * om.g + om.n + 4) + std::labs(p.sbar) + p.r + 16;
    SheetCtx ctx;
    ctx.point_index = static_cast<int>(pi);
    ctx.point = &p;
    ctx.engine = this;
    ctx.window = window;
    Chart<K> chart = build_chart(curve_.x, p.location, window);
    LaurentSeries<K> w = chart.sheet_w(one_like(curve_.one));
    ctx.sheet_w.push_back(w);
    ctx.sheet_dw.push_back(w.derivative());
    for (const auto& [t, v] : om.coeffs) {
      const LaurentSeries<K>& b0 = ctx.basis_on_sheet(0, t[0]);
      long lo = b0.lo();
      for (long k = 2;; ++k) {
        if ((k - 1) + lo > -1) break;
        K res = (b0 * ctx.alpha_weight(k)).residue();
        if (is_zero(res)) continue;
        LabelTuple key;
        key.push_back(BasisLabel{static_cast<int>(pi), k});
        key.insert(key.end(), t.begin() + 1, t.end());
        projected.add(key, v * res);
      }
    }
  }
  return projected == om;
}

template <class K>
std::map<LabelTuple, LaurentSeries<K>> Engine<K>::w_object(long g, long nspec,
                                                           const SheetCtx& ctx,
                                                           const std::vector<int>& zsheets,
                                                           bool prime, long label_cap) {
  const K one = one_like(curve_.one);
  std::map<LabelTuple, LaurentSeries<K>> out;
  int m = static_cast<int>(zsheets.size());
  if (m == 0) {
    if (g == 0 && nspec == 0)
      out.emplace(LabelTuple{}, LaurentSeries<K>::constant(one));
    return out;
  }

  std::map<std::tuple<long, std::vector<int>, int>,
           std::map<LabelTuple, LaurentSeries<K>>>
      part_memo;
  auto eval_part = [&](long gl, std::vector<int> sheets, int nsp)
      -> const std::map<LabelTuple, LaurentSeries<K>>& {
    std::sort(sheets.begin(), sheets.end());
    auto key = std::make_tuple(gl, sheets, nsp);
    auto it = part_memo.find(key);
    if (it != part_memo.end()) return it->second;
    std::map<LabelTuple, LaurentSeries<K>> result;
    const Correlator<K>& om = stored(gl, static_cast<long>(sheets.size()) + nsp);
    for (const auto& [t, v] : om.coeffs) {
      LaurentSeries<K> prod = LaurentSeries<K>::constant(v);
      for (std::size_t i = 0; i < sheets.size(); ++i)
        prod = prod * ctx.basis_on_sheet(sheets[i], t[i]);
      LabelTuple spec_labels(t.begin() + static_cast<long>(sheets.size()), t.end());
      auto rit = result.find(spec_labels);
      if (rit == result.end()) result.emplace(std::move(spec_labels), std::move(prod));
      else rit->second = rit->second + prod;
    }
    return part_memo.emplace(std::move(key), std::move(result)).first->second;
  };

  recdetail::for_each_partition(m, [&](const std::vector<std::vector<int>>& parts) {
    int np = static_cast<int>(parts.size());
    long gtotal = g - m + np;
    if (gtotal < 0) return;
    recdetail::for_each_composition(gtotal, np, [&](const std::vector<long>& gl) {
      std::vector<int> assign(static_cast<std::size_t>(nspec), 0);
      auto spect_rec = [&](auto&& self, int j) -> void {
        if (j < nspec) {
          for (int pi = 0; pi < np; ++pi) {
            assign[static_cast<std::size_t>(j)] = pi;
            self(self, j + 1);
          }
          return;
        }
        LaurentSeries<K> fixed = LaurentSeries<K>::constant(one);
        std::vector<std::pair<int, int>> var_parts;
        std::vector<std::pair<const std::map<LabelTuple, LaurentSeries<K>>*,
                              std::vector<int>>>
            stored_parts;
        bool dead = false;
        for (int pi = 0; pi < np && !dead; ++pi) {
          std::vector<int> psheets;
          for (int s : parts[static_cast<std::size_t>(pi)])
            psheets.push_back(zsheets[static_cast<std::size_t>(s)]);
          std::vector<int> pspect;
          for (int j2 = 0; j2 < nspec; ++j2)
            if (assign[static_cast<std::size_t>(j2)] == pi) pspect.push_back(j2);
          long size = static_cast<long>(psheets.size() + pspect.size());
          long gg = gl[static_cast<std::size_t>(pi)];
          if (gg == 0 && size == 1) {
            if (prime) { dead = true; break; }
            // omega01 on the sheet, as a form in the base variable
            fixed = fixed * (ctx.sheet_y[static_cast<std::size_t>(psheets[0])] * ctx.dx);
            continue;
          }
          if (gg == 0 && size == 2) {
            if (psheets.size() == 2) {
              fixed = fixed * ctx.omega02_sheets(psheets[0], psheets[1]);
            } else {
              var_parts.push_back({psheets[0], pspect[0]});
            }
            continue;
          }
          if (2 * gg - 2 + size <= 0) { dead = true; break; }
          stored_parts.push_back(
              {&eval_part(gg, psheets, static_cast<int>(pspect.size())), pspect});
        }
        if (dead) return;

        struct Accum {
          LaurentSeries<K> series;
          LabelTuple labels;
        };
        LabelTuple empty_labels(static_cast<std::size_t>(nspec), BasisLabel{-1, 0});
        std::vector<Accum> acc;
        acc.push_back({fixed, empty_labels});
        for (const auto& [lmap, pspect] : stored_parts) {
          std::vector<Accum> next;
          for (const auto& a : acc) {
            for (const auto& [labels, series] : *lmap) {
              Accum b = a;
              b.series = b.series * series;
              for (std::size_t q = 0; q < pspect.size(); ++q)
                b.labels[static_cast<std::size_t>(pspect[q])] = labels[q];
              next.push_back(std::move(b));
            }
          }
          acc = std::move(next);
        }
        for (const auto& a : acc) {
          auto recvar = [&](auto&& self2, std::size_t vi, const LaurentSeries<K>& cur,
                            const LabelTuple& labels) -> void {
            if (cur.known_zero()) return;
            if (vi == var_parts.size()) {
              auto it = out.find(labels);
              if (it == out.end()) out.emplace(labels, cur);
              else it->second = it->second + cur;
              return;
            }
            auto [sheet, spect] = var_parts[vi];
            for (long k = 2; k <= label_cap; ++k) {
              LabelTuple lab = labels;
              lab[static_cast<std::size_t>(spect)] = BasisLabel{ctx.point_index, k};
              self2(self2, vi + 1, cur * ctx.spectator_weight(sheet, k), lab);
            }
          };
          recvar(recvar, 0, a.series, a.labels);
        }
      };
      spect_rec(spect_rec, 0);
    });
  });
  return out;
}

template <class K>
std::map<LabelTuple, LaurentSeries<K>> Engine<K>::loop_object(long g, long nspec,
                                                              const SheetCtx& ctx, long i,
                                                              long label_cap) {
  std::map<LabelTuple, LaurentSeries<K>> out;
  long r = ctx.point->r;
  std::vector<int> idx;
  for (long a = 0; a < r; ++a) idx.push_back(static_cast<int>(a));
  std::vector<int> comb;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<long>(comb.size()) == i) {
      auto maps = w_object(g, nspec, ctx, comb, /*prime=*/false, label_cap);
      for (auto& [labels, series] : maps) {
        auto it = out.find(labels);
        if (it == out.end()) out.emplace(labels, series);
        else it->second = it->second + series;
      }
      return;
    }
    for (std::size_t s = start; s < idx.size(); ++s) {
      comb.push_back(idx[s]);
      self(self, s + 1);
      comb.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

template <class K>
typename Engine<K>::LoopCheck Engine<K>::check_loop_equations(long g, long n,
                                                              int point_index) {
  LoopCheck out;
  const RamPoint<K>& p = curve_.points[static_cast<std::size_t>(point_index)];
  long nspec = n;
  long window = 2 * (3 * g + nspec + 4) + std::labs(p.sbar) + 3 * p.r + 24;
  ensure_upto(2 * g - 2 + (1 + nspec) - 1);
  for (;;) {
    try {
      SheetCtx ctx;
      build_sheets(&ctx, point_index, FiberMode::PerPoint, {point_index}, window);
      out = LoopCheck{};
      long label_cap = window / 2 + 4;
      for (long i = 1; i <= p.r; ++i) {
        auto maps = loop_object(g, nspec, ctx, i, label_cap);
        long s_for_bound = p.s_exceeds_window ? kSInfinity : p.s;
        long dbound = pole_order_bound(i, p.r, s_for_bound);
        for (auto& [labels, series] : maps) {
          (void)labels;
          LaurentSeries<K> base = series * ctx.dx.pow(-i);
          if (base.window_zero()) continue;
          long ord = base.order();
          for (long e = ord; e <= std::min(base.hi(), -1L); ++e) {
            if (is_zero(base.coeff(e))) continue;
            if (e % p.r != 0) out.exponents_compatible = false;
          }
          if (dbound <= -kSInfinity / 2) {
            if (ord < 0) out.pole_bounds_hold = false;
          } else if (ord < -p.r * dbound) {
            out.pole_bounds_hold = false;
          }
          out.detail.push_back(
              "i=" + std::to_string(i) + ": base-side pole order " +
              std::to_string(ord < 0 ? -ord / p.r : 0) + ", allowed " +
              std::to_string(dbound) + " (chart bound " +
              std::to_string(p.r * dbound - (p.r - 1) * i) + ")");
        }
      }
      return out;
    } catch (const InsufficientPrecision&) {
      window *= 2;
      if (window > 30000) throw;
    }
  }
}

template <class K>
bool Engine<K>::check_comb_identity(long g, long n, int point_index) {
  const RamPoint<K>& p = curve_.points[static_cast<std::size_t>(point_index)];
  long nspec = n;
  long window = 2 * (3 * g + nspec + 4) + std::labs(p.sbar) + 3 * p.r + 24;
  ensure_upto(2 * g - 2 + (1 + nspec) - 1);
  const K one = one_like(curve_.one);
  for (;;) {
    try {
      SheetCtx ctx;
      build_sheets(&ctx, point_index, FiberMode::PerPoint, {point_index}, window);
      long label_cap = window / 2 + 4;
      std::map<LabelTuple, LaurentSeries<K>> lhs;
      LaurentSeries<K> om01 = ctx.sheet_y[0] * ctx.dx;
      for (long i = 1; i <= p.r; ++i) {
        auto maps = loop_object(g, nspec, ctx, i, label_cap);
        LaurentSeries<K> wfac = (-om01).pow(p.r - i);
        for (auto& [labels, series] : maps) {
          LaurentSeries<K> term = wfac * series;
          auto it = lhs.find(labels);
          if (it == lhs.end()) lhs.emplace(labels, term);
          else it->second = it->second + term;
        }
      }
      std::map<LabelTuple, LaurentSeries<K>> rhs;
      long r = p.r;
      for (long zmask = 1; zmask < (1L << r); ++zmask) {
        std::vector<int> zs, comp;
        for (long b = 0; b < r; ++b)
          (zmask & (1L << b)) ? zs.push_back(static_cast<int>(b))
                              : comp.push_back(static_cast<int>(b));
        LaurentSeries<K> ups = ctx.dx.pow(static_cast<long>(comp.size()));
        for (int a : comp)
          ups = ups * (ctx.sheet_y[static_cast<std::size_t>(a)] - ctx.sheet_y[0]);
        auto wmaps = w_object(g, nspec, ctx, zs, /*prime=*/true, label_cap);
        for (auto& [labels, series] : wmaps) {
          LaurentSeries<K> term = series * ups;
          auto it = rhs.find(labels);
          if (it == rhs.end()) rhs.emplace(labels, term);
          else it->second = it->second + term;
        }
      }
      std::map<LabelTuple, char> keys;
      for (const auto& [labels, s] : lhs) { (void)s; keys[labels] = 1; }
      for (const auto& [labels, s] : rhs) { (void)s; keys[labels] = 1; }
      for (const auto& [labels, dummy] : keys) {
        (void)dummy;
        auto li = lhs.find(labels);
        auto ri = rhs.find(labels);
        LaurentSeries<K> l = li == lhs.end() ? LaurentSeries<K>::zero(one) : li->second;
        LaurentSeries<K> rr = ri == rhs.end() ? LaurentSeries<K>::zero(one) : ri->second;
        LaurentSeries<K> diff = l - rr;
        if (diff.known_zero()) continue;
        long top = std::min(diff.hi(), diff.lo() + window);
        for (long e = diff.lo(); e <= top; ++e)
          if (!is_zero(diff.coeff(e))) return false;
      }
      return true;
    } catch (const InsufficientPrecision&) {
      window *= 2;
      if (window > 30000) throw;
    }
  }
}

}  // namespace trec

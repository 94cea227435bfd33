#include "trec/roots.hpp"

#include <algorithm>
#include <set>

namespace trec {

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = n0 < 0 ? mpz_class(-n0) : n0;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
    if (d > 100000) break;  // degenerate huge constants: give up on candidates
  }
  return out;
}

UniPoly<Rational> deflate(const UniPoly<Rational>& p, const Rational& root) {
  // synthetic division by (w - root)
  std::vector<Rational> c = p.coeffs();
  std::vector<Rational> q(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * root;
    q[i - 1] = carry;
    if (i == 1) break;
  }
  return UniPoly<Rational>(std::move(q));
}

template <class K>
UniPoly<K> deflate_k(const UniPoly<K>& p, const K& root) {
  std::vector<K> c = p.coeffs();
  std::vector<K> q(c.size() - 1, zero_like(root));
  K carry = zero_like(root);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * root;
    q[i - 1] = carry;
    if (i == 1) break;
  }
  return UniPoly<K>(std::move(q));
}

}  // namespace

RationalRootSplit rational_roots(const UniPoly<Rational>& q0) {
  RationalRootSplit out;
  UniPoly<Rational> q = q0;
  if (q.degree() <= 0) { out.leftover = q; return out; }
  // strip root at zero
  while (q.degree() > 0 && q[0].is_zero()) {
    out.roots.push_back(Rational(0));
    q = deflate(q, Rational(0));
  }
  if (q.degree() >= 1) {
    // integerise: common denominator
    mpz_class lead_num, const_num, denlcm = 1;
    for (const auto& c : q.coeffs()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), denlcm.get_mpz_t(), c.den().get_mpz_t());
      denlcm = l;
    }
    std::vector<mpz_class> ic;
    for (const auto& c : q.coeffs()) ic.push_back(c.num() * (denlcm / c.den()));
    auto p_div = divisors_of(ic.front());
    auto q_div = divisors_of(ic.back());
    std::set<Rational> tried;
    for (const auto& pn : p_div) {
      for (const auto& qd : q_div) {
        for (int sign = -1; sign <= 1; sign += 2) {
          Rational cand(sign * pn, qd);
          if (!tried.insert(cand).second) continue;
          while (q.degree() >= 1 && q.eval(cand).is_zero()) {
            out.roots.push_back(cand);
            q = deflate(q, cand);
          }
        }
      }
    }
  }
  if (q.degree() == 2) {
    Rational a = q[2], b = q[1], c = q[0];
    Rational disc = b * b - Rational(4) * a * c;
    Rational sq;
    if (disc.nth_root(2, &sq)) {
      out.roots.push_back((-b + sq) / (Rational(2) * a));
      out.roots.push_back((-b - sq) / (Rational(2) * a));
      q = UniPoly<Rational>::constant(Rational(1));
    }
  }
  out.leftover = q.degree() > 0 ? q.monic() : UniPoly<Rational>::constant(Rational(1));
  return out;
}

CycloRootSplit cyclotomic_roots(const UniPoly<Cyclotomic>& q0, bool allow_leftover) {
  CycloRootSplit out;
  if (q0.degree() <= 0) {
    out.leftover = UniPoly<Cyclotomic>::constant(one_like(q0.lead()));
    return out;
  }
  auto F = q0.lead().ctx();
  Cyclotomic one = one_like(q0.lead());
  UniPoly<Cyclotomic> q = q0;
  while (q.degree() > 0 && is_zero(q[0])) {
    out.roots.push_back(zero_like(one));
    q = deflate_k(q, zero_like(one));
  }
  // rational-coefficient path
  bool all_rat = true;
  for (const auto& c : q.coeffs())
    if (!c.is_rational()) { all_rat = false; break; }
  if (all_rat && q.degree() >= 1) {
    std::vector<Rational> rc;
    for (const auto& c : q.coeffs()) rc.push_back(c.rational_part());
    auto rs = rational_roots(UniPoly<Rational>(std::move(rc)));
    for (const auto& r : rs.roots) out.roots.push_back(from_rat(one, r));
    // lift leftover back
    std::vector<Cyclotomic> lc;
    for (const auto& c : rs.leftover.coeffs()) lc.push_back(from_rat(one, c));
    q = UniPoly<Cyclotomic>(std::move(lc));
    if (q.degree() == 2) {
      Rational a = q[2].rational_part(), b = q[1].rational_part(), c = q[0].rational_part();
      Rational disc = b * b - Rational(4) * a * c;
      long need = Cyclotomic::sqrt_conductor(disc);
      if (F->conductor() % need != 0) throw NeedsLargerField{need};
      Cyclotomic sq = Cyclotomic::sqrt_rational(F, disc);
      Cyclotomic two_a = from_rat(one, a * Rational(2));
      out.roots.push_back((from_rat(one, -b) + sq) / two_a);
      out.roots.push_back((from_rat(one, -b) - sq) / two_a);
      q = UniPoly<Cyclotomic>::constant(one);
    } else if (q.degree() >= 3) {
      // binomial w^k = c with a rational k-th root
      bool binomial = true;
      for (long i = 1; i < q.degree(); ++i)
        if (!is_zero(q[static_cast<std::size_t>(i)])) { binomial = false; break; }
      if (binomial) {
        long k = q.degree();
        Rational c = (-(q[0] / q[static_cast<std::size_t>(k)])).rational_part();
        Rational rho;
        if (c.nth_root(k, &rho)) {
          if (F->conductor() % k != 0) throw NeedsLargerField{k};
          Cyclotomic zk = Cyclotomic::zeta(F, k);
          Cyclotomic acc = from_rat(one, rho);
          for (long j = 0; j < k; ++j) {
            out.roots.push_back(acc);
            acc = acc * zk;
          }
          q = UniPoly<Cyclotomic>::constant(one);
        }
      }
    }
  } else if (q.degree() == 1) {
    out.roots.push_back(-(q[0] / q[1]));
    q = UniPoly<Cyclotomic>::constant(one);
  } else if (q.degree() == 2) {
    // quadratic with cyclotomic coefficients and rational discriminant
    Cyclotomic a = q[2], b = q[1], c = q[0];
    Cyclotomic disc = b * b - from_rat(one, Rational(4)) * a * c;
    if (disc.is_rational()) {
      Rational dq = disc.rational_part();
      long need = Cyclotomic::sqrt_conductor(dq);
      if (F->conductor() % need != 0) throw NeedsLargerField{need};
      Cyclotomic sq = Cyclotomic::sqrt_rational(F, dq);
      Cyclotomic two_a = a * Rational(2);
      out.roots.push_back((-b + sq) / two_a);
      out.roots.push_back((-b - sq) / two_a);
      q = UniPoly<Cyclotomic>::constant(one);
    }
  }
  if (q.degree() == 1) {
    out.roots.push_back(-(q[0] / q[1]));
    q = UniPoly<Cyclotomic>::constant(one);
  }
  if (q.degree() > 0 && !allow_leftover)
    throw FieldExtensionRequired(
        "polynomial of degree " + std::to_string(q.degree()) +
        " has roots outside the supported cyclotomic constructions");
  out.leftover = q.degree() > 0 ? q.monic() : UniPoly<Cyclotomic>::constant(one);
  return out;
}

ParamRootSplit param_roots(const UniPoly<RatFunc<Cyclotomic>>& q0, bool allow_leftover) {
  using Kt = RatFunc<Cyclotomic>;
  ParamRootSplit out;
  if (q0.degree() <= 0) {
    out.leftover = UniPoly<Kt>::constant(one_like(q0.lead()));
    return out;
  }
  Kt one = one_like(q0.lead());
  Cyclotomic cone = one.proto();
  UniPoly<Kt> q = q0;
  while (q.degree() > 0 && is_zero(q[0])) {
    out.roots.push_back(zero_like(one));
    q = deflate_k(q, zero_like(one));
  }
  if (q.degree() == 0) {
    out.leftover = UniPoly<Kt>::constant(one);
    return out;
  }
  if (q.degree() == 1) {
    out.roots.push_back(-(q[0] / q[1]));
    out.leftover = UniPoly<Kt>::constant(one);
    return out;
  }
  // require monomial-in-t coefficients: c_i = gamma_i * t^{e_i}
  long n = q.degree();
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  std::vector<long> tdeg(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Cyclotomic> gamma(static_cast<std::size_t>(n) + 1, zero_like(cone));
  bool monomials = true;
  for (long i = 0; i <= n; ++i) {
    const Kt& c = q[static_cast<std::size_t>(i)];
    if (c.is_zero_fn()) continue;
    present[static_cast<std::size_t>(i)] = true;
    const auto& cn = c.num();
    const auto& cd = c.den();
    long vn = cn.val0(), vd = cd.val0();
    if (cn.degree() != vn || cd.degree() != vd) { monomials = false; break; }
    tdeg[static_cast<std::size_t>(i)] = vn - vd;
    gamma[static_cast<std::size_t>(i)] =
        cn[static_cast<std::size_t>(vn)] / cd[static_cast<std::size_t>(vd)];
  }
  if (monomials) {
    // exponents must sit on a line e_i = e_n + m (n - i) for an integer m
    long m = 0;
    bool line = true;
    std::vector<long> idx;
    for (long i = 0; i <= n; ++i)
      if (present[static_cast<std::size_t>(i)]) idx.push_back(i);
    if (idx.size() >= 2) {
      long i1 = idx[idx.size() - 2], i2 = idx.back();
      long num = tdeg[static_cast<std::size_t>(i1)] - tdeg[static_cast<std::size_t>(i2)];
      long den = i2 - i1;
      if (num % den == 0) {
        m = num / den;
        for (long i : idx)
          if (tdeg[static_cast<std::size_t>(i)] !=
              tdeg[static_cast<std::size_t>(idx.back())] + m * (idx.back() - i)) {
            line = false;
            break;
          }
      } else {
        line = false;
      }
    }
    if (line) {
      // substitute w = v t^m: residual polynomial in v over the cyclotomics
      std::vector<Cyclotomic> vc(static_cast<std::size_t>(n) + 1, zero_like(cone));
      for (long i = 0; i <= n; ++i)
        if (present[static_cast<std::size_t>(i)]) vc[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)];
      auto inner = cyclotomic_roots(UniPoly<Cyclotomic>(std::move(vc)), allow_leftover);
      UniPoly<Cyclotomic> dummy;
      Kt t = Kt::variable(cone);
      Kt tm = one;
      for (long i = 0; i < std::labs(m); ++i) tm = tm * t;
      if (m < 0) tm = tm.inv();
      for (const auto& v : inner.roots) out.roots.push_back(Kt(v) * tm);
      // lift leftover back, restoring the t-weights
      if (inner.leftover.degree() > 0) {
        long ld = inner.leftover.degree();
        std::vector<Kt> lc;
        for (long i = 0; i <= ld; ++i) {
          Kt term(inner.leftover[static_cast<std::size_t>(i)]);
          long e = m * (ld - i);
          Kt tp = one;
          for (long j = 0; j < std::labs(e); ++j) tp = tp * t;
          if (e < 0) tp = tp.inv();
          lc.push_back(term * tp);
        }
        out.leftover = UniPoly<Kt>(std::move(lc));
      } else {
        out.leftover = UniPoly<Kt>::constant(one);
      }
      return out;
    }
  }
  if (!allow_leftover)
    throw FieldExtensionRequired(
        "ramification locations are not of the radical form v*t^m supported by the "
        "exact-in-t backend");
  out.leftover = q.monic();
  return out;
}

RootSplitT<Rational> field_roots(const UniPoly<Rational>& q, bool allow_leftover) {
  auto rs = rational_roots(q);
  if (rs.leftover.degree() > 0 && !allow_leftover)
    throw FieldExtensionRequired("irrational ramification location over Q");
  return {rs.roots, rs.leftover};
}

RootSplitT<Cyclotomic> field_roots(const UniPoly<Cyclotomic>& q, bool allow_leftover) {
  auto rs = cyclotomic_roots(q, allow_leftover);
  return {rs.roots, rs.leftover};
}

RootSplitT<RatFunc<Rational>> field_roots(const UniPoly<RatFunc<Rational>>& q,
                                          bool allow_leftover) {
  // lift to cyclotomic coefficients with conductor 1 and reuse the parametric path
  using Kq = RatFunc<Rational>;
  using Kt = RatFunc<Cyclotomic>;
  auto F = CycloCtx::get(1);
  auto lift_poly = [&](const UniPoly<Rational>& p) {
    std::vector<Cyclotomic> c;
    for (const auto& x : p.coeffs()) c.push_back(Cyclotomic(F, x));
    return UniPoly<Cyclotomic>(std::move(c));
  };
  std::vector<Kt> coeffs;
  for (const auto& c : q.coeffs()) coeffs.push_back(Kt(lift_poly(c.num()), lift_poly(c.den())));
  auto rs = param_roots(UniPoly<Kt>(std::move(coeffs)), allow_leftover);
  RootSplitT<Kq> out;
  auto lower_poly = [&](const UniPoly<Cyclotomic>& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) {
      Rational r;
      if (!as_rational(x, &r)) throw FieldExtensionRequired("root needs a cyclotomic field");
      c.push_back(r);
    }
    return UniPoly<Rational>(std::move(c));
  };
  for (const auto& r : rs.roots) out.roots.push_back(Kq(lower_poly(r.num()), lower_poly(r.den())));
  std::vector<Kq> lc;
  for (const auto& c : rs.leftover.coeffs())
    lc.push_back(Kq(lower_poly(c.num()), lower_poly(c.den())));
  out.leftover = UniPoly<Kq>(std::move(lc));
  return out;
}

RootSplitT<RatFunc<Cyclotomic>> field_roots(const UniPoly<RatFunc<Cyclotomic>>& q,
                                            bool allow_leftover) {
  auto rs = param_roots(q, allow_leftover);
  return {rs.roots, rs.leftover};
}

}  // namespace trec

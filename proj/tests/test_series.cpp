#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trec/rational_function.hpp"
#include "trec/ratfunc.hpp"
#include "trec/series.hpp"

using namespace trec;

namespace {

using QPoly = UniPoly<Rational>;
using QSeries = LaurentSeries<Rational>;
using QFun = RationalFunction1V<Rational>;

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

QFun rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return QFun(poly(num), poly(den));
}

QFun rand_rf(std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(1, 4);
  auto rand_poly = [&]() {
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    return QPoly(std::move(c));
  };
  QPoly n = rand_poly(), d = rand_poly();
  while (d.is_zero_poly() || !Rational(0).is_zero() /*never*/) break;
  while (d.is_zero_poly()) d = rand_poly();
  if (n.is_zero_poly()) n = poly({1, 2});
  return QFun(n, d);
}

}  // namespace

TEST_CASE("expansion against geometric-series oracle") {
  // 1/(w^2-1) at center 1: 1/(u(u+2)) = (1/2)u^-1 * 1/(1+u/2)
  QFun f = rf({-1, 0, 1}, {1});
  f = QFun(poly({1}), poly({-1, 0, 1}));
  QSeries s = f.expand_at(Rational(1), 6);
  // oracle: (1/2) u^-1 sum_k (-u/2)^k
  for (long k = -1; k <= 6; ++k) {
    Rational expect = Rational(1, 2) * Rational(-1, 2).pow(k + 1);
    CHECK(s.coeff(k) == expect);
  }
  CHECK(s.coeff(-1) == Rational(1, 2));
  CHECK(s.coeff(0) == Rational(-1, 4));
  CHECK(s.coeff(1) == Rational(1, 8));
}

TEST_CASE("expansion of monomial and at infinity") {
  QFun cube = rf({0, 0, 0, 1}, {1});
  QSeries s = cube.expand_at(Rational(0), 4);
  CHECK(s.coeff(3) == Rational(1));
  CHECK(s.coeff(2) == Rational(0));
  CHECK(s.coeff(4) == Rational(0));

  // w^2 at infinity: u^-2
  QFun sq = rf({0, 0, 1}, {1});
  QSeries si = sq.expand_at_infinity(0);
  CHECK(si.coeff(-2) == Rational(1));
  CHECK(si.coeff(-1) == Rational(0));
  CHECK(si.coeff(0) == Rational(0));
}

TEST_CASE("product of expansions equals expansion of product") {
  std::mt19937 rng(23);
  for (int it = 0; it < 30; ++it) {
    QFun f = rand_rf(rng), g = rand_rf(rng);
    Rational center(it % 3);
    if (!f.defined_at(center) || !g.defined_at(center)) {
      // poles are fine for Laurent expansion; just avoid zero denominators in product form
    }
    QSeries sf = f.expand_at(center, 8);
    QSeries sg = g.expand_at(center, 8);
    QSeries sp = (f * g).expand_at(center, 8);
    QSeries prod = sf * sg;
    for (long e = prod.lo(); e <= std::min(prod.hi(), 8L); ++e)
      CHECK(prod.coeff(e) == sp.coeff(e));
  }
}

TEST_CASE("rth root against binomial oracle") {
  // sqrt(u^2 + u^3) = u (1+u)^(1/2) = u + u^2/2 - u^3/8 + u^4/16 - ...
  QSeries s(2, {Rational(1), Rational(1)}, true, Rational(1));
  QSeries r = series_rth_root(s, 2);
  CHECK(r.coeff(1) == Rational(1));
  CHECK(r.coeff(2) == Rational(1, 2));
  CHECK(r.coeff(3) == Rational(-1, 8));
  CHECK(r.coeff(4) == Rational(1, 16));
  CHECK(r.coeff(5) == Rational(-5, 128));

  // trivial cases
  QSeries ur(5, {Rational(1)}, true, Rational(1));
  CHECK(series_rth_root(ur, 5).coeff(1) == Rational(1));
  QSeries four(2, {Rational(4)}, true, Rational(1));
  QSeries tr = series_rth_root(four, 2);
  CHECK(tr.coeff(1) == Rational(2));

  // root^r == s on the window
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int it = 0; it < 20; ++it) {
    long rr = 2 + it % 3;
    std::vector<Rational> c{Rational(1)};
    for (int i = 0; i < 7; ++i) c.emplace_back(coeff(rng));
    QSeries base(rr * (it % 2 + 1), std::move(c), false, Rational(1));
    QSeries root = series_rth_root(base, rr);
    QSeries back = root.pow(rr);
    for (long e = base.lo(); e <= back.hi(); ++e)
      CHECK(back.coeff(e) == base.coeff(e));
  }

  // errors: leading exponent not divisible
  QSeries bad(3, {Rational(1)}, true, Rational(1));
  CHECK_THROWS_AS(series_rth_root(bad, 2), DomainError);
  QSeries imag(2, {Rational(2)}, true, Rational(1));
  CHECK_THROWS_AS(series_rth_root(imag, 2), FieldExtensionRequired);
}

TEST_CASE("series reversion against Lagrange oracle") {
  // reverse(u + u^2) = u - u^2 + 2u^3 - 5u^4 + 14u^5 (signed Catalan numbers)
  QSeries s(1, {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
            false, Rational(1));
  QSeries g = series_reverse(s);
  CHECK(g.coeff(1) == Rational(1));
  CHECK(g.coeff(2) == Rational(-1));
  CHECK(g.coeff(3) == Rational(2));
  CHECK(g.coeff(4) == Rational(-5));
  CHECK(g.coeff(5) == Rational(14));

  QSeries lin(1, {Rational(3)}, true, Rational(1));
  CHECK(series_reverse(lin).coeff(1) == Rational(1, 3));
  QSeries idn(1, {Rational(1)}, true, Rational(1));
  CHECK(series_reverse(idn).coeff(1) == Rational(1));

  // two-sided inverse on the window
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> c{Rational(1 + it % 3)};
    for (int i = 0; i < 8; ++i) c.emplace_back(coeff(rng));
    QSeries f(1, std::move(c), false, Rational(1));
    QSeries rev = series_reverse(f);
    QSeries comp = series_compose(f, rev);
    CHECK(comp.coeff(1) == Rational(1));
    for (long e = 2; e <= comp.hi(); ++e) CHECK(comp.coeff(e) == Rational(0));
    QSeries comp2 = series_compose(rev, f);
    CHECK(comp2.coeff(1) == Rational(1));
    for (long e = 2; e <= comp2.hi(); ++e) CHECK(comp2.coeff(e) == Rational(0));
  }

  QSeries notone(2, {Rational(1)}, true, Rational(1));
  CHECK_THROWS_AS(series_reverse(notone), DomainError);
}

TEST_CASE("residues") {
  QSeries s(-1, {Rational(3), Rational(5)}, true, Rational(1));
  CHECK(s.residue() == Rational(3));
  QSeries s2(-2, {Rational(1)}, true, Rational(1));
  CHECK(s2.residue() == Rational(0));

  // residue of dx/x for x = w^r at 0 is r
  for (long r = 1; r <= 6; ++r) {
    std::vector<Rational> cs(static_cast<std::size_t>(r) + 1, Rational(0));
    cs[static_cast<std::size_t>(r)] = Rational(1);
    QFun x{QPoly(std::move(cs)), QPoly({std::vector<Rational>{Rational(1)}})};
    QFun form = x.derivative() / x;
    CHECK(form.expand_at(Rational(0), 2).residue() == Rational(r));
  }

  // window excludes -1: loud failure
  QSeries narrow(0, {Rational(1), Rational(2)}, false, Rational(1));
  CHECK(narrow.residue() == Rational(0));  // below lo is exactly zero
  QSeries unknown(-5, {Rational(1), Rational(1), Rational(1)}, false, Rational(1));
  CHECK_THROWS_AS(unknown.residue(), InsufficientPrecision);
}

TEST_CASE("possibly-zero flag fails loudly") {
  QSeries win(0, {Rational(0), Rational(0)}, false, Rational(1));
  CHECK(win.window_zero());
  CHECK_THROWS_AS(win.order(), PossiblyZero);
  QSeries z = QSeries::zero(Rational(1));
  CHECK(z.known_zero());
  CHECK_THROWS_AS(z.order(), DomainError);
}

TEST_CASE("windows are tracked conservatively, never silently extended") {
  QSeries a(0, {Rational(1), Rational(1)}, false, Rational(1));  // window [0,1]
  QSeries b(0, {Rational(1), Rational(1), Rational(1)}, false, Rational(1));
  QSeries p = a * b;
  CHECK(p.hi() == 1);  // min(0+2, 1+0) = 1
  CHECK_THROWS_AS(p.coeff(2), InsufficientPrecision);
  QSeries inv = a.inverse();
  CHECK(inv.hi() == 1);
  CHECK(inv.coeff(0) == Rational(1));
  CHECK(inv.coeff(1) == Rational(-1));
}

TEST_CASE("series evaluation of rational functions and param coefficients") {
  // y(w) = 1/(w^2 - t^2) evaluated on a chart series, over Q(t)
  using Kt = RatFunc<Rational>;
  Kt one(Rational(1));
  Kt t = Kt::variable(Rational(1));
  UniPoly<Kt> den({std::vector<Kt>{-(t * t), Kt(Rational(0)), one}});
  RationalFunction1V<Kt> y{UniPoly<Kt>::constant(one), den};
  // series w = t + u
  LaurentSeries<Kt> w(0, {t, one}, true, one);
  LaurentSeries<Kt> s = y.eval_at_series(w + LaurentSeries<Kt>::zero(one));
  // 1/(w^2 - t^2) at w = t+u: 1/(u^2 + 2tu) = 1/(2tu) * 1/(1 + u/(2t))
  CHECK(s.coeff(-1) == one / (t + t));
  CHECK(s.coeff(0) == -(one / (t * t * Kt(Rational(4)))));
}

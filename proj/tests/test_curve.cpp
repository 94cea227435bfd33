#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trec/curve.hpp"

using namespace trec;

namespace {

using QPoly = UniPoly<Rational>;
using QFun = RationalFunction1V<Rational>;
using QCurve = SpectralCurve<Rational>;

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

// the (r,s)-curve x = w^r, y = w^{s-r}
QCurve rs_curve(long r, long s) {
  std::vector<Rational> xc(static_cast<std::size_t>(r) + 1, Rational(0));
  xc[static_cast<std::size_t>(r)] = Rational(1);
  QFun x{QPoly(std::move(xc)), QPoly::constant(Rational(1))};
  QFun y;
  if (s >= r) {
    std::vector<Rational> yc(static_cast<std::size_t>(s - r) + 1, Rational(0));
    yc[static_cast<std::size_t>(s - r)] = Rational(1);
    y = QFun{QPoly(std::move(yc)), QPoly::constant(Rational(1))};
  } else {
    std::vector<Rational> yd(static_cast<std::size_t>(r - s) + 1, Rational(0));
    yd[static_cast<std::size_t>(r - s)] = Rational(1);
    y = QFun{QPoly::constant(Rational(1)), QPoly(std::move(yd))};
  }
  return analyze_curve(x, y, Rational(1));
}

}  // namespace

TEST_CASE("ramification of power maps") {
  for (long r = 2; r <= 6; ++r) {
    auto curve = rs_curve(r, 1);
    REQUIRE(curve.points.size() == 2);
    for (const auto& p : curve.points) CHECK(p.r == r);
    CHECK(curve.point_at(Location<Rational>::finite(Rational(0))) != nullptr);
    CHECK(curve.point_at(Location<Rational>::infinity()) != nullptr);
  }
}

TEST_CASE("moebius map has no ramification") {
  QFun x{poly({0, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 1})};
  auto curve = analyze_curve(x, y, Rational(1));
  CHECK(curve.points.empty());
}

TEST_CASE("local parameters of (r,s) curves") {
  for (long r = 2; r <= 7; ++r) {
    for (long s = 1; s <= r + 1; ++s) {
      if (std::gcd(r, s) != 1) continue;
      auto curve = rs_curve(r, s);
      const auto* p0 = curve.point_at(Location<Rational>::finite(Rational(0)));
      REQUIRE(p0 != nullptr);
      CHECK(p0->r == r);
      CHECK(p0->sbar == s);
      CHECK(p0->s == s);
      CHECK(p0->tau_tilde == Rational(r));
      CHECK(p0->chart_c == Rational(1));
      CHECK(p0->contributes);
      const auto* pinf = curve.point_at(Location<Rational>::infinity());
      REQUIRE(pinf != nullptr);
      CHECK(pinf->r == r);
      CHECK(pinf->sbar == -s);
      CHECK(pinf->s == -s);
      CHECK(pinf->tau_tilde == Rational(-r));
      CHECK(!pinf->contributes);
      // admissibility iff r = +-1 mod s
      long m = ((r % s) + s) % s;
      bool cong = (m == 1 % s) || (m == (s - 1) % s);
      CHECK(p0->local_adm.admissible == cong);
      CHECK(pinf->local_adm.admissible);  // s <= -1 branch
    }
  }
}

TEST_CASE("admissibility congruence matches exhaustive table") {
  for (long r = 2; r <= 12; ++r) {
    for (long s = 1; s <= r + 1; ++s) {
      if (std::gcd(r, s) != 1) continue;
      auto curve = rs_curve(r, s);
      const auto* p0 = curve.point_at(Location<Rational>::finite(Rational(0)));
      long m = ((r % s) + s) % s;
      bool cong = (m == 1 % s) || (m == (s - 1) % s);
      CHECK(p0->local_adm.admissible == cong);
    }
  }
  // named example: (5,3) admissible, (7,5) not (violating lA2)
  auto c53 = rs_curve(5, 3);
  CHECK(c53.point_at(Location<Rational>::finite(Rational(0)))->local_adm.admissible);
  auto c75 = rs_curve(7, 5);
  const auto* p75 = c75.point_at(Location<Rational>::finite(Rational(0)));
  CHECK(!p75->local_adm.admissible);
  CHECK(p75->local_adm.reason.substr(0, 3) == "lA2");
}

TEST_CASE("singular family fiber at t = 1: x = w^3 - 3w") {
  QFun x{poly({0, -3, 0, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 0, 1})};
  auto curve = analyze_curve(x, y, Rational(1));
  REQUIRE(curve.points.size() == 3);
  const auto* p1 = curve.point_at(Location<Rational>::finite(Rational(1)));
  const auto* pm1 = curve.point_at(Location<Rational>::finite(Rational(-1)));
  const auto* pinf = curve.point_at(Location<Rational>::infinity());
  REQUIRE(p1 != nullptr);
  REQUIRE(pm1 != nullptr);
  REQUIRE(pinf != nullptr);
  CHECK(p1->r == 2);
  CHECK(p1->sbar == 2);
  CHECK(p1->s == 3);
  CHECK(p1->x_value == Location<Rational>::finite(Rational(-2)));
  CHECK(p1->local_adm.admissible);
  CHECK(pm1->r == 2);
  CHECK(pm1->s == 3);
  CHECK(pinf->r == 3);
  CHECK(pinf->sbar == -1);
  CHECK(!pinf->contributes);
  // chart constants at w = +-1: x + 2 = 3 u^2 (1 + ...), x - 2 = -3 u^2 (1 + ...)
  CHECK(p1->chart_c == Rational(3));
  CHECK(pm1->chart_c == Rational(-3));
  // omega01 = 3(w^2-1) dw = 6 eta (1 + ...) d eta at w = 1
  CHECK(p1->tau_tilde == Rational(6));
}

TEST_CASE("smooth affine point with nonzero y has type (r, r+1) and sbar = r") {
  // x = w^2 + 2, y = w + 5: ramified at w = 0 with y(0) = 5 != 0
  QFun x{poly({2, 0, 1}), poly({1})};
  QFun y{poly({5, 1}), poly({1})};
  auto curve = analyze_curve(x, y, Rational(1));
  const auto* p0 = curve.point_at(Location<Rational>::finite(Rational(0)));
  REQUIRE(p0 != nullptr);
  CHECK(p0->r == 2);
  CHECK(p0->sbar == 2);
  CHECK(p0->s == 3);
  CHECK(p0->local_adm.admissible);
}

TEST_CASE("chart satisfies its defining equation exactly") {
  QFun x{poly({0, -3, 0, 1}), poly({1})};
  for (long val : {1L, -1L}) {
    auto chart = build_chart(x, Location<Rational>::finite(Rational(val)), 16);
    // x(w(eta)) - x(p) must equal c * eta^r on the window
    LaurentSeries<Rational> w = chart.sheet_w(Rational(1));
    LaurentSeries<Rational> xe = x.eval_at_series(w);
    LaurentSeries<Rational> lhs =
        xe - LaurentSeries<Rational>::constant(chart.x_value.value);
    for (long e = lhs.lo(); e <= lhs.hi(); ++e) {
      Rational expect = (e == chart.r) ? chart.c : Rational(0);
      CHECK(lhs.coeff(e) == expect);
    }
  }
}

TEST_CASE("chart at a pole of x") {
  // x = 1/w^2 at w = 0: pole of order 2
  QFun x{poly({1}), poly({0, 0, 1})};
  auto chart = build_chart(x, Location<Rational>::finite(Rational(0)), 10);
  CHECK(chart.r == 2);
  CHECK(chart.x_pole);
  CHECK(chart.x_value.at_infinity);
}

TEST_CASE("deck ambiguity leaves verdicts unchanged") {
  // replacing eta by theta*eta multiplies tau by theta^sbar; over Q the only
  // deck is -1 for r = 2, and verdicts must not move
  QFun x{poly({0, -3, 0, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 0, 1})};
  auto curve = analyze_curve(x, y, Rational(1));
  const auto* p1 = curve.point_at(Location<Rational>::finite(Rational(1)));
  auto d = p1->local_data();
  auto twisted = d;
  // legal deck twist: tau -> theta^sbar tau with theta a deck root of unity
  Rational theta(-1);
  twisted.tau = twisted.tau * theta.pow(d.sbar);
  CHECK(local_admissibility(d).admissible == local_admissibility(twisted).admissible);
  CHECK(is_zero(resonance_invariant(d) - resonance_invariant(twisted)));
}

TEST_CASE("fibers collect points over a base value") {
  QFun x{poly({0, -3, 0, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 0, 1})};
  auto curve = analyze_curve(x, y, Rational(1));
  auto fib = fiber_over(curve, Location<Rational>::finite(Rational(-2)));
  // w^3 - 3w + 2 = (w-1)^2 (w+2)
  REQUIRE(fib.points.size() == 2);
  bool has1 = false, hasm2 = false;
  for (std::size_t i = 0; i < fib.points.size(); ++i) {
    if (fib.points[i] == Location<Rational>::finite(Rational(1))) {
      has1 = true;
      CHECK(fib.orders[i] == 2);
    }
    if (fib.points[i] == Location<Rational>::finite(Rational(-2))) {
      hasm2 = true;
      CHECK(fib.orders[i] == 1);
    }
  }
  CHECK(has1);
  CHECK(hasm2);
  CHECK(fib.complete());

  auto fib_inf = fiber_over(curve, Location<Rational>::infinity());
  REQUIRE(fib_inf.points.size() == 1);
  CHECK(fib_inf.points[0].at_infinity);
  CHECK(fib_inf.orders[0] == 3);
}

TEST_CASE("irrational ramification over Q signals field extension") {
  // x = w(w^2-1)^3 has ramification at w^2 = 1/7
  QFun x{QFun(poly({0, 1})) * QFun(poly({-1, 0, 1})) * QFun(poly({-1, 0, 1})) *
         QFun(poly({-1, 0, 1}))};
  QFun y{poly({1}), poly({-1, 0, 1})};
  CHECK_THROWS_AS(analyze_curve(x, y, Rational(1)), FieldExtensionRequired);
}

TEST_CASE("same curve over a cyclotomic field resolves sqrt(7) locations") {
  auto F = CycloCtx::get(84);
  Cyclotomic one(F, Rational(1));
  auto lift = [&](std::initializer_list<long> cs) {
    std::vector<Cyclotomic> c;
    for (long v : cs) c.push_back(Cyclotomic(F, Rational(v)));
    return UniPoly<Cyclotomic>(std::move(c));
  };
  using CFun = RationalFunction1V<Cyclotomic>;
  CFun wp{lift({0, 1}), lift({1})};
  CFun q{lift({-1, 0, 1}), lift({1})};
  CFun x = wp * q * q * q;
  CFun y{lift({1}), lift({-1, 0, 1})};
  auto curve = analyze_curve(x, y, one);
  // points: +-1 of order 3, +-1/sqrt(7) of order 2, infinity of order 7
  REQUIRE(curve.points.size() == 5);
  long n2 = 0, n3 = 0, n7 = 0;
  for (const auto& p : curve.points) {
    if (p.r == 2) ++n2;
    if (p.r == 3) ++n3;
    if (p.r == 7) ++n7;
  }
  CHECK(n2 == 2);
  CHECK(n3 == 2);
  CHECK(n7 == 1);
  for (const auto& p : curve.points) {
    if (p.r == 3) {
      CHECK(p.sbar == 2);
      CHECK(p.s == 2);
      CHECK(p.local_adm.admissible);
      CHECK(p.contributes);
    }
    if (p.r == 2) {
      CHECK(p.sbar == 2);
      CHECK(p.s == 3);
      CHECK(p.contributes);
    }
    if (p.r == 7) {
      CHECK(p.sbar == -5);
      CHECK(!p.contributes);
    }
  }
}

TEST_CASE("exact-in-t analysis of the deformed curve") {
  using Kt = RatFunc<Cyclotomic>;
  auto F = CycloCtx::get(84);
  Cyclotomic cone(F, Rational(1));
  Kt one(cone);
  Kt t = Kt::variable(cone);
  auto c_of = [&](const Kt& k) { return k; };
  using TFun = RationalFunction1V<Kt>;
  UniPoly<Kt> w_poly({std::vector<Kt>{zero_like(one), one}});
  UniPoly<Kt> q_poly({std::vector<Kt>{-(t * t), zero_like(one), one}});
  TFun wq{w_poly, UniPoly<Kt>::constant(one)};
  TFun qq{q_poly, UniPoly<Kt>::constant(one)};
  TFun x = wq * qq * qq * qq;  // w (w^2 - t^2)^3
  TFun y{UniPoly<Kt>::constant(one), q_poly};
  auto curve = analyze_curve(x, y, c_of(one));
  REQUIRE(curve.points.size() == 5);
  long contributing = 0;
  for (const auto& p : curve.points)
    if (p.contributes) ++contributing;
  CHECK(contributing == 4);
  // ramification points at w = +-t have type (3,2)
  const auto* pt = curve.point_at(Location<Kt>::finite(t));
  REQUIRE(pt != nullptr);
  CHECK(pt->r == 3);
  CHECK(pt->sbar == 2);
  // chart constant 8 t^4
  CHECK(pt->chart_c == t * t * t * t * Kt(from_rat(cone, Rational(8))));
}

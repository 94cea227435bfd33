#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_tr.hpp"
#include "trec/recursion.hpp"

using namespace trec;

namespace {

using QPoly = UniPoly<Rational>;
using QFun = RationalFunction1V<Rational>;

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

SpectralCurve<Rational> rs_curve(long r, long s) {
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

SpectralCurve<Rational> singular_family_t1() {
  QFun x{poly({0, -3, 0, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 0, 1})};
  return analyze_curve(x, y, Rational(1));
}

int point_index_at(const SpectralCurve<Rational>& c, const Rational& w) {
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (c.points[i].location == Location<Rational>::finite(w)) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("airy-type (2,3) curve against the independent oracle") {
  // x = w^2, y = w
  QFun x{poly({0, 0, 1}), poly({1})};
  QFun y{poly({0, 1}), poly({1})};
  auto curve = analyze_curve(x, y, Rational(1));
  Engine<Rational> eng(curve);

  auto o11 = trec_oracle::oracle_w11(curve, 40);
  auto o03 = trec_oracle::oracle_w03(curve, 40);
  const auto& w11 = eng.correlator(1, 1);
  const auto& w03 = eng.correlator(0, 3);
  CHECK(w11.coeffs == o11);
  CHECK(w03.coeffs == o03);

  // frozen values, from the oracle run at order 40
  int p0 = point_index_at(curve, Rational(0));
  REQUIRE(p0 >= 0);
  LabelTuple t11{BasisLabel{p0, 4}};
  REQUIRE(w11.coeffs.count(t11) == 1);
  CHECK(w11.coeffs.at(t11) == Rational(-1, 16));
  CHECK(w11.coeffs.size() == 1);
  LabelTuple t03{BasisLabel{p0, 2}, BasisLabel{p0, 2}, BasisLabel{p0, 2}};
  REQUIRE(w03.coeffs.count(t03) == 1);
  CHECK(w03.coeffs.at(t03) == Rational(-1, 2));
  CHECK(w03.coeffs.size() == 1);
  CHECK(w11.certified);
  CHECK(w03.certified);
}

TEST_CASE("(3,2) curve against the oracle") {
  auto curve = rs_curve(3, 2);
  Engine<Rational> eng(curve);
  CHECK(eng.correlator(1, 1).coeffs == trec_oracle::oracle_w11(curve, 40));
  CHECK(eng.correlator(0, 3).coeffs == trec_oracle::oracle_w03(curve, 40));
}

TEST_CASE("(3,1) curve golden values") {
  auto curve = rs_curve(3, 1);
  Engine<Rational> eng(curve);
  const auto& w03 = eng.correlator(0, 3);
  CHECK(w03.empty());  // omega_{0,3} = 0
  const auto& w11 = eng.correlator(1, 1);
  int p0 = point_index_at(curve, Rational(0));
  LabelTuple t{BasisLabel{p0, 2}};
  REQUIRE(w11.coeffs.size() == 1);
  REQUIRE(w11.coeffs.count(t) == 1);
  // omega_{1,1} = -dw0/(9 w0^2) with the kernel conventions used here; the
  // loop equations pin this value (see the dedicated test below)
  CHECK(w11.coeffs.at(t) == Rational(-1, 9));
  CHECK(w11.coeffs == trec_oracle::oracle_w11(curve, 40));
}

TEST_CASE("loop equations pin the (3,1) omega_{1,1} coefficient") {
  // independent of the engine: E_2 for omega_{1,1} = c dw/w^2 equals
  // -(1 + 9c) dz^2/z^2 on the (3,1) curve, and the quadratic loop equation
  // forces 1 + 9c = 0 (see the engine check exercised here)
  auto curve = rs_curve(3, 1);
  Engine<Rational> eng(curve);
  eng.correlator(1, 1);
  auto check = eng.check_loop_equations(1, 0, point_index_at(curve, Rational(0)));
  CHECK(check.exponents_compatible);
  CHECK(check.pole_bounds_hold);
}

TEST_CASE("singular family at t = 1 matches its closed form") {
  auto curve = singular_family_t1();
  Engine<Rational> eng(curve);
  const auto& w03 = eng.correlator(0, 3);
  const auto& w11 = eng.correlator(1, 1);
  int pp = point_index_at(curve, Rational(1));
  int pm = point_index_at(curve, Rational(-1));
  REQUIRE(pp >= 0);
  REQUIRE(pm >= 0);

  // omega_{0,3} = (1/12) sum_eps prod_i dw_i/(w_i + eps)^2 at t = 1
  LabelTuple tp{BasisLabel{pp, 2}, BasisLabel{pp, 2}, BasisLabel{pp, 2}};
  LabelTuple tm{BasisLabel{pm, 2}, BasisLabel{pm, 2}, BasisLabel{pm, 2}};
  REQUIRE(w03.coeffs.count(tp) == 1);
  REQUIRE(w03.coeffs.count(tm) == 1);
  CHECK(w03.coeffs.at(tp) == Rational(1, 12));
  CHECK(w03.coeffs.at(tm) == Rational(1, 12));
  CHECK(w03.coeffs.size() == 2);

  // omega_{1,1} = -(1/288)[(3 - 13w + 7w^2)/(w-1)^4 + (3 + 13w + 7w^2)/(w+1)^4]
  // expanded in the pole basis at w = +-1
  auto coeff = [&](int pt, long k) {
    LabelTuple t{BasisLabel{pt, k}};
    auto it = w11.coeffs.find(t);
    return it == w11.coeffs.end() ? Rational(0) : it->second;
  };
  CHECK(coeff(pp, 4) == Rational(1, 96));    // -n(1)/288 with n(1) = -3
  CHECK(coeff(pp, 3) == Rational(-1, 288));  // -n'(1)/288 with n' = -13 + 14w
  CHECK(coeff(pp, 2) == Rational(-7, 288));  // -n''/2/288
  CHECK(coeff(pm, 4) == Rational(1, 96));
  CHECK(coeff(pm, 3) == Rational(1, 288));
  CHECK(coeff(pm, 2) == Rational(-7, 288));
  CHECK(w11.coeffs == trec_oracle::oracle_w11(curve, 48));
  CHECK(w03.coeffs == trec_oracle::oracle_w03(curve, 48));
}

TEST_CASE("self-consistency checks on the singular family") {
  auto curve = singular_family_t1();
  Engine<Rational> eng(curve);
  for (auto [g, n] : std::vector<std::pair<long, long>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
    const auto& om = eng.correlator(g, n);
    CHECK(om.certified);
    CHECK(eng.check_residue_free(om));
    CHECK(eng.check_projection_property(om));
  }
  for (int pi = 0; pi < static_cast<int>(curve.points.size()); ++pi) {
    if (!curve.points[static_cast<std::size_t>(pi)].contributes) continue;
    auto lc = eng.check_loop_equations(0, 2, pi);
    CHECK(lc.exponents_compatible);
    CHECK(lc.pole_bounds_hold);
    CHECK(eng.check_comb_identity(0, 2, pi));
    CHECK(eng.check_comb_identity(1, 0, pi));
  }
}

TEST_CASE("comb identity trivial case r = 1") {
  // unramified probe: both sides reduce to omega_{g,1+n}; exercised via a
  // curve whose only finite ramification is elsewhere
  auto curve = rs_curve(2, 1);
  Engine<Rational> eng(curve);
  CHECK(eng.check_comb_identity(1, 0, 0));
}

TEST_CASE("skip rule: non-contributing points change nothing") {
  auto curve = rs_curve(3, 2);
  EngineOptions with, without;
  with.include_non_contributing = true;
  Engine<Rational> eng_with(curve, with);
  Engine<Rational> eng_without(curve, without);
  for (auto [g, n] : std::vector<std::pair<long, long>>{{0, 3}, {1, 1}, {0, 4}}) {
    CHECK(eng_with.correlator(g, n) == eng_without.correlator(g, n));
  }
}

TEST_CASE("primitive independence") {
  auto curve = rs_curve(3, 2);
  EngineOptions shifted;
  shifted.primitive_shift = true;
  Engine<Rational> base(curve);
  Engine<Rational> shift(curve, shifted);
  for (auto [g, n] : std::vector<std::pair<long, long>>{{0, 3}, {1, 1}, {1, 2}}) {
    const auto& a = base.correlator(g, n);
    const auto& b = shift.correlator(g, n);
    CHECK(a == b);              // anomaly terms must vanish identically
    CHECK(base.check_residue_free(b));
  }
}

TEST_CASE("projection property rejects a perturbed tensor") {
  auto curve = singular_family_t1();
  Engine<Rational> eng(curve);
  Correlator<Rational> om = eng.correlator(1, 1);
  LabelTuple t{BasisLabel{0, 5}};
  om.add(t, Rational(1, 7));
  CHECK(!eng.check_projection_property(om));
}

TEST_CASE("forced run on the (7,5) curve detects asymmetry") {
  auto curve = rs_curve(7, 5);
  EngineOptions opts;
  opts.force_non_admissible = true;
  Engine<Rational> eng(curve, opts);
  CHECK_THROWS_AS(Engine<Rational>(curve), DomainError);  // refuses without force
  const auto& w03 = eng.correlator(0, 3);
  CHECK(!w03.empty());
  CHECK(!w03.certified);  // raw recursion output fails the symmetry check
  CHECK(!eng.check_symmetry(w03));
}

TEST_CASE("vertical globalisation: single-point fibers are trivially equal") {
  auto curve = rs_curve(3, 2);
  Engine<Rational> eng(curve);
  const auto& local = eng.correlator(1, 1);
  // the only contributing fiber is {0} alone
  auto global = eng.global_step(1, 1, {0}, FiberMode::PerFiber);
  Correlator<Rational> local_only = eng.global_step(1, 1, {0}, FiberMode::PerPoint);
  CHECK(global.coeffs == local_only.coeffs);
  for (const auto& [t, v] : local_only.coeffs) {
    auto it = local.coeffs.find(t);
    REQUIRE(it != local.coeffs.end());
    CHECK(is_zero(it->second - v));
  }
}

TEST_CASE("vertical globalisation over a fiber with an unramified partner") {
  // x = w^2 (w - 1) has ramification at w = 0 (x = 0) and w = 2/3; the fiber
  // over 0 adds the unramified point w = 1, and the pair conditions hold,
  // so the per-fiber step must reproduce the local one
  QFun x{poly({0, 0, -1, 1}), poly({1})};
  QFun y{poly({1}), poly({0, 1})};
  auto curve = analyze_curve(x, y, Rational(1));
  int p0 = point_index_at(curve, Rational(0));
  REQUIRE(p0 >= 0);
  Engine<Rational> eng(curve);
  for (auto [g, n] : std::vector<std::pair<long, long>>{{0, 3}, {1, 1}}) {
    auto local = eng.global_step(g, n, {p0}, FiberMode::PerPoint);
    auto fiber = eng.global_step(g, n, {p0}, FiberMode::PerFiber);
    CHECK(local.coeffs == fiber.coeffs);
  }
}

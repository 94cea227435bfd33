#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trec/cyclotomic.hpp"
#include "trec/ratfunc.hpp"
#include "trec/rational.hpp"

using namespace trec;

namespace {

Rational rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

Cyclotomic rand_cyc(std::mt19937& rng, const std::shared_ptr<const CycloCtx>& F) {
  std::vector<Rational> c;
  for (long i = 0; i < F->degree(); ++i) c.push_back(rand_rat(rng));
  return Cyclotomic(F, std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational::parse("3/2").str() == "3/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  Rational r;
  CHECK(Rational(8, 27).nth_root(3, &r));
  CHECK(r == Rational(2, 3));
  CHECK(!Rational(2).nth_root(2, &r));
  CHECK(Rational(-8).nth_root(3, &r));
  CHECK(r == Rational(-2));
  CHECK(Rational(3, 4).pow(-2) == Rational(16, 9));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    Rational a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
  }
}

TEST_CASE("cyclotomic polynomial degrees") {
  CHECK(cyclotomic_polynomial(1).degree() == 1);
  CHECK(cyclotomic_polynomial(8).degree() == 4);
  CHECK(cyclotomic_polynomial(12).degree() == 4);
  CHECK(cyclotomic_polynomial(84).degree() == 24);
  CHECK(euler_phi(84) == 24);
}

TEST_CASE("roots of unity relations for all N <= 24") {
  for (long n = 1; n <= 24; ++n) {
    auto F = CycloCtx::get(n);
    Cyclotomic z = Cyclotomic::zeta(F, n);
    CHECK(z.pow(n) == Cyclotomic(F, Rational(1)));
    for (long j = 1; j < n; ++j) {
      if (n % j == 0 && j != n) continue;  // only need n not dividing j below
    }
    // sum over k of zeta^(j k) vanishes when n does not divide j
    for (long j = 1; j < n; ++j) {
      Cyclotomic sum(F);
      for (long k = 0; k < n; ++k) sum = sum + z.pow(j * k);
      if (j % n != 0) CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("field axioms on random cyclotomics") {
  std::mt19937 rng(11);
  for (long n : {5L, 8L, 12L}) {
    auto F = CycloCtx::get(n);
    for (int it = 0; it < 25; ++it) {
      Cyclotomic a = rand_cyc(rng, F), b = rand_cyc(rng, F), c = rand_cyc(rng, F);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == Cyclotomic(F, Rational(1)));
    }
  }
}

TEST_CASE("square roots of rationals in cyclotomic fields") {
  for (long d : {2L, 3L, 5L, 7L, 6L, 21L}) {
    long cond = Cyclotomic::sqrt_conductor(Rational(d));
    auto F = CycloCtx::get(cond);
    Cyclotomic r = Cyclotomic::sqrt_rational(F, Rational(d));
    CHECK(r * r == Cyclotomic(F, Rational(d)));
    // canonical choice: positive real root
    CHECK(r.to_complex().real() > 0.0);
    CHECK(std::abs(r.to_complex().imag()) < 1e-9);
  }
  // negative radicand: positive imaginary part
  long cond = Cyclotomic::sqrt_conductor(Rational(-7));
  CHECK(cond == 7);
  auto F = CycloCtx::get(cond);
  Cyclotomic r = Cyclotomic::sqrt_rational(F, Rational(-7));
  CHECK(r * r == Cyclotomic(F, Rational(-7)));
  CHECK(r.to_complex().imag() > 0.0);
  // rational square stays rational even in a small field
  auto F1 = CycloCtx::get(1);
  CHECK(Cyclotomic::sqrt_rational(F1, Rational(9, 4)) == Cyclotomic(F1, Rational(3, 2)));
}

TEST_CASE("sqrt(7) inside the lcm field used by curve analysis") {
  auto F = CycloCtx::get(84);
  Cyclotomic r = Cyclotomic::sqrt_rational(F, Rational(7));
  CHECK(r * r == Cyclotomic(F, Rational(7)));
  CHECK(r.to_complex().real() > 0.0);
}

TEST_CASE("param rational canonical form and valuation") {
  Rational one(1);
  RatFunc<Rational> t = RatFunc<Rational>::variable(one);
  RatFunc<Rational> f = (t * t) / (RatFunc<Rational>(Rational(7)) - t);
  CHECK(f.valuation_at_zero() == 2);
  RatFunc<Rational> g = RatFunc<Rational>(Rational(343, 2)) / (t * t);
  CHECK(g.valuation_at_zero() == -2);
  RatFunc<Rational> h = (RatFunc<Rational>(one) + t) / (RatFunc<Rational>(one) - t);
  CHECK(h.valuation_at_zero() == 0);
  Rational lim;
  CHECK(h.limit_at_zero(&lim));
  CHECK(lim == Rational(1));
  CHECK(!g.limit_at_zero(&lim));

  // equality iff cross-multiplication vanishes
  RatFunc<Rational> a = (t * t - RatFunc<Rational>(one)) / (t - RatFunc<Rational>(one));
  RatFunc<Rational> b = t + RatFunc<Rational>(one);
  CHECK(a == b);
}

TEST_CASE("field axioms on random param rationals") {
  std::mt19937 rng(13);
  Rational one(1);
  auto rand_rf = [&]() {
    RatFunc<Rational> t = RatFunc<Rational>::variable(one);
    RatFunc<Rational> n = RatFunc<Rational>(rand_rat(rng)) + t * RatFunc<Rational>(rand_rat(rng));
    RatFunc<Rational> d = RatFunc<Rational>(Rational(1)) + t * RatFunc<Rational>(rand_rat(rng));
    return n / d;
  };
  for (int it = 0; it < 40; ++it) {
    auto a = rand_rf(), b = rand_rf(), c = rand_rf();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero_fn()) CHECK(a * a.inv() == RatFunc<Rational>(one));
  }
}

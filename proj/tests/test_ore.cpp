#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darr/error.hpp"
#include "darr/ore.hpp"

using namespace darr;

namespace {

ArrPtr arr3() {
  static ArrPtr a = Arrangement::example(3);
  return a;
}

OreElement O(const std::string &s) { return parse_ore(arr3(), s); }

OreElement random_element(std::mt19937_64 &rng, int max_exp, int terms) {
  OreElement u(arr3());
  for (int t = 0; t < terms; ++t) {
    unsigned i = rng() % (max_exp + 1), j = rng() % (max_exp + 1);
    unsigned k = rng() % 2, l = rng() % 2;
    long num = long(rng() % 9) - 4;
    if (num == 0) num = 1;
    u.add_term(pbw(i, j, k, l), rat(num, 1 + long(rng() % 3)));
  }
  return u;
}

}  // namespace

TEST_CASE("defining relations") {
  auto a = arr3();
  auto x = OreElement::gen_x(a), y = OreElement::gen_y(a);
  auto D = OreElement::gen_D(a), E = OreElement::gen_E(a);

  CHECK(commutator(y, x).is_zero());
  CHECK(commutator(D, x).is_zero());
  CHECK(commutator(D, y) == OreElement::from_poly(a, a->F()));
  CHECK(commutator(E, x) == x);
  CHECK(commutator(E, y) == y);
  CHECK(commutator(E, D) == D * rat(3));
  CHECK(commutator(x, y).is_zero());
  // scalars are central
  auto c = OreElement::scalar(a, rat(7, 3));
  CHECK(commutator(c, D).is_zero());
  CHECK(commutator(c, E).is_zero());
}

TEST_CASE("unit laws and simple products") {
  auto a = arr3();
  auto one = OreElement::scalar(a, rat(1));
  auto E = OreElement::gen_E(a);
  CHECK(mul(E, one) == E);
  CHECK(mul(one, E) == E);

  // D*y = y*D + F
  auto D = OreElement::gen_D(a), y = OreElement::gen_y(a);
  auto lhs = mul(D, y);
  auto rhs = mul(y, D) + OreElement::from_poly(a, a->F());
  CHECK(lhs == rhs);

  // D*y^2 = y^2*D + 2*y*F (checked against the operator-action oracle below too)
  auto y2 = O("y^2");
  CHECK(mul(D, y2) ==
        mul(y2, D) + OreElement::from_poly(a, CommPoly::monomial(0, 1, rat(2)) * a->F()));
}

TEST_CASE("arrangement mismatch") {
  auto u = OreElement::gen_x(arr3());
  auto v = OreElement::gen_x(Arrangement::example(4));
  CHECK_THROWS_WITH_AS(mul(u, v), doctest::Contains("ArrangementMismatch"), Error);
}

TEST_CASE("action oracle on generators") {
  auto a = arr3();
  // E is the Euler operator
  CommPoly m = CommPoly::monomial(2, 3);
  CHECK(apply_to_poly(OreElement::gen_E(a), m) == m * rat(5));
  // D applied to y is F
  CHECK(apply_to_poly(OreElement::gen_D(a), CommPoly::monomial(0, 1)) == a->F());
  // composition convention: x^i y^j D^k E^l acts as (mult) o D^k o E^l
  auto u = O("x*D*E");
  CommPoly p = CommPoly::monomial(1, 1);
  CommPoly expect = CommPoly::monomial(1, 0) * (a->F() * partial_y(p * rat(2)));
  CHECK(apply_to_poly(u, p) == expect);
}

TEST_CASE("faithfulness oracle: mul agrees with operator composition") {
  auto a = arr3();
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    auto u = random_element(rng, 2, 2);
    auto v = random_element(rng, 2, 2);
    auto w = mul(u, v);
    for (int d = 0; d <= 6; ++d) {
      for (int i = 0; i + d <= 6; ++i) {
        CommPoly m = CommPoly::monomial(unsigned(i), unsigned(d));
        CHECK(apply_to_poly(w, m) == apply_to_poly(u, apply_to_poly(v, m)));
      }
    }
  }
}

TEST_CASE("associativity, exact") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    auto u = random_element(rng, 2, 2);
    auto v = random_element(rng, 2, 2);
    auto w = random_element(rng, 2, 2);
    CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
  }
}

TEST_CASE("grading") {
  auto a = arr3();
  // deg x = deg y = 1, deg D = r, deg E = 0
  auto u = O("x*y") + O("D") * rat(2) - O("y^2*E");  // homogeneous of degree 2... not 3
  CHECK(O("x*y*E").is_homogeneous());
  CHECK(O("D*E^2").is_homogeneous());
  CHECK(!(O("x") + O("D")).is_homogeneous());
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    auto p = random_element(rng, 2, 3);
    auto q = random_element(rng, 2, 3);
    auto parts_p = p.homogeneous_parts();
    auto parts_q = q.homogeneous_parts();
    for (const auto &[dp, hp] : parts_p)
      for (const auto &[dq, hq] : parts_q) {
        auto prod = mul(hp, hq);
        if (!prod.is_zero()) CHECK(prod.is_homogeneous());
        for (const auto &[m, c] : prod.terms())
          CHECK(internal_degree(*a, m) == dp + dq);
      }
  }
  (void)u;
}

TEST_CASE("filtration degree of products") {
  // F_p A * F_q A subset F_(p+q) A
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    auto u = random_element(rng, 2, 2);
    auto v = random_element(rng, 2, 2);
    if (u.is_zero() || v.is_zero()) continue;
    CHECK(mul(u, v).filtration_degree() <= u.filtration_degree() + v.filtration_degree());
  }
}

TEST_CASE("tau") {
  auto a = arr3();
  // tau_1(E) = -1
  CHECK(tau_apply(1, OreElement::gen_E(a)) == OreElement::scalar(a, rat(-1)));
  // tau_r(1) = 0
  CHECK(tau_apply(3, OreElement::scalar(a, rat(1))).is_zero());
  // tau_2(E^2) = -4E - 4
  CHECK(tau_apply(2, O("E^2")) == O("-4*E - 4"));
  CHECK_THROWS_WITH_AS(tau_apply(1, O("x*E")), doctest::Contains("NotInT"), Error);
}

TEST_CASE("local ad-nilpotence") {
  auto a = arr3();
  // f in S acts locally nilpotently
  int n = ad_nilpotence_order(O("x^2"), O("E^2"), 64);
  CHECK(n > 0);
  CHECK(n <= 64);
  for (const char *fs : {"x", "y^2", "x*y", "x^3"}) {
    for (const char *gs : {"x", "y", "D", "E"}) {
      CHECK(ad_nilpotence_order(O(fs), O(gs), 64) >= 0);
    }
  }
  // ad(E) never kills x
  CHECK_THROWS_AS(ad_nilpotence_order(OreElement::gen_E(a), OreElement::gen_x(a), 10),
                  Error);
}

TEST_CASE("nabla images") {
  auto a = arr3();
  auto one = OreElement::scalar(a, rat(1));
  CHECK(nabla_image(one, Var::X, a->F()) == OreElement::from_poly(a, a->Fx()));
  CHECK(nabla_image(one, Var::Y, a->F()) == OreElement::from_poly(a, a->Fy()));

  // nabla_x^(xE^i)(F) + nabla_y^(yE^i)(F) = F * sum_(t=0)^r (E+t)^i
  for (unsigned i = 0; i <= 3; ++i) {
    auto xei = mul(OreElement::gen_x(a), ore_pow(OreElement::gen_E(a), i));
    auto yei = mul(OreElement::gen_y(a), ore_pow(OreElement::gen_E(a), i));
    auto lhs = nabla_image(xei, Var::X, a->F()) + nabla_image(yei, Var::Y, a->F());
    OreElement sum(a);
    for (long t = 0; t <= a->r(); ++t) {
      auto e_plus_t = OreElement::gen_E(a) + OreElement::scalar(a, rat(t));
      sum = sum + ore_pow(e_plus_t, i);
    }
    auto rhs = mul(OreElement::from_poly(a, a->F()), sum);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("render and parse round trip") {
  auto a = arr3();
  CHECK(O("3/2*x^2*y*D*E^2").str() == "3/2*x^2*y*D*E^2");
  CHECK(O("0*x").str() == "0");
  CHECK(O("1").str() == "1");
  CHECK(O("-x + 2").str() == "2 - x");
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    auto u = random_element(rng, 4, 5);
    CHECK(parse_ore(a, u.str()) == u);
  }
  CHECK_THROWS_AS(parse_ore(a, "x + + y"), Error);
  CHECK_THROWS_AS(parse_ore(a, "z"), Error);
  CHECK_THROWS_AS(parse_ore(a, ""), Error);
}

TEST_CASE("exponent overflow is a hard error") {
  CHECK_THROWS_WITH_AS(pbw(40000, 0, 0, 0), doctest::Contains("ExponentOverflow"), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "darr/arrangement.hpp"
#include "darr/error.hpp"
#include "darr/matrix.hpp"
#include "darr/poly.hpp"

using namespace darr;

namespace {

ArrPtr r3() { return Arrangement::example(3); }

}  // namespace

TEST_CASE("rationals are canonical") {
  Rational q = rat(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(rat_str(q) == "-2/3");
  CHECK(parse_rat("-2/3") == q);
  CHECK(parse_rat("7") == rat(7));
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("poly arithmetic and derivatives") {
  CommPoly p = CommPoly::monomial(0, 5);  // y^5
  CHECK(partial_y(p) == CommPoly::monomial(0, 4, rat(5)));
  CHECK(partial_x(CommPoly::constant(rat(3))).is_zero());
  CHECK(!CommPoly().degree().has_value());
  CHECK(CommPoly::monomial(2, 3).degree() == 5);

  CommPoly q = (CommPoly::monomial(1, 0) + CommPoly::monomial(0, 1)).pow(2);
  CHECK(q.coeff(1, 1) == 2);
  CHECK(q.is_homogeneous());
  CHECK(q.homogeneous_component(2) == q);
  CHECK(q.homogeneous_component(1).is_zero());
}

TEST_CASE("divide_exact") {
  // F/alpha_1 for the r=3 example with alpha_1 = y
  auto arr = r3();
  CommPoly q = divide_exact(arr->F(), arr->forms()[1]);
  CHECK(q * to_poly(arr->forms()[1]) == arr->F());

  // Q/x = F by construction
  CHECK(divide_exact(arr->Q(), LinearForm(rat(1), rat(0))) == arr->F());

  CommPoly c = CommPoly::monomial(2, 0) + CommPoly::monomial(0, 2);
  CHECK_THROWS_WITH_AS(divide_exact(c, LinearForm(rat(1), rat(0))),
                       doctest::Contains("NotDivisible"), Error);
}

TEST_CASE("build_arrangement normalizes") {
  // [x, y, x-y, x-2y, x-3y]: F = -(1/6) x^3 y + x^2 y^2 - (11/6) x y^3 + y^4
  auto arr = r3();
  CHECK(arr->r() == 3);
  CHECK(arr->forms()[0].b == 0);
  CHECK(arr->F().coeff(0, 4) == 1);
  CHECK(arr->F().coeff(3, 1) == rat(-1, 6));
  CHECK(arr->F().coeff(2, 2) == 1);
  CHECK(arr->F().coeff(1, 3) == rat(-11, 6));

  // F = x Fbar + y^(r+1)
  CHECK(arr->F() == arr->Fbar() * CommPoly::monomial(1, 0) + CommPoly::monomial(0, 4));

  // Euler identities, exact
  CommPoly eulerF = CommPoly::monomial(1, 0) * arr->Fx() +
                    CommPoly::monomial(0, 1) * arr->Fy() - arr->F() * rat(4);
  CHECK(eulerF.is_zero());
  CommPoly eulerQ = CommPoly::monomial(1, 0) * partial_x(arr->Q()) +
                    CommPoly::monomial(0, 1) * partial_y(arr->Q()) - arr->Q() * rat(5);
  CHECK(eulerQ.is_zero());
}

TEST_CASE("build_arrangement errors") {
  auto x = LinearForm(rat(1), rat(0));
  auto y = LinearForm(rat(0), rat(1));
  auto f1 = LinearForm(rat(1), rat(-1));
  auto f2 = LinearForm(rat(1), rat(-2));
  auto f3 = LinearForm(rat(1), rat(-3));
  auto f4 = LinearForm(rat(1), rat(-4));

  CHECK_THROWS_WITH_AS(Arrangement::build({x, LinearForm(rat(2), rat(0)), y, f1, f2}),
                       doctest::Contains("DuplicateLine"), Error);
  CHECK_THROWS_WITH_AS(Arrangement::build({y, f1, f2, f3, f4}),
                       doctest::Contains("MissingXLine"), Error);
  CHECK_THROWS_WITH_AS(Arrangement::build({x, y, f1}), doctest::Contains("TooFewLines"),
                       Error);
}

TEST_CASE("x-form is moved to the front, scales kept") {
  auto arr = Arrangement::build({LinearForm(rat(1), rat(-1)), LinearForm(rat(0), rat(2)),
                                 LinearForm(rat(3), rat(0)), LinearForm(rat(1), rat(-2)),
                                 LinearForm(rat(1), rat(-3))});
  CHECK(arr->forms()[0].a == 3);
  CHECK(arr->forms()[0].b == 0);
  CHECK(arr->forms()[1].a == 1);  // the rest keep their order
  CHECK(arr->forms()[1].b == -1);
  CHECK(arr->F().coeff(0, 4) == 1);
}

TEST_CASE("quotient basis") {
  CHECK(quotient_basis_check(*r3()));
  CHECK(quotient_basis_check(*Arrangement::example(4)));
  CHECK(quotient_basis_check(*Arrangement::example(7)));

  // randomized rational slopes
  std::vector<LinearForm> forms;
  forms.emplace_back(rat(1), rat(0));
  forms.emplace_back(rat(0), rat(1));
  forms.emplace_back(rat(2), rat(3));
  forms.emplace_back(rat(-1), rat(7));
  forms.emplace_back(rat(5), rat(-2));
  forms.emplace_back(rat(1), rat(11));
  CHECK(quotient_basis_check(*Arrangement::build(forms)));
}

TEST_CASE("corrupted quotient set is dependent") {
  auto arr = r3();
  int r = arr->r();
  SparseMat m(r + 1, r + 1);
  CommPoly q1 = divide_exact(arr->F(), arr->forms()[1]);
  for (int row = 0; row < r + 1; ++row)  // the same quotient repeated
    for (const auto &[k, c] : q1.terms()) m.add(row, int(CommPoly::key_x(k)), c);
  CHECK(m.rank() < r + 1);
}

TEST_CASE("independence lemma as a rank statement") {
  // alpha F_x + beta F_y = 0 with alpha, beta in S_1 forces alpha = beta = 0:
  // the 4-variable solve has full rank
  auto arr = r3();
  int r = arr->r();
  SparseMat m(r + 2, 4);  // rows: monomial basis of S_(r+1); cols: a1,a2,b1,b2
  auto put = [&](int col, const CommPoly &p) {
    for (const auto &[k, c] : p.terms()) m.add(int(CommPoly::key_y(k)), col, c);
  };
  put(0, arr->Fx() * CommPoly::monomial(1, 0));
  put(1, arr->Fx() * CommPoly::monomial(0, 1));
  put(2, arr->Fy() * CommPoly::monomial(1, 0));
  put(3, arr->Fy() * CommPoly::monomial(0, 1));
  CHECK(m.rank() == 4);
}

TEST_CASE("squarefree Q") {
  auto arr = r3();
  // gcd(Q(t,1), d/dt Q(t,1)) must be constant
  CommPoly Q = arr->Q();
  auto dehom = [](const CommPoly &p) {
    std::vector<Rational> u;
    for (const auto &[k, c] : p.terms()) {
      std::size_t i = CommPoly::key_x(k);
      if (u.size() <= i) u.resize(i + 1, Rational(0));
      u[i] += c;
    }
    return u;
  };
  auto uderiv = [](const std::vector<Rational> &p) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
    return d;
  };
  auto norm = [](std::vector<Rational> &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  std::function<std::vector<Rational>(std::vector<Rational>, std::vector<Rational>)> ugcd =
      [&](std::vector<Rational> a, std::vector<Rational> b) {
        norm(a);
        norm(b);
        if (b.empty()) return a;
        while (a.size() >= b.size() && !a.empty()) {
          Rational f = a.back() / b.back();
          std::size_t off = a.size() - b.size();
          for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
          norm(a);
        }
        return ugcd(b, a);
      };
  auto qq = dehom(Q);
  auto g = ugcd(qq, uderiv(qq));
  CHECK(g.size() == 1);
}

TEST_CASE("arrangement json round trip") {
  auto arr = r3();
  auto back = Arrangement::from_json(arr->to_json());
  CHECK(*back == *arr);
  CHECK_THROWS_WITH_AS(Arrangement::from_json("{not json"), doctest::Contains("Malformed"),
                       Error);
  CHECK_THROWS_WITH_AS(Arrangement::from_json("{\"forms\": [[1,0,0,1]]}"),
                       doctest::Contains("zero denominator"), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darr/matrix.hpp"

using namespace darr;

TEST_CASE("rank basics") {
  SparseMat m(3, 3);
  m.add(0, 0, rat(1));
  m.add(1, 1, rat(2));
  m.add(2, 0, rat(3));
  m.add(2, 1, rat(6));
  CHECK(m.rank() == 2);

  SparseMat z(4, 5);
  CHECK(z.rank() == 0);
}

TEST_CASE("solve") {
  // x + y = 3, x - y = 1
  SparseMat m(2, 2);
  m.add(0, 0, rat(1));
  m.add(0, 1, rat(1));
  m.add(1, 0, rat(1));
  m.add(1, 1, rat(-1));
  auto sol = m.solve({rat(3), rat(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == rat(2));
  CHECK((*sol)[1] == rat(1));

  // inconsistent
  SparseMat n(2, 1);
  n.add(0, 0, rat(1));
  n.add(1, 0, rat(1));
  CHECK(!n.solve({rat(1), rat(2)}).has_value());

  // underdetermined: a particular solution must satisfy the system
  SparseMat u(1, 3);
  u.add(0, 0, rat(2));
  u.add(0, 2, rat(4));
  auto s2 = u.solve({rat(6)});
  REQUIRE(s2.has_value());
  CHECK(rat(2) * (*s2)[0] + rat(4) * (*s2)[2] == rat(6));
}

namespace {

// residual of M x - rhs
bool solves(const std::vector<std::vector<Rational>> &dense, const std::vector<Rational> &x,
            const std::vector<Rational> &rhs) {
  for (std::size_t r = 0; r < dense.size(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < x.size(); ++c) acc += dense[r][c] * x[c];
    if (acc != rhs[r]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parallel elimination agrees with the serial reference") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 10; ++iter) {
    int rows = 20 + int(rng() % 20), cols = 20 + int(rng() % 20);
    SparseMat m(rows, cols);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> rhs(rows, Rational(0));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          Rational v = rat(long(rng() % 19) - 9, 1 + long(rng() % 7));
          m.add(r, c, v);
          dense[r][c] += v;
        }
    }
    // make half the systems consistent by construction
    if (iter % 2 == 0) {
      for (int r = 0; r < rows; ++r) {
        Rational acc(0);
        for (int c = 0; c < cols; ++c) acc += dense[r][c];
        rhs[r] = acc;  // x = (1,...,1) solves
      }
    } else {
      for (int r = 0; r < rows; ++r) rhs[r] = rat(long(rng() % 11) - 5);
    }

    CHECK(m.rank(false) == m.rank(true));
    auto a = m.solve(rhs, false);
    auto b = m.solve(rhs, true);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(solves(dense, *a, rhs));
    if (b) CHECK(solves(dense, *b, rhs));
  }
}

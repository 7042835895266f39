#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darr/rational.hpp"

namespace darr {

// Sparse bivariate polynomial sum c_{ij} x^i y^j over the rationals.
// No zero coefficients are stored. Exponents are bounded by kMaxExp; going
// past it is a hard error, never silent wraparound.
class CommPoly {
 public:
  using Key = std::uint32_t;  // i << 16 | j, x-major order
  static constexpr unsigned kMaxExp = 1u << 15;

  static Key key(unsigned i, unsigned j);
  static unsigned key_x(Key k) { return k >> 16; }
  static unsigned key_y(Key k) { return k & 0xffffu; }

  CommPoly() = default;
  static CommPoly constant(const Rational &c);
  static CommPoly monomial(unsigned i, unsigned j, const Rational &c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial is undefined
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  CommPoly homogeneous_component(int p) const;

  Rational coeff(unsigned i, unsigned j) const;
  const std::map<Key, Rational> &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(unsigned i, unsigned j, const Rational &c);

  CommPoly operator+(const CommPoly &o) const;
  CommPoly operator-(const CommPoly &o) const;
  CommPoly operator-() const;
  CommPoly operator*(const CommPoly &o) const;
  CommPoly operator*(const Rational &c) const;
  CommPoly pow(unsigned e) const;
  bool operator==(const CommPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const CommPoly &o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

CommPoly partial_x(const CommPoly &p);
CommPoly partial_y(const CommPoly &p);

// A nonzero linear form a*x + b*y.
struct LinearForm {
  Rational a, b;
  LinearForm(Rational a_, Rational b_);
  std::string str() const;
};

bool proportional(const LinearForm &u, const LinearForm &v);
CommPoly to_poly(const LinearForm &f);

// Quotient q with q * alpha == p; throws NotDivisible.
CommPoly divide_exact(const CommPoly &p, const LinearForm &alpha);

}  // namespace darr

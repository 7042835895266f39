#pragma once

#include <map>
#include <string>

#include "darr/bimodule.hpp"
#include "darr/ore.hpp"
#include "darr/wedge.hpp"

namespace darr {

struct CochainKey {
  Wedge w;  // dual wedge label
  PbwKey m;
  bool operator<(const CochainKey &o) const {
    if (w != o.w) return w < o.w;
    return m < o.m;
  }
  bool operator==(const CochainKey &o) const { return w == o.w && m == o.m; }
};

// Element of A (x) Lambda V^*: an association from dual wedge monomials to
// coefficients in A. Cohomological degree = wedge length; a cochain never
// mixes wedge lengths.
class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(ArrPtr arr) : arr_(std::move(arr)) {}

  static Cochain term(ArrPtr arr, const OreElement &a, Wedge w);

  const ArrPtr &arrangement() const { return arr_; }
  const std::map<CochainKey, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Wedge w, PbwKey m, const Rational &c);
  void add(Wedge w, const OreElement &a);

  int degree() const;  // -1 for the zero cochain
  OreElement coefficient(Wedge w) const;

  Cochain operator+(const Cochain &o) const;
  Cochain operator-(const Cochain &o) const;
  Cochain operator*(const Rational &c) const;
  bool operator==(const Cochain &o) const { return terms_ == o.terms_; }
  bool operator!=(const Cochain &o) const { return !(*this == o); }

  // internal degree of a term: deg(coefficient) - deg(wedge letters)
  int term_internal_degree(const CochainKey &k) const;
  bool is_homogeneous_of_degree(int d) const;
  int max_E_degree() const;

  std::string str() const;

 private:
  ArrPtr arr_;
  std::map<CochainKey, Rational> terms_;
};

// differential of the cochain complex A (x) Lambda V^*; p in 0..4, zero at 4
Cochain hh_d(int p, const Cochain &c);
// contracting homotopy, p in 1..4: keeps the E-hat terms with sign (-1)^(p-1)
Cochain homotopy_s(int p, const Cochain &c);
// multiplication by internal degree on each homogeneous component
Cochain euler_gamma(const Cochain &c);

bool is_cocycle(const Cochain &c);

// evaluation of a p-cochain on a degree-p chain, sum a * alpha_w * b
OreElement evaluate_cochain(const Cochain &alpha, const BimoduleChain &chain);

}  // namespace darr

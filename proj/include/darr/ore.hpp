#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "darr/arrangement.hpp"
#include "darr/poly.hpp"

namespace darr {

// PBW monomial x^i y^j D^k E^l packed into 16-bit fields; the packed order is
// the lexicographic order on (i, j, k, l).
using PbwKey = std::uint64_t;

PbwKey pbw(unsigned i, unsigned j, unsigned k, unsigned l);
inline unsigned pbw_i(PbwKey m) { return unsigned(m >> 48) & 0xffffu; }
inline unsigned pbw_j(PbwKey m) { return unsigned(m >> 32) & 0xffffu; }
inline unsigned pbw_k(PbwKey m) { return unsigned(m >> 16) & 0xffffu; }
inline unsigned pbw_l(PbwKey m) { return unsigned(m) & 0xffffu; }
constexpr PbwKey kPbwOne = 0;

std::string pbw_str(PbwKey m);

// An element of A = D(arrangement) in PBW normal form: finite sum
// c * x^i y^j D^k E^l. Immutable value semantics; all arithmetic is exact.
class OreElement {
 public:
  OreElement() = default;
  explicit OreElement(ArrPtr arr) : arr_(std::move(arr)) {}

  static OreElement zero(ArrPtr arr) { return OreElement(std::move(arr)); }
  static OreElement scalar(ArrPtr arr, const Rational &c);
  static OreElement monomial(ArrPtr arr, unsigned i, unsigned j, unsigned k, unsigned l,
                             const Rational &c = Rational(1));
  static OreElement monomial(ArrPtr arr, PbwKey m, const Rational &c = Rational(1));
  static OreElement from_poly(ArrPtr arr, const CommPoly &p);
  // generators
  static OreElement gen_x(ArrPtr arr) { return monomial(arr, 1, 0, 0, 0); }
  static OreElement gen_y(ArrPtr arr) { return monomial(arr, 0, 1, 0, 0); }
  static OreElement gen_D(ArrPtr arr) { return monomial(arr, 0, 0, 1, 0); }
  static OreElement gen_E(ArrPtr arr) { return monomial(arr, 0, 0, 0, 1); }

  const ArrPtr &arrangement() const { return arr_; }
  const std::map<PbwKey, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Rational scalar_part() const;  // coefficient of the unit monomial
  Rational coeff(PbwKey m) const;
  std::size_t term_count() const { return terms_.size(); }

  // support tests
  bool in_S() const;     // only x, y
  bool in_T() const;     // only E
  bool in_xyD() const;   // no E

  CommPoly poly_part() const;  // throws NotInS when support leaves S

  void add_term(PbwKey m, const Rational &c);

  OreElement operator+(const OreElement &o) const;
  OreElement operator-(const OreElement &o) const;
  OreElement operator-() const;
  OreElement operator*(const Rational &c) const;
  bool operator==(const OreElement &o) const;
  bool operator!=(const OreElement &o) const { return !(*this == o); }

  std::string str() const;

  // internal grading: deg x = deg y = 1, deg D = r, deg E = 0
  bool is_homogeneous() const;
  std::map<int, OreElement> homogeneous_parts() const;
  int filtration_degree() const;  // max k + l, -1 for 0
  int max_E_degree() const;       // max l, -1 for 0
  unsigned exponent_sum(PbwKey m) const { return pbw_i(m) + pbw_j(m) + pbw_k(m) + pbw_l(m); }

 private:
  ArrPtr arr_;
  std::map<PbwKey, Rational> terms_;
};

int internal_degree(const Arrangement &arr, PbwKey m);

// PBW product, normal form. Throws ArrangementMismatch.
OreElement mul(const OreElement &u, const OreElement &v);
OreElement mul_mono(const ArrPtr &arr, PbwKey a, PbwKey b);
OreElement commutator(const OreElement &u, const OreElement &v);
OreElement ore_pow(const OreElement &u, unsigned e);

// iterate ad(f) on u until it vanishes; throws after max_iter steps
int ad_nilpotence_order(const OreElement &f, const OreElement &u, int max_iter);

// the tautological action on S: E = x d/dx + y d/dy, D = F d/dy,
// x^i y^j D^k E^l acts as (mult x^i y^j) o D^k o E^l
CommPoly apply_to_poly(const OreElement &u, const CommPoly &p);

// tau_t on k[E]: tau_t(E^n) = E^n - (E+t)^n, k-linear. Throws NotInT.
OreElement tau_apply(long t, const OreElement &a);

enum class Var { X, Y };

// nabla^u_x(F) resp. nabla^u_y(F) with the three tensor legs multiplied out
// in A: sum over monomials x^i y^j of F of sum_{s+t+1=i} x^s * u * x^t y^j
// (x case) and sum_{s+t+1=j} x^i y^s * u * y^t (y case).
OreElement nabla_image(const OreElement &u, Var which, const CommPoly &F);

std::string ore_str(const OreElement &u);
OreElement parse_ore(const ArrPtr &arr, const std::string &text);

}  // namespace darr

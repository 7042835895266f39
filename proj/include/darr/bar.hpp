#pragma once

#include <map>
#include <string>
#include <vector>

#include "darr/bimodule.hpp"
#include "darr/cochain.hpp"

namespace darr {

// Element of the bar resolution: a sum of slot tuples a0 | a1 | ... | a_(p+1)
// with monomial entries. Terms with scalar interior slots are kept in storage
// (the comparison morphism produces them) but every cochain evaluation is
// normalized and kills them.
class BarChain {
 public:
  explicit BarChain(ArrPtr arr, int degree) : arr_(std::move(arr)), degree_(degree) {}

  const ArrPtr &arrangement() const { return arr_; }
  int degree() const { return degree_; }
  const std::map<std::vector<PbwKey>, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<PbwKey> &slots, const Rational &c);
  BarChain operator+(const BarChain &o) const;
  BarChain operator-(const BarChain &o) const;

  std::string str() const;

 private:
  ArrPtr arr_;
  int degree_;
  std::map<std::vector<PbwKey>, Rational> terms_;
};

// bar differential: alternating sum of slot merges
BarChain bar_d(const BarChain &c);

// The pieces of the Gerstenhaber machinery, built on top of the resolution.
class Comparison {
 public:
  explicit Comparison(ArrPtr arr);

  const ArrPtr &arrangement() const { return arr_; }
  const Resolution &resolution() const { return res_; }

  // comparison morphism into the bar resolution, p <= 3
  BarChain phi_gen(int p, Wedge w) const;
  BarChain phi(int p, const BimoduleChain &c) const;

  // psi_1 on a standard monomial: the Leibniz splitting
  BimoduleChain psi1(PbwKey w) const;

  // psi_2 on an elementary tensor of standard monomials. When both entries
  // lie in k[x,y] and the concatenation is not standard the paper leaves the
  // value unspecified; it is then reported as a chain supported on the x^y
  // wedge with unspecified coefficients (opaque), which is all the cochain
  // evaluations here ever need. Any other shape outside the case table
  // raises UncoveredShape.
  struct Psi2Value {
    BimoduleChain chain;
    bool opaque_xy = false;
  };
  Psi2Value psi2(PbwKey u, PbwKey v) const;

  // alpha o psi_p evaluated on interior slots (p = deg alpha in {1, 2});
  // normalized: scalar slots give zero
  OreElement eval_tilde(const Cochain &alpha, const std::vector<PbwKey> &interior) const;

  // Gerstenhaber composition (alpha o~ w(beta~)) o phi, degrees p, q in {1,2}
  Cochain diamond(const Cochain &alpha, const Cochain &beta) const;
  // [alpha, beta] = a#b - (-1)^((p-1)(q-1)) b#a; p, q <= 2
  Cochain bracket(const Cochain &alpha, const Cochain &beta) const;
  // [alpha, beta2 cup 1E'] through the Leibniz rule; covers the degree-3
  // table rows, all of which factor through 1 (x) E'
  Cochain bracket_with_E_cup(const Cochain &alpha, const Cochain &beta2) const;

  // diagonal: 5-slot tensors a | w1 | m | w2 | b representing
  // (a|w1|m) (x)_A (1|w2|1) * b
  struct Delta5 {
    PbwKey a;
    Wedge w1;
    PbwKey m;
    Wedge w2;
    PbwKey b;
    bool operator<(const Delta5 &o) const;
    bool operator==(const Delta5 &o) const {
      return a == o.a && w1 == o.w1 && m == o.m && w2 == o.w2 && b == o.b;
    }
  };
  using DeltaChain = std::map<Delta5, Rational>;

  const DeltaChain &delta_gen(Wedge w) const;
  // chain-map residual (d (x) 1 + (-1)^deg 1 (x) d) Delta - Delta d at w
  bool delta_square_commutes(Wedge w, std::string *residual = nullptr) const;

  // cup product via the diagonal, p + q <= 4
  Cochain cup(const Cochain &alpha, const Cochain &beta) const;

 private:
  ArrPtr arr_;
  Resolution res_;
  std::vector<std::tuple<PbwKey, Wedge, PbwKey, Rational>> nabla3_;  // nabla(F)
  // double Leibniz expansion of F over ordered letter pairs
  std::vector<std::tuple<PbwKey, Wedge, PbwKey, Wedge, PbwKey, Rational>> nabla5_;
  mutable std::map<Wedge, DeltaChain> delta_cache_;

  DeltaChain delta_gen_uncached(Wedge w) const;
  DeltaChain delta_of_chain(const BimoduleChain &c) const;
};

struct OrlikSolomonReport {
  bool triple_relations = false;  // all C(r+2,3) cup relations vanish exactly
  long dim0 = 0, dim1 = 0, dim2 = 0, dim3 = 0;
  bool dims_match = false;  // (1, r+2, r+1, 0)
  bool spanning_pairs = false;  // {w_i w_(i+1)} spans degree 2
  bool pass = false;
};

OrlikSolomonReport orlik_solomon_check(const ArrPtr &arr);

}  // namespace darr

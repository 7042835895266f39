#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darr/ore.hpp"
#include "darr/wedge.hpp"

namespace darr {

struct ChainKey {
  Wedge w;
  PbwKey left, right;
  bool operator<(const ChainKey &o) const {
    if (w != o.w) return w < o.w;
    if (left != o.left) return left < o.left;
    return right < o.right;
  }
  bool operator==(const ChainKey &o) const {
    return w == o.w && left == o.left && right == o.right;
  }
};

// Formal sum of a (x) w (x) b with a, b PBW monomials and w a wedge monomial;
// the components of the bimodule complex and of its dual. Canonical form, so
// equality (and "= 0") is structural.
class BimoduleChain {
 public:
  BimoduleChain() = default;
  explicit BimoduleChain(ArrPtr arr) : arr_(std::move(arr)) {}

  static BimoduleChain term(ArrPtr arr, PbwKey a, Wedge w, PbwKey b,
                            const Rational &c = Rational(1));

  const ArrPtr &arrangement() const { return arr_; }
  const std::map<ChainKey, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(PbwKey a, Wedge w, PbwKey b, const Rational &c);

  BimoduleChain operator+(const BimoduleChain &o) const;
  BimoduleChain operator-(const BimoduleChain &o) const;
  BimoduleChain operator*(const Rational &c) const;
  bool operator==(const BimoduleChain &o) const { return terms_ == o.terms_; }
  bool operator!=(const BimoduleChain &o) const { return !(*this == o); }

  // wedge degree when all terms agree, -1 for 0
  int wedge_degree() const;
  // internal degree deg a + deg w + deg b when homogeneous
  bool is_homogeneous_of_degree(int d) const;

  std::string str() const;

 private:
  ArrPtr arr_;
  std::map<ChainKey, Rational> terms_;
};

BimoduleChain lmul(const OreElement &u, const BimoduleChain &c);
BimoduleChain rmul(const BimoduleChain &c, const OreElement &u);
// u * c - c * u
BimoduleChain chain_bracket(const OreElement &u, const BimoduleChain &c);
// append the letters of extra after each wedge slot, with sign normalization
BimoduleChain wedge_right(const BimoduleChain &c, Wedge extra);
// prepend a single letter
BimoduleChain wedge_left(Wedge letter, const BimoduleChain &c);

// The free bimodule complex A|Lambda^p V|A with the explicit differentials,
// its dual, and the chain isomorphism onto the sigma-twisted complex.
class Resolution {
 public:
  explicit Resolution(ArrPtr arr);

  const ArrPtr &arrangement() const { return arr_; }

  // nabla(F) in S (x) S_1 (x) S as a degree-1 chain
  const BimoduleChain &nablaF() const { return nablaF_; }

  // d_p on the generator 1|w|1, wedge_len(w) == p in 1..4
  BimoduleChain d_gen(int p, Wedge w) const;
  BimoduleChain d(int p, const BimoduleChain &c) const;
  // augmentation A|A -> A
  OreElement d0(const BimoduleChain &c) const;

  BimoduleChain dual_d_gen(int p, Wedge w) const;
  BimoduleChain dual_d(int p, const BimoduleChain &c) const;

  // the xi and zeta elements of the chain isomorphism, with their defining
  // conditions checked by check_xi_zeta()
  const BimoduleChain &xi() const { return xi_; }
  const BimoduleChain &zeta() const { return zeta_; }
  bool check_xi_zeta(std::string *why = nullptr) const;

  // generator images of psi: P_dual -> P (x) A_sigma
  BimoduleChain psi_cy_gen(Wedge dual_w) const;
  // extension of psi over the sigma-twisted right action
  BimoduleChain psi_cy(const BimoduleChain &dual_chain) const;

  struct GenCheck {
    std::string check;
    std::string generator;
    bool pass;
    std::string residual;  // empty when pass
  };

  // d o d = 0 on every free generator plus the augmentation
  std::vector<GenCheck> verify_complex() const;
  // dual d o dual d = 0 on every generator
  std::vector<GenCheck> verify_dual_complex() const;
  // psi squares psi o d_dual = (d (x) id) o psi plus triangular invertibility
  std::vector<GenCheck> verify_cy_chain_iso() const;

 private:
  ArrPtr arr_;
  BimoduleChain nablaF_;
  BimoduleChain xi_, zeta_;
  OreElement gen_[4];  // x, y, D, E
  mutable std::map<Wedge, BimoduleChain> d_cache_;

  BimoduleChain d_gen_uncached(int p, Wedge w) const;
  BimoduleChain nabla_tilde(Var which, Wedge label) const;
  const OreElement &gen(Wedge letter) const;
};

// right-action twist used on P (x) A_sigma: x, y fixed, D -> D + F_y,
// E -> E + r + 2
OreElement modular_twist(const OreElement &u);

// dim Ext^p(M_lambda, M_mu) for p = 0..4 from the explicit 1-4-6-4-1 complex
std::array<long, 5> ext_one_dim(const Rational &lambda, const Rational &mu,
                                const Arrangement &arr);

}  // namespace darr

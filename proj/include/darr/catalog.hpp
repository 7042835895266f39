#pragma once

#include <vector>

#include "darr/cochain.hpp"
#include "darr/morphism.hpp"
#include "darr/subcomplex.hpp"

namespace darr {

struct PartialDerivationClass {
  int index;
  Cochain rep;     // alpha_y (F/alpha) (x) D' + 1 (x) E'
  Derivation der;  // the derivation itself, for Leibniz/commutator checks
};

PartialDerivationClass partial_derivation(const ArrPtr &arr, int i);

// The explicit representatives used throughout: every entry is a cocycle
// (checked on construction).
class CocycleCatalog {
 public:
  explicit CocycleCatalog(ArrPtr arr);

  const ArrPtr &arrangement() const { return arr_; }

  const Cochain &omega2() const { return omega2_; }
  const Cochain &omega3() const { return omega3_; }
  const std::vector<PartialDerivationClass> &partials() const { return partials_; }

  // degree-1: phi (x) D' for phi in S_r, plus 1 (x) E'
  std::vector<Cochain> h1_family() const;
  // degree-2 families: kappa (x) y'^D' (kappa completing <xFx, xFy, yFy> to
  // S_(r+1)), psi D (x) y'^D', u (x) D'^E'
  std::vector<Cochain> h2_kappa_family() const;
  std::vector<Cochain> h2_sd_family() const;
  std::vector<Cochain> h2_de_family() const;
  // degree-3 families mirroring H^3
  std::vector<Cochain> h3_kappa_family() const;
  std::vector<Cochain> h3_sd_family() const;

 private:
  ArrPtr arr_;
  Cochain omega2_, omega3_;
  std::vector<PartialDerivationClass> partials_;
  std::vector<CommPoly> kappa_;  // monomials completing the span
};

struct Hh1Report {
  bool all_cocycles = false;
  bool differences_not_coboundaries = false;
  bool sum_rule = false;
  long span_dim = 0;
  bool pass = false;
};

// the r+2 line classes are cocycles, pairwise differences are not
// coboundaries, and they span an (r+2)-dimensional subspace of H^1 in the
// window
Hh1Report hh1_basis_check(const ArrPtr &arr, int window);

}  // namespace darr

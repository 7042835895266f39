#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "darr/ore.hpp"

namespace darr {

// Algebra endomorphism given by its generator images; construction checks the
// six defining relations, so evaluation by substitution is well defined.
class AlgebraMorphism {
 public:
  AlgebraMorphism(ArrPtr arr, OreElement img_x, OreElement img_y, OreElement img_D,
                  OreElement img_E);

  static AlgebraMorphism identity(ArrPtr arr);

  const ArrPtr &arrangement() const { return arr_; }
  const OreElement &x() const { return img_[0]; }
  const OreElement &y() const { return img_[1]; }
  const OreElement &D() const { return img_[2]; }
  const OreElement &E() const { return img_[3]; }

  OreElement evaluate(const OreElement &u) const;
  // this o other
  AlgebraMorphism compose(const AlgebraMorphism &other) const;
  bool agrees_with(const AlgebraMorphism &other) const;

 private:
  ArrPtr arr_;
  std::array<OreElement, 4> img_;
};

// Derivation given by generator images, extended by the Leibniz rule.
class Derivation {
 public:
  Derivation(ArrPtr arr, OreElement img_x, OreElement img_y, OreElement img_D,
             OreElement img_E);

  const ArrPtr &arrangement() const { return arr_; }
  OreElement evaluate(const OreElement &u) const;

  Derivation operator+(const Derivation &o) const;
  Derivation operator*(const Rational &c) const;

  // exp(derivation) as a morphism; the series must terminate on every
  // generator within max_iter steps
  AlgebraMorphism exponential(int max_iter = 64) const;

 private:
  ArrPtr arr_;
  std::array<OreElement, 4> img_;
};

// graded automorphism from Lemma data: theta(x) = a x + b y,
// theta(y) = c x + d y, theta(E) = E + v,
// theta(D) = phi0 + e D (- e b F / (ax+by) E when b != 0).
// Requires Q(ax+by, cx+dy) = (ad - bc) e Q exactly.
AlgebraMorphism graded_auto(const ArrPtr &arr, const std::array<Rational, 4> &M,
                            const Rational &e, const Rational &v, const CommPoly &phi0);

// exp ad(f) for f in S: x, y fixed, D -> D - F f_y, E -> E - [E, f]
AlgebraMorphism exp_ad(const ArrPtr &arr, const CommPoly &f);
// cross-check: sum the ad-series instead of the closed form
AlgebraMorphism exp_ad_series(const ArrPtr &arr, const CommPoly &f, int max_iter = 64);

// exp ad(f) o theta0 == theta0 o exp ad(theta0^{-1}(f)); theta0 graded with
// matrix M (needed to pull f back through the linear substitution)
bool semidirect_check(const ArrPtr &arr, const AlgebraMorphism &theta0,
                      const std::array<Rational, 4> &M, const CommPoly &f);

// modular automorphism: x, y fixed, D -> D + F_y, E -> E + r + 2
AlgebraMorphism modular_sigma(const ArrPtr &arr);

// the derivation of the i-th line: x, y -> 0, E -> 1, D -> alpha_y F / alpha
Derivation partial_derivation_operator(const ArrPtr &arr, int i);

struct ModularReport {
  // +1 when a * Q = Q * sigma(a) holds on all tested monomials, -1 when the
  // opposite orientation Q * a = sigma(a) * Q holds instead
  int orientation = 0;
  bool relations_ok = false;
  bool exp_partials_match = false;  // sigma == exp(s * sum of partials)
  int exp_sign = 0;                 // the s above
  bool all_monomials_ok = false;
  std::string detail;
};

ModularReport verify_modular(const ArrPtr &arr, int depth);

struct NormalElementWitness {
  Rational lambda;
  std::vector<unsigned> exponents;  // one per arrangement form
};

// theta_u for u = lambda * prod alpha_j^(i_j), via the exponential of the
// matching combination of the partial derivations; satisfies
// a * u = u * theta_u(a).
AlgebraMorphism normal_auto(const ArrPtr &arr, const NormalElementWitness &w);

enum class NotNormalReason { NotInS, NonSplitFactor, ForeignLine };

struct NormalCheckResult {
  std::optional<NormalElementWitness> witness;
  NotNormalReason reason = NotNormalReason::NotInS;
  std::string detail;
  bool ok() const { return witness.has_value(); }
};

NormalCheckResult is_normal(const ArrPtr &arr, const OreElement &u);

}  // namespace darr

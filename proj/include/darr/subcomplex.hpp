#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "darr/cochain.hpp"
#include "darr/matrix.hpp"

namespace darr {

struct TruncationWindow {
  int N = 8;  // max E-exponent retained
};

// The internal-degree-zero subcomplex of A (x) Lambda V^*, truncated at
// E-exponent <= N. The differentials never raise the E-degree, so the window
// cuts out a finite-dimensional subcomplex. Requires r >= 3: the component
// description A_d = (S_d + S_(d-r) D) k[E] used to enumerate bases holds only
// there; smaller arrangements need a different decomposition and are rejected.
class XComplex {
 public:
  XComplex(ArrPtr arr, int window);

  const ArrPtr &arrangement() const { return arr_; }
  int window() const { return n_; }

  int dim(int p) const { return int(basis_[p].size()); }
  const std::vector<CochainKey> &basis(int p) const { return basis_[p]; }
  Cochain basis_cochain(int p, int idx) const;

  // matrix of d^p : X^p -> X^(p+1) in the enumerated bases
  const SparseMat &differential(int p) const;

  std::array<long, 5> cohomology_dims(bool parallel = false) const;

  // coordinates of a degree-0 cochain in the window; errors if it does not
  // lie in the subcomplex or exceeds the window
  std::vector<Rational> coords(const Cochain &c, int p) const;
  Cochain from_coords(int p, const std::vector<Rational> &v) const;

  // solve d^(p-1) eta = c; nullopt when c is not a coboundary in the window
  std::optional<Cochain> coboundary_witness(const Cochain &c, bool parallel = false) const;

 private:
  ArrPtr arr_;
  int n_;
  std::array<std::vector<CochainKey>, 5> basis_;
  std::array<std::map<CochainKey, int>, 5> index_;
  mutable std::array<std::optional<SparseMat>, 4> diff_;

  void enumerate();
};

struct DimsReport {
  int r = 0;
  int window = 0;
  std::array<long, 5> dims{};
  std::array<long, 5> dims_next{};  // at window + 2
  bool stable = false;
  std::array<long, 5> expected{};  // 1, r+2, 2r+3, r+2, 0
  bool matches_expected = false;
};

DimsReport cohomology_dims_report(const ArrPtr &arr, int window, bool parallel = false);

// is_coboundary on a window; returns the witness eta with d(eta) = c
std::optional<Cochain> is_coboundary(const Cochain &c, int window, bool parallel = false);

}  // namespace darr

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "darr/poly.hpp"

namespace darr {

class Arrangement;
using ArrPtr = std::shared_ptr<const Arrangement>;

// A central arrangement of r+2 pairwise distinct lines through the origin,
// one of them the line x = 0. Derived data:
//   Q = x * F,   F = product of the non-x forms rescaled so that the
//   coefficient of y^(r+1) is 1,   F = x * Fbar + y^(r+1).
class Arrangement {
 public:
  // forms: at least 5, pairwise non-proportional, one proportional to x.
  // The x-form is moved to index 0; the forms keep the caller's scales.
  static ArrPtr build(std::vector<LinearForm> forms);

  // [x, y, x - y, ..., x - r*y]
  static ArrPtr example(int r);

  static ArrPtr from_json(const std::string &text);
  std::string to_json() const;

  int r() const { return r_; }
  int line_count() const { return r_ + 2; }
  const std::vector<LinearForm> &forms() const { return forms_; }
  const CommPoly &Q() const { return q_; }
  const CommPoly &F() const { return f_; }
  const CommPoly &Fbar() const { return fbar_; }
  const CommPoly &Fx() const { return fx_; }
  const CommPoly &Fy() const { return fy_; }

  struct FTerm {
    unsigned i, j;
    Rational c;
  };
  // F expanded once; spliced into the D*y rewrite and the nabla sums.
  const std::vector<FTerm> &F_terms() const { return fterms_; }

  bool operator==(const Arrangement &o) const;

 private:
  Arrangement() = default;

  std::vector<LinearForm> forms_;
  int r_ = 0;
  CommPoly q_, f_, fbar_, fx_, fy_;
  std::vector<FTerm> fterms_;
};

// true iff {F/alpha_1, ..., F/alpha_(r+1)} is linearly independent in S_r
bool quotient_basis_check(const Arrangement &arr);

}  // namespace darr

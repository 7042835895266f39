#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "darr/rational.hpp"

namespace darr {

// Sparse matrix over the rationals with exact elimination. Row updates during
// elimination are cross-multiplied (fraction-free style) and renormalized, and
// can run under OpenMP; the serial path is the reference implementation used
// by the tests to validate the parallel one.
class SparseMat {
 public:
  SparseMat(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rational &v);
  void set_row(int r, std::vector<std::pair<int, Rational>> entries);

  long rank(bool parallel = false) const;
  // one particular solution of M x = rhs, or nullopt if inconsistent
  std::optional<std::vector<Rational>> solve(const std::vector<Rational> &rhs,
                                             bool parallel = false) const;

  // dimension cap guarding the elimination; exceeding it raises RankOverflow
  static constexpr long kCellCap = 64L * 1000 * 1000;

 private:
  int rows_, cols_;
  // each row sorted by column index, no zero entries
  std::vector<std::vector<std::pair<int, Rational>>> data_;

  friend struct Elimination;
};

}  // namespace darr

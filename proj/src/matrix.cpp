#include "darr/matrix.hpp"

#include <algorithm>

#include "darr/error.hpp"
#include "darr/parallel.hpp"

namespace darr {

SparseMat::SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (long(rows) * long(cols) > kCellCap)
    fail(Err::RankOverflow, "matrix exceeds configured cap");
}

void SparseMat::add(int r, int c, const Rational &v) {
  if (v == 0) return;
  auto &row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto &e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

void SparseMat::set_row(int r, std::vector<std::pair<int, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  data_[r] = std::move(entries);
}

namespace {

using Row = std::vector<std::pair<int, Rational>>;

// dst := dst - factor * src, both sorted by column
Row axpy(const Row &dst, const Rational &factor, const Row &src) {
  Row out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

struct Elimination {
  std::vector<Row> rows;
  int cols;
  int aug_col;  // -1 when absent; entries in that column are the rhs
  std::vector<int> pivot_row_of_col;

  Elimination(const SparseMat &m, const std::vector<Rational> *rhs)
      : rows(m.data_), cols(m.cols_), aug_col(rhs ? m.cols_ : -1) {
    if (rhs) {
      for (int r = 0; r < m.rows_; ++r)
        if ((*rhs)[r] != 0) rows[r].emplace_back(aug_col, (*rhs)[r]);
    }
  }

  // forward elimination; returns rank counting only non-augmented pivots
  long run(bool parallel) {
    int total_cols = aug_col < 0 ? cols : cols + 1;
    pivot_row_of_col.assign(total_cols, -1);
    long rank = 0;
    std::vector<int> active(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) active[i] = int(i);

    for (int col = 0; col < cols; ++col) {
      int pivot = -1;
      std::size_t best = 0;
      for (int idx : active) {
        if (rows[idx].empty() || rows[idx].front().first != col) continue;
        if (pivot < 0 || rows[idx].size() < best) {
          pivot = idx;
          best = rows[idx].size();
        }
      }
      if (pivot < 0) continue;
      ++rank;
      pivot_row_of_col[col] = pivot;
      const Row &prow = rows[pivot];
      const Rational plead = prow.front().second;

      std::vector<int> touched;
      touched.reserve(active.size());
      for (int idx : active)
        if (idx != pivot && !rows[idx].empty() && rows[idx].front().first == col)
          touched.push_back(idx);

      if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < long(touched.size()); ++t) {
          int idx = touched[t];
          Rational f = rows[idx].front().second / plead;
          rows[idx] = axpy(rows[idx], f, prow);
        }
      } else {
        for (int idx : touched) {
          Rational f = rows[idx].front().second / plead;
          rows[idx] = axpy(rows[idx], f, prow);
        }
      }

      active.erase(std::remove(active.begin(), active.end(), pivot), active.end());
    }

    // leftover rows supported on the augmented column witness inconsistency
    leftover_inconsistent = false;
    if (aug_col >= 0)
      for (int idx : active)
        if (!rows[idx].empty() && rows[idx].front().first == aug_col)
          leftover_inconsistent = true;
    return rank;
  }

  bool leftover_inconsistent = false;
};

long SparseMat::rank(bool parallel) const {
  Elimination e(*this, nullptr);
  return e.run(parallel);
}

std::optional<std::vector<Rational>> SparseMat::solve(const std::vector<Rational> &rhs,
                                                      bool parallel) const {
  Elimination e(*this, &rhs);
  e.run(parallel);
  if (e.leftover_inconsistent) return std::nullopt;

  // back-substitute, free variables set to zero
  std::vector<Rational> x(cols_, Rational(0));
  for (int col = cols_ - 1; col >= 0; --col) {
    int pr = e.pivot_row_of_col[col];
    if (pr < 0) continue;
    Rational acc(0);
    Rational lead(0);
    for (const auto &[c, v] : e.rows[pr]) {
      if (c == col) {
        lead = v;
      } else if (c == cols_) {
        acc += v;
      } else {
        acc -= v * x[c];
      }
    }
    x[col] = acc / lead;
  }
  return x;
}

}  // namespace darr

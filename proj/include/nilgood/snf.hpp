#pragma once

#include <map>
#include <set>
#include <vector>

namespace nilgood {

// Sparse integer matrix in row-major coordinate form with column
// adjacency, sized for boundary matrices of small chain complexes.
class SparseIntMat {
public:
  SparseIntMat(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows), col_rows_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, long long v);
  long long get(int r, int c) const;
  const std::map<int, long long>& row(int r) const { return row_data_[r]; }
  const std::set<int>& column_rows(int c) const { return col_rows_[c]; }

private:
  int rows_;
  int cols_;
  std::vector<std::map<int, long long>> row_data_;
  std::vector<std::set<int>> col_rows_;
};

int rank_mod_p(const SparseIntMat& M, int p);

struct SmithSummary {
  int rank = 0;
  // Invariant factors greater than 1, in divisibility order.
  std::vector<long long> nontrivial_invariants;
};

// Invariant factors via unit-pivot sparse elimination with a dense Smith
// reduction of the residual block.
SmithSummary smith_summary(const SparseIntMat& M);

// Full diagonal of the Smith normal form (including 1s, excluding zeros),
// in divisibility order. Dense algorithm, exposed for small matrices and
// as the residual step of smith_summary.
std::vector<long long> smith_diagonal_dense(std::vector<std::vector<long long>> M);

}  // namespace nilgood

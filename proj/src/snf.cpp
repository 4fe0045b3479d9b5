#include "nilgood/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "nilgood/rational.hpp"

namespace nilgood {

void SparseIntMat::add(int r, int c, long long v) {
  if (v == 0) return;
  auto it = row_data_[r].find(c);
  if (it == row_data_[r].end()) {
    row_data_[r][c] = v;
    col_rows_[c].insert(r);
  } else {
    it->second += v;
    if (it->second == 0) {
      row_data_[r].erase(it);
      col_rows_[c].erase(r);
    }
  }
}

long long SparseIntMat::get(int r, int c) const {
  auto it = row_data_[r].find(c);
  return it == row_data_[r].end() ? 0 : it->second;
}

namespace {

long long mod_p(long long v, int p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long inv_mod_p(long long a, int p) {
  long long r = 1, base = mod_p(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

// Mutable sparse grid used by both elimination routines.
struct Grid {
  std::vector<std::map<int, long long>> rows;
  std::vector<std::set<int>> col_rows;

  explicit Grid(const SparseIntMat& M) : rows(M.rows()), col_rows(M.cols()) {
    for (int r = 0; r < M.rows(); ++r)
      for (auto [c, v] : M.row(r)) {
        rows[r][c] = v;
        col_rows[c].insert(r);
      }
  }

  void set(int r, int c, long long v) {
    if (v == 0) {
      rows[r].erase(c);
      col_rows[c].erase(r);
    } else {
      rows[r][c] = v;
      col_rows[c].insert(r);
    }
  }

  long long get(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? 0 : it->second;
  }
};

}  // namespace

int rank_mod_p(const SparseIntMat& M, int p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: p must be a prime >= 2");
  Grid g(M);
  for (size_t r = 0; r < g.rows.size(); ++r) {
    std::vector<int> cols;
    for (auto [c, v] : g.rows[r]) {
      long long m = mod_p(v, p);
      if (m == 0)
        cols.push_back(c);
      else
        g.rows[r][c] = m;
    }
    for (int c : cols) g.set((int)r, c, 0);
  }

  int rank = 0;
  while (true) {
    // Pivot: lightest usable column, then lightest row inside it.
    int pc = -1;
    size_t best = SIZE_MAX;
    for (size_t c = 0; c < g.col_rows.size(); ++c) {
      size_t deg = g.col_rows[c].size();
      if (deg > 0 && deg < best) {
        best = deg;
        pc = (int)c;
      }
    }
    if (pc < 0) break;
    int pr = -1;
    size_t best_row = SIZE_MAX;
    for (int r : g.col_rows[pc])
      if (g.rows[r].size() < best_row) {
        best_row = g.rows[r].size();
        pr = r;
      }
    long long pivot_inv = inv_mod_p(g.get(pr, pc), p);
    std::vector<int> victims(g.col_rows[pc].begin(), g.col_rows[pc].end());
    for (int r : victims) {
      if (r == pr) continue;
      long long factor = g.get(r, pc) * pivot_inv % p;
      for (auto [c, v] : std::map<int, long long>(g.rows[pr]))
        g.set(r, c, mod_p(g.get(r, c) - factor * v, p));
    }
    // Remove the pivot row and column.
    for (auto [c, v] : std::map<int, long long>(g.rows[pr])) g.set(pr, c, 0);
    ++rank;
  }
  return rank;
}

namespace {

using Wide = __int128;

long long checked_combine(long long a, long long f, long long b) {
  Wide r = (Wide)a - (Wide)f * b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw limit_error("Smith reduction entries exceed the 64-bit range");
  return (long long)r;
}

}  // namespace

std::vector<long long> smith_diagonal_dense(std::vector<std::vector<long long>> a) {
  const int m = (int)a.size();
  const int n = m == 0 ? 0 : (int)a[0].size();
  std::vector<long long> diagonal;
  int t = 0;
  while (t < m && t < n) {
    // Minimal nonzero entry of the trailing submatrix into position (t,t).
    int bi = -1, bj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) {
          if (bi < 0 || std::abs(a[i][j]) < std::abs(a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
    if (bi < 0) break;
    std::swap(a[t], a[bi]);
    for (int i = t; i < m; ++i) std::swap(a[i][t], a[i][bj]);

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      long long q = a[i][t] / a[t][t];
      for (int j = t; j < n; ++j) a[i][j] = checked_combine(a[i][j], q, a[t][j]);
      if (a[i][t] != 0) clean = false;  // remainder became the smaller pivot
    }
    if (!clean) continue;
    for (int j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      long long q = a[t][j] / a[t][t];
      for (int i = t; i < m; ++i) a[i][j] = checked_combine(a[i][j], q, a[i][t]);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Pivot must divide the rest of the submatrix.
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < n; ++jj)
            a[t][jj] = checked_combine(a[t][jj], -1, a[i][jj]);
          divides = false;
          break;
        }
    if (!divides) continue;

    diagonal.push_back(std::abs(a[t][t]));
    ++t;
  }
  return diagonal;
}

SmithSummary smith_summary(const SparseIntMat& M) {
  Grid g(M);
  int units = 0;

  // Phase 1: eliminate on +-1 pivots; each one contributes an invariant
  // factor of 1 and strictly shrinks the live matrix.
  while (true) {
    int pr = -1, pc = -1;
    size_t best_cost = SIZE_MAX;
    for (size_t r = 0; r < g.rows.size(); ++r)
      for (auto [c, v] : g.rows[r]) {
        if (v != 1 && v != -1) continue;
        size_t cost = (g.rows[r].size() - 1) * (g.col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = (int)r;
          pc = c;
          if (cost == 0) break;
        }
      }
    if (pr < 0) break;
    long long pivot = g.get(pr, pc);  // +-1, equal to its own inverse
    std::vector<int> victims(g.col_rows[pc].begin(), g.col_rows[pc].end());
    for (int r : victims) {
      if (r == pr) continue;
      long long factor = g.get(r, pc) * pivot;
      for (auto [c, v] : std::map<int, long long>(g.rows[pr]))
        g.set(r, c, checked_combine(g.get(r, c), factor, v));
    }
    // Column ops clearing the pivot row now touch no other row.
    for (auto [c, v] : std::map<int, long long>(g.rows[pr])) g.set(pr, c, 0);
    ++units;
  }

  // Phase 2: dense Smith form of whatever is left.
  std::map<int, int> live_rows, live_cols;
  for (size_t r = 0; r < g.rows.size(); ++r)
    if (!g.rows[r].empty()) live_rows.emplace((int)r, (int)live_rows.size());
  for (size_t c = 0; c < g.col_rows.size(); ++c)
    if (!g.col_rows[c].empty()) live_cols.emplace((int)c, (int)live_cols.size());
  std::vector<std::vector<long long>> dense(live_rows.size(),
                                            std::vector<long long>(live_cols.size(), 0));
  for (auto [r, ri] : live_rows)
    for (auto [c, v] : g.rows[r]) dense[ri][live_cols.at(c)] = v;
  std::vector<long long> tail = smith_diagonal_dense(std::move(dense));

  SmithSummary out;
  out.rank = units + (int)tail.size();
  for (long long d : tail)
    if (d > 1) out.nontrivial_invariants.push_back(d);
  std::sort(out.nontrivial_invariants.begin(), out.nontrivial_invariants.end());
  return out;
}

}  // namespace nilgood

#include "nilgood/zlattice.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilgood {

namespace {

constexpr int kMaxGeneratorOrder = 24;

void check_square(const IntMat& M) {
  if (M.empty()) throw std::invalid_argument("matrix must be nonempty");
  for (const auto& row : M)
    if (row.size() != M.size()) throw std::invalid_argument("matrix must be square");
}

using Wide = __int128;

IntMat mat_mul_checked(const IntMat& A, const IntMat& B) {
  const size_t n = A.size();
  IntMat C(n, std::vector<long long>(n, 0));
  const Wide limit = (Wide)1 << 100;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Wide s = 0;
      for (size_t k = 0; k < n; ++k) s += (Wide)A[i][k] * B[k][j];
      if (s > limit || s < -limit || s > INT64_MAX || s < INT64_MIN)
        throw limit_error("matrix power entries grew beyond the exact range");
      C[i][j] = (long long)s;
    }
  return C;
}

bool is_identity(const IntMat& M) {
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Reduced row echelon form over Q; returns the canonical basis (zero rows
// dropped, pivots 1 with zeros above and below).
RatMat rref(RatMat rows) {
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rational inv = Rational(1) / rows[pivot_row][col];
    for (size_t c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<Rational> apply_g_minus_identity(const IntMat& g, const std::vector<Rational>& v) {
  const size_t n = g.size();
  std::vector<Rational> w(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (size_t j = 0; j < n; ++j) {
      long long coeff = g[i][j] - (i == j ? 1 : 0);
      if (coeff != 0) s += Rational(coeff) * v[j];
    }
    w[i] = s;
  }
  return w;
}

}  // namespace

long long int_det(const IntMat& M) {
  check_square(M);
  const size_t n = M.size();
  // Bareiss fraction-free elimination in 128-bit intermediates.
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
  Wide prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Wide det = a[n - 1][n - 1] * sign;
  if (det > INT64_MAX || det < INT64_MIN)
    throw limit_error("determinant exceeds the 64-bit range");
  return (long long)det;
}

std::optional<int> finite_order(const IntMat& M, int max) {
  check_square(M);
  if (max < 1) throw std::invalid_argument("finite_order: max must be >= 1");
  IntMat power = M;
  for (int m = 1; m <= max; ++m) {
    if (is_identity(power)) return m;
    if (m < max) power = mat_mul_checked(power, M);
  }
  return std::nullopt;
}

IntegerRepresentation make_representation(int rank, std::vector<IntMat> generators) {
  if (rank < 1) throw std::invalid_argument("representation rank must be >= 1");
  for (const auto& g : generators) {
    check_square(g);
    if ((int)g.size() != rank)
      throw std::invalid_argument("generator rank does not match the representation");
    long long d = int_det(g);
    if (d != 1 && d != -1)
      throw std::invalid_argument("generator determinant must be +1 or -1");
    if (!finite_order(g, kMaxGeneratorOrder))
      throw std::invalid_argument("generator has no finite order <= " +
                                  std::to_string(kMaxGeneratorOrder));
  }
  return IntegerRepresentation{rank, std::move(generators)};
}

SubspaceChain rational_series(const IntegerRepresentation& rep) {
  const int r = rep.rank;
  SubspaceChain chain;
  RatMat current(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) current[i][i] = Rational(1);
  chain.bases.push_back(current);
  chain.dims.push_back(r);
  while (true) {
    RatMat next_rows;
    for (const auto& g : rep.generators)
      for (const auto& v : chain.bases.back()) next_rows.push_back(apply_g_minus_identity(g, v));
    RatMat next = rref(std::move(next_rows));
    bool repeat = next == chain.bases.back();
    bool zero = next.empty();
    chain.dims.push_back((int)next.size());
    chain.bases.push_back(std::move(next));
    if (repeat) {
      chain.stabilized_at = (int)chain.dims.size() - 2;
      break;
    }
    if (zero) {
      chain.stabilized_at = (int)chain.dims.size() - 1;
      break;
    }
  }
  return chain;
}

bool is_nilpotent_integer_action(const IntegerRepresentation& rep) {
  return rational_series(rep).dims.back() == 0;
}

std::vector<long long> rank1_integer_chain(long long entry, int steps) {
  std::vector<long long> indices{1};
  long long m = entry - 1;
  long long abs_m = m < 0 ? -m : m;
  for (int j = 1; j <= steps; ++j) {
    long long next = indices.back() * abs_m;
    indices.push_back(next);
    if (next == 0) break;
  }
  return indices;
}

namespace {

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > INT64_MAX / base) throw limit_error("sweep candidate space exceeds 64-bit range");
    r *= base;
  }
  return r;
}

IntMat decode_candidate(long long index, int rank, int max_abs) {
  const int radix = 2 * max_abs + 1;
  IntMat M(rank, std::vector<long long>(rank));
  for (int i = rank - 1; i >= 0; --i)
    for (int j = rank - 1; j >= 0; --j) {
      M[i][j] = (long long)(index % radix) - max_abs;
      index /= radix;
    }
  return M;
}

struct SweepPartial {
  long long representations = 0;
  long long nilpotent = 0;
  long long identity_count = 0;
  std::vector<std::pair<long long, IntMat>> counterexamples;
};

void sweep_candidate(long long index, const SweepSpec& spec, SweepPartial& acc) {
  IntMat M = decode_candidate(index, spec.rank, spec.max_abs_entry);
  long long d = int_det(M);
  if (d != 1 && d != -1) return;
  if (!finite_order(M, spec.max_order)) return;
  acc.representations++;
  IntegerRepresentation rep{spec.rank, {M}};
  if (!is_nilpotent_integer_action(rep)) return;
  acc.nilpotent++;
  if (is_identity(M))
    acc.identity_count++;
  else
    acc.counterexamples.emplace_back(index, std::move(M));
}

SweepReport finish_report(const SweepSpec& spec, long long candidates,
                          std::vector<SweepPartial> partials) {
  SweepReport report;
  report.spec = spec;
  report.candidates = candidates;
  std::vector<std::pair<long long, IntMat>> all;
  for (auto& p : partials) {
    report.representations += p.representations;
    report.nilpotent += p.nilpotent;
    report.identity_count += p.identity_count;
    for (auto& c : p.counterexamples) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& c : all) report.counterexamples.push_back(std::move(c.second));
  return report;
}

void check_sweep_spec(const SweepSpec& spec) {
  if (spec.rank < 1 || spec.rank > 3)
    throw std::invalid_argument("sweep rank must be in 1..3");
  if (spec.max_abs_entry < 1 || spec.max_abs_entry > 2)
    throw std::invalid_argument("sweep entry bound must be 1 or 2");
  if (spec.max_order < 1 || spec.max_order > kMaxGeneratorOrder)
    throw std::invalid_argument("sweep order bound must be in 1..24");
}

}  // namespace

SweepReport sweep_serial(const SweepSpec& spec) {
  check_sweep_spec(spec);
  const long long total = pow_ll(2 * spec.max_abs_entry + 1, spec.rank * spec.rank);
  std::vector<SweepPartial> partials(1);
  for (long long index = 0; index < total; ++index)
    sweep_candidate(index, spec, partials[0]);
  return finish_report(spec, total, std::move(partials));
}

SweepReport sweep_parallel(const SweepSpec& spec) {
  check_sweep_spec(spec);
  const long long total = pow_ll(2 * spec.max_abs_entry + 1, spec.rank * spec.rank);
#ifdef _OPENMP
  const int threads = std::max(1, omp_get_max_threads());
#else
  const int threads = 1;
#endif
  std::vector<SweepPartial> partials(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    SweepPartial& mine = partials[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long long index = 0; index < total; ++index) sweep_candidate(index, spec, mine);
  }
#else
  for (long long index = 0; index < total; ++index) sweep_candidate(index, spec, partials[0]);
#endif
  return finish_report(spec, total, std::move(partials));
}

SweepReport verify_nilpotent_iff_trivial(const SweepSpec& spec, bool parallel) {
  return parallel ? sweep_parallel(spec) : sweep_serial(spec);
}

}  // namespace nilgood

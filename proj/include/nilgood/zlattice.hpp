#pragma once

#include <optional>
#include <vector>

#include "nilgood/rational.hpp"

namespace nilgood {

using IntMat = std::vector<std::vector<long long>>;
using RatMat = std::vector<std::vector<Rational>>;

// Finite-order unimodular matrices acting on the free abelian lattice Z^r.
struct IntegerRepresentation {
  int rank = 0;
  std::vector<IntMat> generators;
};

// Validates: square generators of the stated rank, determinant +-1, and
// finite order (g^m = I for some m <= 24).
IntegerRepresentation make_representation(int rank, std::vector<IntMat> generators);

// Exact determinant by fraction-free elimination.
long long int_det(const IntMat& M);

// Smallest m <= max with M^m = I, or nothing. Power entries are tracked in
// 128-bit arithmetic; uncontrolled growth raises limit_error.
std::optional<int> finite_order(const IntMat& M, int max);

// Descending chain of rational spans V_1 = Q^r,
// V_{j+1} = span{(g - I)v : v in V_j, g generator}. Bases are kept in
// reduced row echelon form so term equality is syntactic. The chain is
// recorded up to its first repeat (or a zero term) and is constant from
// `stabilized_at` on.
struct SubspaceChain {
  std::vector<int> dims;
  std::vector<RatMat> bases;
  int stabilized_at = 0;
};

SubspaceChain rational_series(const IntegerRepresentation& rep);

// True iff the rational chain reaches dimension 0. The decision runs over
// Q rather than Z: sublattice chains like Z > 2Z > 4Z > ... never
// stabilize set-wise, but a lattice term is zero exactly when its rational
// span is, because the lattice is torsion free.
bool is_nilpotent_integer_action(const IntegerRepresentation& rep);

// Successive indices |m|^j of the integer image chain of the rank-1
// representation n -> entry * n, m = entry - 1. For entry = -1 this is
// 1, 2, 4, 8, ...: the chain descends forever without reaching zero.
std::vector<long long> rank1_integer_chain(long long entry, int steps);

// Enumeration bounds for the single-generator sweep: every rank x rank
// matrix with entries in [-max_abs_entry, max_abs_entry].
struct SweepSpec {
  int rank = 1;
  int max_abs_entry = 2;
  int max_order = 6;
};

struct SweepReport {
  SweepSpec spec;
  long long candidates = 0;         // all entry combinations
  long long representations = 0;    // unimodular with finite order <= max_order
  long long nilpotent = 0;          // of those, decided nilpotent
  long long identity_count = 0;     // of those, equal to the identity
  std::vector<IntMat> counterexamples;  // nilpotent but not the identity
};

// Checks "nilpotent implies trivial" over every single-generator
// representation within the bounds. The report's counterexample list is
// expected to stay empty. The parallel kernel and the serial reference
// produce identical reports.
SweepReport sweep_serial(const SweepSpec& spec);
SweepReport sweep_parallel(const SweepSpec& spec);
SweepReport verify_nilpotent_iff_trivial(const SweepSpec& spec, bool parallel = true);

}  // namespace nilgood

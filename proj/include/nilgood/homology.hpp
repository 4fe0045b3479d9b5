#pragma once

#include <string>
#include <vector>

#include "nilgood/expr.hpp"
#include "nilgood/finite_group.hpp"

namespace nilgood {

// Coefficients for homology computations: F_p or Z.
struct CoeffRing {
  bool field = true;
  int p = 2;

  static CoeffRing Fp(int prime) { return {true, prime}; }
  static CoeffRing integers() { return {false, 0}; }

  std::string str() const { return field ? "F_" + std::to_string(p) : "Z"; }
  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;
};

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain d_1 | d_2 | ..., each d_i >= 2. Over a field the
// free rank carries the dimension and the torsion list stays empty.
struct FGAbelian {
  long long free_rank = 0;
  std::vector<long long> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
  friend bool operator==(const FGAbelian&, const FGAbelian&) = default;
};

// Canonicalizes an arbitrary list of cyclic orders (>= 1; 1s are dropped)
// into the invariant-factor chain.
FGAbelian canonical_fga(long long free_rank, std::vector<long long> cyclic_orders);

FGAbelian fga_direct_sum(const FGAbelian& A, const FGAbelian& B);
FGAbelian fga_tensor(const FGAbelian& A, const FGAbelian& B);

// Tor over Z: bilinear, Tor(Z,.) = 0, Tor(Z/m, Z/n) = Z/gcd(m,n).
FGAbelian tor_pairing(const FGAbelian& A, const FGAbelian& B);

struct GradedModule {
  CoeffRing ring;
  std::vector<FGAbelian> entries;  // degrees 0..max_degree

  int max_degree() const { return (int)entries.size() - 1; }
  friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

// Group homology with trivial coefficients from the normalized bar
// complex, by exact Smith reduction of the boundary matrices.
// Limits: |G| <= 12, max_degree <= 4.
GradedModule bar_homology_oracle(const GroupPtr& G, CoeffRing ring, int max_degree);

// Closed-form homology for spheres, projective spaces, classifying spaces
// of cyclic and elementary abelian groups (and direct products of those),
// of Z and free groups, with wedge sums (degreewise reduced direct sum)
// and products (Kunneth; over Z with the shifted Tor term). Classifying
// spaces of other finite groups are delegated to the bar oracle within its
// limits; anything else is rejected.
GradedModule space_homology(const SpaceExprPtr& s, CoeffRing ring, int max_degree);

struct HomologyComparison {
  bool equal = false;
  GradedModule left, right;
  std::vector<std::string> notes;  // per-degree differences, spelled out
};

HomologyComparison compare_space_homology(const SpaceExprPtr& a, const SpaceExprPtr& b,
                                          CoeffRing ring, int max_degree);

}  // namespace nilgood

#pragma once

#include <optional>
#include <vector>

#include "nilgood/finite_group.hpp"

namespace nilgood {

using Perm = std::vector<int>;

// (a o b)[x] = a[b[x]]
Perm compose_perms(const Perm& a, const Perm& b);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);

// An action of a finite group on a finite group: a homomorphism from the
// actor into the automorphism group of the target, stored as one target
// permutation per actor element.
struct FiniteAction {
  GroupPtr actor;
  GroupPtr target;
  std::vector<Perm> hom;

  const Perm& image(int actor_element) const { return hom[actor_element]; }
};

// Outcome of the nilpotency decision. Exactly one of witness/obstruction
// is set: the witness is a descending chain ending at the trivial
// subgroup whose terms are actor-closed with abelian, trivially-acted
// quotients; the obstruction is the nonzero subgroup the chain stalls at.
struct NilpotencyDecision {
  bool nilpotent = false;
  std::optional<SeriesChain> witness;
  std::optional<Subgroup> obstruction;
};

// Validates everything: each image is an automorphism of the target, the
// map is a homomorphism on all pairs, and the identity maps to the
// identity permutation.
FiniteAction build_action(GroupPtr actor, GroupPtr target, std::vector<Perm> hom);

FiniteAction trivial_action(GroupPtr actor, GroupPtr target);

// Extends images of a generating set multiplicatively to the whole actor;
// rejects inconsistent images and non-generating sets, then validates as
// build_action does.
FiniteAction action_from_generator_images(GroupPtr actor, GroupPtr target,
                                          const std::vector<int>& generators,
                                          const std::vector<Perm>& images);

// Actor is the closure of the given automorphism permutations under
// composition, acting tautologically. Optionally reports where each
// generator landed in the closure.
FiniteAction action_from_automorphisms(GroupPtr target, const std::vector<Perm>& generators,
                                       std::vector<int>* generator_indices = nullptr);

// Cyclic group acting on an elementary abelian group through an invertible
// k x k matrix over F_p. The matrix must have finite order (checked); the
// images are its powers, so the homomorphism and automorphism properties
// hold by construction and are not re-verified. Intended for enumeration
// sweeps where full validation would dominate the runtime.
FiniteAction matrix_action_cyclic(const GroupPtr& elementary_target, int p, int k,
                                  const std::vector<std::vector<int>>& matrix);

// The action of the subgroup of SL(2,p) generated by the upper and lower
// unipotent matrices on C_p x C_p by matrix multiplication. For every
// prime p <= 7 the two unipotents generate all of SL(2,p).
struct TriangularSl2Action {
  FiniteAction action;
  int upper_generator;  // index of [[1,1],[0,1]] in the actor
  int lower_generator;  // index of [[1,0],[1,1]] in the actor
};
TriangularSl2Action triangular_sl2_action(int p);

// Descending chain T_1 = target, T_{j+1} = <[T_j,T_j] together with all
// h^-1 * a(h) for h in T_j and a in the image automorphisms>, computed to
// stabilization. Each term is actor-closed and normal in its predecessor;
// the quotients are abelian with trivial induced action. The chain reaches
// the trivial subgroup exactly when some admissible filtration does,
// because every admissible next step contains this minimal one.
SeriesChain action_series(const FiniteAction& a);

NilpotencyDecision is_nilpotent_action(const FiniteAction& a);

// Literal search over descending chains of subgroups satisfying the four
// filtration conditions, by depth-first extension over admissible
// subgroups. Independent of action_series; |target| <= 24.
bool brute_force_nilpotency(const FiniteAction& a);

}  // namespace nilgood

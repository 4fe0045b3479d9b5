#pragma once

#include <optional>

#include "nilgood/expr.hpp"
#include "nilgood/rational.hpp"

namespace nilgood {

// Order of the described group, or -1 when infinite. Orders are exact and
// may exceed the Cayley-table cap; realization is a separate step.
long long order_of_spec(const GroupSpec& spec);
long long expr_order(const GroupExprPtr& e);
bool is_finite_expr(const GroupExprPtr& e);

// Builds a concrete group for a finite expression (Cayley-table caps
// apply). Throws std::invalid_argument for infinite expressions.
GroupPtr realize_finite(const GroupExprPtr& e);

// Contains an element of order p. Torsion in an HNN extension is
// conjugate into the base.
bool has_p_torsion(const GroupExprPtr& e, int p);

// Generated by its elements of finite order.
bool generated_by_finite_order(const GroupExprPtr& e);

// Has a finite subgroup of maximal p-power content to which every finite
// p-subgroup is subconjugate. For a free product this needs at most one
// factor with p-torsion.
bool has_finite_sylow(const GroupExprPtr& e, int p);

// Rank as a free group, when the expression is one: Z and F(n) are free,
// trivial groups are free of rank 0, free products add ranks, and an HNN
// node over a trivial base is free on its stable letters.
std::optional<long long> free_rank_of(const GroupExprPtr& e);

// The group retracts onto a free group of rank >= 2 (directly, through a
// product factor, through an HNN node with two or more stable letters, or
// through the base of a trivial-morphism HNN node).
bool has_bad_free_retract(const GroupExprPtr& e);

// chi(finite G) = 1/|G|, chi(Z) = 0, chi(F(n)) = 1-n,
// chi(free product) = sum - (k-1), chi(direct product) = product,
// chi(HNN(b,n,.)) = chi(b) - n.
Rational euler_characteristic(const GroupExprPtr& e);

// Rank of the kernel of the canonical map from an admissible free product
// onto the direct product of its finite factors. Admissible factors are Z,
// F(1), or finite p-groups; the kernel is then free and its rank is
// 1 - Q * chi(e) with Q the order of the finite quotient.
long long kurosh_kernel_rank(const GroupExprPtr& e, int p);

// Per-factor p-analysis of a free product (a single node counts as one
// factor). `p_quotient_nontrivial` is computed for factors that can be
// realized as Cayley tables and left unset otherwise.
struct PContentFactor {
  std::string printed;
  bool finite = false;
  bool torsion_at_p = false;
  bool infinite_torsion_free = false;  // Z or a free group
  std::optional<bool> p_quotient_nontrivial;  // G/O^p(G) != 1
};

struct PContent {
  int p = 0;
  std::vector<PContentFactor> factors;
  int p_torsion_factor_count = 0;
  bool sylow_finite = false;  // at most one factor carries p-torsion
};

PContent p_content(const GroupExprPtr& e, int p);

}  // namespace nilgood

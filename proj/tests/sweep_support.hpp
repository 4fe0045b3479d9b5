// Enumeration and generation helpers shared by the unit and acceptance
// suites: automorphism-group enumeration for small elementary abelian
// targets, homomorphism backtracking for p-group actors, action corpora,
// and random expression builders.
#pragma once

#include <functional>
#include <random>
#include <set>

#include "nilgood/classifier.hpp"
#include "nilgood/expr_analysis.hpp"
#include "nilgood/finite_action.hpp"

namespace testsupport {

using namespace nilgood;

inline int perm_order(const Perm& p) {
  Perm cur = p;
  Perm id = identity_perm((int)p.size());
  int m = 1;
  while (cur != id) {
    cur = compose_perms(cur, p);
    ++m;
    if (m > 100000) throw std::logic_error("perm_order runaway");
  }
  return m;
}

// Every automorphism of the elementary abelian group E(p,k), as target
// permutations, by enumerating all invertible k x k matrices over F_p.
// Sized for p^(k^2) up to a few tens of thousands.
inline std::vector<Perm> all_aut_perms(int p, int k, const GroupPtr& target) {
  const int n = target->order();
  long long total = 1;
  for (int i = 0; i < k * k; ++i) total *= p;
  std::vector<Perm> out;
  std::vector<int> entries(k * k);
  for (long long index = 0; index < total; ++index) {
    long long t = index;
    for (int i = 0; i < k * k; ++i) {
      entries[i] = (int)(t % p);
      t /= p;
    }
    Perm perm(n);
    std::vector<char> seen(n, 0);
    bool bijective = true;
    for (int idx = 0; idx < n && bijective; ++idx) {
      auto coords = elementary_coords(p, k, idx);
      std::vector<int> image(k, 0);
      for (int r = 0; r < k; ++r) {
        int s = 0;
        for (int c = 0; c < k; ++c) s += entries[r * k + c] * coords[c];
        image[r] = s % p;
      }
      int to = elementary_index(p, k, image);
      perm[idx] = to;
      if (seen[to]) bijective = false;
      seen[to] = 1;
    }
    if (bijective) out.push_back(std::move(perm));
  }
  return out;
}

// Greedy minimal generating sequence of a finite group.
inline std::vector<int> generating_sequence(const GroupPtr& G) {
  std::vector<int> gens;
  Subgroup closure = subgroup_generated(G, {});
  for (int x = 0; x < G->order() && closure.order() < G->order(); ++x) {
    if (closure.contains(x)) continue;
    gens.push_back(x);
    closure = subgroup_generated(G, gens);
  }
  return gens;
}

// All homomorphisms from P into the given automorphism permutations,
// reported as (unvalidated) actions of P on the target. Candidate images
// are filtered by element order; for abelian P partial assignments must
// commute; every complete assignment is verified to be a homomorphism on
// all pairs before it is reported.
inline void for_each_hom(const GroupPtr& P, const GroupPtr& target,
                         const std::vector<Perm>& auts,
                         const std::function<void(const FiniteAction&)>& visit) {
  const int n = P->order();
  const int points = target->order();
  std::vector<int> gens = generating_sequence(P);
  std::vector<std::vector<const Perm*>> candidates(gens.size());
  std::vector<int> aut_orders(auts.size());
  for (size_t i = 0; i < auts.size(); ++i) aut_orders[i] = perm_order(auts[i]);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    int go = P->element_order(gens[gi]);
    for (size_t i = 0; i < auts.size(); ++i)
      if (go % aut_orders[i] == 0) candidates[gi].push_back(&auts[i]);
  }

  std::vector<const Perm*> chosen(gens.size(), nullptr);
  std::vector<Perm> hom(n);
  std::vector<char> known(n, 0);

  auto try_complete = [&]() {
    std::fill(known.begin(), known.end(), 0);
    hom[P->identity()] = identity_perm(points);
    known[P->identity()] = 1;
    std::vector<int> frontier{P->identity()};
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      if (!known[gens[gi]]) {
        hom[gens[gi]] = *chosen[gi];
        known[gens[gi]] = 1;
        frontier.push_back(gens[gi]);
      } else if (hom[gens[gi]] != *chosen[gi]) {
        return;
      }
    }
    for (size_t i = 0; i < frontier.size(); ++i)
      for (size_t j = 0; j < frontier.size(); ++j) {
        int prod = P->mul(frontier[i], frontier[j]);
        Perm img = compose_perms(hom[frontier[i]], hom[frontier[j]]);
        if (known[prod]) {
          if (hom[prod] != img) return;
        } else {
          hom[prod] = std::move(img);
          known[prod] = 1;
          frontier.push_back(prod);
        }
      }
    if ((int)frontier.size() != n) return;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (hom[P->mul(a, b)] != compose_perms(hom[a], hom[b])) return;
    visit(FiniteAction{P, target, hom});
  };

  const bool abelian = P->abelian();
  std::function<void(size_t)> descend = [&](size_t depth) {
    if (depth == gens.size()) {
      try_complete();
      return;
    }
    for (const Perm* cand : candidates[depth]) {
      if (abelian) {
        bool commutes = true;
        for (size_t prev = 0; prev < depth && commutes; ++prev)
          commutes = compose_perms(*chosen[prev], *cand) ==
                     compose_perms(*cand, *chosen[prev]);
        if (!commutes) continue;
      }
      chosen[depth] = cand;
      descend(depth + 1);
    }
  };
  if (gens.empty()) {
    try_complete();  // trivial actor
    return;
  }
  descend(0);
}

inline bool matrix_power_is_identity(const std::vector<int>& M, int k, int p, int m) {
  auto mul = [&](const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> C(k * k, 0);
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        int a = A[i * k + l];
        if (a == 0) continue;
        for (int j = 0; j < k; ++j) C[i * k + j] = (C[i * k + j] + a * B[l * k + j]) % p;
      }
    return C;
  };
  std::vector<int> acc(k * k, 0), base = M;
  for (int i = 0; i < k; ++i) acc[i * k + i] = 1;
  int e = m;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (acc[i * k + j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Actions of the cyclic group C_m on E(p,k) through every matrix with
// M^m = I, enumerated over all k x k matrices mod p. The homomorphism is
// the list of matrix powers, so no per-action validation is needed.
inline void for_each_cyclic_matrix_action(
    int p, int k, int m, const GroupPtr& target,
    const std::function<void(const FiniteAction&)>& visit) {
  long long total = 1;
  for (int i = 0; i < k * k; ++i) total *= p;
  GroupPtr actor = build_group(GroupSpec::cyclic(m));
  const int points = target->order();
  std::vector<int> entries(k * k);
  for (long long index = 0; index < total; ++index) {
    long long t = index;
    for (int i = 0; i < k * k; ++i) {
      entries[i] = (int)(t % p);
      t /= p;
    }
    if (!matrix_power_is_identity(entries, k, p, m)) continue;
    Perm g(points);
    for (int idx = 0; idx < points; ++idx) {
      auto coords = elementary_coords(p, k, idx);
      std::vector<int> image(k, 0);
      for (int r = 0; r < k; ++r) {
        int s = 0;
        for (int c = 0; c < k; ++c) s += entries[r * k + c] * coords[c];
        image[r] = s % p;
      }
      g[idx] = elementary_index(p, k, image);
    }
    std::vector<Perm> hom(m);
    hom[0] = identity_perm(points);
    for (int i = 1; i < m; ++i) hom[i] = compose_perms(hom[i - 1], g);
    visit(FiniteAction{actor, target, hom});
  }
}

// All automorphisms of a small group (|G| <= 16ish) by backtracking over
// images of a generating sequence, with full verification.
inline std::vector<Perm> enumerate_automorphisms(const GroupPtr& G) {
  const int n = G->order();
  std::vector<int> gens = generating_sequence(G);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int x = 0; x < n; ++x)
      if (G->element_order(x) == G->element_order(gens[gi]))
        candidates[gi].push_back(x);

  std::vector<Perm> found;
  std::vector<int> chosen(gens.size());
  std::vector<int> image(n);
  std::vector<char> known(n);

  auto attempt = [&]() {
    std::fill(known.begin(), known.end(), 0);
    image[G->identity()] = G->identity();
    known[G->identity()] = 1;
    std::vector<int> frontier{G->identity()};
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      if (!known[gens[gi]]) {
        image[gens[gi]] = chosen[gi];
        known[gens[gi]] = 1;
        frontier.push_back(gens[gi]);
      } else if (image[gens[gi]] != chosen[gi]) {
        return;
      }
    }
    for (size_t i = 0; i < frontier.size(); ++i)
      for (size_t j = 0; j < frontier.size(); ++j) {
        int prod = G->mul(frontier[i], frontier[j]);
        int img = G->mul(image[frontier[i]], image[frontier[j]]);
        if (known[prod]) {
          if (image[prod] != img) return;
        } else {
          image[prod] = img;
          known[prod] = 1;
          frontier.push_back(prod);
        }
      }
    if ((int)frontier.size() != n) return;
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (seen[image[x]]) return;
      seen[image[x]] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (image[G->mul(a, b)] != G->mul(image[a], image[b])) return;
    found.push_back(Perm(image.begin(), image.end()));
  };

  std::function<void(size_t)> descend = [&](size_t depth) {
    if (depth == gens.size()) {
      attempt();
      return;
    }
    for (int cand : candidates[depth]) {
      chosen[depth] = cand;
      descend(depth + 1);
    }
  };
  descend(0);
  return found;
}

// Deterministic corpus of actions with |target| <= 16 and |actor| <= 24
// for the oracle-equivalence check.
inline std::vector<FiniteAction> build_oracle_corpus(size_t minimum) {
  std::vector<FiniteAction> corpus;
  std::mt19937 rng(987654321u);

  // The named examples first.
  {
    GroupPtr c3 = build_group(GroupSpec::cyclic(3));
    corpus.push_back(build_action(build_group(GroupSpec::cyclic(2)), c3,
                                  {identity_perm(3), Perm{0, 2, 1}}));
    corpus.push_back(trivial_action(build_group(GroupSpec::cyclic(2)), c3));
    corpus.push_back(triangular_sl2_action(2).action);
    corpus.push_back(triangular_sl2_action(3).action);  // actor order 24
  }

  std::vector<GroupSpec> target_specs{
      GroupSpec::cyclic(3),          GroupSpec::cyclic(4),
      GroupSpec::cyclic(5),          GroupSpec::cyclic(6),
      GroupSpec::cyclic(8),          GroupSpec::cyclic(12),
      GroupSpec::cyclic(16),         GroupSpec::elementary(2, 2),
      GroupSpec::elementary(2, 3),   GroupSpec::elementary(2, 4),
      GroupSpec::elementary(3, 2),   GroupSpec::symmetric(3),
      GroupSpec::dihedral(4),        GroupSpec::dihedral(5),
      GroupSpec::dihedral(6),        GroupSpec::dihedral(8),
      GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}),
      GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(6)}),
      GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(4)}),
  };

  for (const auto& spec : target_specs) {
    GroupPtr target = build_group(spec);
    std::vector<Perm> auts = enumerate_automorphisms(target);
    // Trivial action from a small actor.
    corpus.push_back(trivial_action(build_group(GroupSpec::cyclic(2)), target));
    // Cyclic actions generated by single automorphisms.
    for (size_t i = 0; i < auts.size() && corpus.size() < minimum + 60; ++i) {
      const Perm& a = auts[rng() % auts.size()];
      int m = perm_order(a);
      if (m > 24) continue;
      std::vector<Perm> hom(m);
      hom[0] = identity_perm(target->order());
      for (int e = 1; e < m; ++e) hom[e] = compose_perms(hom[e - 1], a);
      corpus.push_back(
          FiniteAction{build_group(GroupSpec::cyclic(m)), target, std::move(hom)});
      if (i > 6) break;
    }
    // Two-generator automorphism subgroups acting tautologically.
    for (int tries = 0; tries < 4; ++tries) {
      const Perm& a = auts[rng() % auts.size()];
      const Perm& b = auts[rng() % auts.size()];
      try {
        FiniteAction act = action_from_automorphisms(target, {a, b});
        if (act.actor->order() <= 24) corpus.push_back(std::move(act));
      } catch (const limit_error&) {
      }
    }
  }

  if (corpus.size() < minimum) throw std::logic_error("corpus smaller than required");
  return corpus;
}

// --- random expressions ---------------------------------------------------

inline GroupExprPtr random_group_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> node_pick(0, 9);
  int node = depth <= 0 ? 10 : node_pick(rng);
  if (node >= 7) {
    switch (rng() % 7) {
      case 0:
        return ge_finite(GroupSpec::cyclic(1 + (int)(rng() % 12)));
      case 1:
        return ge_finite(GroupSpec::dihedral(2 + (int)(rng() % 5)));
      case 2:
        return ge_finite(GroupSpec::symmetric(1 + (int)(rng() % 4)));
      case 3:
        return ge_finite(GroupSpec::elementary(rng() % 2 ? 2 : 3, (int)(rng() % 3)));
      case 4:
        return ge_finite(GroupSpec::sl2(rng() % 2 ? 2 : 3));
      case 5:
        return ge_z();
      default:
        return ge_free_group(1 + (int)(rng() % 3));
    }
  }
  if (node <= 2) {
    std::vector<GroupExprPtr> children;
    for (int i = 0, arity = 2 + (int)(rng() % 2); i < arity; ++i)
      children.push_back(random_group_expr(rng, depth - 1));
    return ge_free_product(std::move(children));
  }
  if (node <= 5) {
    std::vector<GroupExprPtr> children;
    for (int i = 0, arity = 2 + (int)(rng() % 2); i < arity; ++i)
      children.push_back(random_group_expr(rng, depth - 1));
    return ge_direct_product(std::move(children));
  }
  return ge_hnn(random_group_expr(rng, depth - 1), 1 + (int)(rng() % 2), rng() % 2 == 0);
}

struct TheoremInstance {
  GroupExprPtr expr;
  std::set<int> bad_primes;
  std::vector<int> primes_to_check;
};

// A random expression matching the mixed-prime construction: one free
// product of p-groups (a p-bad block) for each chosen prime, at most one
// finite q-group for other primes q, combined by arbitrary free and direct
// products.
inline TheoremInstance build_theorem_instance(std::mt19937& rng) {
  TheoremInstance inst;
  const std::vector<int> pool{2, 3, 5, 7};
  std::vector<GroupExprPtr> blocks;

  for (int p : pool)
    if (rng() % 2) inst.bad_primes.insert(p);
  if (inst.bad_primes.empty()) inst.bad_primes.insert(pool[rng() % pool.size()]);

  for (int p : inst.bad_primes) {
    GroupExprPtr block;
    if (p == 2) {
      switch (rng() % 3) {
        case 0:
          block = parse_group_expr("free(C(2),C(2),C(2))");
          break;
        case 1:
          block = parse_group_expr("free(C(4),C(2))");
          break;
        default:
          block = parse_group_expr("free(C(4),C(4))");
          break;
      }
    } else {
      std::string cp = "C(" + std::to_string(p) + ")";
      std::string cpp = "C(" + std::to_string(p * p) + ")";
      switch (rng() % 3) {
        case 0:
          block = parse_group_expr("free(" + cp + "," + cp + ")");
          break;
        case 1:
          block = parse_group_expr("free(" + cpp + "," + cp + ")");
          break;
        default:
          block = parse_group_expr("free(" + cp + "," + cp + "," + cp + ")");
          break;
      }
    }
    blocks.push_back(block);
  }

  std::vector<int> spare;
  for (int q : {2, 3, 5, 7, 11})
    if (!inst.bad_primes.count(q)) spare.push_back(q);
  for (int q : spare) {
    if (rng() % 2) continue;  // at most one finite q-group per other prime
    switch (rng() % 3) {
      case 0:
        blocks.push_back(ge_finite(GroupSpec::cyclic(q)));
        break;
      case 1:
        blocks.push_back(ge_finite(GroupSpec::cyclic(q * q)));
        break;
      default:
        blocks.push_back(ge_finite(GroupSpec::elementary(q, 2)));
        break;
    }
  }
  if (rng() % 4 == 0) blocks.push_back(ge_finite(GroupSpec::cyclic(1)));

  // Fold the blocks into a random tree of free and direct products.
  std::shuffle(blocks.begin(), blocks.end(), rng);
  while (blocks.size() > 1) {
    size_t take = 2 + rng() % std::min<size_t>(2, blocks.size() - 1);
    take = std::min(take, blocks.size());
    std::vector<GroupExprPtr> children(blocks.end() - take, blocks.end());
    blocks.resize(blocks.size() - take);
    blocks.push_back(rng() % 2 ? ge_free_product(std::move(children))
                               : ge_direct_product(std::move(children)));
  }
  inst.expr = blocks[0];

  for (int q : {2, 3, 5, 7, 11, 13}) inst.primes_to_check.push_back(q);
  return inst;
}

}  // namespace testsupport

#include "nilgood/finite_action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nilgood/rational.hpp"

namespace nilgood {

Perm compose_perms(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
  return q;
}

namespace {

bool is_permutation(const Perm& p, int n) {
  if ((int)p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_automorphism(const GroupPtr& T, const Perm& p) {
  const int n = T->order();
  if (!is_permutation(p, n)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p[T->mul(x, y)] != T->mul(p[x], p[y])) return false;
  return true;
}

}  // namespace

FiniteAction build_action(GroupPtr actor, GroupPtr target, std::vector<Perm> hom) {
  if ((int)hom.size() != actor->order())
    throw std::invalid_argument("build_action: one image per actor element required");
  for (const Perm& p : hom)
    if (!is_automorphism(target, p))
      throw std::invalid_argument("build_action: image is not an automorphism of the target");
  if (hom[actor->identity()] != identity_perm(target->order()))
    throw std::invalid_argument("build_action: identity must act as the identity");
  for (int g = 0; g < actor->order(); ++g)
    for (int h = 0; h < actor->order(); ++h)
      if (hom[actor->mul(g, h)] != compose_perms(hom[g], hom[h]))
        throw std::invalid_argument("build_action: images do not form a homomorphism");
  return FiniteAction{std::move(actor), std::move(target), std::move(hom)};
}

FiniteAction trivial_action(GroupPtr actor, GroupPtr target) {
  std::vector<Perm> hom(actor->order(), identity_perm(target->order()));
  return FiniteAction{std::move(actor), std::move(target), std::move(hom)};
}

FiniteAction action_from_generator_images(GroupPtr actor, GroupPtr target,
                                          const std::vector<int>& generators,
                                          const std::vector<Perm>& images) {
  if (generators.size() != images.size())
    throw std::invalid_argument("generator/image count mismatch");
  const int n = actor->order();
  for (int g : generators)
    if (g < 0 || g >= n) throw std::invalid_argument("generator index out of range");

  std::vector<Perm> hom(n);
  std::vector<char> known(n, 0);
  hom[actor->identity()] = identity_perm(target->order());
  known[actor->identity()] = 1;
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!is_permutation(images[i], target->order()))
      throw std::invalid_argument("generator image is not a permutation of the target");
    int g = generators[i];
    if (known[g] && hom[g] != images[i])
      throw std::invalid_argument("conflicting images for one generator");
    hom[g] = images[i];
    known[g] = 1;
  }
  // Multiplicative extension over the closure.
  std::vector<int> frontier;
  for (int x = 0; x < n; ++x)
    if (known[x]) frontier.push_back(x);
  for (size_t i = 0; i < frontier.size(); ++i) {
    for (size_t j = 0; j < frontier.size(); ++j) {
      int prod = actor->mul(frontier[i], frontier[j]);
      Perm img = compose_perms(hom[frontier[i]], hom[frontier[j]]);
      if (known[prod]) {
        if (hom[prod] != img)
          throw std::invalid_argument("generator images do not extend to a homomorphism");
      } else {
        hom[prod] = std::move(img);
        known[prod] = 1;
        frontier.push_back(prod);
      }
    }
  }
  if ((int)frontier.size() != n)
    throw std::invalid_argument("generators do not generate the actor");
  return build_action(std::move(actor), std::move(target), std::move(hom));
}

FiniteAction action_from_automorphisms(GroupPtr target, const std::vector<Perm>& generators,
                                       std::vector<int>* generator_indices) {
  const int n = target->order();
  for (const Perm& p : generators)
    if (!is_automorphism(target, p))
      throw std::invalid_argument("generator is not an automorphism of the target");

  std::vector<Perm> elements{identity_perm(n)};
  std::map<Perm, int> index{{elements[0], 0}};
  for (const Perm& g : generators)
    if (!index.count(g)) {
      index[g] = (int)elements.size();
      elements.push_back(g);
    }
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j) {
      for (Perm prod :
           {compose_perms(elements[i], elements[j]), compose_perms(elements[j], elements[i])}) {
        if (!index.count(prod)) {
          if ((int)elements.size() >= FiniteGroup::kMaxOrder)
            throw limit_error("automorphism closure exceeds the group order cap");
          index[prod] = (int)elements.size();
          elements.push_back(std::move(prod));
        }
      }
    }

  const int m = (int)elements.size();
  std::vector<int> table((size_t)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[(size_t)i * m + j] = index.at(compose_perms(elements[i], elements[j]));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = "a" + std::to_string(i);
  GroupPtr actor = FiniteGroup::create(std::move(table), std::move(names));

  if (generator_indices) {
    generator_indices->clear();
    for (const Perm& g : generators) generator_indices->push_back(index.at(g));
  }
  return build_action(std::move(actor), std::move(target), std::move(elements));
}

namespace {

Perm matrix_perm(const GroupPtr& target, int p, int k,
                 const std::vector<std::vector<int>>& matrix) {
  if ((int)matrix.size() != k)
    throw std::invalid_argument("matrix rank does not match the target");
  for (const auto& row : matrix)
    if ((int)row.size() != k) throw std::invalid_argument("matrix is not square");
  Perm perm(target->order());
  for (int idx = 0; idx < target->order(); ++idx) {
    auto v = elementary_coords(p, k, idx);
    std::vector<int> w(k, 0);
    for (int r = 0; r < k; ++r) {
      long long s = 0;
      for (int c = 0; c < k; ++c) s += (long long)matrix[r][c] * v[c];
      w[r] = (int)((s % p + p) % p);
    }
    perm[idx] = elementary_index(p, k, w);
  }
  return perm;
}

}  // namespace

FiniteAction matrix_action_cyclic(const GroupPtr& elementary_target, int p, int k,
                                  const std::vector<std::vector<int>>& matrix) {
  Perm g = matrix_perm(elementary_target, p, k, matrix);
  if (!is_permutation(g, elementary_target->order()))
    throw std::invalid_argument("matrix is not invertible mod p");
  std::vector<Perm> powers{identity_perm(elementary_target->order())};
  Perm cur = g;
  while (cur != powers[0]) {
    powers.push_back(cur);
    cur = compose_perms(cur, g);
    if ((int)powers.size() > elementary_target->order())
      throw std::logic_error("matrix order exceeds the target order");
  }
  const int m = (int)powers.size();
  GroupPtr actor = build_group(GroupSpec::cyclic(m));
  return FiniteAction{std::move(actor), elementary_target, std::move(powers)};
}

TriangularSl2Action triangular_sl2_action(int p) {
  if (!is_prime(p) || p > 7)
    throw std::invalid_argument("triangular_sl2_action: p must be a prime <= 7");
  GroupPtr target = build_group(GroupSpec::elementary(p, 2));
  Perm upper = matrix_perm(target, p, 2, {{1, 1}, {0, 1}});
  Perm lower = matrix_perm(target, p, 2, {{1, 0}, {1, 1}});
  std::vector<int> where;
  FiniteAction act = action_from_automorphisms(target, {upper, lower}, &where);

  // Rename actor elements by the matrix each permutation came from,
  // reading the columns off the images of the basis vectors.
  const int e1 = elementary_index(p, 2, {1, 0});
  const int e2 = elementary_index(p, 2, {0, 1});
  const int m = act.actor->order();
  std::vector<std::string> names(m);
  std::vector<int> table((size_t)m * m);
  for (int i = 0; i < m; ++i) {
    auto c1 = elementary_coords(p, 2, act.hom[i][e1]);
    auto c2 = elementary_coords(p, 2, act.hom[i][e2]);
    names[i] = "[[" + std::to_string(c1[0]) + "," + std::to_string(c2[0]) + "],[" +
               std::to_string(c1[1]) + "," + std::to_string(c2[1]) + "]]";
    for (int j = 0; j < m; ++j) table[(size_t)i * m + j] = act.actor->mul(i, j);
  }
  GroupPtr renamed = FiniteGroup::create(std::move(table), std::move(names));
  FiniteAction renamed_action =
      build_action(std::move(renamed), std::move(target), std::move(act.hom));
  return TriangularSl2Action{std::move(renamed_action), where[0], where[1]};
}

SeriesChain action_series(const FiniteAction& a) {
  const GroupPtr& T = a.target;
  std::set<Perm> image_set(a.hom.begin(), a.hom.end());
  image_set.erase(identity_perm(T->order()));
  std::vector<Perm> images(image_set.begin(), image_set.end());

  SeriesChain chain;
  chain.terms.push_back(whole_subgroup(T));
  while (true) {
    const Subgroup& prev = chain.terms.back();
    std::vector<int> gens;
    if (!T->abelian())
      for (int x : prev.elements)
        for (int y : prev.elements) gens.push_back(T->commutator(x, y));
    for (int h : prev.elements)
      for (const Perm& img : images) gens.push_back(T->mul(T->inverse(h), img[h]));
    Subgroup next = subgroup_generated(T, gens);
    bool stop = next == prev;
    chain.terms.push_back(std::move(next));
    if (stop) {
      chain.stabilized = true;
      break;
    }
  }
  return chain;
}

NilpotencyDecision is_nilpotent_action(const FiniteAction& a) {
  SeriesChain chain = action_series(a);
  NilpotencyDecision d;
  d.nilpotent = chain.terms.back().is_trivial();
  if (d.nilpotent)
    d.witness = std::move(chain);
  else
    d.obstruction = chain.terms.back();
  return d;
}

namespace {

constexpr int kBruteForceCap = 24;

struct SubgroupTable {
  std::vector<uint32_t> masks;
  std::vector<std::vector<int>> members;
};

SubgroupTable all_subgroups(const GroupPtr& T) {
  const int n = T->order();
  SubgroupTable out;
  std::set<uint32_t> seen;
  auto add = [&](const std::vector<int>& elems) {
    uint32_t mask = 0;
    for (int x : elems) mask |= 1u << x;
    if (seen.insert(mask).second) {
      out.masks.push_back(mask);
      out.members.push_back(elems);
      return true;
    }
    return false;
  };
  add(trivial_subgroup(T).elements);
  for (size_t i = 0; i < out.masks.size(); ++i) {
    uint32_t mask = out.masks[i];
    std::vector<int> base = out.members[i];
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      auto gens = base;
      gens.push_back(x);
      add(subgroup_generated(T, gens).elements);
    }
  }
  return out;
}

}  // namespace

bool brute_force_nilpotency(const FiniteAction& a) {
  const GroupPtr& T = a.target;
  const int n = T->order();
  if (n > kBruteForceCap)
    throw limit_error("brute_force_nilpotency: target order exceeds " +
                      std::to_string(kBruteForceCap));

  std::set<Perm> image_set(a.hom.begin(), a.hom.end());
  std::vector<Perm> images(image_set.begin(), image_set.end());

  SubgroupTable subs = all_subgroups(T);
  const int count = (int)subs.masks.size();

  std::vector<char> actor_closed(count, 0);
  for (int i = 0; i < count; ++i) {
    bool ok = true;
    for (const Perm& img : images) {
      for (int x : subs.members[i])
        if (!(subs.masks[i] & (1u << img[x]))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    actor_closed[i] = ok;
  }

  // admissible step S -> S': proper, actor-closed, normal in S, abelian
  // quotient, trivial induced action on the quotient.
  auto admissible = [&](int s, int t) {
    uint32_t ms = subs.masks[s], mt = subs.masks[t];
    if ((mt & ~ms) != 0 || mt == ms) return false;
    if (!actor_closed[t]) return false;
    for (int x : subs.members[t])
      for (int g : subs.members[s])
        if (!(mt & (1u << T->conjugate(g, x)))) return false;
    for (int x : subs.members[s])
      for (int y : subs.members[s])
        if (!(mt & (1u << T->commutator(x, y)))) return false;
    for (int h : subs.members[s])
      for (const Perm& img : images)
        if (!(mt & (1u << T->mul(T->inverse(h), img[h])))) return false;
    return true;
  };

  std::vector<int> memo(count, -1);  // -1 unknown, 0 no, 1 yes
  auto reaches_trivial = [&](auto&& self, int s) -> bool {
    if (subs.members[s].size() == 1) return true;
    if (memo[s] != -1) return memo[s] == 1;
    memo[s] = 0;
    for (int t = 0; t < count; ++t) {
      if (admissible(s, t) && self(self, t)) {
        memo[s] = 1;
        break;
      }
    }
    return memo[s] == 1;
  };

  int whole = -1;
  uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
  for (int i = 0; i < count; ++i)
    if (subs.masks[i] == full) whole = i;
  if (whole < 0) throw std::logic_error("subgroup enumeration lost the whole group");
  return reaches_trivial(reaches_trivial, whole);
}

}  // namespace nilgood

#include "nilgood/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nilgood/rational.hpp"

namespace nilgood {

namespace {

// Closure of a seed set under table multiplication only. Used both for
// subgroup generation and for finding a generating set before
// associativity has been established.
std::vector<int> closure(const std::vector<int>& table, int n, int identity,
                         const std::vector<int>& seeds) {
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(identity);
  for (int s : seeds) {
    if (s < 0 || s >= n) throw std::invalid_argument("element index out of range");
    add(s);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < members.size(); ++j) {
      add(table[(size_t)members[i] * n + members[j]]);
      add(table[(size_t)members[j] * n + members[i]]);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

GroupPtr FiniteGroup::create(std::vector<int> table, std::vector<std::string> names) {
  const size_t sz = table.size();
  int n = 0;
  while ((size_t)n * n < sz) ++n;
  if ((size_t)n * n != sz || n == 0)
    throw std::invalid_argument("Cayley table is not a nonempty square");
  if (n > kMaxOrder)
    throw limit_error("group order " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxOrder));
  if (names.size() != (size_t)n)
    throw std::invalid_argument("name list does not match group order");

  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");

  // Latin square: each row and each column is a permutation.
  {
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 0; c < n; ++c) {
        int v = table[(size_t)r * n + c];
        if (seen[v]) throw std::invalid_argument("Cayley table row is not a permutation");
        seen[v] = 1;
      }
    }
    for (int c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < n; ++r) {
        int v = table[(size_t)r * n + c];
        if (seen[v])
          throw std::invalid_argument("Cayley table column is not a permutation");
        seen[v] = 1;
      }
    }
  }

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[(size_t)e * n + x] == x && table[(size_t)x * n + e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("Cayley table has no two-sided identity");

  // Two-sided inverses.
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[(size_t)a * n + b] == identity && table[(size_t)b * n + a] == identity) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) throw std::invalid_argument("element has no two-sided inverse");
  }

  // Associativity: exhaustive for small orders, Light's test on a
  // generating set beyond that.
  auto assoc_fails = [&](int a, int x, int y) {
    return table[(size_t)table[(size_t)x * n + a] * n + y] !=
           table[(size_t)x * n + table[(size_t)a * n + y]];
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (assoc_fails(a, x, y))
            throw std::invalid_argument("Cayley table is not associative");
  } else {
    std::vector<int> gens;
    std::vector<int> reach = closure(table, n, identity, gens);
    for (int x = 0; x < n && (int)reach.size() < n; ++x) {
      if (!std::binary_search(reach.begin(), reach.end(), x)) {
        gens.push_back(x);
        reach = closure(table, n, identity, gens);
      }
    }
    for (int a : gens)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (assoc_fails(a, x, y))
            throw std::invalid_argument("Cayley table is not associative");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->identity_ = identity;
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->names_ = std::move(names);

  g->element_order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, m = 1;
    while (x != identity) {
      x = g->mul(x, a);
      ++m;
    }
    g->element_order_[a] = m;
  }

  g->abelian_ = true;
  for (int a = 0; a < n && g->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  return g;
}

int FiniteGroup::power(int a, long long k) const {
  int m = element_order_[a];
  long long r = k % m;
  if (r < 0) r += m;
  int acc = identity_;
  int base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup whole_subgroup(const GroupPtr& G) {
  Subgroup s{G, std::vector<int>(G->order())};
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup trivial_subgroup(const GroupPtr& G) {
  return Subgroup{G, {G->identity()}};
}

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<int>& gens) {
  const int n = G->order();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(G->identity());
  for (int s : gens) {
    if (s < 0 || s >= n) throw std::invalid_argument("generator index out of range");
    add(s);
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(G->mul(members[i], members[j]));
      add(G->mul(members[j], members[i]));
    }
  std::sort(members.begin(), members.end());
  return Subgroup{G, std::move(members)};
}

bool is_normal(const Subgroup& S) {
  const auto& G = S.parent;
  for (int g = 0; g < G->order(); ++g)
    for (int h : S.elements)
      if (!S.contains(G->conjugate(g, h))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& S) {
  const auto& G = S.parent;
  std::vector<int> members;
  for (int g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (int h : S.elements)
      if (!S.contains(G->conjugate(g, h))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return Subgroup{G, std::move(members)};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

namespace {

// Exhaustive fallback for Sylow search: depth-first extension of a
// p-subgroup by p-elements until the target order is reached.
bool extend_p_subgroup(const GroupPtr& G, Subgroup current, int p, int target,
                       Subgroup& out) {
  if (current.order() == target) {
    out = std::move(current);
    return true;
  }
  for (int x = 0; x < G->order(); ++x) {
    if (current.contains(x)) continue;
    if (p_part(G->element_order(x), p) != G->element_order(x)) continue;
    auto gens = current.elements;
    gens.push_back(x);
    Subgroup bigger = subgroup_generated(G, gens);
    if (p_part(bigger.order(), p) != bigger.order()) continue;
    if (bigger.order() > target) continue;
    if (extend_p_subgroup(G, std::move(bigger), p, target, out)) return true;
  }
  return false;
}

}  // namespace

Subgroup sylow_subgroup(const GroupPtr& G, int p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  const int target = p_part(G->order(), p);
  Subgroup P = trivial_subgroup(G);
  while (P.order() < target) {
    Subgroup N = normalizer(P);
    int extender = -1;
    for (int y : N.elements) {
      if (P.contains(y)) continue;
      // Order of the coset yP inside <P,y>/P.
      int m = 1, x = y;
      while (!P.contains(x)) {
        x = G->mul(x, y);
        ++m;
      }
      if (m % p == 0) {
        extender = G->power(y, m / p);
        break;
      }
    }
    if (extender < 0) break;  // greedy stalled; fall back below
    auto gens = P.elements;
    gens.push_back(extender);
    Subgroup bigger = subgroup_generated(G, gens);
    if (bigger.order() != p * P.order()) break;
    P = std::move(bigger);
  }
  if (P.order() == target) return P;
  Subgroup out = trivial_subgroup(G);
  if (!extend_p_subgroup(G, trivial_subgroup(G), p, target, out))
    throw std::logic_error("sylow_subgroup: exhaustive search failed");
  return out;
}

std::pair<Subgroup, GroupPtr> o_p_residual(const GroupPtr& G, int p) {
  if (!is_prime(p)) throw std::invalid_argument("o_p_residual: p must be prime");
  // Conjugation-invariant seed set generates a normal subgroup.
  std::vector<int> seeds;
  for (int x = 0; x < G->order(); ++x)
    if (G->element_order(x) % p != 0)
      for (int g = 0; g < G->order(); ++g) seeds.push_back(G->conjugate(g, x));
  Subgroup N = subgroup_generated(G, seeds);
  GroupPtr Q = quotient_group(G, N);
  return {std::move(N), std::move(Q)};
}

GroupPtr quotient_group(const GroupPtr& G, const Subgroup& N) {
  if (N.parent != G) throw std::invalid_argument("quotient_group: subgroup of a different group");
  if (!is_normal(N)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  const int n = G->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back(x);
    for (int h : N.elements) coset_of[G->mul(x, h)] = id;
  }
  const int q = (int)reps.size();
  std::vector<int> table((size_t)q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[(size_t)i * q + j] = coset_of[G->mul(reps[i], reps[j])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "[" + G->name(reps[i]) + "]";
  return FiniteGroup::create(std::move(table), std::move(names));
}

SeriesChain lower_p_central_series(const GroupPtr& G, int p) {
  if (!is_prime(p))
    throw std::invalid_argument("lower_p_central_series: p must be prime");
  SeriesChain chain;
  chain.terms.push_back(whole_subgroup(G));
  while (true) {
    const Subgroup& prev = chain.terms.back();
    std::vector<int> gens;
    for (int g = 0; g < G->order(); ++g)
      for (int y : prev.elements) gens.push_back(G->commutator(g, y));
    for (int y : prev.elements) gens.push_back(G->power(y, p));
    Subgroup next = subgroup_generated(G, gens);
    bool stop = next == prev;
    chain.terms.push_back(std::move(next));
    if (stop) {
      chain.stabilized = true;
      break;
    }
  }
  return chain;
}

bool is_generated_by_order_m(const GroupPtr& G, int m) {
  if (m < 1) throw std::invalid_argument("is_generated_by_order_m: m must be positive");
  std::vector<int> gens;
  for (int x = 0; x < G->order(); ++x)
    if (G->element_order(x) == m) gens.push_back(x);
  return subgroup_generated(G, gens).is_whole();
}

GroupPtr as_group(const Subgroup& S) {
  const auto& G = S.parent;
  const int n = S.order();
  std::vector<int> index_of(G->order(), -1);
  for (int i = 0; i < n; ++i) index_of[S.elements[i]] = i;
  std::vector<int> table((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = G->mul(S.elements[i], S.elements[j]);
      if (index_of[prod] < 0)
        throw std::invalid_argument("as_group: element set is not closed");
      table[(size_t)i * n + j] = index_of[prod];
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = G->name(S.elements[i]);
  return FiniteGroup::create(std::move(table), std::move(names));
}

}  // namespace nilgood

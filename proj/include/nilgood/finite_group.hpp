#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nilgood {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its full Cayley table. Immutable after
// construction; safe to share between threads. Validation happens in the
// factory: Latin-square rows and columns, a two-sided identity, two-sided
// inverses, and associativity (exhaustive up to order 256, Light's test on
// a generating set above that).
class FiniteGroup {
public:
  // |S_6| = 720 is the largest constructor-reachable group.
  static constexpr int kMaxOrder = 720;

  static GroupPtr create(std::vector<int> table, std::vector<std::string> names);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[(size_t)a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  bool abelian() const { return abelian_; }

  int power(int a, long long k) const;
  // g h g^-1
  int conjugate(int g, int h) const { return mul(mul(g, h), inverse(g)); }
  // a b a^-1 b^-1
  int commutator(int a, int b) const {
    return mul(mul(a, b), mul(inverse(a), inverse(b)));
  }

private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  bool abelian_ = false;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::string> names_;
};

// A subgroup of a fixed parent group, stored as a sorted list of element
// indices. Contains the identity and is closed under multiplication and
// inversion by construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;

  int order() const { return (int)elements.size(); }
  bool contains(int x) const;
  bool is_trivial() const { return elements.size() == 1; }
  bool is_whole() const { return (int)elements.size() == parent->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elements == b.elements;
  }
};

// A descending chain of subgroups computed until two consecutive terms
// coincide; the repeated term is kept so that `stabilized` is witnessed by
// the last two entries.
struct SeriesChain {
  std::vector<Subgroup> terms;
  bool stabilized = false;
};

// Constructor descriptor for the group atoms of the expression DSL.
struct GroupSpec {
  enum class Kind {
    Cyclic,             // C(n), n >= 1
    Dihedral,           // D(n), order 2n, n >= 2
    Symmetric,          // S(n), n <= 6
    ElementaryAbelian,  // E(p,k), order p^k
    SL2,                // SL2(p), p prime <= 7
    DirectProduct,      // direct product of factor specs
    Explicit,           // raw Cayley table
  };

  Kind kind = Kind::Cyclic;
  int a = 0;
  int b = 0;
  std::vector<GroupSpec> factors;
  std::vector<int> table;

  static GroupSpec cyclic(int n) { return {Kind::Cyclic, n, 0, {}, {}}; }
  static GroupSpec dihedral(int n) { return {Kind::Dihedral, n, 0, {}, {}}; }
  static GroupSpec symmetric(int n) { return {Kind::Symmetric, n, 0, {}, {}}; }
  static GroupSpec elementary(int p, int k) {
    return {Kind::ElementaryAbelian, p, k, {}, {}};
  }
  static GroupSpec sl2(int p) { return {Kind::SL2, p, 0, {}, {}}; }
  static GroupSpec product(std::vector<GroupSpec> fs) {
    return {Kind::DirectProduct, 0, 0, std::move(fs), {}};
  }
  static GroupSpec explicit_table(std::vector<int> t) {
    return {Kind::Explicit, 0, 0, {}, std::move(t)};
  }

  // DSL text, e.g. "C(6)", "E(2,3)". Explicit tables print a non-DSL tag.
  std::string text() const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b &&
           x.factors == y.factors && x.table == y.table;
  }
};

GroupPtr build_group(const GroupSpec& spec);

// Elementary abelian groups index elements as base-p digit strings,
// most significant coordinate first: (a_0,...,a_{k-1}) <-> sum a_i p^{k-1-i}.
int elementary_index(int p, int k, const std::vector<int>& coords);
std::vector<int> elementary_coords(int p, int k, int index);

Subgroup whole_subgroup(const GroupPtr& G);
Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup subgroup_generated(const GroupPtr& G, const std::vector<int>& gens);
bool is_normal(const Subgroup& S);
Subgroup normalizer(const Subgroup& S);

// A subgroup of maximal p-power order. Found by extending a p-subgroup
// through its normalizer, with an exhaustive fallback. Any Sylow subgroup
// is acceptable; the conjugacy class is not distinguished.
Subgroup sylow_subgroup(const GroupPtr& G, int p);

// (N, G/N) where N is the normal closure of all elements of order coprime
// to p. The quotient is the largest p-group quotient of G.
std::pair<Subgroup, GroupPtr> o_p_residual(const GroupPtr& G, int p);

GroupPtr quotient_group(const GroupPtr& G, const Subgroup& N);

// g_1 = G, g_{i+1} = <[G, g_i] and p-th powers of g_i>.
SeriesChain lower_p_central_series(const GroupPtr& G, int p);

bool is_generated_by_order_m(const GroupPtr& G, int m);

// The subgroup as a standalone group, elements reindexed to 0..|S|-1 with
// names inherited from the parent.
GroupPtr as_group(const Subgroup& S);

bool is_prime(int p);
// Largest power of p dividing n.
int p_part(int n, int p);

}  // namespace nilgood

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilgood/finite_group.hpp"
#include "nilgood/rational.hpp"

namespace nilgood {

namespace {

GroupPtr build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("C(n): n must be >= 1");
  if (n > FiniteGroup::kMaxOrder) throw limit_error("C(n): order exceeds cap");
  std::vector<int> table((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[(size_t)i * n + j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return FiniteGroup::create(std::move(table), std::move(names));
}

// Elements are words s^a r^k with s^2 = r^n = 1 and r s = s r^-1;
// index a*n + k. Multiplication: s^a r^k . s^b r^l = s^(a+b) r^(k(-1)^b + l).
GroupPtr build_dihedral(int n) {
  if (n < 2) throw std::invalid_argument("D(n): n must be >= 2");
  const int order = 2 * n;
  if (order > FiniteGroup::kMaxOrder) throw limit_error("D(n): order exceeds cap");
  auto idx = [&](int a, int k) { return a * n + ((k % n + n) % n); };
  std::vector<int> table((size_t)order * order);
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < n; ++k)
      for (int b = 0; b < 2; ++b)
        for (int l = 0; l < n; ++l) {
          int kk = b ? -k : k;
          table[(size_t)idx(a, k) * order + idx(b, l)] = idx((a + b) % 2, kk + l);
        }
  std::vector<std::string> names(order);
  for (int k = 0; k < n; ++k) {
    names[idx(0, k)] = k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k));
    names[idx(1, k)] = k == 0 ? "s" : (k == 1 ? "s*r" : "s*r^" + std::to_string(k));
  }
  return FiniteGroup::create(std::move(table), std::move(names));
}

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = (int)perm.size();
  std::vector<char> done(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (done[i] || perm[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    done[i] = 1;
    for (int j = perm[i]; j != i; j = perm[j]) {
      done[j] = 1;
      cyc += " " + std::to_string(j + 1);
    }
    out += cyc + ")";
  }
  return out.empty() ? "id" : out;
}

GroupPtr build_symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("S(n): n must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = (int)perms.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  std::vector<int> table((size_t)order * order);
  std::vector<int> comp(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      table[(size_t)i * order + j] = index.at(comp);
    }
  std::vector<std::string> names(order);
  for (int i = 0; i < order; ++i) names[i] = cycle_notation(perms[i]);
  return FiniteGroup::create(std::move(table), std::move(names));
}

GroupPtr build_elementary(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("E(p,k): p must be prime");
  if (k < 0) throw std::invalid_argument("E(p,k): k must be >= 0");
  long long ord = 1;
  for (int i = 0; i < k; ++i) {
    ord *= p;
    if (ord > FiniteGroup::kMaxOrder) throw limit_error("E(p,k): order exceeds cap");
  }
  const int n = (int)ord;
  std::vector<int> table((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = i, y = j, sum = 0, place = 1;
      for (int c = 0; c < k; ++c) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      table[(size_t)i * n + j] = sum;
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    auto coords = elementary_coords(p, k, i);
    std::string s = "(";
    for (int c = 0; c < k; ++c) s += (c ? "," : "") + std::to_string(coords[c]);
    names[i] = s + ")";
  }
  return FiniteGroup::create(std::move(table), std::move(names));
}

GroupPtr build_sl2(int p) {
  if (!is_prime(p) || p > 7) throw std::invalid_argument("SL2(p): p must be a prime <= 7");
  struct M {
    int a, b, c, d;
    bool operator<(const M& o) const {
      return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
  };
  std::vector<M> mats;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) mats.push_back({a, b, c, d});
  // Identity first.
  for (size_t i = 0; i < mats.size(); ++i)
    if (mats[i].a == 1 && mats[i].b == 0 && mats[i].c == 0 && mats[i].d == 1) {
      std::swap(mats[0], mats[i]);
      break;
    }
  const int n = (int)mats.size();
  std::map<std::tuple<int, int, int, int>, int> index;
  for (int i = 0; i < n; ++i)
    index[{mats[i].a, mats[i].b, mats[i].c, mats[i].d}] = i;
  std::vector<int> table((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const M &x = mats[i], &y = mats[j];
      int a = (x.a * y.a + x.b * y.c) % p;
      int b = (x.a * y.b + x.b * y.d) % p;
      int c = (x.c * y.a + x.d * y.c) % p;
      int d = (x.c * y.b + x.d * y.d) % p;
      table[(size_t)i * n + j] = index.at({a, b, c, d});
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    const M& m = mats[i];
    names[i] = "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
               std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
  }
  return FiniteGroup::create(std::move(table), std::move(names));
}

GroupPtr build_pair_product(const GroupPtr& A, const GroupPtr& B) {
  const int na = A->order(), nb = B->order();
  long long ord = (long long)na * nb;
  if (ord > FiniteGroup::kMaxOrder) throw limit_error("direct product order exceeds cap");
  const int n = (int)ord;
  std::vector<int> table((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = A->mul(i / nb, j / nb);
      int b = B->mul(i % nb, j % nb);
      table[(size_t)i * n + j] = a * nb + b;
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = "(" + A->name(i / nb) + "," + B->name(i % nb) + ")";
  return FiniteGroup::create(std::move(table), std::move(names));
}

GroupPtr build_explicit(const std::vector<int>& table) {
  const size_t sz = table.size();
  int n = 0;
  while ((size_t)n * n < sz) ++n;
  if ((size_t)n * n != sz || n == 0)
    throw std::invalid_argument("explicit table is not a nonempty square");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  return FiniteGroup::create(table, std::move(names));
}

}  // namespace

int elementary_index(int p, int k, const std::vector<int>& coords) {
  if ((int)coords.size() != k) throw std::invalid_argument("coordinate count mismatch");
  int idx = 0;
  for (int c = 0; c < k; ++c) idx = idx * p + ((coords[c] % p + p) % p);
  return idx;
}

std::vector<int> elementary_coords(int p, int k, int index) {
  std::vector<int> coords(k);
  for (int c = k - 1; c >= 0; --c) {
    coords[c] = index % p;
    index /= p;
  }
  return coords;
}

std::string GroupSpec::text() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C(" + std::to_string(a) + ")";
    case Kind::Dihedral:
      return "D(" + std::to_string(a) + ")";
    case Kind::Symmetric:
      return "S(" + std::to_string(a) + ")";
    case Kind::ElementaryAbelian:
      return "E(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::SL2:
      return "SL2(" + std::to_string(a) + ")";
    case Kind::DirectProduct: {
      std::string s = "prod(";
      for (size_t i = 0; i < factors.size(); ++i)
        s += (i ? "," : "") + factors[i].text();
      return s + ")";
    }
    case Kind::Explicit: {
      size_t sz = table.size();
      int n = 0;
      while ((size_t)n * n < sz) ++n;
      return "<table:" + std::to_string(n) + ">";
    }
  }
  return "?";
}

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return build_cyclic(spec.a);
    case GroupSpec::Kind::Dihedral:
      return build_dihedral(spec.a);
    case GroupSpec::Kind::Symmetric:
      return build_symmetric(spec.a);
    case GroupSpec::Kind::ElementaryAbelian:
      return build_elementary(spec.a, spec.b);
    case GroupSpec::Kind::SL2:
      return build_sl2(spec.a);
    case GroupSpec::Kind::DirectProduct: {
      if (spec.factors.empty()) return build_cyclic(1);
      GroupPtr acc = build_group(spec.factors[0]);
      for (size_t i = 1; i < spec.factors.size(); ++i)
        acc = build_pair_product(acc, build_group(spec.factors[i]));
      return acc;
    }
    case GroupSpec::Kind::Explicit:
      return build_explicit(spec.table);
  }
  throw std::invalid_argument("unknown group constructor");
}

}  // namespace nilgood

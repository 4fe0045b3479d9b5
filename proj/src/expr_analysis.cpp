#include "nilgood/expr_analysis.hpp"

#include <stdexcept>

namespace nilgood {

namespace {

long long checked_mul(long long a, long long b) {
  __int128 p = (__int128)a * b;
  if (p > INT64_MAX) throw limit_error("group order exceeds the 64-bit range");
  return (long long)p;
}

}  // namespace

long long order_of_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return spec.a;
    case GroupSpec::Kind::Dihedral:
      return 2LL * spec.a;
    case GroupSpec::Kind::Symmetric: {
      long long f = 1;
      for (int i = 2; i <= spec.a; ++i) f *= i;
      return f;
    }
    case GroupSpec::Kind::ElementaryAbelian: {
      long long o = 1;
      for (int i = 0; i < spec.b; ++i) o = checked_mul(o, spec.a);
      return o;
    }
    case GroupSpec::Kind::SL2: {
      long long p = spec.a;
      return p * (p * p - 1);
    }
    case GroupSpec::Kind::DirectProduct: {
      long long o = 1;
      for (const auto& f : spec.factors) o = checked_mul(o, order_of_spec(f));
      return o;
    }
    case GroupSpec::Kind::Explicit: {
      size_t sz = spec.table.size();
      long long n = 0;
      while ((size_t)(n * n) < sz) ++n;
      return n;
    }
  }
  throw std::invalid_argument("unknown group constructor");
}

long long expr_order(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return order_of_spec(e->spec);
    case GroupExpr::Kind::Z:
    case GroupExpr::Kind::FreeGroup:
      return -1;
    case GroupExpr::Kind::FreeProduct: {
      long long order = 1;
      int nontrivial = 0;
      for (const auto& c : e->children) {
        long long co = expr_order(c);
        if (co < 0) return -1;
        if (co > 1) {
          ++nontrivial;
          order = checked_mul(order, co);
        }
      }
      return nontrivial <= 1 ? order : -1;
    }
    case GroupExpr::Kind::DirectProduct: {
      long long order = 1;
      for (const auto& c : e->children) {
        long long co = expr_order(c);
        if (co < 0) return -1;
        order = checked_mul(order, co);
      }
      return order;
    }
    case GroupExpr::Kind::HNN:
      return -1;  // a stable letter has infinite order
  }
  return -1;
}

bool is_finite_expr(const GroupExprPtr& e) { return expr_order(e) >= 0; }

namespace {

GroupSpec finite_spec_of(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return e->spec;
    case GroupExpr::Kind::DirectProduct: {
      std::vector<GroupSpec> fs;
      for (const auto& c : e->children) fs.push_back(finite_spec_of(c));
      return GroupSpec::product(std::move(fs));
    }
    case GroupExpr::Kind::FreeProduct: {
      // Finite only when at most one factor is nontrivial.
      GroupSpec result = GroupSpec::cyclic(1);
      for (const auto& c : e->children) {
        if (expr_order(c) != 1) result = finite_spec_of(c);
      }
      return result;
    }
    default:
      throw std::invalid_argument("expression does not describe a finite group");
  }
}

}  // namespace

GroupPtr realize_finite(const GroupExprPtr& e) {
  if (!is_finite_expr(e))
    throw std::invalid_argument("cannot realize an infinite group expression");
  return build_group(finite_spec_of(e));
}

bool has_p_torsion(const GroupExprPtr& e, int p) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return order_of_spec(e->spec) % p == 0;
    case GroupExpr::Kind::Z:
    case GroupExpr::Kind::FreeGroup:
      return false;
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      for (const auto& c : e->children)
        if (has_p_torsion(c, p)) return true;
      return false;
    }
    case GroupExpr::Kind::HNN:
      return has_p_torsion(e->base, p);
  }
  return false;
}

bool generated_by_finite_order(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return true;
    case GroupExpr::Kind::Z:
    case GroupExpr::Kind::FreeGroup:
      return false;
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      for (const auto& c : e->children)
        if (!generated_by_finite_order(c)) return false;
      return true;
    }
    case GroupExpr::Kind::HNN:
      return false;  // the stable letters survive in the free quotient
  }
  return false;
}

bool has_finite_sylow(const GroupExprPtr& e, int p) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return true;
    case GroupExpr::Kind::Z:
    case GroupExpr::Kind::FreeGroup:
      return true;  // torsion free: the trivial subgroup is Sylow
    case GroupExpr::Kind::FreeProduct: {
      int with_torsion = 0;
      for (const auto& c : e->children) {
        if (!has_finite_sylow(c, p)) return false;
        if (has_p_torsion(c, p)) ++with_torsion;
      }
      return with_torsion <= 1;
    }
    case GroupExpr::Kind::DirectProduct: {
      for (const auto& c : e->children)
        if (!has_finite_sylow(c, p)) return false;
      return true;
    }
    case GroupExpr::Kind::HNN:
      return has_finite_sylow(e->base, p);
  }
  return false;
}

std::optional<long long> free_rank_of(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      if (order_of_spec(e->spec) == 1) return 0;
      return std::nullopt;
    case GroupExpr::Kind::Z:
      return 1;
    case GroupExpr::Kind::FreeGroup:
      return e->free_rank;
    case GroupExpr::Kind::FreeProduct: {
      long long sum = 0;
      for (const auto& c : e->children) {
        auto r = free_rank_of(c);
        if (!r) return std::nullopt;
        sum += *r;
      }
      return sum;
    }
    case GroupExpr::Kind::DirectProduct: {
      long long value = 0;
      int nonzero = 0;
      for (const auto& c : e->children) {
        auto r = free_rank_of(c);
        if (!r) return std::nullopt;
        if (*r > 0) {
          ++nonzero;
          value = *r;
        }
      }
      if (nonzero > 1) return std::nullopt;  // Z x Z is not free
      return value;
    }
    case GroupExpr::Kind::HNN: {
      auto r = free_rank_of(e->base);
      if (r && *r == 0) return e->stable_letters;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool has_bad_free_retract(const GroupExprPtr& e) {
  auto r = free_rank_of(e);
  if (r && *r >= 2) return true;
  switch (e->kind) {
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      for (const auto& c : e->children)
        if (has_bad_free_retract(c)) return true;
      return false;
    }
    case GroupExpr::Kind::HNN:
      if (e->stable_letters >= 2) return true;
      return e->trivial_morphisms && has_bad_free_retract(e->base);
    default:
      return false;
  }
}

Rational euler_characteristic(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return Rational(1, order_of_spec(e->spec));
    case GroupExpr::Kind::Z:
      return Rational(0);
    case GroupExpr::Kind::FreeGroup:
      return Rational(1 - (long long)e->free_rank);
    case GroupExpr::Kind::FreeProduct: {
      Rational sum(0);
      for (const auto& c : e->children) sum += euler_characteristic(c);
      return sum - Rational((long long)e->children.size() - 1);
    }
    case GroupExpr::Kind::DirectProduct: {
      Rational prod(1);
      for (const auto& c : e->children) prod *= euler_characteristic(c);
      return prod;
    }
    case GroupExpr::Kind::HNN:
      return euler_characteristic(e->base) - Rational(e->stable_letters);
  }
  throw std::invalid_argument("unknown expression node");
}

long long kurosh_kernel_rank(const GroupExprPtr& e, int p) {
  if (!is_prime(p)) throw std::invalid_argument("kurosh_kernel_rank: p must be prime");
  if (e->kind != GroupExpr::Kind::FreeProduct)
    throw std::invalid_argument("kurosh_kernel_rank: expression must be a free product");
  long long quotient_order = 1;
  for (const auto& c : e->children) {
    bool integer_factor = c->kind == GroupExpr::Kind::Z ||
                          (c->kind == GroupExpr::Kind::FreeGroup && c->free_rank == 1);
    if (integer_factor) continue;
    long long order = expr_order(c);
    if (order < 0 || p_part((int)order, p) != order)
      throw std::invalid_argument(
          "kurosh_kernel_rank: factor '" + print_group_expr(c) +
          "' is neither Z nor a finite p-group");
    quotient_order = checked_mul(quotient_order, order);
  }
  Rational rank = Rational(1) - Rational(quotient_order) * euler_characteristic(e);
  if (!rank.is_integer() || rank.num() < 0)
    throw std::logic_error("kurosh_kernel_rank: rank formula left the nonnegative integers");
  return rank.num();
}

PContent p_content(const GroupExprPtr& e, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p_content: p must be prime");
  PContent out;
  out.p = p;
  std::vector<GroupExprPtr> factors;
  if (e->kind == GroupExpr::Kind::FreeProduct)
    factors = e->children;
  else
    factors = {e};
  for (const auto& f : factors) {
    PContentFactor fc;
    fc.printed = print_group_expr(f);
    fc.finite = is_finite_expr(f);
    fc.torsion_at_p = has_p_torsion(f, p);
    fc.infinite_torsion_free =
        f->kind == GroupExpr::Kind::Z || f->kind == GroupExpr::Kind::FreeGroup;
    if (fc.finite && expr_order(f) <= FiniteGroup::kMaxOrder) {
      auto [residual, quotient] = o_p_residual(realize_finite(f), p);
      fc.p_quotient_nontrivial = quotient->order() > 1;
    }
    if (fc.torsion_at_p) ++out.p_torsion_factor_count;
    out.factors.push_back(std::move(fc));
  }
  out.sylow_finite = out.p_torsion_factor_count <= 1;
  return out;
}

}  // namespace nilgood

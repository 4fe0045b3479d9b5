#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilgood/finite_group.hpp"

namespace nilgood {

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

// Expression over groups: finite constructor atoms, the integers, free
// groups, free and direct products, and HNN nodes carrying the number of
// stable letters and whether every attaching morphism is the identity.
struct GroupExpr {
  enum class Kind { Finite, Z, FreeGroup, FreeProduct, DirectProduct, HNN };

  Kind kind = Kind::Z;
  GroupSpec spec;                       // Finite
  int free_rank = 0;                    // FreeGroup
  std::vector<GroupExprPtr> children;   // FreeProduct / DirectProduct
  GroupExprPtr base;                    // HNN
  int stable_letters = 0;               // HNN
  bool trivial_morphisms = false;       // HNN
};

GroupExprPtr ge_finite(GroupSpec spec);
GroupExprPtr ge_z();
GroupExprPtr ge_free_group(int rank);
GroupExprPtr ge_free_product(std::vector<GroupExprPtr> children);
GroupExprPtr ge_direct_product(std::vector<GroupExprPtr> children);
GroupExprPtr ge_hnn(GroupExprPtr base, int stable_letters, bool trivial_morphisms);

struct SpaceExpr;
using SpaceExprPtr = std::shared_ptr<const SpaceExpr>;

struct SpaceExpr {
  enum class Kind { ClassifyingSpace, Sphere, RealProjective, Wedge, Product };

  Kind kind = Kind::Sphere;
  GroupExprPtr group;                   // ClassifyingSpace
  int dim = 0;                          // Sphere / finite RealProjective
  bool infinite_dim = false;            // RP(inf)
  std::vector<SpaceExprPtr> children;   // Wedge / Product
};

SpaceExprPtr sp_classifying(GroupExprPtr group);
SpaceExprPtr sp_sphere(int k);
SpaceExprPtr sp_rp(int k);
SpaceExprPtr sp_rp_infinity();
SpaceExprPtr sp_wedge(std::vector<SpaceExprPtr> children);
SpaceExprPtr sp_product(std::vector<SpaceExprPtr> children);

bool group_expr_equal(const GroupExprPtr& a, const GroupExprPtr& b);
bool space_expr_equal(const SpaceExprPtr& a, const SpaceExprPtr& b);

// Syntax error with the byte offset it was detected at.
class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string& what, size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

// Grammar:
//   expr  := atom | "free(" expr {"," expr}+ ")" | "prod(" expr {"," expr}+ ")"
//          | "hnn(" expr "," nat "," ("trivial"|"nontrivial") ")"
//   atom  := "Z" | "F(" nat ")" | "C(" nat ")" | "D(" nat ")" | "S(" nat ")"
//          | "E(" nat "," nat ")" | "SL2(" nat ")"
//   space := "B(" expr ")" | "Sph(" nat ")" | "RP(" nat | "inf" ")"
//          | "wedge(" space {"," space}+ ")" | "prodsp(" space {"," space}+ ")"
GroupExprPtr parse_group_expr(const std::string& text);
SpaceExprPtr parse_space_expr(const std::string& text);

std::string print_group_expr(const GroupExprPtr& e);
std::string print_space_expr(const SpaceExprPtr& s);

// True when the leading token of `text` belongs to the space grammar.
bool looks_like_space_expr(const std::string& text);

}  // namespace nilgood

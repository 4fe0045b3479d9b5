#include "nilgood/expr.hpp"

#include <cctype>

namespace nilgood {

GroupExprPtr ge_finite(GroupSpec spec) {
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::Finite;
  e->spec = std::move(spec);
  return e;
}

GroupExprPtr ge_z() {
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::Z;
  return e;
}

GroupExprPtr ge_free_group(int rank) {
  if (rank < 1) throw std::invalid_argument("F(n): n must be >= 1");
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::FreeGroup;
  e->free_rank = rank;
  return e;
}

GroupExprPtr ge_free_product(std::vector<GroupExprPtr> children) {
  if (children.size() < 2)
    throw std::invalid_argument("free(...): at least two factors required");
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::FreeProduct;
  e->children = std::move(children);
  return e;
}

GroupExprPtr ge_direct_product(std::vector<GroupExprPtr> children) {
  if (children.size() < 2)
    throw std::invalid_argument("prod(...): at least two factors required");
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::DirectProduct;
  e->children = std::move(children);
  return e;
}

GroupExprPtr ge_hnn(GroupExprPtr base, int stable_letters, bool trivial_morphisms) {
  if (stable_letters < 1) throw std::invalid_argument("hnn: at least one stable letter");
  auto e = std::make_shared<GroupExpr>();
  e->kind = GroupExpr::Kind::HNN;
  e->base = std::move(base);
  e->stable_letters = stable_letters;
  e->trivial_morphisms = trivial_morphisms;
  return e;
}

SpaceExprPtr sp_classifying(GroupExprPtr group) {
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::ClassifyingSpace;
  s->group = std::move(group);
  return s;
}

SpaceExprPtr sp_sphere(int k) {
  if (k < 1) throw std::invalid_argument("Sph(k): k must be >= 1");
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::Sphere;
  s->dim = k;
  return s;
}

SpaceExprPtr sp_rp(int k) {
  if (k < 1) throw std::invalid_argument("RP(k): k must be >= 1");
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::RealProjective;
  s->dim = k;
  return s;
}

SpaceExprPtr sp_rp_infinity() {
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::RealProjective;
  s->infinite_dim = true;
  return s;
}

SpaceExprPtr sp_wedge(std::vector<SpaceExprPtr> children) {
  if (children.size() < 2)
    throw std::invalid_argument("wedge(...): at least two summands required");
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::Wedge;
  s->children = std::move(children);
  return s;
}

SpaceExprPtr sp_product(std::vector<SpaceExprPtr> children) {
  if (children.size() < 2)
    throw std::invalid_argument("prodsp(...): at least two factors required");
  auto s = std::make_shared<SpaceExpr>();
  s->kind = SpaceExpr::Kind::Product;
  s->children = std::move(children);
  return s;
}

bool group_expr_equal(const GroupExprPtr& a, const GroupExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case GroupExpr::Kind::Finite:
      return a->spec == b->spec;
    case GroupExpr::Kind::Z:
      return true;
    case GroupExpr::Kind::FreeGroup:
      return a->free_rank == b->free_rank;
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      if (a->children.size() != b->children.size()) return false;
      for (size_t i = 0; i < a->children.size(); ++i)
        if (!group_expr_equal(a->children[i], b->children[i])) return false;
      return true;
    }
    case GroupExpr::Kind::HNN:
      return a->stable_letters == b->stable_letters &&
             a->trivial_morphisms == b->trivial_morphisms &&
             group_expr_equal(a->base, b->base);
  }
  return false;
}

bool space_expr_equal(const SpaceExprPtr& a, const SpaceExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SpaceExpr::Kind::ClassifyingSpace:
      return group_expr_equal(a->group, b->group);
    case SpaceExpr::Kind::Sphere:
      return a->dim == b->dim;
    case SpaceExpr::Kind::RealProjective:
      return a->infinite_dim == b->infinite_dim &&
             (a->infinite_dim || a->dim == b->dim);
    case SpaceExpr::Kind::Wedge:
    case SpaceExpr::Kind::Product: {
      if (a->children.size() != b->children.size()) return false;
      for (size_t i = 0; i < a->children.size(); ++i)
        if (!space_expr_equal(a->children[i], b->children[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek_char() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect_char(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw parse_error("expected a name", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::string peek_word() {
    skip_ws();
    size_t save = pos_;
    size_t end = save;
    while (end < text_.size() &&
           (std::isalnum((unsigned char)text_[end]) || text_[end] == '_'))
      ++end;
    return text_.substr(save, end - save);
  }

  long long number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
    if (start == pos_) throw parse_error("expected a number", pos_);
    long long v = 0;
    for (size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > 1000000000) throw parse_error("number too large", start);
    }
    return v;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) throw parse_error("unexpected trailing input", pos_);
  }

private:
  const std::string& text_;
  size_t pos_ = 0;
};

GroupExprPtr parse_group(Lexer& lx);

std::vector<GroupExprPtr> parse_group_list(Lexer& lx) {
  std::vector<GroupExprPtr> children;
  lx.expect_char('(');
  children.push_back(parse_group(lx));
  while (lx.peek_char() == ',') {
    lx.expect_char(',');
    children.push_back(parse_group(lx));
  }
  lx.expect_char(')');
  return children;
}

int checked_int(long long v, const char* what, long long lo, long long hi, size_t pos) {
  if (v < lo || v > hi)
    throw parse_error(std::string(what) + " out of range", pos);
  return (int)v;
}

GroupExprPtr parse_group(Lexer& lx) {
  size_t start = lx.pos();
  std::string head = lx.word();
  if (head == "Z") return ge_z();
  if (head == "F") {
    lx.expect_char('(');
    int n = checked_int(lx.number(), "free rank", 1, 1000000, start);
    lx.expect_char(')');
    return ge_free_group(n);
  }
  if (head == "C") {
    lx.expect_char('(');
    int n = checked_int(lx.number(), "cyclic order", 1, 1000000000, start);
    lx.expect_char(')');
    return ge_finite(GroupSpec::cyclic(n));
  }
  if (head == "D") {
    lx.expect_char('(');
    int n = checked_int(lx.number(), "dihedral parameter", 2, 1000000000, start);
    lx.expect_char(')');
    return ge_finite(GroupSpec::dihedral(n));
  }
  if (head == "S") {
    lx.expect_char('(');
    int n = checked_int(lx.number(), "symmetric degree", 1, 6, start);
    lx.expect_char(')');
    return ge_finite(GroupSpec::symmetric(n));
  }
  if (head == "E") {
    lx.expect_char('(');
    size_t ppos = lx.pos();
    int p = checked_int(lx.number(), "prime", 2, 1000000, ppos);
    if (!is_prime(p)) throw parse_error("E(p,k): p must be prime", ppos);
    lx.expect_char(',');
    int k = checked_int(lx.number(), "exponent", 0, 30, start);
    lx.expect_char(')');
    return ge_finite(GroupSpec::elementary(p, k));
  }
  if (head == "SL2") {
    lx.expect_char('(');
    size_t ppos = lx.pos();
    int p = checked_int(lx.number(), "prime", 2, 7, ppos);
    if (!is_prime(p)) throw parse_error("SL2(p): p must be prime", ppos);
    lx.expect_char(')');
    return ge_finite(GroupSpec::sl2(p));
  }
  if (head == "free") return ge_free_product(parse_group_list(lx));
  if (head == "prod") return ge_direct_product(parse_group_list(lx));
  if (head == "hnn") {
    lx.expect_char('(');
    GroupExprPtr base = parse_group(lx);
    lx.expect_char(',');
    int letters = checked_int(lx.number(), "stable letter count", 1, 1000000, start);
    lx.expect_char(',');
    size_t mpos = lx.pos();
    std::string m = lx.word();
    bool trivial;
    if (m == "trivial")
      trivial = true;
    else if (m == "nontrivial")
      trivial = false;
    else
      throw parse_error("expected 'trivial' or 'nontrivial'", mpos);
    lx.expect_char(')');
    return ge_hnn(std::move(base), letters, trivial);
  }
  throw parse_error("unknown group constructor '" + head + "'", start);
}

SpaceExprPtr parse_space(Lexer& lx);

std::vector<SpaceExprPtr> parse_space_list(Lexer& lx) {
  std::vector<SpaceExprPtr> children;
  lx.expect_char('(');
  children.push_back(parse_space(lx));
  while (lx.peek_char() == ',') {
    lx.expect_char(',');
    children.push_back(parse_space(lx));
  }
  lx.expect_char(')');
  return children;
}

SpaceExprPtr parse_space(Lexer& lx) {
  size_t start = lx.pos();
  std::string head = lx.peek_word();
  if (head == "B") {
    lx.word();
    lx.expect_char('(');
    GroupExprPtr g = parse_group(lx);
    lx.expect_char(')');
    return sp_classifying(std::move(g));
  }
  if (head == "Sph") {
    lx.word();
    lx.expect_char('(');
    int k = checked_int(lx.number(), "sphere dimension", 1, 1000000, start);
    lx.expect_char(')');
    return sp_sphere(k);
  }
  if (head == "RP") {
    lx.word();
    lx.expect_char('(');
    if (lx.peek_word() == "inf") {
      lx.word();
      lx.expect_char(')');
      return sp_rp_infinity();
    }
    int k = checked_int(lx.number(), "projective dimension", 1, 1000000, start);
    lx.expect_char(')');
    return sp_rp(k);
  }
  if (head == "wedge") {
    lx.word();
    return sp_wedge(parse_space_list(lx));
  }
  if (head == "prodsp") {
    lx.word();
    return sp_product(parse_space_list(lx));
  }
  throw parse_error("unknown space constructor '" + head + "'", start);
}

}  // namespace

GroupExprPtr parse_group_expr(const std::string& text) {
  Lexer lx(text);
  GroupExprPtr e = parse_group(lx);
  lx.expect_end();
  return e;
}

SpaceExprPtr parse_space_expr(const std::string& text) {
  Lexer lx(text);
  SpaceExprPtr s = parse_space(lx);
  lx.expect_end();
  return s;
}

bool looks_like_space_expr(const std::string& text) {
  Lexer lx(text);
  std::string head = lx.peek_word();
  return head == "B" || head == "Sph" || head == "RP" || head == "wedge" ||
         head == "prodsp";
}

std::string print_group_expr(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite:
      return e->spec.text();
    case GroupExpr::Kind::Z:
      return "Z";
    case GroupExpr::Kind::FreeGroup:
      return "F(" + std::to_string(e->free_rank) + ")";
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      std::string s = e->kind == GroupExpr::Kind::FreeProduct ? "free(" : "prod(";
      for (size_t i = 0; i < e->children.size(); ++i)
        s += (i ? "," : "") + print_group_expr(e->children[i]);
      return s + ")";
    }
    case GroupExpr::Kind::HNN:
      return "hnn(" + print_group_expr(e->base) + "," +
             std::to_string(e->stable_letters) + "," +
             (e->trivial_morphisms ? "trivial" : "nontrivial") + ")";
  }
  return "?";
}

std::string print_space_expr(const SpaceExprPtr& s) {
  switch (s->kind) {
    case SpaceExpr::Kind::ClassifyingSpace:
      return "B(" + print_group_expr(s->group) + ")";
    case SpaceExpr::Kind::Sphere:
      return "Sph(" + std::to_string(s->dim) + ")";
    case SpaceExpr::Kind::RealProjective:
      return s->infinite_dim ? "RP(inf)" : "RP(" + std::to_string(s->dim) + ")";
    case SpaceExpr::Kind::Wedge:
    case SpaceExpr::Kind::Product: {
      std::string out = s->kind == SpaceExpr::Kind::Wedge ? "wedge(" : "prodsp(";
      for (size_t i = 0; i < s->children.size(); ++i)
        out += (i ? "," : "") + print_space_expr(s->children[i]);
      return out + ")";
    }
  }
  return "?";
}

}  // namespace nilgood

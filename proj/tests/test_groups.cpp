#include <set>

#include "doctest.h"
#include "nilgood/finite_group.hpp"
#include "nilgood/rational.hpp"

using namespace nilgood;

namespace {

GroupPtr C(int n) { return build_group(GroupSpec::cyclic(n)); }
GroupPtr Sym(int n) { return build_group(GroupSpec::symmetric(n)); }

// Independent count of 2x2 matrices over F_p with determinant 1.
int count_sl2(int p) {
  int count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("constructors produce the expected orders") {
  CHECK(C(6)->order() == 6);
  CHECK(C(1)->order() == 1);
  CHECK(build_group(GroupSpec::dihedral(4))->order() == 8);
  CHECK(Sym(4)->order() == 24);
  CHECK(Sym(6)->order() == 720);
  CHECK(build_group(GroupSpec::elementary(2, 3))->order() == 8);
  CHECK(build_group(GroupSpec::sl2(3))->order() == count_sl2(3));
  CHECK(build_group(GroupSpec::sl2(3))->order() == 24);
  CHECK(build_group(GroupSpec::sl2(2))->order() == count_sl2(2));
  CHECK(build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}))
            ->order() == 6);
}

TEST_CASE("explicit table validation") {
  // Latin-square failure: a repeated entry in a row.
  CHECK_THROWS_AS(build_group(GroupSpec::explicit_table({0, 0, 1, 0})),
                  std::invalid_argument);
  // A Latin square with identity and two-sided inverses that is not
  // associative: every element squares to the identity, which no group of
  // order 5 can do.
  std::vector<int> loop{0, 1, 2, 3, 4,  //
                        1, 0, 3, 4, 2,  //
                        2, 4, 0, 1, 3,  //
                        3, 2, 4, 0, 1,  //
                        4, 3, 1, 2, 0};
  CHECK_THROWS_AS(build_group(GroupSpec::explicit_table(loop)), std::invalid_argument);
  // A valid table round-trips.
  GroupPtr klein = build_group(GroupSpec::explicit_table({0, 1, 2, 3,  //
                                                          1, 0, 3, 2,  //
                                                          2, 3, 0, 1,  //
                                                          3, 2, 1, 0}));
  CHECK(klein->order() == 4);
  CHECK(klein->abelian());
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(build_group(GroupSpec::cyclic(721)), limit_error);
  CHECK_THROWS_AS(build_group(GroupSpec::elementary(3, 7)), limit_error);
}

TEST_CASE("subgroup generation") {
  GroupPtr s3 = Sym(3);
  CHECK(subgroup_generated(s3, {}).order() == 1);

  int transposition = -1, three_cycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
    if (s3->element_order(x) == 3 && three_cycle < 0) three_cycle = x;
  }
  CHECK(subgroup_generated(s3, {transposition}).order() == 2);
  CHECK(subgroup_generated(s3, {transposition, three_cycle}).order() == 6);
  CHECK_THROWS_AS(subgroup_generated(s3, {17}), std::invalid_argument);
}

TEST_CASE("sylow subgroups") {
  // Oracle for S_4 at p=2: exhaustive search over subgroups generated by
  // pairs of elements, recording the largest 2-power order seen.
  GroupPtr s4 = Sym(4);
  int best = 1;
  for (int a = 0; a < 24; ++a)
    for (int b = a; b < 24; ++b) {
      int o = subgroup_generated(s4, {a, b}).order();
      if (o == p_part(o, 2)) best = std::max(best, o);
    }
  CHECK(best == 8);
  CHECK(sylow_subgroup(s4, 2).order() == 8);

  CHECK(sylow_subgroup(C(6), 3).order() == 3);
  CHECK(sylow_subgroup(C(5), 3).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(C(6), 4), std::invalid_argument);
}

TEST_CASE("sylow order equals the p-part across a family") {
  std::vector<GroupPtr> family{
      C(12),
      C(60),
      Sym(3),
      Sym(4),
      Sym(5),
      build_group(GroupSpec::dihedral(6)),
      build_group(GroupSpec::dihedral(10)),
      build_group(GroupSpec::elementary(2, 3)),
      build_group(GroupSpec::elementary(3, 2)),
      build_group(GroupSpec::sl2(2)),
      build_group(GroupSpec::sl2(3)),
      build_group(GroupSpec::sl2(5)),
      build_group(GroupSpec::product({GroupSpec::cyclic(6), GroupSpec::dihedral(4)})),
  };
  for (const auto& G : family) {
    REQUIRE(G->order() <= 120);
    for (int p : {2, 3, 5, 7}) {
      Subgroup s = sylow_subgroup(G, p);
      CHECK(s.order() == p_part(G->order(), p));
      CHECK(G->order() % s.order() == 0);  // Lagrange
    }
  }
}

TEST_CASE("o_p residual") {
  auto [n1, q1] = o_p_residual(Sym(3), 2);
  CHECK(n1.order() == 3);
  CHECK(q1->order() == 2);

  auto [n2, q2] = o_p_residual(C(5), 5);
  CHECK(n2.order() == 1);
  CHECK(q2->order() == 5);

  auto [n3, q3] = o_p_residual(C(6), 2);
  CHECK(n3.order() == 3);
  CHECK(q3->order() == 2);
}

TEST_CASE("o_p quotient is always a p-group") {
  std::vector<GroupPtr> family{C(6),  C(12), C(60), Sym(3), Sym(4),
                               build_group(GroupSpec::dihedral(6)),
                               build_group(GroupSpec::sl2(3))};
  for (const auto& G : family)
    for (int p : {2, 3, 5}) {
      auto [n, q] = o_p_residual(G, p);
      CHECK(is_normal(n));
      CHECK(q->order() == p_part(q->order(), p));
      CHECK(n.order() * q->order() == G->order());
    }
}

TEST_CASE("quotient groups") {
  GroupPtr s4 = Sym(4);
  // The Klein four-group inside S_4: derived by taking the normal
  // subgroup of order 4 generated by pairs of order-2 elements.
  Subgroup v4{nullptr, {}};
  bool found = false;
  for (int a = 0; a < 24 && !found; ++a)
    for (int b = a + 1; b < 24 && !found; ++b) {
      if (s4->element_order(a) != 2 || s4->element_order(b) != 2) continue;
      Subgroup h = subgroup_generated(s4, {a, b});
      if (h.order() == 4 && is_normal(h)) {
        v4 = h;
        found = true;
      }
    }
  REQUIRE(found);
  CHECK(quotient_group(s4, v4)->order() == 6);

  CHECK(quotient_group(s4, trivial_subgroup(s4))->order() == 24);
  CHECK(quotient_group(s4, whole_subgroup(s4))->order() == 1);

  // Non-normal subgroups are rejected.
  int transposition = -1;
  for (int x = 0; x < 24; ++x)
    if (s4->element_order(x) == 2 && subgroup_generated(s4, {x}).order() == 2) {
      Subgroup h = subgroup_generated(s4, {x});
      if (!is_normal(h)) {
        transposition = x;
        break;
      }
    }
  REQUIRE(transposition >= 0);
  CHECK_THROWS_AS(quotient_group(s4, subgroup_generated(s4, {transposition})),
                  std::invalid_argument);
}

TEST_CASE("lower p-central series examples") {
  SeriesChain c4 = lower_p_central_series(C(4), 2);
  std::vector<int> orders;
  for (const auto& t : c4.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<int>{4, 2, 1, 1});
  CHECK(c4.stabilized);

  SeriesChain c3 = lower_p_central_series(C(3), 2);
  orders.clear();
  for (const auto& t : c3.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<int>{3, 3});  // stabilizes without reaching 1

  SeriesChain klein = lower_p_central_series(build_group(GroupSpec::elementary(2, 2)), 2);
  orders.clear();
  for (const auto& t : klein.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<int>{4, 1, 1});
}

TEST_CASE("lower p-central series of p-groups reaches the trivial subgroup") {
  std::vector<std::pair<GroupSpec, int>> cases{
      {GroupSpec::cyclic(2), 2},          {GroupSpec::cyclic(16), 2},
      {GroupSpec::cyclic(64), 2},         {GroupSpec::elementary(2, 4), 2},
      {GroupSpec::dihedral(4), 2},        {GroupSpec::dihedral(16), 2},
      {GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(8)}), 2},
      {GroupSpec::cyclic(27), 3},         {GroupSpec::elementary(3, 3), 3},
      {GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(9)}), 3},
      {GroupSpec::cyclic(25), 5},         {GroupSpec::cyclic(49), 7},
  };
  for (const auto& [spec, p] : cases) {
    GroupPtr G = build_group(spec);
    REQUIRE(G->order() <= 64);
    SeriesChain chain = lower_p_central_series(G, p);
    CHECK(chain.stabilized);
    CHECK(chain.terms.back().is_trivial());
    for (const auto& term : chain.terms) CHECK(is_normal(term));
    for (size_t i = 0; i + 1 < chain.terms.size(); ++i) {
      for (int x : chain.terms[i + 1].elements) CHECK(chain.terms[i].contains(x));
      CHECK(chain.terms[i].order() % chain.terms[i + 1].order() == 0);
    }
  }
}

TEST_CASE("generation by elements of a fixed order") {
  CHECK(is_generated_by_order_m(Sym(4), 2));
  CHECK_FALSE(is_generated_by_order_m(C(4), 2));
  CHECK(is_generated_by_order_m(C(2), 2));
  CHECK(is_generated_by_order_m(Sym(5), 2));
}

TEST_CASE("subgroup as a standalone group") {
  GroupPtr s4 = Sym(4);
  Subgroup syl = sylow_subgroup(s4, 2);
  GroupPtr d4 = as_group(syl);
  CHECK(d4->order() == 8);
  CHECK_FALSE(d4->abelian());
}

TEST_CASE("element orders and powers") {
  GroupPtr g = C(12);
  CHECK(g->element_order(1) == 12);
  CHECK(g->element_order(4) == 3);
  CHECK(g->power(1, 25) == 1);
  CHECK(g->power(5, -1) == g->inverse(5));
}

#include "nilgood/classifier.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "nilgood/expr_analysis.hpp"
#include "nilgood/homology.hpp"

namespace nilgood {

RingDescriptor RingDescriptor::field(int p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires a prime p");
  RingDescriptor r;
  r.kind = Kind::FieldP;
  r.p = p;
  return r;
}

RingDescriptor RingDescriptor::integers() { return RingDescriptor{}; }

RingDescriptor RingDescriptor::z_invert(std::vector<int> primes, bool complement) {
  for (int q : primes)
    if (!is_prime(q)) throw std::invalid_argument("Z[J^-1] requires a set of primes");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  RingDescriptor r;
  r.kind = Kind::ZInvertJ;
  r.primes = std::move(primes);
  r.complement = complement;
  return r;
}

RingDescriptor RingDescriptor::z_mod(long long n) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  RingDescriptor r;
  r.kind = Kind::ZModN;
  r.n = n;
  return r;
}

bool RingDescriptor::inverts(int prime) const {
  bool listed = std::binary_search(primes.begin(), primes.end(), prime);
  return complement ? !listed : listed;
}

std::string RingDescriptor::str() const {
  switch (kind) {
    case Kind::FieldP:
      return "F_" + std::to_string(p);
    case Kind::Integers:
      return "Z";
    case Kind::ZInvertJ: {
      std::string s = complement ? "Z[1/q : q not in {" : "Z[1/q : q in {";
      for (size_t i = 0; i < primes.size(); ++i)
        s += (i ? "," : "") + std::to_string(primes[i]);
      return s + "}]";
    }
    case Kind::ZModN:
      return "Z/" + std::to_string(n);
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Good:
      return "good";
    case Verdict::Bad:
      return "bad";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

bool prime_or_integer_ring(const RingDescriptor& ring) {
  return ring.kind == RingDescriptor::Kind::FieldP ||
         ring.kind == RingDescriptor::Kind::Integers;
}

Judgment make(Verdict v, const RingDescriptor& ring, std::string rule,
              std::string citation, std::string at) {
  Judgment j;
  j.verdict = v;
  j.ring = ring;
  j.trace.push_back({std::move(rule), std::move(citation), std::move(at)});
  return j;
}

void absorb_trace(Judgment& into, const Judgment& from) {
  into.trace.insert(into.trace.end(), from.trace.begin(), from.trace.end());
  into.notes.insert(into.notes.end(), from.notes.begin(), from.notes.end());
}

// Primes that can appear in the torsion of the integral homology, when
// that set is determined by the shape of the expression: reduced homology
// of the classifying space of a finite group is |G|-torsion, circles and
// free groups contribute none, wedges take unions, and Kunneth keeps
// products and Tor terms inside the union.
std::optional<std::set<long long>> torsion_primes(const GroupExprPtr& e) {
  switch (e->kind) {
    case GroupExpr::Kind::Finite: {
      std::set<long long> out;
      long long n = order_of_spec(e->spec);
      for (long long q = 2; q * q <= n; ++q)
        while (n % q == 0) {
          out.insert(q);
          n /= q;
        }
      if (n > 1) out.insert(n);
      return out;
    }
    case GroupExpr::Kind::Z:
    case GroupExpr::Kind::FreeGroup:
      return std::set<long long>{};
    case GroupExpr::Kind::FreeProduct:
    case GroupExpr::Kind::DirectProduct: {
      std::set<long long> out;
      for (const auto& c : e->children) {
        auto sub = torsion_primes(c);
        if (!sub) return std::nullopt;
        out.insert(sub->begin(), sub->end());
      }
      return out;
    }
    case GroupExpr::Kind::HNN:
      if (e->stable_letters == 1 && e->trivial_morphisms)
        return torsion_primes(e->base);
      return std::nullopt;
  }
  return std::nullopt;
}

// Low-degree cross-check of the Tor condition through the homology
// module, for factors whose classifying-space homology has a closed form.
void assert_tor_vanishes(const GroupExprPtr& a, const GroupExprPtr& b) {
  GradedModule ha, hb;
  try {
    ha = space_homology(sp_classifying(a), CoeffRing::integers(), 6);
    hb = space_homology(sp_classifying(b), CoeffRing::integers(), 6);
  } catch (const std::exception&) {
    return;  // not computable; the prime-disjointness argument stands alone
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (!tor_pairing(ha.entries[i], hb.entries[j]).is_zero())
        throw std::logic_error("torsion-prime analysis disagrees with computed Tor");
}

bool is_order_two(const GroupExprPtr& e) { return expr_order(e) == 2; }

std::vector<GroupExprPtr> effective_children(const GroupExprPtr& e) {
  std::vector<GroupExprPtr> out;
  for (const auto& c : e->children)
    if (expr_order(c) != 1) out.push_back(c);
  return out;
}

Judgment classify_group_impl(const GroupExprPtr& e, const RingDescriptor& ring);

Judgment classify_free_product(const GroupExprPtr& e, const RingDescriptor& ring) {
  std::vector<GroupExprPtr> children = effective_children(e);
  if (children.size() == 1) {
    Judgment j = classify_group_impl(children[0], ring);
    j.notes.push_back("trivial free factors of " + print_group_expr(e) + " were dropped");
    return j;
  }
  const std::string at = print_group_expr(e);

  if (ring.kind != RingDescriptor::Kind::FieldP) {
    Judgment j;
    j.verdict = Verdict::Unknown;
    j.ring = ring;
    j.trace.push_back({"R10",
                       "free-product verdicts away from prime fields are open beyond "
                       "free-wedge badness",
                       at});
    if (ring.kind == RingDescriptor::Kind::Integers)
      j.notes.push_back("integral goodness of " + at + " is not settled by any rule");
    return j;
  }

  const int p = ring.p;
  int torsion_count = 0;
  for (const auto& c : children)
    if (has_p_torsion(c, p)) ++torsion_count;

  // R4: the one good wedge of p-torsion pieces.
  if (p == 2 && children.size() == 2 && is_order_two(children[0]) &&
      is_order_two(children[1]))
    return make(Verdict::Good, ring, "R4",
                "the free product of two groups of order 2 is the infinite dihedral "
                "group, whose classifying space is 2-good: the kernel of its map onto "
                "C2 x C2 is infinite cyclic and the circle is 2-good",
                at);

  // R5: two or more factors with p-torsion.
  if (torsion_count >= 2) {
    Judgment j = make(
        Verdict::Bad, ring, "R5",
        "a free product in which two or more factors contain p-torsion has no finite "
        "Sylow p-subgroup and its classifying space is p-bad",
        at);
    for (const auto& c : children) {
      if (!has_p_torsion(c, p)) continue;
      if (!generated_by_finite_order(c))
        j.notes.push_back("stated criterion applied beyond its proof hypotheses: factor " +
                          print_group_expr(c) +
                          " is not generated by elements of finite order");
      long long order = expr_order(c);
      if (order > 1 && order <= FiniteGroup::kMaxOrder) {
        auto [residual, quotient] = o_p_residual(realize_finite(c), p);
        if (quotient->order() == 1)
          j.notes.push_back("factor " + print_group_expr(c) +
                            " has trivial largest p-quotient; the Sylow criterion is "
                            "applied as stated");
      }
    }
    return j;
  }

  // R5: an infinite cyclic factor next to p-torsion.
  bool has_z_factor = false;
  for (const auto& c : children) {
    auto r = free_rank_of(c);
    if (r && *r == 1) has_z_factor = true;
  }
  if (has_z_factor && torsion_count >= 1) {
    Judgment j = make(
        Verdict::Bad, ring, "R5",
        "the free product of the integers with a nontrivial finite p-group has a p-bad "
        "classifying space: the kernel onto the finite part is free of rank at least 2",
        at);
    for (const auto& c : children) {
      if (!has_p_torsion(c, p)) continue;
      long long order = expr_order(c);
      while (order > 0 && order % p == 0) order /= p;
      if (order != 1)
        j.notes.push_back("stated criterion applied beyond its proof hypotheses: factor " +
                          print_group_expr(c) + " is not a finite p-group");
    }
    return j;
  }

  // R5: at most one factor sees p at all, and Sylow theory applies.
  bool all_finite_order_generated = true;
  bool all_finite_sylow = true;
  for (const auto& c : children) {
    if (!generated_by_finite_order(c)) all_finite_order_generated = false;
    if (!has_finite_sylow(c, p)) all_finite_sylow = false;
  }
  if (all_finite_order_generated && all_finite_sylow && torsion_count <= 1) {
    std::string citation =
        torsion_count == 0
            ? "a free product of groups generated by finite-order elements of order "
              "prime to p has a p-good classifying space"
            : "a group generated by elements of finite order with a finite Sylow "
              "p-subgroup has a p-good classifying space";
    return make(Verdict::Good, ring, "R5", citation, at);
  }

  // Badness of a factor passes to the whole free product (retract).
  std::vector<Judgment> child_judgments;
  for (const auto& c : children) child_judgments.push_back(classify_group_impl(c, ring));
  for (size_t i = 0; i < children.size(); ++i)
    if (child_judgments[i].verdict == Verdict::Bad) {
      Judgment j = make(Verdict::Bad, ring, "R5",
                        "a retract of a space is R-bad whenever the space is R-bad; a "
                        "wedge summand is a retract",
                        print_group_expr(children[i]));
      absorb_trace(j, child_judgments[i]);
      return j;
    }

  Judgment j;
  j.verdict = Verdict::Unknown;
  j.ring = ring;
  j.trace.push_back({"R10", "no free-product rule applies", at});
  for (const auto& c : children) {
    if (!generated_by_finite_order(c))
      j.notes.push_back("factor " + print_group_expr(c) +
                        " is not generated by elements of finite order, so the "
                        "finite-Sylow goodness criterion does not apply");
    else if (!has_finite_sylow(c, p))
      j.notes.push_back("factor " + print_group_expr(c) +
                        " has no finite Sylow p-subgroup at p = " + std::to_string(p));
  }
  return j;
}

Judgment classify_direct_product(const GroupExprPtr& e, const RingDescriptor& ring) {
  std::vector<GroupExprPtr> children = effective_children(e);
  if (children.size() == 1) {
    Judgment j = classify_group_impl(children[0], ring);
    j.notes.push_back("trivial direct factors of " + print_group_expr(e) +
                      " were dropped");
    return j;
  }
  const std::string at = print_group_expr(e);

  if (ring.kind != RingDescriptor::Kind::FieldP &&
      ring.kind != RingDescriptor::Kind::Integers) {
    Judgment j;
    j.verdict = Verdict::Unknown;
    j.ring = ring;
    j.trace.push_back(
        {"R10", "direct-product verdicts are recorded for prime fields and the integers",
         at});
    return j;
  }

  std::vector<Judgment> child_judgments;
  for (const auto& c : children) child_judgments.push_back(classify_group_impl(c, ring));

  const char* rule = ring.kind == RingDescriptor::Kind::FieldP ? "R6" : "R7";
  for (size_t i = 0; i < children.size(); ++i)
    if (child_judgments[i].verdict == Verdict::Bad) {
      Judgment j = make(Verdict::Bad, ring, rule,
                        "a retract of a space is R-bad whenever the space is R-bad; a "
                        "direct factor is a retract",
                        print_group_expr(children[i]));
      absorb_trace(j, child_judgments[i]);
      return j;
    }

  bool all_good = true;
  for (const auto& cj : child_judgments)
    if (cj.verdict != Verdict::Good) all_good = false;

  if (all_good && ring.kind == RingDescriptor::Kind::FieldP) {
    Judgment j = make(Verdict::Good, ring, "R6",
                      "over field coefficients the Kunneth map is an isomorphism, so a "
                      "finite product of p-good spaces is p-good",
                      at);
    for (const auto& cj : child_judgments) absorb_trace(j, cj);
    return j;
  }

  if (all_good) {  // integers
    bool disjoint = true;
    std::set<long long> seen;
    bool computable = true;
    for (const auto& c : children) {
      auto tp = torsion_primes(c);
      if (!tp) {
        computable = false;
        break;
      }
      for (long long q : *tp) {
        if (seen.count(q)) disjoint = false;
        seen.insert(q);
      }
    }
    if (computable && disjoint) {
      for (size_t i = 0; i < children.size(); ++i)
        for (size_t k = i + 1; k < children.size(); ++k)
          assert_tor_vanishes(children[i], children[k]);
      Judgment j = make(Verdict::Good, ring, "R7",
                        "a product of Z-good spaces whose integral homologies have "
                        "coprime torsion (so every Tor pairing vanishes) is Z-good",
                        at);
      for (const auto& cj : child_judgments) absorb_trace(j, cj);
      return j;
    }
    Judgment j;
    j.verdict = Verdict::Unknown;
    j.ring = ring;
    j.trace.push_back({"R10",
                       computable
                           ? "the factors share torsion primes, so the Tor condition of "
                             "the integral Kunneth criterion is not established"
                           : "the torsion of a factor's homology is not determined, so "
                             "the Tor condition cannot be verified",
                       at});
    return j;
  }

  Judgment j;
  j.verdict = Verdict::Unknown;
  j.ring = ring;
  j.trace.push_back({rule, "a factor's verdict is unknown, so the product inherits it", at});
  for (const auto& cj : child_judgments)
    if (cj.verdict == Verdict::Unknown) absorb_trace(j, cj);
  return j;
}

Judgment classify_group_impl(const GroupExprPtr& e, const RingDescriptor& ring) {
  const std::string at = print_group_expr(e);

  // R1: finite underlying group.
  if (is_finite_expr(e))
    return make(Verdict::Good, ring, "R1",
                "the classifying space of a finite group has finite homotopy groups and "
                "is good for every solid ring",
                at);

  // R2: infinite cyclic.
  auto rank = free_rank_of(e);
  if (rank && *rank == 1) {
    if (prime_or_integer_ring(ring))
      return make(Verdict::Good, ring, "R2",
                  "the circle is complete, hence good for every prime and for the "
                  "integers",
                  at);
    Judgment j;
    j.verdict = Verdict::Unknown;
    j.ring = ring;
    j.trace.push_back(
        {"R10", "the circle's verdict is recorded for primes and the integers only", at});
    return j;
  }

  // R3: a retract that is free of rank >= 2.
  if (has_bad_free_retract(e)) {
    if (prime_or_integer_ring(ring))
      return make(Verdict::Bad, ring, "R3",
                  "a wedge of two or more circles is bad for all primes and for the "
                  "integers, and badness passes to every space retracting onto it",
                  at);
    Judgment j;
    j.verdict = Verdict::Unknown;
    j.ring = ring;
    j.trace.push_back({"R3",
                       "free-wedge badness is recorded for primes and the integers; "
                       "other solid rings are left open",
                       at});
    return j;
  }

  switch (e->kind) {
    case GroupExpr::Kind::FreeProduct:
      return classify_free_product(e, ring);
    case GroupExpr::Kind::DirectProduct:
      return classify_direct_product(e, ring);
    case GroupExpr::Kind::HNN: {
      if (e->stable_letters == 1 && e->trivial_morphisms) {
        GroupExprPtr expanded = ge_direct_product({e->base, ge_z()});
        Judgment j = make(Verdict::Unknown, ring, "R8",
                          "an HNN node with one stable letter and identity attaching "
                          "maps is the direct product of its base with the integers",
                          at);
        Judgment inner = classify_group_impl(expanded, ring);
        j.verdict = inner.verdict;
        absorb_trace(j, inner);
        return j;
      }
      Judgment j;
      j.verdict = Verdict::Unknown;
      j.ring = ring;
      j.trace.push_back({"R8",
                         "whether the classifying space of a single HNN node with a "
                         "nontrivial attaching map is good or bad remains open",
                         at});
      return j;
    }
    default:
      break;
  }

  Judgment j;
  j.verdict = Verdict::Unknown;
  j.ring = ring;
  j.trace.push_back({"R10", "no rule applies", at});
  return j;
}

// --- spaces -------------------------------------------------------------

std::optional<GroupExprPtr> as_group_expression(const SpaceExprPtr& s) {
  switch (s->kind) {
    case SpaceExpr::Kind::ClassifyingSpace:
      return s->group;
    case SpaceExpr::Kind::Sphere:
      if (s->dim == 1) return ge_z();  // S^1 = B(Z)
      return std::nullopt;
    case SpaceExpr::Kind::RealProjective:
      if (s->infinite_dim) return ge_finite(GroupSpec::cyclic(2));  // RP^inf = B(C2)
      if (s->dim == 1) return ge_z();                               // RP^1 = S^1
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Judgment classify_space_impl(const SpaceExprPtr& s, const RingDescriptor& ring) {
  const std::string at = print_space_expr(s);
  switch (s->kind) {
    case SpaceExpr::Kind::ClassifyingSpace:
      return classify_group_impl(s->group, ring);

    case SpaceExpr::Kind::Sphere:
      return make(Verdict::Good, ring, "R9",
                  "spheres are simply connected (nilpotent for the circle) and good for "
                  "every solid ring",
                  at);

    case SpaceExpr::Kind::RealProjective: {
      if (s->infinite_dim) {
        Judgment j = make(Verdict::Good, ring, "R9",
                          "infinite real projective space is the classifying space of "
                          "the group of order 2",
                          at);
        Judgment inner = classify_group_impl(ge_finite(GroupSpec::cyclic(2)), ring);
        absorb_trace(j, inner);
        return j;
      }
      if (s->dim == 1) {
        Judgment j = make(Verdict::Good, ring, "R9",
                          "the real projective line is the circle", at);
        Judgment inner = classify_group_impl(ge_z(), ring);
        j.verdict = inner.verdict;
        absorb_trace(j, inner);
        return j;
      }
      if (ring.kind == RingDescriptor::Kind::FieldP) {
        if (s->dim == 2)
          return make(Verdict::Good, ring, "R9",
                      "the real projective plane is good at every prime", at);
        if (ring.p == 2)
          return make(Verdict::Good, ring, "R9",
                      "real projective spaces are 2-good in every dimension", at);
        Judgment j;
        j.verdict = Verdict::Unknown;
        j.ring = ring;
        j.trace.push_back(
            {"R10", "odd-prime verdicts for higher projective spaces are not recorded",
             at});
        return j;
      }
      if (s->dim == 2 && ring.kind == RingDescriptor::Kind::Integers)
        return make(Verdict::Bad, ring, "R9",
                    "the real projective plane is bad for the integers", at);
      if (s->dim == 2 && ring.kind == RingDescriptor::Kind::ZInvertJ) {
        if (ring.inverts(2)) {
          Judgment j = make(Verdict::Bad, ring, "R9",
                            "the real projective plane is bad for subrings of the "
                            "rationals whose prime set J contains 2",
                            at);
          j.notes.push_back(
              "the J convention is read literally as membership of 2 in the "
              "ring's listed prime set");
          return j;
        }
        Judgment j;
        j.verdict = Verdict::Unknown;
        j.ring = ring;
        j.trace.push_back(
            {"R10", "subrings of the rationals that do not involve 2 are left open for "
                    "the projective plane",
             at});
        return j;
      }
      Judgment j;
      j.verdict = Verdict::Unknown;
      j.ring = ring;
      j.trace.push_back({"R10", "no projective-space rule applies at this ring", at});
      return j;
    }

    case SpaceExpr::Kind::Wedge:
    case SpaceExpr::Kind::Product: {
      const bool wedge = s->kind == SpaceExpr::Kind::Wedge;
      // Badness of a summand or factor passes to the whole (retract).
      std::vector<Judgment> child_judgments;
      for (const auto& c : s->children)
        child_judgments.push_back(classify_space_impl(c, ring));
      for (size_t i = 0; i < s->children.size(); ++i)
        if (child_judgments[i].verdict == Verdict::Bad) {
          Judgment j = make(Verdict::Bad, ring, "R9",
                            "a retract of a space is R-bad whenever the space is R-bad; "
                            "wedge summands and product factors are retracts",
                            print_space_expr(s->children[i]));
          absorb_trace(j, child_judgments[i]);
          return j;
        }
      // Translate to a group expression when every child is one.
      std::vector<GroupExprPtr> groups;
      bool translatable = true;
      for (const auto& c : s->children) {
        auto g = as_group_expression(c);
        if (!g) {
          translatable = false;
          break;
        }
        groups.push_back(*g);
      }
      if (translatable) {
        GroupExprPtr ge = wedge ? ge_free_product(std::move(groups))
                                : ge_direct_product(std::move(groups));
        Judgment j = make(Verdict::Unknown, ring, "R9",
                          wedge ? "a wedge of classifying spaces is the classifying "
                                  "space of the free product of the groups"
                                : "a product of classifying spaces is the classifying "
                                  "space of the direct product of the groups",
                          at);
        Judgment inner = classify_group_impl(ge, ring);
        j.verdict = inner.verdict;
        absorb_trace(j, inner);
        return j;
      }
      Judgment j;
      j.verdict = Verdict::Unknown;
      j.ring = ring;
      j.trace.push_back(
          {"R10",
           "no summand is bad and the space does not translate to a group expression",
           at});
      for (const auto& cj : child_judgments)
        if (cj.verdict == Verdict::Unknown) absorb_trace(j, cj);
      return j;
    }
  }
  throw std::invalid_argument("unknown space expression");
}

}  // namespace

Judgment classify(const GroupExprPtr& e, const RingDescriptor& ring) {
  Judgment j = classify_group_impl(e, ring);
  j.ring = ring;
  return j;
}

Judgment classify(const SpaceExprPtr& s, const RingDescriptor& ring) {
  Judgment j = classify_space_impl(s, ring);
  j.ring = ring;
  return j;
}

std::map<int, Judgment> classify_profile(const GroupExprPtr& e,
                                         const std::vector<int>& primes) {
  if (primes.empty()) throw std::invalid_argument("classify_profile: no primes given");
  std::map<int, Judgment> out;
  for (int p : primes) out.emplace(p, classify(e, RingDescriptor::field(p)));
  return out;
}

Judgment classify_via_fibration(const GroupPtr& base, int p, const Judgment& fibre) {
  if (!is_prime(p)) throw std::invalid_argument("classify_via_fibration: p must be prime");
  if (p_part(base->order(), p) != base->order())
    throw std::invalid_argument("classify_via_fibration: the base group is not a finite " +
                                std::to_string(p) + "-group");
  Judgment j;
  j.verdict = fibre.verdict;
  j.ring = fibre.ring;
  j.trace.push_back({"fibration",
                     "a finite p-group acts nilpotently on any module over its mod-p "
                     "group ring, so completion preserves fibrations over such a base "
                     "and the total space is p-good exactly when the fibre is",
                     "base of order " + std::to_string(base->order())});
  absorb_trace(j, fibre);
  return j;
}

}  // namespace nilgood

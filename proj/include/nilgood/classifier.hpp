#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilgood/expr.hpp"

namespace nilgood {

// A solid ring: Z/n, subrings of the rationals, the prime fields F_p
// (Z/p distinguished so field-specific rules can key on it), and the
// integers themselves.
struct RingDescriptor {
  enum class Kind { FieldP, Integers, ZInvertJ, ZModN };

  Kind kind = Kind::Integers;
  int p = 0;                   // FieldP
  std::vector<int> primes;     // ZInvertJ: the set J (sorted, unique)
  bool complement = false;     // ZInvertJ: J = all primes except `primes`
  long long n = 0;             // ZModN

  static RingDescriptor field(int p);
  static RingDescriptor integers();
  static RingDescriptor z_invert(std::vector<int> primes, bool complement = false);
  static RingDescriptor z_mod(long long n);

  // For ZInvertJ: whether the prime lies in J.
  bool inverts(int prime) const;

  std::string str() const;
  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

enum class Verdict { Good, Bad, Unknown };
std::string verdict_str(Verdict v);

struct TraceEntry {
  std::string rule;      // R1..R10 from the fixed rule order
  std::string citation;  // the mathematical fact the rule applies
  std::string at;        // printed subexpression the rule bound
};

// Good/Bad verdicts carry a nonempty trace; Unknown records why no rule
// fired. `notes` flags hypotheses of the cited statement that the bound
// subexpression does not literally satisfy.
struct Judgment {
  Verdict verdict = Verdict::Unknown;
  RingDescriptor ring;
  std::vector<TraceEntry> trace;
  std::vector<std::string> notes;
};

Judgment classify(const GroupExprPtr& e, const RingDescriptor& ring);
Judgment classify(const SpaceExprPtr& s, const RingDescriptor& ring);

std::map<int, Judgment> classify_profile(const GroupExprPtr& e,
                                         const std::vector<int>& primes);

// Carries the fibre's verdict across a fibration whose base has a finite
// p-group fundamental group (which acts nilpotently on the fibre's mod-p
// homology, so completion preserves the fibration).
Judgment classify_via_fibration(const GroupPtr& base, int p, const Judgment& fibre);

}  // namespace nilgood

#pragma once

#include <cstddef>

#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque {

enum class ExpansionMode { Greedy, QuasiGreedy };

// Exact value of sum_i d_i q^-i for eventually periodic digits and rational
// q > 1. Computed with integer arithmetic from the closed form of the
// geometric tail; no truncation.
Rat eval_series(const EventuallyPeriodicWord& d, const Rat& q);

// Interval guaranteed to contain ((prefix t))_q for every digit tail t over
// {0..tail_max} and every q in qi. The value is decreasing in q for a fixed
// sequence, so the bounds are the 0-tail at qi.hi and the max-tail at qi.lo.
RatInterval eval_enclosure(const FiniteWord& prefix, Digit tail_max,
                           const RatInterval& qi);

// First n digits of the greedy (digit 1 as soon as q*r >= 1) or quasi-greedy
// (digit 1 only when q*r > 1) expansion of x in base q. Requires 1 < q <= 2
// and 0 <= x <= 1/(q-1).
FiniteWord expansion_digits(const Rat& x, const Rat& q, std::size_t n,
                            ExpansionMode mode);

// Quasi-greedy base-2 expansion of rational x in (0, 1]. Always eventually
// periodic and never ends in 0^inf; returned in canonical form.
EventuallyPeriodicWord dyadic_expansion(const Rat& x);

// alpha(q): quasi-greedy expansion of 1 in base q, 1 < q <= 2.
FiniteWord quasi_greedy_alpha(const Rat& q, std::size_t n);

struct UniquenessVerdict {
  enum class Kind { Unique, NotUnique, Unknown };
  Kind kind;
  std::size_t depth;  // digits examined

  bool unique() const { return kind == Kind::Unique; }
  bool not_unique() const { return kind == Kind::NotUnique; }
  bool unknown() const { return kind == Kind::Unknown; }
};

// Lexicographic uniqueness test for a binary sequence a against every base in
// the enclosure q (subset of (1, 2]). A definite verdict holds for all bases
// in the enclosure. Unique is only issued when depth covers a full
// preperiod+period of a, so the finitely many checks cover every shift.
UniquenessVerdict is_unique_expansion(const EventuallyPeriodicWord& a,
                                      const RatInterval& q, std::size_t depth);

struct ExpansionCount {
  std::size_t lower_bound;  // distinct surviving digit prefixes at `depth`
  bool saturated;           // true if the frontier hit the cap and search stopped
};

// Breadth-first count of digit prefixes d_1..d_depth that can start an
// expansion of x in base q: a prefix survives iff its remainder stays in
// [0, 1/(q-1)]. Every surviving prefix extends to at least one expansion, so
// lower_bound is a true lower bound on the number of expansions.
ExpansionCount count_expansions_bruteforce(const Rat& x, const Rat& q,
                                           std::size_t depth,
                                           std::size_t cap = 4096);

}  // namespace univoque

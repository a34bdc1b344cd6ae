#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "univoque/cantor.hpp"
#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque {

// One step of the three-branch expanding map on [-1, 1]:
//   [-1, -1/2) -> 2x + alpha,   [-1/2, 1/2] -> 2x,   (1/2, 1] -> 2x - alpha.
// Requires 1 <= alpha <= 2 so the image stays in [-1, 1].
Rat s_alpha_step(const Rat& x, const Rat& alpha);

struct MatchingVerdict {
  enum class Kind { Matched, NonMatching, Undecided };
  Kind kind;
  // Matched: first step where the two orbits meet (or, for the doubling
  // criterion, first step inside the middle window). NonMatching: step at
  // which the orbit state recurred, certifying a cycle.
  std::size_t step = 0;
  std::size_t cycle_length = 0;  // NonMatching only
  std::size_t budget = 0;        // steps examined

  bool matched() const { return kind == Kind::Matched; }
  bool non_matching() const { return kind == Kind::NonMatching; }
  bool undecided() const { return kind == Kind::Undecided; }
};
const char* matching_kind_name(MatchingVerdict::Kind k);

// Runs the orbits of 1 and 1-alpha jointly under the three-branch map.
// Matched(m) when they first coincide at step m <= budget. If the joint
// state (pair of points) recurs before any coincidence, the orbits are
// locked in a cycle without meeting: certified NonMatching. Exact rational
// arithmetic throughout, so both certificates are rigorous.
MatchingVerdict detect_matching(const Rat& alpha, std::size_t budget);

// Doubling-map criterion: with y_0 = 1/alpha and y_{n+1} = 2 y_n mod 1,
// matching occurs iff some y_n lands strictly inside
// (1/(2 alpha), 1 - 1/(2 alpha)). Cycle recurrence outside the window
// certifies NonMatching. Requires 1 < alpha <= 2.
MatchingVerdict doubling_criterion(const Rat& alpha, std::size_t budget);

// First n joint states (u_k, v_k) of the two orbits, starting at k = 0.
std::vector<std::pair<Rat, Rat>> matching_orbit(const Rat& alpha,
                                                std::size_t n);

// Whether the binary word a satisfies, for all 1 <= n <= depth:
//   a_n = 0  =>  shift^n(a) <= a,      a_n = 1  =>  shift^n(a) >= comp(a).
bool check_eq41(const EventuallyPeriodicWord& a, std::size_t depth);

// Realizes in alpha-space the set of sequences that start with 1^m and whose
// tail avoids runs of m equal digits. Endpoints are exact dyadic projections
// alpha = 1/((w))_2, so the enclosures are degenerate and need no tolerance.
// Orientation reverses (the projection is strictly decreasing); leaves and
// gaps come back in ascending alpha order, all inside (1, 2]. Requires
// m >= 3 and depth > m.
CantorLevel build_nm(std::size_t m, std::size_t depth);

}  // namespace univoque

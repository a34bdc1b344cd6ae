#pragma once

#include <cstddef>

#include "univoque/cantor.hpp"
#include "univoque/rational.hpp"
#include "univoque/solver.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Base whose expansion of 1 follows the doubling construction seeded with
// "10": the smallest univoque base. Solved from the digit stream directly;
// no root-finding shortcuts.
BaseEnclosure komornik_loreti(const Rat& tol, const SolveOptions& opts = {});

// Connected-component endpoints attached to an admissible word w:
//   q_left:  root of ((w)^inf)_q = 1          (periodic sequence)
//   q_right: root of the doubling construction seeded with w
// plus the smallest univoque base at the same tolerance for reference.
struct ComponentRecord {
  FiniteWord word;
  BaseEnclosure q_left, q_right, q_kl;
};
ComponentRecord component_for_word(const FiniteWord& w, const Rat& tol,
                                   const SolveOptions& opts = {});

// Certified comparisons behind the sum/product gap claims for a component:
//   sum_gap_ok:     q_right - q_left  >  q_left - q_kl
//   product_gap_ok: q_right * q_kl    >  q_left^2
// The enclosures are refined (tolerance divided) until both comparisons are
// decided or the refinement cap is hit (then InconclusiveError).
struct Prop51Report {
  FiniteWord word;
  BaseEnclosure q_left, q_right, q_kl;
  bool sum_gap_ok = false;
  bool product_gap_ok = false;
  RatInterval right_gap;    // q_right - q_left
  RatInterval left_gap;     // q_left  - q_kl
  RatInterval right_ratio;  // q_right / q_left
  RatInterval left_ratio;   // q_left  / q_kl
  Rat tol_used;
};
Prop51Report check_prop51(const FiniteWord& w, const Rat& tol,
                          const SolveOptions& opts = {});

// Witness that a set A with inf A = a, sup A = b and a gap (c, d) has a
// non-interval sumset A + A: true iff d - c > c - a and 2c < a + d, i.e. the
// sumset misses the non-empty window (2c, a + d). Requires a <= c < d <= b.
// Exact rational inputs, exact verdict.
bool sum_gap_witness(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

// Difference-set diagnostics for a realized level: merged cover of
// { p - q : p, q leaves }, its block count, and the outer hull.
struct DifferenceReport {
  std::vector<EnclosedInterval> cover;
  std::size_t block_count = 0;
  RatInterval hull;
};
DifferenceReport explore_difference(const CantorLevel& level);
DifferenceReport explore_difference(const Rat& x, std::size_t j,
                                    std::size_t depth, const Rat& tol,
                                    const SolveOptions& opts = {});

}  // namespace univoque

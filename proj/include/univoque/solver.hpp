#pragma once

#include <stdexcept>

#include "univoque/expansions.hpp"
#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Rational bracket [lo, hi] around a base, with 1 < lo <= hi <= 2.
struct BaseEnclosure {
  Rat lo, hi;

  BaseEnclosure() = default;
  BaseEnclosure(Rat l, Rat h);  // validates the invariant

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  RatInterval interval() const { return RatInterval(lo, hi); }
};

struct SolveOptions {
  unsigned max_iters = 256;
  // Longest digit prefix the stream solver will request before giving up.
  std::size_t max_prefix = std::size_t{1} << 14;
};

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The function does not change sign over the supplied bracket.
struct NoBracketError : SolveError {
  using SolveError::SolveError;
};

// Iteration or stream budget exhausted before the tolerance was met. `best`
// is the tightest enclosure established so far.
struct InconclusiveError : SolveError {
  RatInterval best;
  InconclusiveError(const std::string& what, RatInterval b)
      : SolveError(what), best(std::move(b)) {}
};

// Root of ((d))_q = x over the bracket, to width <= tol. ((d))_q is strictly
// decreasing in q, so the bracket must satisfy ((d))_lo >= x >= ((d))_hi;
// otherwise NoBracketError. Midpoints are snapped to the coarsest dyadic grid
// finer than a quarter of the current width, which keeps endpoint bit sizes
// growing linearly with iteration count. Deterministic.
BaseEnclosure solve_base(const EventuallyPeriodicWord& d, const Rat& x,
                         const BaseEnclosure& bracket, const Rat& tol,
                         const SolveOptions& opts = {});

// Same contract, but digits come from a stream and sign tests use finite
// prefixes with two-sided tail bounds. The prefix length doubles whenever a
// sign test is inconclusive; exceeding opts.max_prefix (or the stream's own
// budget) throws InconclusiveError carrying the best enclosure.
BaseEnclosure solve_base_stream(const DigitStream& g, const Rat& x,
                                const BaseEnclosure& bracket, const Rat& tol,
                                const SolveOptions& opts = {});

// Enclosure of the golden ratio: root of ((10)^inf)_q = 1 over [3/2, 2].
BaseEnclosure golden_ratio(const Rat& tol);

// [8/5, 2]: valid bracket for every base this library solves for in the
// univoque-set constructions, all of which exceed the golden ratio.
BaseEnclosure default_univoque_bracket();

}  // namespace univoque

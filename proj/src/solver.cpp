#include "univoque/solver.hpp"

#include <string>
#include <utility>

namespace univoque {

BaseEnclosure::BaseEnclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(1 < lo && lo <= hi && hi <= 2))
    throw std::invalid_argument("BaseEnclosure: need 1 < lo <= hi <= 2");
}

namespace {

// Midpoint snapped to the coarsest dyadic grid with spacing <= width/4.
// Keeps the endpoint bit sizes linear in the iteration count while still
// shrinking the bracket by a factor <= 3/4 per step.
Rat dyadic_midpoint(const Rat& lo, const Rat& hi) {
  Rat width = hi - lo;
  Rat grid(1);
  while (grid * 4 > width) grid /= 2;
  Rat center = (lo + hi) / 2;
  // Round center to the nearest multiple of grid.
  Rat scaled = center / grid;
  Int snapped;
  Rat half = scaled + make_rat(1, 2);
  mpz_fdiv_q(snapped.get_mpz_t(), half.get_num().get_mpz_t(),
             half.get_den().get_mpz_t());
  Rat mid = Rat(snapped) * grid;
  if (mid <= lo || mid >= hi) return center;  // safety net; cannot drift out
  return mid;
}

// Sign of ((d))_q - x: +1, 0, or -1. Strictly decreasing in q.
int sign_at(const EventuallyPeriodicWord& d, const Rat& x, const Rat& q) {
  Rat value = eval_series(d, q);
  return cmp(value, x);
}

struct StreamSign {
  const DigitStream& g;
  const Rat& x;
  std::size_t max_prefix;
  mutable std::size_t len = 32;

  // Sign via prefix enclosures, doubling the prefix until decisive. An exact
  // hit (value == x) on a non-periodic stream can never be certified, so the
  // prefix cap converts that case into InconclusiveError upstream.
  int operator()(const Rat& q, const RatInterval& bracket) const {
    for (;;) {
      FiniteWord p;
      try {
        p = g.prefix(len);
      } catch (const std::length_error&) {
        throw InconclusiveError(
            "solve_base_stream: stream budget exhausted near q = " +
                format_rational(q),
            bracket);
      }
      RatInterval v = eval_enclosure(p, 1, RatInterval::point(q));
      if (v.lo > x) return 1;
      if (v.hi < x) return -1;
      if (len >= max_prefix)
        throw InconclusiveError(
            "solve_base_stream: sign undecided at prefix cap near q = " +
                format_rational(q),
            bracket);
      len = std::min(len * 2, max_prefix);
    }
  }
};

template <typename SignFn>
BaseEnclosure bisect(const BaseEnclosure& bracket, const Rat& tol,
                     const SolveOptions& opts, SignFn&& sign) {
  if (tol <= 0) throw std::domain_error("solve_base: tol must be positive");
  Rat lo = bracket.lo, hi = bracket.hi;
  int slo = sign(lo, RatInterval(lo, hi));
  if (slo == 0) return BaseEnclosure(lo, lo);
  int shi = sign(hi, RatInterval(lo, hi));
  if (shi == 0) return BaseEnclosure(hi, hi);
  if (slo < 0 || shi > 0)
    throw NoBracketError(
        "solve_base: series minus x does not change sign over [" +
        format_rational(lo) + ", " + format_rational(hi) + "]");
  for (unsigned iter = 0; iter < opts.max_iters; ++iter) {
    if (hi - lo <= tol) return BaseEnclosure(lo, hi);
    Rat mid = dyadic_midpoint(lo, hi);
    int s = sign(mid, RatInterval(lo, hi));
    if (s == 0) return BaseEnclosure(mid, mid);
    if (s > 0)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  if (hi - lo <= tol) return BaseEnclosure(lo, hi);
  throw InconclusiveError("solve_base: iteration cap hit at width " +
                              format_rational(hi - lo),
                          RatInterval(lo, hi));
}

}  // namespace

BaseEnclosure solve_base(const EventuallyPeriodicWord& d, const Rat& x,
                         const BaseEnclosure& bracket, const Rat& tol,
                         const SolveOptions& opts) {
  if (!d.is_binary())
    throw std::invalid_argument("solve_base: sequence not binary");
  if (d.is_zero())
    throw std::invalid_argument("solve_base: zero sequence has no root");
  return bisect(bracket, tol, opts, [&](const Rat& q, const RatInterval&) {
    return sign_at(d, x, q);
  });
}

BaseEnclosure solve_base_stream(const DigitStream& g, const Rat& x,
                                const BaseEnclosure& bracket, const Rat& tol,
                                const SolveOptions& opts) {
  StreamSign sign{g, x, opts.max_prefix};
  return bisect(bracket, tol, opts,
                [&](const Rat& q, const RatInterval& best) {
                  return sign(q, best);
                });
}

BaseEnclosure golden_ratio(const Rat& tol) {
  static const EventuallyPeriodicWord one_zero =
      EventuallyPeriodicWord::periodic(FiniteWord::parse("10"));
  return solve_base(one_zero, Rat(1), BaseEnclosure(make_rat(3, 2), Rat(2)),
                    tol);
}

BaseEnclosure default_univoque_bracket() {
  return BaseEnclosure(make_rat(8, 5), Rat(2));
}

}  // namespace univoque

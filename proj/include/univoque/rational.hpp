#pragma once

#include <gmpxx.h>

#include <string>

namespace univoque {

using Int = mpz_class;
using Rat = mpq_class;

// Exact rational from machine integers. den must be nonzero.
Rat make_rat(long num, long den);

// Parses "p/q", "7", "0.75", "-1.25", "1e-5", "2.5e3". Always exact; never
// routes through floating point. Throws std::invalid_argument on bad syntax.
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& r);

// Smallest d >= 0 with 10^-d <= tol. Used to pick decimal rendering width.
int digits_for_tol(const Rat& tol);

// Fixed-point decimal, correctly rounded to `digits` fractional places
// (round to nearest, ties to even).
std::string to_decimal(const Rat& r, int digits);

Int pow_int(const Int& base, unsigned long e);

// base^e for possibly negative e. base must be nonzero when e < 0.
Rat pow_rat(const Rat& base, long e);

// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(Rat l, Rat h);  // throws if l > h
  static RatInterval point(const Rat& v);

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

RatInterval add(const RatInterval& a, const RatInterval& b);
RatInterval sub(const RatInterval& a, const RatInterval& b);
RatInterval mul(const RatInterval& a, const RatInterval& b);
RatInterval scale(const RatInterval& a, const Rat& factor);

// Tri-state outcome of an interval comparison. "Undecided" means the
// enclosures overlap too much to certify either direction.
enum class Cmp3 { True, False, Undecided };

Cmp3 certified_le(const RatInterval& a, const RatInterval& b);
Cmp3 certified_lt(const RatInterval& a, const RatInterval& b);
const char* cmp3_name(Cmp3 v);

// Enclosure of ln(x) for rational x > 0, with width <= err. Uses the atanh
// series 2*sum z^(2k+1)/(2k+1), z=(x-1)/(x+1), with a geometric tail bound,
// after range-reducing x into [1, 2] by powers of two.
RatInterval ln_enclosure(const Rat& x, const Rat& err);

// Enclosure of log2(n) for integer n >= 1, width <= err.
RatInterval log2_enclosure(const Int& n, const Rat& err);

}  // namespace univoque

#include "univoque/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace univoque {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rat {
    throw std::invalid_argument("parse_rational: bad rational literal '" +
                                text + "'");
  };

  std::string s = text;
  if (s.empty()) return fail();

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) return fail();

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Int n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
    value = Rat(n, d);
    value.canonicalize();
  } else {
    // Decimal form: digits [. digits] [e|E [sign] digits], all exact.
    std::string mantissa = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      std::string es = s.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
        eneg = (es[0] == '-');
        es.erase(0, 1);
      }
      if (!all_digits(es) || es.size() > 6) return fail();
      exp10 = std::stol(es);
      if (eneg) exp10 = -exp10;
    }
    std::string intpart = mantissa, fracpart;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      intpart = mantissa.substr(0, dot);
      fracpart = mantissa.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty()) return fail();
    if (!intpart.empty() && !all_digits(intpart)) return fail();
    if (!fracpart.empty() && !all_digits(fracpart)) return fail();
    Int digits((intpart + fracpart).empty() ? "0" : intpart + fracpart, 10);
    long shift = exp10 - static_cast<long>(fracpart.size());
    value = Rat(digits);
    if (shift > 0) {
      value *= Rat(pow_int(10, static_cast<unsigned long>(shift)));
    } else if (shift < 0) {
      value /= Rat(pow_int(10, static_cast<unsigned long>(-shift)));
    }
    value.canonicalize();
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int digits_for_tol(const Rat& tol) {
  if (tol <= 0) throw std::domain_error("digits_for_tol: tol must be positive");
  int d = 0;
  Rat p(1);
  while (p > tol) {
    p /= 10;
    ++d;
    if (d > 100000) throw std::domain_error("digits_for_tol: tol too small");
  }
  return d;
}

std::string to_decimal(const Rat& r, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digits");
  const bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  Int scale = pow_int(10, static_cast<unsigned long>(digits));
  // a * scale = q + rem/den with 0 <= rem < den; round half to even.
  Rat scaled = a * Rat(scale);
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_num().get_mpz_t(),
              scaled.get_den().get_mpz_t());
  Int twice = rem * 2;
  int c = cmp(twice, scaled.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string body = q.get_str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (static_cast<int>(body.size()) <= digits)
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." +
          body.substr(body.size() - digits);
  }
  if (neg && out.find_first_not_of("0.") != std::string::npos) out.insert(0, 1, '-');
  return out;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0)
    throw std::domain_error("pow_rat: zero base with negative exponent");
  unsigned long mag = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
  Rat r(pow_int(base.get_num(), mag), pow_int(base.get_den(), mag));
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::point(const Rat& v) { return RatInterval(v, v); }

RatInterval add(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval sub(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval scale(const RatInterval& a, const Rat& factor) {
  if (factor >= 0) return RatInterval(a.lo * factor, a.hi * factor);
  return RatInterval(a.hi * factor, a.lo * factor);
}

Cmp3 certified_le(const RatInterval& a, const RatInterval& b) {
  if (a.hi <= b.lo) return Cmp3::True;
  if (a.lo > b.hi) return Cmp3::False;
  return Cmp3::Undecided;
}

Cmp3 certified_lt(const RatInterval& a, const RatInterval& b) {
  if (a.hi < b.lo) return Cmp3::True;
  if (a.lo >= b.hi) return Cmp3::False;
  return Cmp3::Undecided;
}

const char* cmp3_name(Cmp3 v) {
  switch (v) {
    case Cmp3::True: return "true";
    case Cmp3::False: return "false";
    default: return "undecided";
  }
}

namespace {

// ln on [1, 2] via 2*atanh((x-1)/(x+1)); tail of the series after the k-th
// term is below term_{k+1} / (1 - z^2).
RatInterval ln_core(const Rat& x, const Rat& err) {
  if (x == 1) return RatInterval(0, 0);
  Rat z = (x - 1) / (x + 1);
  Rat z2 = z * z;
  Rat one_minus = 1 - z2;
  Rat term = z;  // z^(2k+1)
  Rat sum = 0;
  for (unsigned long k = 0; k < 1000000; ++k) {
    sum += term / (2 * k + 1);
    Rat next = term * z2;
    Rat tail_bound = 2 * next / ((2 * k + 3) * one_minus);
    if (tail_bound <= err) return RatInterval(2 * sum, 2 * sum + tail_bound);
    term = next;
  }
  throw std::domain_error("ln_enclosure: series did not converge");
}

}  // namespace

RatInterval ln_enclosure(const Rat& x, const Rat& err) {
  if (x <= 0) throw std::domain_error("ln_enclosure: x must be positive");
  if (err <= 0) throw std::domain_error("ln_enclosure: err must be positive");
  if (x < 1) {
    RatInterval inv = ln_enclosure(1 / x, err);
    return RatInterval(-inv.hi, -inv.lo);
  }
  // Reduce to m in [1, 2]: ln x = t ln 2 + ln m.
  long t = 0;
  Rat m = x;
  while (m > 2) {
    m /= 2;
    ++t;
  }
  if (t == 0) return ln_core(m, err);
  Rat part = err / (2 * (t + 1));
  RatInterval ln2 = ln_core(Rat(2), part);
  RatInterval lnm = ln_core(m, part);
  return RatInterval(t * ln2.lo + lnm.lo, t * ln2.hi + lnm.hi);
}

RatInterval log2_enclosure(const Int& n, const Rat& err) {
  if (n < 1) throw std::domain_error("log2_enclosure: n must be >= 1");
  if (err <= 0) throw std::domain_error("log2_enclosure: err must be positive");
  if (mpz_popcount(n.get_mpz_t()) == 1) {
    // Exact power of two.
    Rat e(static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1));
    return RatInterval(e, e);
  }
  // log2 n = ln n / ln 2 with directed rounding. ln 2 > 0.69, ln n < bits.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Rat e2 = err / Rat(8 * static_cast<unsigned long>(bits + 1));
  Rat e1 = err / 8;
  RatInterval lnn = ln_enclosure(Rat(n), e1);
  RatInterval ln2 = ln_enclosure(Rat(2), e2);
  return RatInterval(lnn.lo / ln2.hi, lnn.hi / ln2.lo);
}

}  // namespace univoque

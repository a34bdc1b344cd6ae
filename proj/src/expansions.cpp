#include "univoque/expansions.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace univoque {

namespace {

// sum_{i=1}^{len} w_i b^i a^(len-i): integer numerator of the prefix value
// of w at q = a/b, scaled by a^len.
Int weighted_sum(const FiniteWord& w, const Int& a, const Int& b) {
  // Horner from the front: S_k = S_{k-1} * b + w_k * b * a^(len-k) ... cheaper
  // to run from the back: S = sum w_i b^i a^(len-i).
  Int s = 0;
  Int bpow = 1;
  // Walk i = len .. 1; maintain b^i via bpow * b each step means forward;
  // instead accumulate: s = s*a + w_i * b^i. Build powers of b on the fly.
  // s after processing positions 1..k equals sum_{i<=k} w_i b^i a^(k-i).
  for (std::size_t k = 0; k < w.size(); ++k) {
    bpow *= b;
    s = s * a + w.at(k) * bpow;
  }
  return s;
}

}  // namespace

Rat eval_series(const EventuallyPeriodicWord& d, const Rat& q) {
  if (q <= 1) throw std::domain_error("eval_series: q must exceed 1");
  const Int& a = q.get_num();
  const Int& b = q.get_den();
  const FiniteWord& pre = d.preperiod();
  const FiniteWord& per = d.period();
  const std::size_t s = pre.size();
  const std::size_t t = per.size();

  // value = U / a^s + (b^s / a^s) * V / (a^t - b^t)
  //       = (U (a^t - b^t) + V b^s) / (a^s (a^t - b^t))
  Int U = weighted_sum(pre, a, b);
  Int V = weighted_sum(per, a, b);
  Int at = pow_int(a, t), bt = pow_int(b, t);
  Int as = pow_int(a, s), bs = pow_int(b, s);
  Int tail = at - bt;  // positive since a > b >= 1
  Rat value(U * tail + V * bs, as * tail);
  value.canonicalize();
  return value;
}

RatInterval eval_enclosure(const FiniteWord& prefix, Digit tail_max,
                           const RatInterval& qi) {
  if (qi.lo <= 1) throw std::domain_error("eval_enclosure: q must exceed 1");
  if (tail_max > 9)
    throw std::invalid_argument("eval_enclosure: tail digit out of range");
  // Monotone in q (decreasing) and in the tail digits (increasing), so the
  // extremes are attained at the corners.
  Rat lo = eval_series(EventuallyPeriodicWord::finite(prefix), qi.hi);
  Rat hi = eval_series(
      EventuallyPeriodicWord(prefix, FiniteWord::run(tail_max, 1)), qi.lo);
  return RatInterval(std::move(lo), std::move(hi));
}

FiniteWord expansion_digits(const Rat& x, const Rat& q, std::size_t n,
                            ExpansionMode mode) {
  if (q <= 1 || q > 2)
    throw std::domain_error("expansion_digits: q must be in (1, 2]");
  if (x < 0 || x > 1 / (q - 1))
    throw std::domain_error("expansion_digits: x outside [0, 1/(q-1)]");
  FiniteWord out;
  Rat r = x;
  for (std::size_t i = 0; i < n; ++i) {
    Rat scaled = q * r;
    bool one = (mode == ExpansionMode::Greedy) ? scaled >= 1 : scaled > 1;
    if (one) {
      out.append(1);
      r = scaled - 1;
    } else {
      out.append(0);
      r = std::move(scaled);
    }
  }
  return out;
}

EventuallyPeriodicWord dyadic_expansion(const Rat& x) {
  if (x <= 0 || x > 1)
    throw std::domain_error("dyadic_expansion: x must be in (0, 1]");
  // Quasi-greedy: remainders stay in (0, 1], so they repeat within den(x)
  // steps and the expansion never terminates in 0^inf.
  std::vector<Digit> digits;
  std::map<Rat, std::size_t> seen;
  Rat r = x;
  for (;;) {
    auto it = seen.find(r);
    if (it != seen.end()) {
      std::size_t start = it->second;
      FiniteWord pre(std::vector<Digit>(digits.begin(),
                                        digits.begin() +
                                            static_cast<long>(start)));
      FiniteWord per(std::vector<Digit>(
          digits.begin() + static_cast<long>(start), digits.end()));
      return EventuallyPeriodicWord(std::move(pre), std::move(per));
    }
    seen.emplace(r, digits.size());
    Rat scaled = 2 * r;
    if (scaled > 1) {
      digits.push_back(1);
      r = scaled - 1;
    } else {
      digits.push_back(0);
      r = std::move(scaled);
    }
  }
}

FiniteWord quasi_greedy_alpha(const Rat& q, std::size_t n) {
  return expansion_digits(Rat(1), q, n, ExpansionMode::QuasiGreedy);
}

namespace {

// Lexicographic comparison of an eventually periodic word against a finite
// digit prefix of another word: responds with the comparison outcome if it
// is decided within the prefix, or Unknown otherwise.
enum class PrefixCmp { Less, Greater, Undecided };

PrefixCmp compare_against_prefix(const EventuallyPeriodicWord& c,
                                 const FiniteWord& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Digit dc = c.digit(i), da = alpha.at(i);
    if (dc < da) return PrefixCmp::Less;
    if (dc > da) return PrefixCmp::Greater;
  }
  return PrefixCmp::Undecided;
}

}  // namespace

UniquenessVerdict is_unique_expansion(const EventuallyPeriodicWord& a,
                                      const RatInterval& q,
                                      std::size_t depth) {
  if (!a.is_binary())
    throw std::invalid_argument("is_unique_expansion: sequence not binary");
  if (q.lo <= 1 || q.hi > 2)
    throw std::domain_error("is_unique_expansion: base must be in (1, 2]");
  if (depth == 0) return {UniquenessVerdict::Kind::Unknown, 0};

  // Digits of alpha(q) valid across the whole enclosure: alpha is monotone
  // in q, so the common prefix of the two endpoint expansions is pinned.
  FiniteWord alpha_lo = quasi_greedy_alpha(q.lo, depth);
  FiniteWord alpha;
  if (q.lo == q.hi) {
    alpha = std::move(alpha_lo);
  } else {
    FiniteWord alpha_hi = quasi_greedy_alpha(q.hi, depth);
    std::size_t common = 0;
    while (common < depth && alpha_lo.at(common) == alpha_hi.at(common))
      ++common;
    alpha = alpha_lo.prefix(common);
  }

  // Criterion: a is the unique expansion of its value iff for every n >= 1,
  //   a_n = 0  =>  shift^n(a)      < alpha(q)
  //   a_n = 1  =>  shift^n(comp a) < alpha(q).
  // Checks repeat once n exceeds preperiod+period, so that depth certifies.
  const std::size_t cover = a.preperiod().size() + a.period().size();
  EventuallyPeriodicWord comp = complement(a);
  bool undecided = false;
  for (std::size_t n = 1; n <= depth; ++n) {
    EventuallyPeriodicWord c =
        a.digit(n - 1) == 0 ? shift(a, n) : shift(comp, n);
    switch (compare_against_prefix(c, alpha)) {
      case PrefixCmp::Less:
        break;
      case PrefixCmp::Greater:
        return {UniquenessVerdict::Kind::NotUnique, depth};
      case PrefixCmp::Undecided:
        undecided = true;
        break;
    }
  }
  if (undecided || depth < cover)
    return {UniquenessVerdict::Kind::Unknown, depth};
  return {UniquenessVerdict::Kind::Unique, depth};
}

ExpansionCount count_expansions_bruteforce(const Rat& x, const Rat& q,
                                           std::size_t depth,
                                           std::size_t cap) {
  if (q <= 1 || q > 2)
    throw std::domain_error("count_expansions_bruteforce: q must be in (1, 2]");
  Rat upper = 1 / (q - 1);
  if (x < 0 || x > upper)
    throw std::domain_error(
        "count_expansions_bruteforce: x outside [0, 1/(q-1)]");
  if (cap == 0)
    throw std::invalid_argument("count_expansions_bruteforce: zero cap");

  // One frontier entry per surviving digit prefix. A remainder r survives
  // iff 0 <= r <= 1/(q-1); every survivor extends to a real expansion, so
  // the frontier size is a lower bound for the expansion count.
  std::vector<Rat> frontier{x};
  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<Rat> next;
    next.reserve(frontier.size() * 2);
    for (const Rat& r : frontier) {
      Rat scaled = q * r;
      for (int d = 0; d <= 1; ++d) {
        Rat rest = scaled - d;
        if (rest >= 0 && rest <= upper) next.push_back(std::move(rest));
        if (next.size() > cap) return {cap, true};
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // x has no expansion at all (x > 0 corner)
  }
  return {frontier.size(), false};
}

}  // namespace univoque

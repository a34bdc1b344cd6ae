#include "univoque/components.hpp"

#include <utility>

namespace univoque {

BaseEnclosure komornik_loreti(const Rat& tol, const SolveOptions& opts) {
  DevkStream stream(FiniteWord::parse("10"));
  return solve_base_stream(stream, Rat(1), default_univoque_bracket(), tol,
                           opts);
}

ComponentRecord component_for_word(const FiniteWord& w, const Rat& tol,
                                   const SolveOptions& opts) {
  if (!check_admissible(w))
    throw std::invalid_argument("component_for_word: word '" + w.str() +
                                "' is not admissible");
  ComponentRecord rec;
  rec.word = w;
  rec.q_left = solve_base(EventuallyPeriodicWord::periodic(w), Rat(1),
                          default_univoque_bracket(), tol, opts);
  DevkStream stream(w);
  rec.q_right = solve_base_stream(stream, Rat(1), default_univoque_bracket(),
                                  tol, opts);
  rec.q_kl = komornik_loreti(tol, opts);
  return rec;
}

namespace {

RatInterval difference(const BaseEnclosure& a, const BaseEnclosure& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);  // a - b
}

RatInterval quotient(const BaseEnclosure& a, const BaseEnclosure& b) {
  return RatInterval(a.lo / b.hi, a.hi / b.lo);  // a / b, both positive
}

}  // namespace

Prop51Report check_prop51(const FiniteWord& w, const Rat& tol,
                          const SolveOptions& opts) {
  constexpr int kRefineRounds = 3;
  Rat t = tol;
  for (int round = 0;; ++round) {
    ComponentRecord rec = component_for_word(w, t, opts);
    RatInterval right_gap = difference(rec.q_right, rec.q_left);
    RatInterval left_gap = difference(rec.q_left, rec.q_kl);
    RatInterval square = mul(rec.q_left.interval(), rec.q_left.interval());
    RatInterval product = mul(rec.q_right.interval(), rec.q_kl.interval());

    Cmp3 sum_gap = certified_lt(left_gap, right_gap);
    Cmp3 product_gap = certified_lt(square, product);
    if (sum_gap != Cmp3::Undecided && product_gap != Cmp3::Undecided) {
      Prop51Report rep;
      rep.word = w;
      rep.q_left = rec.q_left;
      rep.q_right = rec.q_right;
      rep.q_kl = rec.q_kl;
      rep.sum_gap_ok = (sum_gap == Cmp3::True);
      rep.product_gap_ok = (product_gap == Cmp3::True);
      rep.right_gap = std::move(right_gap);
      rep.left_gap = std::move(left_gap);
      rep.right_ratio = quotient(rec.q_right, rec.q_left);
      rep.left_ratio = quotient(rec.q_left, rec.q_kl);
      rep.tol_used = t;
      return rep;
    }
    if (round >= kRefineRounds)
      throw InconclusiveError(
          "check_prop51: comparisons undecided at tolerance " +
              format_rational(t),
          right_gap);
    t /= 65536;
  }
}

bool sum_gap_witness(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  if (!(a <= c && c < d && d <= b))
    throw std::invalid_argument(
        "sum_gap_witness: need a <= c < d <= b (gap inside the hull)");
  // Every element of A + A lands in [2a, 2c] or [a + d, 2b]; the window
  // (2c, a + d) is missed, and it is non-empty exactly when 2c < a + d.
  return d - c > c - a && 2 * c < a + d;
}

DifferenceReport explore_difference(const CantorLevel& level) {
  DifferenceReport rep;
  rep.cover = sum_cover(depth_cover(level), Rat(-1), depth_cover(level));
  rep.block_count = rep.cover.size();
  rep.hull =
      RatInterval(rep.cover.front().left.lo, rep.cover.back().right.hi);
  return rep;
}

DifferenceReport explore_difference(const Rat& x, std::size_t j,
                                    std::size_t depth, const Rat& tol,
                                    const SolveOptions& opts) {
  return explore_difference(realize_level(x, j, depth, tol, opts));
}

}  // namespace univoque

#include "univoque/matching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "univoque/expansions.hpp"

namespace univoque {

const char* matching_kind_name(MatchingVerdict::Kind k) {
  switch (k) {
    case MatchingVerdict::Kind::Matched: return "matched";
    case MatchingVerdict::Kind::NonMatching: return "non-matching";
    default: return "undecided";
  }
}

Rat s_alpha_step(const Rat& x, const Rat& alpha) {
  if (alpha < 1 || alpha > 2)
    throw std::domain_error("s_alpha_step: alpha must be in [1, 2]");
  if (x < -1 || x > 1)
    throw std::domain_error("s_alpha_step: x must be in [-1, 1]");
  Rat half(1, 2);
  if (x < -half) return Rat(2 * x + alpha);
  if (x > half) return Rat(2 * x - alpha);
  return Rat(2 * x);
}

MatchingVerdict detect_matching(const Rat& alpha, std::size_t budget) {
  if (alpha < 1 || alpha > 2)
    throw std::domain_error("detect_matching: alpha must be in [1, 2]");
  // The two orbits start at the one-sided limits of the map at 1/2. All
  // points keep denominators dividing den(alpha), so the joint state space
  // is finite and recurrence is guaranteed for a large enough budget.
  Rat u(1), v(1 - alpha);
  std::map<std::pair<Rat, Rat>, std::size_t> seen;
  seen.emplace(std::make_pair(u, v), 0);
  for (std::size_t k = 1; k <= budget; ++k) {
    u = s_alpha_step(u, alpha);
    v = s_alpha_step(v, alpha);
    if (u == v)
      return {MatchingVerdict::Kind::Matched, k, 0, budget};
    auto [it, inserted] = seen.emplace(std::make_pair(u, v), k);
    if (!inserted)
      return {MatchingVerdict::Kind::NonMatching, k, k - it->second, budget};
  }
  return {MatchingVerdict::Kind::Undecided, 0, 0, budget};
}

MatchingVerdict doubling_criterion(const Rat& alpha, std::size_t budget) {
  if (alpha <= 1 || alpha > 2)
    throw std::domain_error("doubling_criterion: alpha must be in (1, 2]");
  Rat y = 1 / alpha;
  const Rat wlo = 1 / (2 * alpha);
  const Rat whi = 1 - wlo;
  std::map<Rat, std::size_t> seen;
  for (std::size_t n = 0; n <= budget; ++n) {
    if (wlo < y && y < whi)
      return {MatchingVerdict::Kind::Matched, n, 0, budget};
    auto [it, inserted] = seen.emplace(y, n);
    if (!inserted)
      return {MatchingVerdict::Kind::NonMatching, n, n - it->second, budget};
    y *= 2;
    if (y >= 1) y -= 1;
  }
  return {MatchingVerdict::Kind::Undecided, 0, 0, budget};
}

std::vector<std::pair<Rat, Rat>> matching_orbit(const Rat& alpha,
                                                std::size_t n) {
  if (alpha < 1 || alpha > 2)
    throw std::domain_error("matching_orbit: alpha must be in [1, 2]");
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(n);
  Rat u(1), v(1 - alpha);
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(u, v);
    u = s_alpha_step(u, alpha);
    v = s_alpha_step(v, alpha);
  }
  return out;
}

bool check_eq41(const EventuallyPeriodicWord& a, std::size_t depth) {
  if (!a.is_binary())
    throw std::invalid_argument("check_eq41: word not binary");
  const EventuallyPeriodicWord comp = complement(a);
  for (std::size_t n = 1; n <= depth; ++n) {
    EventuallyPeriodicWord s = shift(a, n);
    if (a.digit(n - 1) == 0) {
      if (lex_compare(s, a) == std::strong_ordering::greater) return false;
    } else {
      if (lex_compare(s, comp) == std::strong_ordering::less) return false;
    }
  }
  return true;
}

namespace {

// Exact alpha-space projection of a sequence endpoint: alpha = 1/((w))_2.
BaseEnclosure alpha_point(const EventuallyPeriodicWord& w) {
  Rat v = eval_series(w, Rat(2));
  Rat a = 1 / v;
  return BaseEnclosure(a, a);
}

}  // namespace

CantorLevel build_nm(std::size_t m, std::size_t depth) {
  if (m < 3) throw std::invalid_argument("build_nm: m must be >= 3");
  if (depth <= m) throw std::invalid_argument("build_nm: depth must exceed m");
  const FiniteWord stem = FiniteWord::run(1, m);
  const std::size_t tail_depth = depth - m;

  CantorLevel level;
  level.x = 0;
  level.j = 0;
  level.m_offset = 0;
  level.run_bound = m;
  level.depth = depth;
  level.stem = stem;

  // The projection q -> 1/((.))_2 reverses order, so a sequence-space
  // interval [l, r] becomes the alpha interval [1/v(r), 1/v(l)].
  auto alpha_interval = [&](const SymbolicInterval& iv) {
    return std::make_pair(alpha_point(iv.right), alpha_point(iv.left));
  };
  auto add_gap = [&](FiniteWord tail, const SymbolicInterval& child0,
                     const SymbolicInterval& child1) {
    // In alpha space the 1-child subtree sits left of the 0-child subtree.
    auto [a1, a2] = alpha_interval(child1);
    auto [a3, a4] = alpha_interval(child0);
    level.gaps.push_back({std::move(tail), a1, a2, a3, a4});
  };

  // Root split: both 1^m 0... and 1^m 1... branches exist, with a gap
  // between them that has no single-word label (tail is empty).
  {
    FiniteWord w0 = stem, w1 = stem;
    w0.append(0);
    w1.append(1);
    add_gap(FiniteWord{}, symbolic_interval(w0, m, 1),
            symbolic_interval(w1, m, 1));
  }

  for (const FiniteWord& tail :
       enumerate_tails(m, tail_depth, /*first_digit_zero=*/false)) {
    FiniteWord word = stem.concat(tail);
    if (tail.size() == tail_depth) {
      auto [lo, hi] = alpha_interval(symbolic_interval(word, m, tail.size()));
      level.leaves.push_back({tail, lo, hi});
    } else if (gap_status(word, m, tail.size()) == GapStatus::HasGap) {
      FiniteWord w0 = word, w1 = word;
      w0.append(0);
      w1.append(1);
      add_gap(tail, symbolic_interval(w0, m, tail.size() + 1),
              symbolic_interval(w1, m, tail.size() + 1));
    }
  }

  // Restore ascending alpha order: enumeration was ascending in sequence
  // space, which the projection reversed.
  std::reverse(level.leaves.begin(), level.leaves.end());
  std::sort(level.gaps.begin(), level.gaps.end(),
            [](const RealizedGap& a, const RealizedGap& b) {
              return a.q1.lo < b.q1.lo;
            });
  return level;
}

}  // namespace univoque

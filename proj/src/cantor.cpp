#include "univoque/cantor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "univoque/expansions.hpp"

namespace univoque {

const char* expansion_case_name(ExpansionCase c) {
  switch (c) {
    case ExpansionCase::A: return "A";
    case ExpansionCase::B: return "B";
    case ExpansionCase::C: return "C";
    default: return "D";
  }
}

const char* gap_status_name(GapStatus s) {
  switch (s) {
    case GapStatus::HasGap: return "has-gap";
    case GapStatus::OnlyChild0: return "only-child-0";
    default: return "only-child-1";
  }
}

const char* check_verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Holds: return "holds";
    case CheckVerdict::Fails: return "fails";
    default: return "undecided";
  }
}

std::vector<std::size_t> CaseDecomposition::runs(std::size_t count) const {
  // Alternating digit blocks of the dyadic word. Only cases C and D call
  // this, where every block is finite.
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (out.size() < count) {
    Digit d = dyadic_.digit(i);
    std::size_t len = 0;
    while (dyadic_.digit(i) == d) {
      ++len;
      ++i;
      if (len > 1000000)
        throw std::logic_error("CaseDecomposition: runaway digit block");
    }
    out.push_back(len);
  }
  return out;
}

std::size_t CaseDecomposition::run_bound(std::size_t j) const {
  if (j == 0) throw std::invalid_argument("run_bound: j starts at 1");
  switch (case_) {
    case ExpansionCase::A:
    case ExpansionCase::B:
      return j + 2;
    case ExpansionCase::C: {
      // N(j) = r_1 + s_1 + ... + r_{j+2} + s_{j+2} - 2
      auto r = runs(2 * (j + 2));
      std::size_t sum = 0;
      for (std::size_t v : r) sum += v;
      return sum - 2;
    }
    default: {
      // N(j) = s_1 + r_2 + ... + s_{j+1} + r_{j+2} - 1
      auto r = runs(2 * (j + 2) - 1);
      std::size_t sum = 0;
      for (std::size_t i = 1; i < r.size(); ++i) sum += r[i];
      return sum - 1;
    }
  }
}

FiniteWord CaseDecomposition::stem(std::size_t j) const {
  const std::size_t N = run_bound(j);
  switch (case_) {
    case ExpansionCase::A:
      return dyadic_.preperiod().concat(FiniteWord::run(1, N));
    case ExpansionCase::B:
      return FiniteWord::run(1, N);
    case ExpansionCase::C: {
      FiniteWord head = dyadic_.first(N + 2);
      head.append(0);
      head.append(1);
      return head;
    }
    default: {
      FiniteWord head = dyadic_.first(m_ - 3 + N + 1);  // r_1 + N + 1 digits
      head.append(0);
      head.append(1);
      return head;
    }
  }
}

CaseDecomposition decompose(const Rat& x) {
  CaseDecomposition dec;
  dec.x_ = x;
  dec.dyadic_ = dyadic_expansion(x);  // validates 0 < x <= 1
  const FiniteWord& pre = dec.dyadic_.preperiod();
  const FiniteWord& per = dec.dyadic_.period();
  if (per.size() == 1 && per.at(0) == 1) {
    // Expansion ends in 1^inf; the canonical preperiod is x_1..x_m 0.
    dec.case_ = pre.empty() ? ExpansionCase::B : ExpansionCase::A;
    dec.m_ = pre.size();
  } else if (dec.dyadic_.digit(0) == 1) {
    dec.case_ = ExpansionCase::C;
    dec.m_ = 4;
  } else {
    dec.case_ = ExpansionCase::D;
    std::size_t r1 = 0;
    while (dec.dyadic_.digit(r1) == 0) ++r1;
    dec.m_ = r1 + 3;
  }
  return dec;
}

std::vector<FiniteWord> enumerate_tails(std::size_t run_bound,
                                        std::size_t max_len,
                                        bool first_digit_zero) {
  if (run_bound < 2)
    throw std::invalid_argument("enumerate_tails: run bound must be >= 2");
  std::vector<FiniteWord> out;
  // Frontier entries carry (word, current trailing run length); runs are
  // measured inside the tail only.
  std::vector<std::pair<FiniteWord, std::size_t>> frontier;
  for (Digit d = 0; d <= 1; ++d) {
    if (first_digit_zero && d == 1) continue;
    frontier.emplace_back(FiniteWord::run(d, 1), 1);
  }
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    for (const auto& [w, run] : frontier) out.push_back(w);
    if (len == max_len) break;
    std::vector<std::pair<FiniteWord, std::size_t>> next;
    next.reserve(frontier.size() * 2);
    for (const auto& [w, run] : frontier) {
      for (Digit d = 0; d <= 1; ++d) {
        std::size_t new_run = (w.last() == d) ? run + 1 : 1;
        if (new_run >= run_bound) continue;  // would create a forbidden factor
        FiniteWord ext = w;
        ext.append(d);
        next.emplace_back(std::move(ext), new_run);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<FiniteWord> enumerate_words(const CaseDecomposition& dec,
                                        std::size_t j, std::size_t max_len) {
  const FiniteWord stem = dec.stem(j);
  const std::size_t N = dec.run_bound(j);
  if (max_len <= stem.size())
    throw std::invalid_argument("enumerate_words: max_len must exceed |stem|");
  std::vector<FiniteWord> out;
  for (const FiniteWord& tail :
       enumerate_tails(N, max_len - stem.size(), /*first_digit_zero=*/true))
    out.push_back(stem.concat(tail));
  return out;
}

namespace {

// Trailing-run length of w seen by the constrained tail region, plus the
// form validation shared by symbolic_interval and gap_status. Returns k.
std::size_t suffix_run(const FiniteWord& w, std::size_t run_bound,
                       std::size_t tail_len) {
  if (w.empty())
    throw std::invalid_argument("symbolic_interval: empty word");
  std::size_t k = w.trailing_run();
  if (tail_len != kWholeWord && k > tail_len) k = tail_len;
  if (k == 0 || k > run_bound - 1 || k >= w.size())
    throw std::invalid_argument(
        "symbolic_interval: word does not end in an admissible 10^k / 01^k "
        "suffix");
  return k;
}

}  // namespace

SymbolicInterval symbolic_interval(const FiniteWord& w, std::size_t run_bound,
                                   std::size_t tail_len) {
  const std::size_t N = run_bound;
  const std::size_t k = suffix_run(w, N, tail_len);
  if (w.last() == 0) {
    // ends with 10^k: [ w 0^(N-1-k) (1 0^(N-1))^inf , w (1^(N-1) 0)^inf ]
    FiniteWord left_pre = w.concat(FiniteWord::run(0, N - 1 - k));
    FiniteWord left_per = FiniteWord::run(1, 1).concat(FiniteWord::run(0, N - 1));
    FiniteWord right_per = FiniteWord::run(1, N - 1).concat(FiniteWord::run(0, 1));
    return {EventuallyPeriodicWord(std::move(left_pre), std::move(left_per)),
            EventuallyPeriodicWord(w, std::move(right_per))};
  }
  // ends with 01^k: [ w (0^(N-1) 1)^inf , w 1^(N-1-k) (0 1^(N-1))^inf ]
  FiniteWord left_per = FiniteWord::run(0, N - 1).concat(FiniteWord::run(1, 1));
  FiniteWord right_pre = w.concat(FiniteWord::run(1, N - 1 - k));
  FiniteWord right_per = FiniteWord::run(0, 1).concat(FiniteWord::run(1, N - 1));
  return {EventuallyPeriodicWord(w, std::move(left_per)),
          EventuallyPeriodicWord(std::move(right_pre), std::move(right_per))};
}

GapStatus gap_status(const FiniteWord& w, std::size_t run_bound,
                     std::size_t tail_len) {
  const std::size_t k = suffix_run(w, run_bound, tail_len);
  if (k == run_bound - 1)
    return w.last() == 0 ? GapStatus::OnlyChild1 : GapStatus::OnlyChild0;
  return GapStatus::HasGap;
}

namespace {

// Memoizing endpoint solver for one level realization.
class EndpointSolver {
 public:
  EndpointSolver(Rat x, Rat tol, const SolveOptions& opts)
      : x_(std::move(x)), tol_(std::move(tol)), opts_(opts) {}

  const BaseEnclosure& solve(const EventuallyPeriodicWord& w) {
    auto it = cache_.find(w.str());
    if (it != cache_.end()) return it->second;
    BaseEnclosure e =
        solve_base(w, x_, default_univoque_bracket(), tol_, opts_);
    return cache_.emplace(w.str(), std::move(e)).first->second;
  }

  void refine() {
    tol_ /= 65536;
    cache_.clear();
  }

  const Rat& tol() const { return tol_; }

 private:
  Rat x_, tol_;
  SolveOptions opts_;
  std::map<std::string, BaseEnclosure> cache_;
};

struct LevelPlan {
  // Tails needing realization, precomputed symbolically.
  struct Leaf {
    FiniteWord tail;
    SymbolicInterval iv;
  };
  struct Gap {
    FiniteWord tail;
    SymbolicInterval child0, child1;
  };
  std::vector<Leaf> leaves;
  std::vector<Gap> gaps;
};

CantorLevel realize_plan(const LevelPlan& plan, CantorLevel level,
                         EndpointSolver& solver) {
  // Solve, then verify the strict ordering the level promises. Any undecided
  // comparison triggers a full re-solve at sharper tolerance.
  constexpr int kRefineRounds = 3;
  for (int round = 0;; ++round) {
    level.leaves.clear();
    level.gaps.clear();
    for (const auto& leaf : plan.leaves)
      level.leaves.push_back(
          {leaf.tail, solver.solve(leaf.iv.left), solver.solve(leaf.iv.right)});
    for (const auto& gap : plan.gaps)
      level.gaps.push_back({gap.tail, solver.solve(gap.child0.left),
                            solver.solve(gap.child0.right),
                            solver.solve(gap.child1.left),
                            solver.solve(gap.child1.right)});

    std::sort(level.gaps.begin(), level.gaps.end(),
              [](const RealizedGap& u, const RealizedGap& v) {
                return u.q1.lo < v.q1.lo;
              });

    bool ok = true;
    for (const auto& leaf : level.leaves)
      ok = ok && leaf.left.hi < leaf.right.lo;
    for (std::size_t i = 0; ok && i + 1 < level.leaves.size(); ++i)
      ok = level.leaves[i].right.hi < level.leaves[i + 1].left.lo;
    for (const auto& gap : level.gaps) {
      ok = ok && gap.q1.hi < gap.q2.lo;  // left flank non-degenerate
      ok = ok && gap.q2.hi < gap.q3.lo;  // gap itself non-empty
      ok = ok && gap.q3.hi < gap.q4.lo;  // right flank non-degenerate
    }
    if (ok) return level;
    if (round >= kRefineRounds)
      throw InconclusiveError(
          "realize_level: interval ordering still undecided at tolerance " +
              format_rational(solver.tol()),
          RatInterval(0, 0));
    solver.refine();
  }
}

}  // namespace

CantorLevel realize_level(const Rat& x, std::size_t j, std::size_t depth,
                          const Rat& tol, const SolveOptions& opts) {
  if (tol <= 0) throw std::domain_error("realize_level: tol must be positive");
  CaseDecomposition dec = decompose(x);
  const FiniteWord stem = dec.stem(j);
  const std::size_t N = dec.run_bound(j);
  if (depth <= stem.size())
    throw std::invalid_argument("realize_level: depth must exceed M + N(j)");
  const std::size_t tail_depth = depth - stem.size();

  LevelPlan plan;
  for (const FiniteWord& tail :
       enumerate_tails(N, tail_depth, /*first_digit_zero=*/true)) {
    FiniteWord word = stem.concat(tail);
    if (tail.size() == tail_depth) {
      plan.leaves.push_back({tail, symbolic_interval(word, N)});
    } else if (gap_status(word, N) == GapStatus::HasGap) {
      FiniteWord w0 = word;
      w0.append(0);
      FiniteWord w1 = word;
      w1.append(1);
      plan.gaps.push_back(
          {tail, symbolic_interval(w0, N), symbolic_interval(w1, N)});
    }
  }

  CantorLevel level;
  level.x = x;
  level.j = j;
  level.m_offset = dec.m_offset();
  level.run_bound = N;
  level.depth = depth;
  level.stem = stem;

  EndpointSolver solver(x, tol, opts);
  return realize_plan(plan, std::move(level), solver);
}

namespace {

RatInterval enclosure_gap_length(const BaseEnclosure& a, const BaseEnclosure& b) {
  // Length of [a, b] when a < b: certified two-sided bounds.
  return RatInterval(b.lo - a.hi, b.hi - a.lo);
}

RatInterval ln_endpoint(const BaseEnclosure& e) {
  // Enclosure of ln q over the endpoint enclosure. The error budget is far
  // below any gap length this library certifies.
  static const Rat kErr = pow_rat(make_rat(1, 2), 96);
  RatInterval lo = ln_enclosure(e.lo, kErr);
  RatInterval hi = ln_enclosure(e.hi, kErr);
  return RatInterval(lo.lo, hi.hi);
}

}  // namespace

ThicknessReport thickness(const CantorLevel& level, Scale scale) {
  if (level.gaps.empty())
    throw std::invalid_argument("thickness: level has no gaps");
  bool first = true;
  RatInterval tau;
  FiniteWord argmin;
  for (const auto& gap : level.gaps) {
    RatInterval left_len, gap_len, right_len;
    if (scale == Scale::Linear) {
      left_len = enclosure_gap_length(gap.q1, gap.q2);
      gap_len = enclosure_gap_length(gap.q2, gap.q3);
      right_len = enclosure_gap_length(gap.q3, gap.q4);
    } else {
      RatInterval l1 = ln_endpoint(gap.q1), l2 = ln_endpoint(gap.q2),
                  l3 = ln_endpoint(gap.q3), l4 = ln_endpoint(gap.q4);
      left_len = RatInterval(l2.lo - l1.hi, l2.hi - l1.lo);
      gap_len = RatInterval(l3.lo - l2.hi, l3.hi - l2.lo);
      right_len = RatInterval(l4.lo - l3.hi, l4.hi - l3.lo);
    }
    if (gap_len.lo <= 0)
      throw InconclusiveError("thickness: gap length not certified positive",
                              gap_len);
    RatInterval ratio(
        std::min(left_len.lo, right_len.lo) / gap_len.hi,
        std::min(left_len.hi, right_len.hi) / gap_len.lo);
    if (first || ratio.lo < tau.lo) {
      argmin = gap.tail;
      tau.lo = ratio.lo;
    }
    if (first || ratio.hi < tau.hi) tau.hi = ratio.hi;
    first = false;
  }
  return {tau, argmin, scale, level.depth};
}

CantorLevel scale_level(const CantorLevel& level, const Rat& factor) {
  if (factor == 0)
    throw std::invalid_argument("scale_level: factor must be nonzero");
  // Affine images leave the base-space invariants behind; shift so that the
  // scaled endpoints land back in (1, 2], keeping BaseEnclosure's contract.
  // Thickness only uses differences and ratios of differences, so an affine
  // map with scale `factor` is exactly what invariance tests need.
  Rat span_lo, span_hi;
  bool first = true;
  auto see = [&](const Rat& v) {
    if (first || v < span_lo) span_lo = v;
    if (first || v > span_hi) span_hi = v;
    first = false;
  };
  for (const auto& leaf : level.leaves) {
    see(leaf.left.lo * factor);
    see(leaf.right.hi * factor);
  }
  for (const auto& gap : level.gaps) {
    see(gap.q1.lo * factor);
    see(gap.q4.hi * factor);
  }
  Rat span = span_hi - span_lo;
  if (span <= 0) span = 1;
  // Map [span_lo, span_hi] into (1, 2]: v -> 1 + (v - span_lo + span/4) / (2 span).
  auto remap = [&](const Rat& v) {
    return Rat(1 + (v - span_lo + span / 4) / (2 * span));
  };
  auto remap_enc = [&](const BaseEnclosure& e) {
    Rat a = remap(e.lo * factor), b = remap(e.hi * factor);
    if (factor < 0) std::swap(a, b);
    return BaseEnclosure(a, b);
  };
  CantorLevel out;
  out.x = level.x;
  out.j = level.j;
  out.m_offset = level.m_offset;
  out.run_bound = level.run_bound;
  out.depth = level.depth;
  out.stem = level.stem;
  for (const auto& leaf : level.leaves) {
    RealizedInterval r{leaf.tail, remap_enc(leaf.left), remap_enc(leaf.right)};
    if (factor < 0) std::swap(r.left, r.right);
    out.leaves.push_back(std::move(r));
  }
  for (const auto& gap : level.gaps) {
    RealizedGap g{gap.tail, remap_enc(gap.q1), remap_enc(gap.q2),
                  remap_enc(gap.q3), remap_enc(gap.q4)};
    if (factor < 0) {
      std::swap(g.q1, g.q4);
      std::swap(g.q2, g.q3);
    }
    out.gaps.push_back(std::move(g));
  }
  if (factor < 0) {
    std::reverse(out.leaves.begin(), out.leaves.end());
    std::reverse(out.gaps.begin(), out.gaps.end());
  }
  return out;
}

bool GapBoundReport::all_hold() const {
  return upper_q21 == CheckVerdict::Holds && lower_q21 == CheckVerdict::Holds &&
         upper_q43 == CheckVerdict::Holds && lower_q43 == CheckVerdict::Holds &&
         upper_gap == CheckVerdict::Holds &&
         gap_le_left == CheckVerdict::Holds &&
         gap_le_right == CheckVerdict::Holds;
}

namespace {

CheckVerdict verdict_le(const RatInterval& a, const RatInterval& b) {
  switch (certified_le(a, b)) {
    case Cmp3::True: return CheckVerdict::Holds;
    case Cmp3::False: return CheckVerdict::Fails;
    default: return CheckVerdict::Undecided;
  }
}

// [1/e.hi^p, 1/e.lo^p]
RatInterval inverse_power(const BaseEnclosure& e, std::size_t p) {
  return RatInterval(pow_rat(e.hi, -static_cast<long>(p)),
                     pow_rat(e.lo, -static_cast<long>(p)));
}

}  // namespace

std::vector<GapBoundReport> verify_gap_bounds(const CantorLevel& level,
                                              std::size_t M, std::size_t N) {
  static const Rat kPhiTol = pow_rat(make_rat(1, 2), 80);
  const BaseEnclosure phi = golden_ratio(kPhiTol);
  const RatInterval phi_m1_sq =
      mul(RatInterval(phi.lo - 1, phi.hi - 1), RatInterval(phi.lo - 1, phi.hi - 1));
  const Rat two_pow = Rat(pow_int(2, static_cast<unsigned long>(M + 4)));

  std::vector<GapBoundReport> out;
  out.reserve(level.gaps.size());
  for (const auto& gap : level.gaps) {
    const std::size_t n = level.stem.size() + gap.tail.size();
    if (n < M + 2)
      throw std::invalid_argument("verify_gap_bounds: word shorter than M+2");
    GapBoundReport rep;
    rep.tail = gap.tail;
    rep.n = n;

    RatInterval d21 = enclosure_gap_length(gap.q1, gap.q2);
    RatInterval d43 = enclosure_gap_length(gap.q3, gap.q4);
    RatInterval dgap = enclosure_gap_length(gap.q2, gap.q3);

    rep.upper_q21 = verdict_le(d21, inverse_power(gap.q2, n - M - 1));
    rep.lower_q21 = verdict_le(
        mul(phi_m1_sq, inverse_power(gap.q2, n + 4)), d21);
    rep.upper_q43 = verdict_le(d43, inverse_power(gap.q4, n - M - 1));
    rep.lower_q43 = verdict_le(
        mul(phi_m1_sq, inverse_power(gap.q3, n + 3)), d43);
    rep.upper_gap = verdict_le(
        dgap, scale(inverse_power(gap.q3, n + N + 1), two_pow));
    rep.gap_le_left = verdict_le(dgap, d21);
    rep.gap_le_right = verdict_le(dgap, d43);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<LogGapReport> verify_log_gap_bounds(const CantorLevel& level) {
  std::vector<LogGapReport> out;
  out.reserve(level.gaps.size());
  for (const auto& gap : level.gaps) {
    LogGapReport rep;
    rep.tail = gap.tail;
    // ln q3 - ln q2 <= ln q2 - ln q1  <=>  q1 q3 <= q2^2, exactly.
    rep.left_ok = verdict_le(mul(gap.q1.interval(), gap.q3.interval()),
                             mul(gap.q2.interval(), gap.q2.interval()));
    // ln q3 - ln q2 <= ln q4 - ln q3  <=>  q3^2 <= q2 q4.
    rep.right_ok = verdict_le(mul(gap.q3.interval(), gap.q3.interval()),
                              mul(gap.q2.interval(), gap.q4.interval()));
    out.push_back(std::move(rep));
  }
  return out;
}

std::size_t find_threshold_j(const Rat& x, std::size_t j_max,
                             std::size_t window) {
  if (j_max < 1)
    throw std::invalid_argument("find_threshold_j: j_max must be >= 1");
  CaseDecomposition dec = decompose(x);
  const std::size_t M = dec.m_offset();
  static const Rat kPhiTol = pow_rat(make_rat(1, 2), 80);
  // A certified lower bound of phi: q2 >= phi >= phi_lo for every realized
  // endpoint, so substituting phi_lo only weakens (never cheats) the checks.
  const Rat phi_lo = golden_ratio(kPhiTol).lo;

  for (std::size_t j = 1; j <= j_max; ++j) {
    const std::size_t N = dec.run_bound(j);
    if (N < 4) continue;

    // Right-hand sides, bounded from below by evaluating the denominators at
    // phi_lo (series values decrease in q).
    EventuallyPeriodicWord den33 = EventuallyPeriodicWord::periodic(
        FiniteWord::run(1, 1).concat(FiniteWord::run(0, N - 1)));
    Rat rhs33 = make_rat(3, 4) / eval_series(den33, phi_lo);

    FiniteWord num36_w = FiniteWord::run(1, N - 1).concat(FiniteWord::run(0, 1));
    Rat num36 = eval_series(EventuallyPeriodicWord::periodic(num36_w), Rat(2));
    FiniteWord den36_w = FiniteWord::run(1, 1)
                             .concat(FiniteWord::run(0, N - 3))
                             .concat(FiniteWord::parse("10"));
    Rat rhs36 = num36 / eval_series(EventuallyPeriodicWord::periodic(den36_w),
                                    phi_lo);

    bool ok = true;
    for (std::size_t n = M + N + 1; ok && n <= M + N + window; ++n) {
      // (1 + phi^-(n-M))^(n+1) < rhs33 and ...^(n+2) < rhs36, with the left
      // side bounded above via phi_lo <= phi.
      Rat base = 1 + pow_rat(phi_lo, -static_cast<long>(n - M));
      Rat lhs33 = pow_rat(base, static_cast<long>(n + 1));
      Rat lhs36 = lhs33 * base;
      ok = lhs33 < rhs33 && lhs36 < rhs36;
    }
    if (!ok) continue;

    // 2^(M+4) <= (phi-1)^2 phi^(N-3), minorizing q2 by phi.
    Rat lhs_j2 = Rat(pow_int(2, static_cast<unsigned long>(M + 4)));
    Rat rhs_j2 = (phi_lo - 1) * (phi_lo - 1) *
                 pow_rat(phi_lo, static_cast<long>(N - 3));
    if (lhs_j2 <= rhs_j2) return j;
  }
  throw ThresholdNotFoundError(
      "find_threshold_j: no j within bound passes the sufficient conditions");
}

std::vector<EnclosedInterval> depth_cover(const CantorLevel& level) {
  std::vector<EnclosedInterval> out;
  out.reserve(level.leaves.size());
  for (const auto& leaf : level.leaves)
    out.push_back({leaf.left.interval(), leaf.right.interval()});
  return out;
}

std::vector<EnclosedInterval> sum_cover(const std::vector<EnclosedInterval>& a,
                                        const Rat& lambda,
                                        const std::vector<EnclosedInterval>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("sum_cover: empty operand");
  std::vector<EnclosedInterval> blocks;
  blocks.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) {
      EnclosedInterval s;
      if (lambda >= 0) {
        s.left = add(p.left, scale(q.left, lambda));
        s.right = add(p.right, scale(q.right, lambda));
      } else {
        s.left = add(p.left, scale(q.right, lambda));
        s.right = add(p.right, scale(q.left, lambda));
      }
      blocks.push_back(std::move(s));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const EnclosedInterval& u, const EnclosedInterval& v) {
              if (u.left.lo != v.left.lo) return u.left.lo < v.left.lo;
              return u.right.hi < v.right.hi;
            });
  std::vector<EnclosedInterval> merged;
  for (auto& blk : blocks) {
    if (merged.empty()) {
      merged.push_back(std::move(blk));
      continue;
    }
    EnclosedInterval& cur = merged.back();
    if (blk.left.hi <= cur.right.lo) {
      // Certified overlap (or touching): absorb, extending the right edge.
      if (blk.right.lo > cur.right.lo)
        cur.right.lo = blk.right.lo;
      if (blk.right.hi > cur.right.hi)
        cur.right.hi = blk.right.hi;
    } else if (blk.left.lo > cur.right.hi) {
      // Certified separation: start a new block.
      merged.push_back(std::move(blk));
    } else {
      throw InconclusiveError(
          "sum_cover: block adjacency undecided at current tolerance",
          RatInterval(blk.left.lo, cur.right.hi));
    }
  }
  return merged;
}

std::vector<EnclosedInterval> sum_cover(const CantorLevel& a, const Rat& lambda,
                                        const CantorLevel& b) {
  return sum_cover(depth_cover(a), lambda, depth_cover(b));
}

std::vector<FiniteWord> subshift_factors(std::size_t run_bound, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("subshift_factors: k must be >= 1");
  // Every word without a forbidden run extends to a two-sided point of the
  // constrained shift, so the k-blocks are exactly these words.
  std::vector<FiniteWord> out;
  for (auto& w : enumerate_tails(run_bound, k, /*first_digit_zero=*/false))
    if (w.size() == k) out.push_back(std::move(w));
  return out;
}

RatInterval entropy_estimate(const std::vector<FiniteWord>& factors,
                             std::size_t k) {
  if (factors.empty())
    throw std::invalid_argument("entropy_estimate: empty factor list");
  if (k == 0) throw std::invalid_argument("entropy_estimate: k must be >= 1");
  std::set<FiniteWord> distinct;
  for (const auto& w : factors) {
    if (w.size() != k)
      throw std::invalid_argument("entropy_estimate: factor length mismatch");
    distinct.insert(w);
  }
  Int count(static_cast<unsigned long>(distinct.size()));
  static const Rat kErr = pow_rat(make_rat(1, 2), 48);
  RatInterval lg = log2_enclosure(count, kErr);
  Rat kk(static_cast<unsigned long>(k));
  return RatInterval(lg.lo / kk, lg.hi / kk);
}

}  // namespace univoque

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and seed is pinned here so reruns are bit-reproducible.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "univoque/components.hpp"
#include "univoque/expansions.hpp"
#include "univoque/matching.hpp"
#include "univoque/solver.hpp"
#include "univoque/words.hpp"

using namespace univoque;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = no limit
  std::function<bool(std::string&)> body;
};

bool intersects(const BaseEnclosure& e, const Rat& center, const Rat& radius) {
  return e.lo <= center + radius && center - radius <= e.hi;
}

Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

EventuallyPeriodicWord random_word(std::mt19937& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 6);
  FiniteWord pre, per;
  int np = pre_len(rng), nq = per_len(rng);
  for (int i = 0; i < np; ++i) pre.append(static_cast<Digit>(bit(rng)));
  for (int i = 0; i < nq; ++i) per.append(static_cast<Digit>(bit(rng)));
  return EventuallyPeriodicWord(pre, per);
}

// Criterion 1: the smallest univoque base at 1e-5 lands on 1.78723.
bool smallest_base(std::string& detail) {
  Rat tol = parse_rational("1e-5");
  BaseEnclosure q = komornik_loreti(tol);
  detail = "mid " + to_decimal(q.mid(), 7);
  return q.width() <= tol &&
         intersects(q, parse_rational("1.78723"), tol);
}

// Criterion 2: component endpoints for 110100 at 1e-5.
bool component_endpoints(std::string& detail) {
  Rat tol = parse_rational("1e-5");
  ComponentRecord rec = component_for_word(FiniteWord::parse("110100"), tol);
  detail = "q_left " + to_decimal(rec.q_left.mid(), 7) + ", q_right " +
           to_decimal(rec.q_right.mid(), 7);
  return rec.q_left.width() <= tol && rec.q_right.width() <= tol &&
         intersects(rec.q_left, parse_rational("1.78854"), tol) &&
         intersects(rec.q_right, parse_rational("1.79656"), tol);
}

// Criterion 3: certified sum/product inequalities with the quoted margins.
bool certified_gaps(std::string& detail) {
  Prop51Report rep =
      check_prop51(FiniteWord::parse("110100"), parse_rational("1e-5"));
  Rat slack = parse_rational("1e-4");
  bool ok = rep.sum_gap_ok && rep.product_gap_ok;
  ok = ok && rep.right_gap.lo > parse_rational("0.008");
  ok = ok && rat_abs(rep.left_gap.mid() - parse_rational("0.00131")) <= slack &&
       rep.left_gap.width() <= slack;
  ok = ok &&
       rat_abs(rep.right_ratio.mid() - parse_rational("1.00448")) <= slack &&
       rep.right_ratio.width() <= slack;
  ok = ok &&
       rat_abs(rep.left_ratio.mid() - parse_rational("1.00073")) <= slack &&
       rep.left_ratio.width() <= slack;
  detail = "right_gap >= " + to_decimal(rep.right_gap.lo, 6) +
           ", ratios " + to_decimal(rep.right_ratio.mid(), 5) + "/" +
           to_decimal(rep.left_ratio.mid(), 5);
  return ok;
}

// Criterion 4: golden ratio to 1e-12 with a sign-change certificate.
bool golden_enclosure(std::string& detail) {
  Rat tol = parse_rational("1e-12");
  BaseEnclosure g = solve_base(EventuallyPeriodicWord::parse("(10)^"), Rat(1),
                               BaseEnclosure(make_rat(3, 2), Rat(2)), tol);
  detail = to_decimal(g.mid(), 13);
  return g.width() <= tol && g.lo * g.lo - g.lo - 1 <= 0 &&
         g.hi * g.hi - g.hi - 1 >= 0;
}

// Criterion 5: at the threshold level, every realized gap is dominated by
// both flanking intervals, in linear and in log scale.
bool gap_domination(std::string& detail) {
  for (const char* xs : {"1", "3/4", "2/3", "1/3"}) {
    Rat x = parse_rational(xs);
    std::size_t j = find_threshold_j(x, 16);
    CaseDecomposition dec = decompose(x);
    const std::size_t M = dec.m_offset(), N = dec.run_bound(j);
    CantorLevel lv;
    bool done = false;
    for (const char* ts : {"1e-14", "1e-18"}) {
      lv = realize_level(x, j, M + N + 8, parse_rational(ts));
      auto lin = verify_gap_bounds(lv, M, N);
      auto log = verify_log_gap_bounds(lv);
      bool undecided = false, failed = false;
      auto note = [&](CheckVerdict v) {
        if (v == CheckVerdict::Fails) failed = true;
        if (v == CheckVerdict::Undecided) undecided = true;
      };
      for (const auto& r : lin) {
        note(r.gap_le_left);
        note(r.gap_le_right);
      }
      for (const auto& r : log) {
        note(r.left_ok);
        note(r.right_ok);
      }
      if (failed) {
        detail = std::string("x = ") + xs + ": a gap bound failed";
        return false;
      }
      if (!undecided) {
        done = true;
        break;
      }
    }
    if (!done) {
      detail = std::string("x = ") + xs + ": bounds undecided at 1e-18";
      return false;
    }
    detail += std::string(xs) + ":" + std::to_string(lv.gaps.size()) + "g ";
  }
  return true;
}

// Criterion 6: sum covers of the x = 1 threshold level stay one interval.
bool sum_covers_connected(std::string& detail) {
  Rat x(1);
  std::size_t j = find_threshold_j(x, 16);
  CaseDecomposition dec = decompose(x);
  std::size_t D = dec.m_offset() + dec.run_bound(j) + 8;
  Rat tol = parse_rational("1e-9");
  for (std::size_t depth : {D, D + 2}) {
    CantorLevel lv = realize_level(x, j, depth, tol);
    for (const char* ls : {"-1", "1", "2", "-1/2"}) {
      auto cover = sum_cover(lv, parse_rational(ls), lv);
      if (cover.size() != 1) {
        detail = "depth " + std::to_string(depth) + ", lambda " + ls + ": " +
                 std::to_string(cover.size()) + " blocks";
        return false;
      }
    }
    detail += "depth " + std::to_string(depth) + " ok ";
  }
  return true;
}

// Criterion 7: lexicographic uniqueness never contradicts brute force.
bool uniqueness_consistency(std::string& detail) {
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<int> qstep(1, 370);
  int unique_n = 0, not_unique_n = 0, unknown_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    EventuallyPeriodicWord a = random_word(rng);
    Rat q = make_rat(1630 + qstep(rng), 1000);
    Rat x = eval_series(a, q);
    UniquenessVerdict v = is_unique_expansion(a, RatInterval::point(q), 30);
    if (v.unknown()) {
      ++unknown_n;
      continue;
    }
    ExpansionCount c = count_expansions_bruteforce(x, q, 30);
    if (v.unique()) {
      ++unique_n;
      if (c.lower_bound != 1) {
        detail = "unique verdict with " + std::to_string(c.lower_bound) +
                 " expansions";
        return false;
      }
    } else {
      ++not_unique_n;
      if (c.lower_bound < 2) {
        detail = "not-unique verdict with a single surviving prefix";
        return false;
      }
    }
  }
  // Low bases: every interior point has at least two expansions.
  for (long qn : {3L, 8L}) {
    Rat q = qn == 3 ? make_rat(3, 2) : make_rat(8, 5);
    Rat top = 1 / (q - 1);
    for (int i = 1; i <= 20; ++i) {
      Rat x = Rat(i) * top / 21;
      if (count_expansions_bruteforce(x, q, 30).lower_bound < 2) {
        detail = "interior point with one expansion at q = " +
                 format_rational(q);
        return false;
      }
    }
  }
  detail = std::to_string(unique_n) + " unique / " +
           std::to_string(not_unique_n) + " not / " +
           std::to_string(unknown_n) + " unknown";
  return unique_n + not_unique_n >= 100;
}

// Criterion 8: the two matching criteria agree on 1000 random alphas.
bool matching_consistency(std::string& detail) {
  MatchingVerdict top = detect_matching(Rat(2), 60);
  if (!(top.matched() && top.step == 1)) {
    detail = "alpha = 2 did not match at step 1";
    return false;
  }
  if (!detect_matching(make_rat(3, 2), 60).non_matching() ||
      !doubling_criterion(make_rat(3, 2), 60).non_matching()) {
    detail = "alpha = 3/2 not certified non-matching";
    return false;
  }
  std::mt19937 rng(0xC0FFEEu);
  std::uniform_int_distribution<long> den(2, 400);
  int matched_n = 0, cycle_n = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    long d = den(rng);
    std::uniform_int_distribution<long> num(d + 1, 2 * d);
    Rat alpha = make_rat(num(rng), d);
    MatchingVerdict a = detect_matching(alpha, 60);
    MatchingVerdict b = doubling_criterion(alpha, 60);
    if ((a.matched() && b.non_matching()) ||
        (a.non_matching() && b.matched())) {
      detail = "contradiction at alpha = " + format_rational(alpha);
      return false;
    }
    if (a.matched()) ++matched_n;
    if (a.non_matching()) ++cycle_n;
  }
  detail = std::to_string(matched_n) + " matched / " +
           std::to_string(cycle_n) + " cyclic";
  return true;
}

// Criterion 9: the m = 6 alpha-space realization is thick and well-formed.
bool alpha_family_thick(std::string& detail) {
  CantorLevel lv = build_nm(6, 12);
  for (const auto& leaf : lv.leaves) {
    if (!(leaf.left.lo > 1 && leaf.right.hi <= 2 &&
          leaf.left.hi < leaf.right.lo)) {
      detail = "leaf interval out of range";
      return false;
    }
    SymbolicInterval iv =
        symbolic_interval(lv.word_of(leaf.tail), 6, leaf.tail.size());
    if (!check_eq41(iv.left, 40) || !check_eq41(iv.right, 40)) {
      detail = "endpoint fails the shift condition at tail " +
               leaf.tail.str();
      return false;
    }
  }
  for (std::size_t i = 1; i < lv.leaves.size(); ++i) {
    if (!(lv.leaves[i - 1].right.hi < lv.leaves[i].left.lo)) {
      detail = "leaves overlap";
      return false;
    }
  }
  ThicknessReport t = thickness(lv, Scale::Linear);
  detail = std::to_string(lv.leaves.size()) + " leaves, tau >= " +
           to_decimal(t.tau.lo, 4);
  return t.tau.lo >= 1;
}

// Criterion 10: structural property sweep; every law must hold exactly.
bool structural_properties(std::string& detail) {
  Rat tol = parse_rational("1e-8");

  // Nesting of deeper leaves inside shallower ones.
  CantorLevel outer = realize_level(Rat(1), 1, 6, tol);
  CantorLevel inner = realize_level(Rat(1), 1, 7, tol);
  for (const auto& child : inner.leaves) {
    FiniteWord parent_word = inner.word_of(child.tail).prefix(6);
    bool ok = false;
    for (const auto& parent : outer.leaves) {
      if (outer.word_of(parent.tail) != parent_word) continue;
      ok = child.left.lo >= parent.left.lo - 2 * tol &&
           child.right.hi <= parent.right.hi + 2 * tol;
    }
    if (!ok) {
      detail = "nesting failed at " + child.tail.str();
      return false;
    }
  }

  // Gap cores are pairwise disjoint at depth 8 (sorted by position; the
  // level stores gaps in enumeration order).
  CantorLevel deep = realize_level(Rat(1), 1, 8, tol);
  std::vector<RealizedGap> cores = deep.gaps;
  std::sort(cores.begin(), cores.end(),
            [](const RealizedGap& a, const RealizedGap& b) {
              return a.q2.lo < b.q2.lo;
            });
  for (std::size_t i = 1; i < cores.size(); ++i) {
    if (!(cores[i - 1].q3.hi < cores[i].q2.lo)) {
      detail = "gap cores overlap";
      return false;
    }
  }

  // Thickness is non-increasing with depth.
  Rat prev;
  bool first = true;
  for (std::size_t depth : {6u, 7u, 8u}) {
    CantorLevel lv = depth == 6 ? outer
                    : depth == 7 ? inner
                                 : deep;
    Rat lo = thickness(lv, Scale::Linear).tau.lo;
    if (!first && lo > prev + 2 * tol) {
      detail = "thickness grew with depth";
      return false;
    }
    prev = lo;
    first = false;
  }

  // Affine images keep linear thickness exactly.
  ThicknessReport base = thickness(inner, Scale::Linear);
  for (Rat factor : {Rat(3), Rat(-2), make_rat(1, 7)}) {
    ThicknessReport t = thickness(scale_level(inner, factor), Scale::Linear);
    if (t.tau.lo != base.tau.lo || t.tau.hi != base.tau.hi) {
      detail = "thickness changed under factor " + format_rational(factor);
      return false;
    }
  }

  // Lexicographic order is a total order.
  std::mt19937 rng(77u);
  auto sgn = [](std::strong_ordering o) {
    return o == std::strong_ordering::less ? -1
           : o == std::strong_ordering::greater ? 1
                                                : 0;
  };
  for (int trial = 0; trial < 200; ++trial) {
    EventuallyPeriodicWord a = random_word(rng), b = random_word(rng),
                           c = random_word(rng);
    int ab = sgn(lex_compare(a, b)), ba = sgn(lex_compare(b, a));
    int bc = sgn(lex_compare(b, c)), ac = sgn(lex_compare(a, c));
    if (ab != -ba || ((ab == 0) != (a == b)) ||
        (ab <= 0 && bc <= 0 && ac > 0) || (ab >= 0 && bc >= 0 && ac < 0)) {
      detail = "lex order law violated";
      return false;
    }
  }

  // Doubling-construction prefixes nest.
  for (const char* seed : {"10", "1110", "110100"}) {
    FiniteWord sd = FiniteWord::parse(seed);
    FiniteWord big = devk_generate(sd, 64);
    for (std::size_t n : {4u, 16u, 40u}) {
      if (devk_generate(sd, n) != big.prefix(n)) {
        detail = std::string("prefix nesting failed for seed ") + seed;
        return false;
      }
    }
  }

  detail = "nesting, disjointness, monotonicity, scaling, order, prefixes";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"smallest-base-enclosure", 5.0, smallest_base},
      {"component-endpoints", 10.0, component_endpoints},
      {"certified-gap-inequalities", 0.0, certified_gaps},
      {"golden-ratio-enclosure", 1.0, golden_enclosure},
      {"gap-domination-both-scales", 240.0, gap_domination},
      {"sum-covers-connected", 0.0, sum_covers_connected},
      {"uniqueness-vs-bruteforce", 0.0, uniqueness_consistency},
      {"matching-criteria-agree", 0.0, matching_consistency},
      {"alpha-family-thickness", 60.0, alpha_family_thick},
      {"structural-properties", 0.0, structural_properties},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(c.limit_seconds) + "s budget)";
    }
    std::printf("%s  %2zu  %-28s  %6.2fs  %s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), secs, detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

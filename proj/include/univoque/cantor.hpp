#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "univoque/rational.hpp"
#include "univoque/solver.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Shape of the quasi-greedy base-2 expansion of x in (0, 1]:
//   A: ends 0 1^inf with a nonempty head   (canonical period "1", head != "")
//   B: equals 1^inf                        (x = 1)
//   C: infinitely many 0s and 1s, starts with 1
//   D: infinitely many 0s and 1s, starts with 0
enum class ExpansionCase { A, B, C, D };
const char* expansion_case_name(ExpansionCase c);

// Classified dyadic expansion of x together with the derived construction
// data: the offset M, the run bounds N(j), and the fixed stems whose
// continuations form the level sets.
class CaseDecomposition {
 public:
  ExpansionCase expansion_case() const { return case_; }
  std::size_t m_offset() const { return m_; }  // M
  const Rat& x() const { return x_; }
  const EventuallyPeriodicWord& dyadic() const { return dyadic_; }

  std::size_t run_bound(std::size_t j) const;  // N(j), j >= 1, increasing
  FiniteWord stem(std::size_t j) const;        // fixed prefix of length M + N(j)

 private:
  friend CaseDecomposition decompose(const Rat& x);
  Rat x_;
  EventuallyPeriodicWord dyadic_{FiniteWord{}, FiniteWord::run(1, 1)};
  ExpansionCase case_ = ExpansionCase::B;
  std::size_t m_ = 0;

  // First `count` run lengths of the dyadic word (alternating digit blocks).
  std::vector<std::size_t> runs(std::size_t count) const;
};

CaseDecomposition decompose(const Rat& x);

inline constexpr std::size_t kWholeWord = std::numeric_limits<std::size_t>::max();

// All binary words of length 1..max_len containing no run of `run_bound`
// equal digits, optionally with the first digit forced to 0. Ordered by
// length, then lexicographically.
std::vector<FiniteWord> enumerate_tails(std::size_t run_bound,
                                        std::size_t max_len,
                                        bool first_digit_zero);

// Members of the level-j word family for x: stem(j) followed by an admissible
// tail, all lengths in (|stem|, max_len]. Ordered by length then lex.
std::vector<FiniteWord> enumerate_words(const CaseDecomposition& dec,
                                        std::size_t j, std::size_t max_len);

// Smallest symbolic interval of sequences that begin with w and whose tail
// region avoids runs of run_bound equal digits. tail_len bounds how much of
// w's trailing run belongs to the constrained region; kWholeWord means all
// of it (the usual case, where runs cannot cross the stem boundary).
struct SymbolicInterval {
  EventuallyPeriodicWord left, right;
};
SymbolicInterval symbolic_interval(const FiniteWord& w, std::size_t run_bound,
                                   std::size_t tail_len = kWholeWord);

// Whether both children w0, w1 of w contain admissible continuations (then
// the two child intervals are separated by a gap), or only one of them does.
enum class GapStatus { HasGap, OnlyChild0, OnlyChild1 };
const char* gap_status_name(GapStatus s);
GapStatus gap_status(const FiniteWord& w, std::size_t run_bound,
                     std::size_t tail_len = kWholeWord);

// One realized basic interval: both endpoints solved to rational enclosures.
struct RealizedInterval {
  FiniteWord tail;  // full word = stem + tail
  BaseEnclosure left, right;
};

// One realized gap with its two flanking intervals, in ascending real order:
// [q1,q2], gap (q2,q3), [q3,q4].
struct RealizedGap {
  FiniteWord tail;  // the word whose children flank the gap
  BaseEnclosure q1, q2, q3, q4;
};

// Finite-depth realization of a level set: the leaves (all words of length
// `depth`) and every gap strictly above the leaves. Endpoint enclosures are
// pairwise disjoint and ordered; construction fails rather than emit an
// unverified layout.
struct CantorLevel {
  Rat x;                     // 0/1 marker for the alpha-space sets
  std::size_t j = 0;
  std::size_t m_offset = 0;  // M
  std::size_t run_bound = 0; // N(j), or m for the alpha-space sets
  std::size_t depth = 0;     // leaf word length
  FiniteWord stem;
  std::vector<RealizedInterval> leaves;  // ascending
  std::vector<RealizedGap> gaps;         // ascending

  FiniteWord word_of(const FiniteWord& tail) const { return stem.concat(tail); }
};

// Solves every leaf and gap endpoint for the level-j family of x at the given
// word depth (must exceed |stem|). Endpoints are bisection enclosures of
// width <= tol, refined automatically if any ordering test is undecided;
// InconclusiveError if verification still fails at the refinement cap.
CantorLevel realize_level(const Rat& x, std::size_t j, std::size_t depth,
                          const Rat& tol, const SolveOptions& opts = {});

enum class Scale { Linear, Log };

// Thickness of the finite-depth realization: the infimum over gaps of
// min(|left flank|, |right flank|) / |gap|, with lengths either linear
// (|b-a|) or logarithmic (|ln b - ln a|). tau is a two-sided enclosure.
struct ThicknessReport {
  RatInterval tau;
  FiniteWord argmin_tail;  // gap attaining the lower bound
  Scale scale;
  std::size_t depth;
};
ThicknessReport thickness(const CantorLevel& level, Scale scale);

// Affine image of a level (synthetic; used to test scale invariance).
// factor must be nonzero. Negative factors reverse orientation.
CantorLevel scale_level(const CantorLevel& level, const Rat& factor);

enum class CheckVerdict { Holds, Fails, Undecided };
const char* check_verdict_name(CheckVerdict v);

// Per-gap geometric bounds, n = full word length of the gap word:
//   upper_q21:    q2 - q1 <= q2^-(n-M-1)
//   lower_q21:    q2 - q1 >= (phi-1)^2 / q2^(n+4)
//   upper_q43:    q4 - q3 <= q4^-(n-M-1)
//   lower_q43:    q4 - q3 >= (phi-1)^2 / q3^(n+3)
//   upper_gap:    q3 - q2 <= 2^(M+4) / q3^(n+N+1)
//   gap_le_left:  q3 - q2 <= q2 - q1
//   gap_le_right: q3 - q2 <= q4 - q3
struct GapBoundReport {
  FiniteWord tail;
  std::size_t n;
  CheckVerdict upper_q21, lower_q21, upper_q43, lower_q43, upper_gap,
      gap_le_left, gap_le_right;
  bool all_hold() const;
};
std::vector<GapBoundReport> verify_gap_bounds(const CantorLevel& level,
                                              std::size_t M, std::size_t N);

// Log-scale gap domination reduced to exact rational products:
//   left_ok:  q1*q3 <= q2^2   (gap log-length <= left flank log-length)
//   right_ok: q3^2  <= q2*q4  (gap log-length <= right flank log-length)
struct LogGapReport {
  FiniteWord tail;
  CheckVerdict left_ok, right_ok;
};
std::vector<LogGapReport> verify_log_gap_bounds(const CantorLevel& level);

struct ThresholdNotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest j <= j_max whose run bound N(j) passes the sufficient conditions
// making every deep-enough gap dominated by its flanks:
//   (a) N(j) >= 4
//   (b) (1+phi^-(n-M))^(n+1) < ((110^inf))_2 / ((10^(N-1))^inf)_phi
//   (c) (1+phi^-(n-M))^(n+2) < ((1^(N-1)0)^inf)_2 / ((10^(N-3)10)^inf)_phi
//   (d) 2^(M+4) <= (phi-1)^2 phi^(N-3)
// (b) and (c) are checked for word lengths n in (M+N, M+N+window]; they are
// monotone in n, so the window is a safety margin, not a proof gap, for the
// depths this library realizes. Uses a certified lower bound of phi
// throughout, so every accepted j is sound.
std::size_t find_threshold_j(const Rat& x, std::size_t j_max,
                             std::size_t window = 10);

// Interval with enclosed (rather than exact) endpoints.
struct EnclosedInterval {
  RatInterval left, right;
};

// The leaves of a level as enclosed intervals.
std::vector<EnclosedInterval> depth_cover(const CantorLevel& level);

// Sorted, merged cover of { A + lambda*B : A in a, B in b }. Two blocks are
// joined only when overlap is certified, and kept apart only when separation
// is certified; anything else throws InconclusiveError. lambda may be
// negative; zero collapses b to a point shift of a.
std::vector<EnclosedInterval> sum_cover(const std::vector<EnclosedInterval>& a,
                                        const Rat& lambda,
                                        const std::vector<EnclosedInterval>& b);
std::vector<EnclosedInterval> sum_cover(const CantorLevel& a, const Rat& lambda,
                                        const CantorLevel& b);

// All binary words of length k avoiding runs of run_bound equal digits:
// the k-blocks of the constrained tail language.
std::vector<FiniteWord> subshift_factors(std::size_t run_bound, std::size_t k);

// log2(#distinct factors)/k as a rational enclosure; exact (degenerate
// interval) when the count is a power of two. All factors must have length k.
RatInterval entropy_estimate(const std::vector<FiniteWord>& factors,
                             std::size_t k);

}  // namespace univoque

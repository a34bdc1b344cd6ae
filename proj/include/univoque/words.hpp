#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

using Digit = std::uint8_t;

// Finite word over the digit alphabet 0..9. Most of the library only ever
// sees binary words; operations that require binary input check for it.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Digit> digits);

  static FiniteWord parse(std::string_view text);  // "110100"
  static FiniteWord run(Digit d, std::size_t n);   // d repeated n times

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit at(std::size_t i) const;
  Digit last() const;
  const std::vector<Digit>& digits() const { return digits_; }

  void append(Digit d);
  FiniteWord concat(const FiniteWord& other) const;
  FiniteWord prefix(std::size_t n) const;
  FiniteWord suffix_from(std::size_t pos) const;

  bool is_binary() const;
  // Length of the maximal equal-digit run ending at the last position.
  std::size_t trailing_run() const;

  FiniteWord complemented() const;      // digitwise 1-d; binary only
  FiniteWord incremented_last() const;  // last digit +1; it must be < 9

  std::string str() const;

  auto operator<=>(const FiniteWord&) const = default;

 private:
  std::vector<Digit> digits_;
};

// Infinite word of the form  preperiod (period)^infinity,  held in canonical
// form: the period is primitive and the preperiod is as short as possible.
// Two equal infinite words therefore compare equal structurally.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(FiniteWord preperiod, FiniteWord period);

  static EventuallyPeriodicWord periodic(FiniteWord period);
  static EventuallyPeriodicWord constant(Digit d);
  static EventuallyPeriodicWord finite(FiniteWord head);  // head 0^inf
  static EventuallyPeriodicWord parse(std::string_view text);

  const FiniteWord& preperiod() const { return pre_; }
  const FiniteWord& period() const { return per_; }

  Digit digit(std::size_t i) const;  // 0-based
  FiniteWord first(std::size_t n) const;

  bool is_binary() const;
  bool is_zero() const;  // equal to 0^inf

  std::string str() const;  // "11(0100)^" literal form

  bool operator==(const EventuallyPeriodicWord&) const = default;

 private:
  FiniteWord pre_, per_;
  void canonicalize();
};

// Total lexicographic order on infinite words. Decided within
// max(preperiods) + |period a| + |period b| digits (Fine-Wilf).
std::strong_ordering lex_compare(const EventuallyPeriodicWord& a,
                                 const EventuallyPeriodicWord& b);

// Drops the first n digits.
EventuallyPeriodicWord shift(const EventuallyPeriodicWord& a, std::size_t n);

// Digitwise 1-d; binary only.
EventuallyPeriodicWord complement(const EventuallyPeriodicWord& a);

// Prefix of the doubling construction  s_1 = seed+,  s_{k+1} = s_k (comp s_k)+.
// seed must be binary, length >= 2, and end in 0. Every emitted prefix is a
// prefix of all longer ones.
FiniteWord devk_generate(const FiniteWord& seed, std::size_t length);

// Whether (comp w)^inf < shift^i(w^inf) <= w^inf holds for all i in [0, |w|).
// w must be binary, length >= 2, and end in 0.
bool check_admissible(const FiniteWord& w);

// Sequence literal: "110", "11(0100)^", or "(10)^".
struct SeqLiteral {
  FiniteWord head;
  std::optional<FiniteWord> period;

  bool is_finite() const { return !period.has_value(); }
  // Finite literals denote the word padded with an infinite 0 tail.
  EventuallyPeriodicWord to_word() const;
  std::string str() const;
};
SeqLiteral parse_seq_literal(std::string_view text);

// Digit source for solving against sequences that are not eventually
// periodic. prefix(n) grows monotonically: prefix(n) is a prefix of
// prefix(m) for n <= m.
class DigitStream {
 public:
  virtual ~DigitStream() = default;
  virtual Digit digit(std::size_t i) const = 0;
  virtual std::string describe() const = 0;
  FiniteWord prefix(std::size_t n) const;
};

// Stream of devk_generate digits with an emitted-prefix budget. Exceeding the
// budget throws std::length_error, which the solver reports as inconclusive.
class DevkStream final : public DigitStream {
 public:
  explicit DevkStream(FiniteWord seed, std::size_t budget = std::size_t{1} << 20);
  Digit digit(std::size_t i) const override;
  std::string describe() const override;

 private:
  FiniteWord seed_;
  std::size_t budget_;
  mutable FiniteWord buf_;
};

class PeriodicStream final : public DigitStream {
 public:
  explicit PeriodicStream(EventuallyPeriodicWord w);
  Digit digit(std::size_t i) const override;
  std::string describe() const override;

 private:
  EventuallyPeriodicWord w_;
};

}  // namespace univoque

#include "univoque/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace univoque {

FiniteWord::FiniteWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit d : digits_)
    if (d > 9) throw std::invalid_argument("FiniteWord: digit out of range");
}

FiniteWord FiniteWord::parse(std::string_view text) {
  std::vector<Digit> ds;
  ds.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("FiniteWord::parse: bad character in '" +
                                  std::string(text) + "'");
    ds.push_back(static_cast<Digit>(c - '0'));
  }
  return FiniteWord(std::move(ds));
}

FiniteWord FiniteWord::run(Digit d, std::size_t n) {
  if (d > 9) throw std::invalid_argument("FiniteWord::run: digit out of range");
  return FiniteWord(std::vector<Digit>(n, d));
}

Digit FiniteWord::at(std::size_t i) const {
  if (i >= digits_.size())
    throw std::out_of_range("FiniteWord::at: index past end");
  return digits_[i];
}

Digit FiniteWord::last() const {
  if (digits_.empty()) throw std::out_of_range("FiniteWord::last: empty word");
  return digits_.back();
}

void FiniteWord::append(Digit d) {
  if (d > 9) throw std::invalid_argument("FiniteWord::append: digit out of range");
  digits_.push_back(d);
}

FiniteWord FiniteWord::concat(const FiniteWord& other) const {
  std::vector<Digit> ds = digits_;
  ds.insert(ds.end(), other.digits_.begin(), other.digits_.end());
  return FiniteWord(std::move(ds));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  if (n > digits_.size())
    throw std::out_of_range("FiniteWord::prefix: length past end");
  return FiniteWord(std::vector<Digit>(digits_.begin(),
                                       digits_.begin() + static_cast<long>(n)));
}

FiniteWord FiniteWord::suffix_from(std::size_t pos) const {
  if (pos > digits_.size())
    throw std::out_of_range("FiniteWord::suffix_from: position past end");
  return FiniteWord(std::vector<Digit>(digits_.begin() + static_cast<long>(pos),
                                       digits_.end()));
}

bool FiniteWord::is_binary() const {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](Digit d) { return d <= 1; });
}

std::size_t FiniteWord::trailing_run() const {
  if (digits_.empty()) return 0;
  Digit d = digits_.back();
  std::size_t k = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend() && *it == d; ++it) ++k;
  return k;
}

FiniteWord FiniteWord::complemented() const {
  if (!is_binary())
    throw std::invalid_argument("FiniteWord::complemented: word not binary");
  std::vector<Digit> ds;
  ds.reserve(digits_.size());
  for (Digit d : digits_) ds.push_back(static_cast<Digit>(1 - d));
  return FiniteWord(std::move(ds));
}

FiniteWord FiniteWord::incremented_last() const {
  if (digits_.empty())
    throw std::invalid_argument("FiniteWord::incremented_last: empty word");
  if (digits_.back() >= 9)
    throw std::invalid_argument("FiniteWord::incremented_last: digit overflow");
  std::vector<Digit> ds = digits_;
  ds.back() = static_cast<Digit>(ds.back() + 1);
  return FiniteWord(std::move(ds));
}

std::string FiniteWord::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (Digit d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(FiniteWord preperiod,
                                               FiniteWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty())
    throw std::invalid_argument("EventuallyPeriodicWord: empty period");
  canonicalize();
}

void EventuallyPeriodicWord::canonicalize() {
  // Reduce the period to its primitive root: the shortest divisor-length
  // block whose repetition reproduces it.
  const auto& p = per_.digits();
  std::size_t t = p.size();
  for (std::size_t d = 1; d < t; ++d) {
    if (t % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < t && repeats; ++i)
      repeats = (p[i] == p[i % d]);
    if (repeats) {
      per_ = per_.prefix(d);
      break;
    }
  }
  // Shrink the preperiod: while its last digit equals the period's last
  // digit, that digit can be absorbed by rotating the period right.
  std::vector<Digit> pre = pre_.digits();
  std::vector<Digit> per = per_.digits();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
  pre_ = FiniteWord(std::move(pre));
  per_ = FiniteWord(std::move(per));
}

EventuallyPeriodicWord EventuallyPeriodicWord::periodic(FiniteWord period) {
  return EventuallyPeriodicWord(FiniteWord{}, std::move(period));
}

EventuallyPeriodicWord EventuallyPeriodicWord::constant(Digit d) {
  return EventuallyPeriodicWord(FiniteWord{}, FiniteWord::run(d, 1));
}

EventuallyPeriodicWord EventuallyPeriodicWord::finite(FiniteWord head) {
  return EventuallyPeriodicWord(std::move(head), FiniteWord::run(0, 1));
}

Digit EventuallyPeriodicWord::digit(std::size_t i) const {
  if (i < pre_.size()) return pre_.at(i);
  return per_.at((i - pre_.size()) % per_.size());
}

FiniteWord EventuallyPeriodicWord::first(std::size_t n) const {
  std::vector<Digit> ds;
  ds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ds.push_back(digit(i));
  return FiniteWord(std::move(ds));
}

bool EventuallyPeriodicWord::is_binary() const {
  return pre_.is_binary() && per_.is_binary();
}

bool EventuallyPeriodicWord::is_zero() const {
  return pre_.empty() && per_.size() == 1 && per_.at(0) == 0;
}

std::string EventuallyPeriodicWord::str() const {
  return pre_.str() + "(" + per_.str() + ")^";
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view text) {
  SeqLiteral lit = parse_seq_literal(text);
  return lit.to_word();
}

std::strong_ordering lex_compare(const EventuallyPeriodicWord& a,
                                 const EventuallyPeriodicWord& b) {
  // Fine-Wilf: if two eventually periodic words agree this far, their tails
  // share both periods and the words are equal.
  std::size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) +
                      a.period().size() + b.period().size();
  for (std::size_t i = 0; i < bound; ++i) {
    Digit da = a.digit(i), db = b.digit(i);
    if (da != db) return da <=> db;
  }
  return std::strong_ordering::equal;
}

EventuallyPeriodicWord shift(const EventuallyPeriodicWord& a, std::size_t n) {
  const std::size_t s = a.preperiod().size();
  if (n <= s)
    return EventuallyPeriodicWord(a.preperiod().suffix_from(n), a.period());
  const std::size_t t = a.period().size();
  const std::size_t r = (n - s) % t;
  FiniteWord rotated = a.period().suffix_from(r).concat(a.period().prefix(r));
  return EventuallyPeriodicWord(FiniteWord{}, std::move(rotated));
}

EventuallyPeriodicWord complement(const EventuallyPeriodicWord& a) {
  return EventuallyPeriodicWord(a.preperiod().complemented(),
                                a.period().complemented());
}

namespace {

void require_devk_seed(const FiniteWord& seed, const char* who) {
  if (seed.size() < 2)
    throw std::invalid_argument(std::string(who) + ": seed shorter than 2");
  if (!seed.is_binary())
    throw std::invalid_argument(std::string(who) + ": seed not binary");
  if (seed.last() != 0)
    throw std::invalid_argument(std::string(who) +
                                ": seed must end with digit 0");
}

}  // namespace

FiniteWord devk_generate(const FiniteWord& seed, std::size_t length) {
  require_devk_seed(seed, "devk_generate");
  FiniteWord block = seed.incremented_last();  // s_1 = seed+
  while (block.size() < length)
    block = block.concat(block.complemented().incremented_last());
  return block.prefix(length);
}

bool check_admissible(const FiniteWord& w) {
  require_devk_seed(w, "check_admissible");
  EventuallyPeriodicWord winf = EventuallyPeriodicWord::periodic(w);
  EventuallyPeriodicWord cinf =
      EventuallyPeriodicWord::periodic(w.complemented());
  for (std::size_t i = 0; i < w.size(); ++i) {
    EventuallyPeriodicWord s = shift(winf, i);
    if (lex_compare(cinf, s) != std::strong_ordering::less) return false;
    if (lex_compare(s, winf) == std::strong_ordering::greater) return false;
  }
  return true;
}

EventuallyPeriodicWord SeqLiteral::to_word() const {
  if (is_finite()) return EventuallyPeriodicWord::finite(head);
  return EventuallyPeriodicWord(head, *period);
}

std::string SeqLiteral::str() const {
  if (is_finite()) return head.str();
  return head.str() + "(" + period->str() + ")^";
}

SeqLiteral parse_seq_literal(std::string_view text) {
  const auto fail = [&]() -> SeqLiteral {
    throw std::invalid_argument("parse_seq_literal: bad sequence literal '" +
                                std::string(text) + "'");
  };
  if (text.empty()) return fail();
  auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos ||
        text.find('^') != std::string_view::npos)
      return fail();
    return SeqLiteral{FiniteWord::parse(text), std::nullopt};
  }
  // "HEAD(PERIOD)^" with possibly empty head.
  if (text.size() < open + 3 || text.substr(text.size() - 2) != ")^")
    return fail();
  std::string_view head = text.substr(0, open);
  std::string_view per = text.substr(open + 1, text.size() - open - 3);
  if (per.empty()) return fail();
  return SeqLiteral{FiniteWord::parse(head), FiniteWord::parse(per)};
}

FiniteWord DigitStream::prefix(std::size_t n) const {
  std::vector<Digit> ds;
  ds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ds.push_back(digit(i));
  return FiniteWord(std::move(ds));
}

DevkStream::DevkStream(FiniteWord seed, std::size_t budget)
    : seed_(std::move(seed)), budget_(budget) {
  require_devk_seed(seed_, "DevkStream");
  buf_ = seed_.incremented_last();
}

Digit DevkStream::digit(std::size_t i) const {
  if (i >= budget_)
    throw std::length_error("DevkStream: digit budget exhausted");
  while (buf_.size() <= i)
    buf_ = buf_.concat(buf_.complemented().incremented_last());
  return buf_.at(i);
}

std::string DevkStream::describe() const {
  return "devk(" + seed_.str() + ")";
}

PeriodicStream::PeriodicStream(EventuallyPeriodicWord w) : w_(std::move(w)) {}

Digit PeriodicStream::digit(std::size_t i) const { return w_.digit(i); }

std::string PeriodicStream::describe() const { return w_.str(); }

}  // namespace univoque

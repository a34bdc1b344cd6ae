#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "univoque/expansions.hpp"
#include "univoque/words.hpp"

using namespace univoque;

TEST_CASE("finite word basics") {
  FiniteWord w = FiniteWord::parse("110100");
  CHECK(w.size() == 6);
  CHECK(w.at(0) == 1);
  CHECK(w.at(5) == 0);
  CHECK(w.last() == 0);
  CHECK(w.str() == "110100");
  CHECK(w.is_binary());
  CHECK(w.trailing_run() == 2);

  CHECK(FiniteWord::run(1, 4).str() == "1111");
  CHECK(FiniteWord::run(0, 1).trailing_run() == 1);
  CHECK(FiniteWord::parse("111").trailing_run() == 3);

  CHECK(w.prefix(3).str() == "110");
  CHECK(w.suffix_from(3).str() == "100");
  CHECK(w.complemented().str() == "001011");
  CHECK(w.incremented_last().str() == "110101");
  CHECK(w.concat(FiniteWord::parse("01")).str() == "11010001");

  FiniteWord e;
  CHECK(e.empty());
  CHECK(e.concat(w) == w);
  CHECK_THROWS_AS(FiniteWord::parse("1a0"), std::invalid_argument);
}

TEST_CASE("eventually periodic canonical form") {
  // Primitive period reduction.
  EventuallyPeriodicWord a(FiniteWord{}, FiniteWord::parse("1010"));
  CHECK(a.period().str() == "10");
  CHECK(a.preperiod().empty());

  // Preperiod absorption: 1(01)^ == (10)^.
  EventuallyPeriodicWord b(FiniteWord::parse("1"), FiniteWord::parse("01"));
  CHECK(b == EventuallyPeriodicWord::periodic(FiniteWord::parse("10")));

  // 11(011)^ == (110)^ after absorbing the whole preperiod.
  EventuallyPeriodicWord c(FiniteWord::parse("11"), FiniteWord::parse("011"));
  CHECK(c == EventuallyPeriodicWord::periodic(FiniteWord::parse("110")));

  // 10(1)^ is already canonical.
  EventuallyPeriodicWord d(FiniteWord::parse("10"), FiniteWord::parse("1"));
  CHECK(d.preperiod().str() == "10");
  CHECK(d.period().str() == "1");
  CHECK(d.str() == "10(1)^");

  CHECK(EventuallyPeriodicWord::constant(0).is_zero());
  CHECK(EventuallyPeriodicWord::finite(FiniteWord::parse("110")).str() ==
        "11(0)^");

  EventuallyPeriodicWord p = EventuallyPeriodicWord::parse("11(0100)^");
  CHECK(p.str() == "11(0100)^");
  CHECK(p.digit(0) == 1);
  CHECK(p.digit(2) == 0);
  CHECK(p.digit(3) == 1);
  CHECK(p.first(8).str() == "11010001");
}

TEST_CASE("lexicographic order") {
  auto P = [](const char* s) {
    return EventuallyPeriodicWord::periodic(FiniteWord::parse(s));
  };
  CHECK(lex_compare(P("10"), P("110")) == std::strong_ordering::less);
  CHECK(lex_compare(P("110"), P("10")) == std::strong_ordering::greater);
  CHECK(lex_compare(P("10"), P("10")) == std::strong_ordering::equal);
  CHECK(lex_compare(EventuallyPeriodicWord::parse("1(0)^"), P("10")) ==
        std::strong_ordering::less);
  // 1(10)^ = 1101010... < (110)^ = 110110...
  CHECK(lex_compare(EventuallyPeriodicWord::parse("1(10)^"), P("110")) ==
        std::strong_ordering::less);
  // Equal words built from different presentations compare equal.
  CHECK(lex_compare(EventuallyPeriodicWord::parse("11(011)^"), P("110")) ==
        std::strong_ordering::equal);
}

TEST_CASE("lex order is consistent with base-2 values") {
  // a < b lexicographically implies value(a) <= value(b) at q = 2.
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 5);
  auto random_word = [&]() {
    FiniteWord pre, per;
    int np = pre_len(rng), nq = per_len(rng);
    for (int i = 0; i < np; ++i) pre.append(static_cast<Digit>(bit(rng)));
    for (int i = 0; i < nq; ++i) per.append(static_cast<Digit>(bit(rng)));
    return EventuallyPeriodicWord(pre, per);
  };
  for (int trial = 0; trial < 200; ++trial) {
    EventuallyPeriodicWord a = random_word(), b = random_word();
    auto ord = lex_compare(a, b);
    Rat va = eval_series(a, Rat(2)), vb = eval_series(b, Rat(2));
    if (ord == std::strong_ordering::less) CHECK(va <= vb);
    if (ord == std::strong_ordering::greater) CHECK(va >= vb);
    if (ord == std::strong_ordering::equal) CHECK(va == vb);
  }
}

TEST_CASE("lex order laws on random triples") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> pre_len(0, 3), per_len(1, 4);
  auto random_word = [&]() {
    FiniteWord pre, per;
    int np = pre_len(rng), nq = per_len(rng);
    for (int i = 0; i < np; ++i) pre.append(static_cast<Digit>(bit(rng)));
    for (int i = 0; i < nq; ++i) per.append(static_cast<Digit>(bit(rng)));
    return EventuallyPeriodicWord(pre, per);
  };
  auto sgn = [](std::strong_ordering o) {
    return o == std::strong_ordering::less ? -1
           : o == std::strong_ordering::greater ? 1
                                                : 0;
  };
  for (int trial = 0; trial < 300; ++trial) {
    EventuallyPeriodicWord a = random_word(), b = random_word(),
                           c = random_word();
    int ab = sgn(lex_compare(a, b)), ba = sgn(lex_compare(b, a));
    CHECK(ab == -ba);  // antisymmetry
    CHECK((ab == 0) == (a == b));  // equality agrees with structure
    // transitivity
    int bc = sgn(lex_compare(b, c)), ac = sgn(lex_compare(a, c));
    if (ab <= 0 && bc <= 0) CHECK(ac <= 0);
    if (ab >= 0 && bc >= 0) CHECK(ac >= 0);
  }
}

TEST_CASE("shift and complement") {
  EventuallyPeriodicWord w = EventuallyPeriodicWord::parse("10(1)^");
  CHECK(shift(w, 1) == EventuallyPeriodicWord::parse("0(1)^"));
  CHECK(shift(w, 2) == EventuallyPeriodicWord::parse("(1)^"));
  CHECK(shift(w, 5) == EventuallyPeriodicWord::parse("(1)^"));

  EventuallyPeriodicWord p =
      EventuallyPeriodicWord::periodic(FiniteWord::parse("110"));
  CHECK(shift(p, 1) ==
        EventuallyPeriodicWord::periodic(FiniteWord::parse("101")));
  CHECK(shift(p, 3) == p);

  CHECK(complement(p) ==
        EventuallyPeriodicWord::periodic(FiniteWord::parse("001")));
  CHECK(complement(complement(p)) == p);
}

TEST_CASE("doubling construction prefixes") {
  FiniteWord seed = FiniteWord::parse("10");
  CHECK(devk_generate(seed, 4).str() == "1101");
  CHECK(devk_generate(seed, 8).str() == "11010011");
  CHECK(devk_generate(seed, 16).str() == "1101001100101101");
  CHECK(devk_generate(FiniteWord::parse("110100"), 12).str() ==
        "110101001011");

  // Prefix nesting: shorter outputs are prefixes of longer ones.
  for (const char* s : {"10", "1110", "110100"}) {
    FiniteWord sd = FiniteWord::parse(s);
    FiniteWord big = devk_generate(sd, 64);
    for (std::size_t n : {3u, 7u, 20u, 40u, 63u})
      CHECK(devk_generate(sd, n) == big.prefix(n));
  }

  CHECK_THROWS_AS(devk_generate(FiniteWord::parse("11"), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(devk_generate(FiniteWord::parse("1"), 4),
                  std::invalid_argument);
}

TEST_CASE("admissibility of words") {
  CHECK(check_admissible(FiniteWord::parse("110100")));
  CHECK(check_admissible(FiniteWord::parse("1110")));
  // shift by 1 of (10)^ equals its complement sequence, so the strict
  // comparison fails.
  CHECK_FALSE(check_admissible(FiniteWord::parse("10")));
  CHECK_FALSE(check_admissible(FiniteWord::parse("1100")));
  CHECK_FALSE(check_admissible(FiniteWord::parse("1000")));
  CHECK_THROWS_AS(check_admissible(FiniteWord::parse("11")),
                  std::invalid_argument);
}

TEST_CASE("sequence literals") {
  SeqLiteral fin = parse_seq_literal("110");
  CHECK(fin.is_finite());
  CHECK(fin.head.str() == "110");
  CHECK(fin.to_word() == EventuallyPeriodicWord::parse("11(0)^"));
  CHECK(fin.str() == "110");

  SeqLiteral per = parse_seq_literal("11(0100)^");
  CHECK_FALSE(per.is_finite());
  CHECK(per.str() == "11(0100)^");
  CHECK(per.to_word().digit(3) == 1);

  SeqLiteral pure = parse_seq_literal("(10)^");
  CHECK(pure.head.empty());
  CHECK(pure.to_word() ==
        EventuallyPeriodicWord::periodic(FiniteWord::parse("10")));

  // Non-canonical literal still produces the canonical word.
  CHECK(parse_seq_literal("1(01)^").to_word() ==
        EventuallyPeriodicWord::periodic(FiniteWord::parse("10")));

  CHECK_THROWS_AS(parse_seq_literal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq_literal("11("), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq_literal("()^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq_literal("11(01)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq_literal("1x0"), std::invalid_argument);
}

TEST_CASE("digit streams") {
  DevkStream dev(FiniteWord::parse("10"));
  CHECK(dev.prefix(8).str() == "11010011");
  CHECK(dev.digit(0) == 1);
  CHECK(dev.digit(15) == 1);
  CHECK(dev.describe() == "devk(10)");

  DevkStream capped(FiniteWord::parse("10"), 8);
  CHECK(capped.prefix(8).str() == "11010011");
  CHECK_THROWS_AS(capped.digit(8), std::length_error);

  PeriodicStream per(EventuallyPeriodicWord::parse("1(10)^"));
  CHECK(per.prefix(6).str() == "110101");
}

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "printers.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/notation.hpp"

namespace cfrac {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_cf(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::Invariant;
}

TEST(ParseCfTest, Finite) {
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("[2;1,3,4]")), FiniteCF(ints({2, 1, 3, 4})));
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("[2,1,3,4]")), FiniteCF(ints({2, 1, 3, 4})));
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("  [ 2 ; 1 , 3 ,4 ] ")), FiniteCF(ints({2, 1, 3, 4})));
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("[5]")), FiniteCF(ints({5})));
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("[-3;4,4]")), FiniteCF(ints({-3, 4, 4})));
  EXPECT_EQ(std::get<FiniteCF>(parse_cf("[0;2]")), FiniteCF(ints({0, 2})));
}

TEST(ParseCfTest, Periodic) {
  EXPECT_EQ(std::get<PeriodicCF>(parse_cf("[1;(2)]")), PeriodicCF(ints({1}), ints({2})));
  EXPECT_EQ(std::get<PeriodicCF>(parse_cf("[(1)]")), PeriodicCF({}, ints({1})));
  EXPECT_EQ(std::get<PeriodicCF>(parse_cf("[3;1,(1,6)]")), PeriodicCF(ints({3, 1}), ints({1, 6})));
  EXPECT_EQ(std::get<PeriodicCF>(parse_cf("[1,(2)]")), PeriodicCF(ints({1}), ints({2})));
}

TEST(ParseCfTest, InvariantErrors) {
  EXPECT_EQ(parse_error_kind("[2;0,3]"), ErrorKind::Invariant);
  EXPECT_EQ(parse_error_kind("[2;-1]"), ErrorKind::Invariant);
  EXPECT_EQ(parse_error_kind("[1;()]"), ErrorKind::Invariant);
  EXPECT_EQ(parse_error_kind("[(0)]"), ErrorKind::Invariant);
}

TEST(ParseCfTest, SyntaxErrors) {
  for (const char* text : {"", "[", "[]", "2;1", "[2;1,3", "[2;1,,3]", "[2;1]x", "[a]",
                           "[1;(2),3]", "[1;(2]", "[2;1 3]", "[--2]", "[(1)(2)]"}) {
    EXPECT_EQ(parse_error_kind(text), ErrorKind::Syntax) << text;
  }
}

TEST(ParseCfTest, ErrorPositions) {
  try {
    parse_cf("[2;0,3]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  try {
    parse_cf("[2;1,x]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_cf("");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
}

TEST(FormatCfTest, Examples) {
  EXPECT_EQ(format_cf(FiniteCF(ints({2, 1, 3, 4}))), "[2;1,3,4]");
  EXPECT_EQ(format_cf(FiniteCF(ints({5}))), "[5]");
  EXPECT_EQ(format_cf(PeriodicCF({}, ints({1}))), "[(1)]");
  EXPECT_EQ(format_cf(PeriodicCF(ints({1}), ints({2}))), "[1;(2)]");
  EXPECT_EQ(format_cf(PeriodicCF(ints({3, 1}), ints({1, 6}))), "[3;1,(1,6)]");
}

ContinuedFraction random_cf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(0, 8);
  std::uniform_int_distribution<long> head(-1000, 1000);
  std::uniform_int_distribution<long> tail(1, 50);
  std::bernoulli_distribution periodic(0.5);
  std::bernoulli_distribution huge(0.05);
  auto term = [&](bool first) {
    BigInt value = first ? BigInt(head(rng)) : BigInt(tail(rng));
    if (huge(rng)) value *= pow10(40);
    return value;
  };
  std::vector<BigInt> pre;
  const int n_pre = length(rng);
  for (int i = 0; i < n_pre; ++i) pre.push_back(term(i == 0));
  if (periodic(rng)) {
    std::vector<BigInt> period;
    const int n_period = 1 + length(rng);
    for (int i = 0; i < n_period; ++i) period.push_back(term(false));
    return PeriodicCF(pre, period);
  }
  if (pre.empty()) pre.push_back(term(true));
  return FiniteCF(pre);
}

TEST(NotationPropertyTest, FormatParseRoundTrip) {
  std::mt19937_64 rng(20260917);
  for (int i = 0; i < 10000; ++i) {
    const ContinuedFraction cf = random_cf(rng);
    const std::string text = format_cf(cf);
    ASSERT_EQ(parse_cf(text), cf) << text;
    ASSERT_EQ(format_cf(parse_cf(text)), text);
  }
}

TEST(NotationPropertyTest, ArbitraryBytesNeverCrash) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "[](),;-+0123456789 \t\nabc\x01\xff";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> raw(0, 255);
  std::uniform_int_distribution<int> length(0, 24);
  std::bernoulli_distribution use_raw(0.2);
  for (int i = 0; i < 20000; ++i) {
    std::string text;
    const int n = length(rng);
    for (int k = 0; k < n; ++k) {
      text.push_back(use_raw(rng) ? static_cast<char>(raw(rng)) : alphabet[pick(rng)]);
    }
    try {
      const ContinuedFraction cf = parse_cf(text);
      EXPECT_EQ(parse_cf(format_cf(cf)), cf);
    } catch (const ParseError& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::Syntax || e.kind() == ErrorKind::Invariant);
      if (text.empty()) {
        EXPECT_EQ(e.position(), 0u);
      } else {
        EXPECT_LT(e.position(), text.size()) << text;
      }
    }
  }
}

}  // namespace
}  // namespace cfrac

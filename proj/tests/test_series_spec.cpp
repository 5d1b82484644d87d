#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riordan/error.hpp"
#include "riordan/series_spec.hpp"

using namespace riordan;

namespace {
std::vector<std::size_t> support_of(const std::vector<int>& bits) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k]) s.push_back(k);
  return s;
}
}  // namespace

TEST(SeriesSpec, NamedExamples) {
  EXPECT_EQ(SeriesSpec::named(NamedSeries::catalan).expand(16).support(),
            (std::vector<std::size_t>{0, 1, 3, 7, 15}));
  EXPECT_EQ(SeriesSpec::named(NamedSeries::geometric).expand(6).support(),
            (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(SeriesSpec::named(NamedSeries::motzkin).expand(7).support(),
            (std::vector<std::size_t>{0, 1, 4, 5, 6}));
}

TEST(SeriesSpec, NamedMatchIntegerRecurrences) {
  EXPECT_EQ(SeriesSpec::named(NamedSeries::catalan).expand(300).support(), support_of(oracle_ref::catalan_mod2(300)));
  EXPECT_EQ(SeriesSpec::named(NamedSeries::motzkin).expand(300).support(), support_of(oracle_ref::motzkin_mod2(300)));
}

TEST(SeriesSpec, GrammarRoundTrip) {
  for (const char* text : {"poly:1+t+t^3", "rat:(1)/(1+t+t^2)", "named:catalan", "fix:X=1+t*X^2", "win:5:1+t^4"}) {
    const SeriesSpec s = SeriesSpec::parse(text);
    const SeriesSpec again = SeriesSpec::parse(s.to_string());
    EXPECT_EQ(s.expand(5), again.expand(5)) << text;
  }
  EXPECT_EQ(SeriesSpec::parse(" poly : 1 + t + t ^ 3 ").expand(6), BitSeries::from_support({0, 1, 3}, 6));
  // + is XOR and integer literals reduce mod 2.
  EXPECT_EQ(SeriesSpec::parse("poly:1+t+t+2t^2+3t^3").expand(5), BitSeries::from_support({0, 3}, 5));
  EXPECT_EQ(SeriesSpec::parse("poly:(1+t)^2").expand(5), BitSeries::from_support({0, 2}, 5));
  EXPECT_EQ(SeriesSpec::parse("rat:(1)/(1-t-t^2)").expand(8).support(),
            (std::vector<std::size_t>{0, 1, 3, 4, 6, 7}));  // Fibonacci numbers mod 2
}

TEST(SeriesSpec, Errors) {
  EXPECT_THROW(SeriesSpec::parse("rat:(1)/(t)"), Error);
  EXPECT_THROW(SeriesSpec::parse("poly:1+X"), Error);
  EXPECT_THROW(SeriesSpec::parse("bogus:1"), Error);
  EXPECT_THROW(SeriesSpec::parse("named:nope"), Error);
  EXPECT_THROW(SeriesSpec::parse("poly:1+"), Error);
  try {
    SeriesSpec::parse("fix:X=X+t").expand(5);
    FAIL() << "expected divergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::divergence);
  }
  EXPECT_THROW(SeriesSpec::parse("win:4:1+t").expand(5), Error);
}

TEST(SeriesSpec, FixedPointAgreesWithRational) {
  EXPECT_EQ(SeriesSpec::parse("fix:X=1+t*X").expand(50), SeriesSpec::parse("rat:1/(1+t)").expand(50));
  EXPECT_EQ(SeriesSpec::parse("fix:X=t+t*X+t*X^2").expand(60),
            (BitSeries::monomial(1, 100) * SeriesSpec::named(NamedSeries::motzkin).expand(60)).truncated(60));
}

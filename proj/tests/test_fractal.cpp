#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "riordan/error.hpp"
#include "riordan/fractal_relabel.hpp"
#include "riordan/graph_ops.hpp"
#include "riordan/riordan_matrix.hpp"
#include "test_util.hpp"

using namespace riordan;
namespace ref = oracle_ref;

TEST(Fractal, CatalanExample) {
  EXPECT_EQ(cognate_pairs(family_spec(Family::catalan, 9), 1, 5), (std::vector<Edge>{{1, 5}, {5, 9}}));
  const auto cg15 = family_spec(Family::catalan, 15);
  EXPECT_EQ(cognate_pairs(cg15, 5, 1), (std::vector<Edge>{{1, 5}, {5, 9}, {9, 13}}));
  const CognateSpec c = cognate_spec(cg15, 5, 1);
  EXPECT_EQ(c.ell, 0U);
  EXPECT_EQ(c.s, 2U);
  EXPECT_EQ(c.m_low, 0);
  EXPECT_EQ(c.m_high, 2);
  EXPECT_TRUE(fractal_isomorphism_check(cg15, 5, 1, 0));
  EXPECT_TRUE(fractal_isomorphism_check(cg15, 5, 1, 1));
  EXPECT_TRUE(fractal_isomorphism_check(cg15, 5, 1, 2));
  EXPECT_THROW(fractal_isomorphism_check(cg15, 5, 1, 3), Error);
  EXPECT_TRUE(fractal_isomorphism_check(family_spec(Family::pascal, 17), 5, 1, 1));
}

TEST(Fractal, RejectsAppellAndBadPairs) {
  try {
    cognate_pairs(family_spec(Family::complete, 8), 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
  }
  EXPECT_THROW(cognate_pairs(family_spec(Family::pascal, 8), 3, 3), Error);
  EXPECT_THROW(cognate_pairs(family_spec(Family::pascal, 8), 9, 3), Error);
}

TEST(FractalProperty, CognatePairsExhaustive) {
  for (Family fam : {Family::pascal, Family::catalan})
    for (std::size_t n = 3; n <= 64; ++n) {
      const FractalView view(family_spec(fam, n));
      const Graph& g = view.graph();
      for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = 1; j < i; ++j) {
          const auto pairs = view.cognate_pairs(i, j);
          ASSERT_NE(std::find(pairs.begin(), pairs.end(), Edge{j, i}), pairs.end());
          for (auto [a, b] : pairs) {
            ASSERT_EQ(b - a, i - j);
            ASSERT_EQ(g.adjacent(a, b), g.adjacent(i, j));
          }
        }
    }
}

TEST(FractalProperty, WindowsAreIsomorphicForRandomSpecs) {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 4 + rng() % 40;
    const auto spec = with_pair(test_util::random_proper_pair(rng, n + 2), n);
    const std::size_t i = 2 + rng() % (n - 1), j = 1 + rng() % (i - 1);
    CognateSpec c;
    try {
      c = cognate_spec(spec, i, j);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::not_applicable);
      continue;
    }
    for (std::int64_t m = c.m_low; m <= c.m_high; ++m) EXPECT_TRUE(fractal_isomorphism_check(spec, i, j, m));
    EXPECT_NO_THROW(cognate_pairs(spec, i, j));
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Fractal, ReverseRelabelExamples) {
  const auto cat = reverse_relabel(family_spec(Family::catalan, 7));
  EXPECT_EQ(build_graph(cat), build_graph(RiordanGraphSpec::parse("poly:1+t", "poly:t+t^2", 7)));
  const RiordanPair inv = expand_pair(cat, 8);
  const RiordanPair c = expand_pair(family_spec(Family::catalan, 7), 8);
  const RiordanPair id = riordan_multiply(c, inv);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(id.g.coeff(k), k == 0) << k;
    EXPECT_EQ(id.f.coeff(k), k == 1) << k;
  }
  for (std::size_t n = 1; n <= 12; ++n)
    EXPECT_EQ(build_graph(reverse_relabel(family_spec(Family::path, n))), build_graph(family_spec(Family::path, n)));
  EXPECT_THROW(reverse_relabel(RiordanGraphSpec::parse("named:geometric", "poly:t^2", 6)), Error);
}

TEST(FractalProperty, ReverseRelabelIsReversal) {
  std::mt19937_64 rng(102);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 40;
    ref::Poly g = ref::random_poly(rng, n + 2), f = ref::random_poly(rng, n + 2);
    f[0] = 0;
    f[1] = 1;
    const auto spec = with_pair({test_util::series(g, n + 2), test_util::series(f, n + 2)}, n);
    const auto rev = reverse_relabel(spec);
    const auto naive = ref::riordan_graph(g, f, n);
    const Graph rg = build_graph(rev);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) ASSERT_EQ(rg.adjacent(n + 1 - a, n + 1 - b), naive[a - 1][b - 1] == 1);
    EXPECT_EQ(build_graph(reverse_relabel(rev)), build_graph(spec));
  }
}

TEST(Fractal, LucasBinomial) {
  EXPECT_FALSE(lucas_binomial(5, 2));
  for (std::uint64_t m = 0; m < 100; ++m) {
    EXPECT_TRUE(lucas_binomial(m, 0));
    EXPECT_TRUE(lucas_binomial(m, m));
  }
  const std::uint64_t j = 4;
  for (std::uint64_t k = 2; k + 3 <= (1U << j); ++k) EXPECT_FALSE(lucas_binomial((1U << j) + k - 2, k)) << k;
}

TEST(FractalProperty, LucasMatchesIntegerBinomials) {
  for (std::uint64_t m = 0; m <= 64; ++m)
    for (std::uint64_t k = 0; k <= m; ++k) EXPECT_EQ(lucas_binomial(m, k), ref::binomial_mod2(m, k) == 1) << m << "," << k;
}

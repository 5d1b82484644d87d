#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "riordan/error.hpp"
#include "riordan/graph_ops.hpp"
#include "test_util.hpp"

using namespace riordan;
namespace ref = oracle_ref;

namespace {

RiordanGraphSpec spec(const char* g, const char* f, std::size_t n) { return RiordanGraphSpec::parse(g, f, n); }

RiordanGraphSpec random_spec(std::mt19937_64& rng, std::size_t n) {
  return with_pair(test_util::random_pair(rng, n + 2), n);
}

// Walk counts straight from the definition: red arcs i -> k, green k -> k+1,
// blue k+1 -> j, all read off naive matrix entries.
std::vector<std::vector<long>> naive_walks(const ref::Poly& g, const ref::Poly& f, const ref::Poly& h,
                                           const ref::Poly& l, std::size_t n) {
  ref::Poly tg(n + 1, 0), th(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    tg[k + 1] = k < g.size() ? g[k] : 0;
    th[k + 1] = k < h.size() ? h[k] : 0;
  }
  std::vector<std::vector<long>> d(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k + 1 < n; ++k)
        d[i][j] += ref::riordan_entry(tg, f, i, k) * ref::riordan_entry(th, l, k + 1, j);
  return d;
}

}  // namespace

TEST(GraphOps, RingSumExamples) {
  const auto pg = family_spec(Family::pascal, 9);
  EXPECT_EQ(build_graph(ring_sum(pg, pg)).edge_count(), 0U);
  const auto null9 = spec("named:zero", "named:pascal_f", 9);
  EXPECT_EQ(build_graph(ring_sum(pg, null9)), build_graph(pg));
  // G(g, tg) + G((tg)', tg) = G(t g', tg) with g = C.
  const std::size_t n = 12;
  const BitSeries c = SeriesSpec::named(NamedSeries::catalan).expand(n + 3);
  const BitSeries tc = shift_up(c, 1);
  const RiordanGraphSpec lhs1 = with_pair({c, tc}, n);
  const RiordanGraphSpec lhs2 = with_pair({derivative(tc), tc}, n);
  const RiordanGraphSpec rhs = with_pair({shift_up(derivative(c), 1), tc}, n);
  EXPECT_EQ(build_graph(ring_sum(lhs1, lhs2)), build_graph(rhs));
  EXPECT_THROW(ring_sum(pg, family_spec(Family::catalan, 9)), Error);
  EXPECT_THROW(ring_sum(pg, family_spec(Family::pascal, 8)), Error);
}

TEST(GraphOpsProperty, RingSumIsSymmetricDifference) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + rng() % 16;
    const RiordanPair p = test_util::random_pair(rng, n + 2);
    const RiordanPair q{test_util::random_pair(rng, n + 2).g, p.f};
    const auto a = with_pair(p, n), b = with_pair(q, n);
    EXPECT_EQ(build_graph(ring_sum(a, b)), symmetric_difference(build_graph(a), build_graph(b)));
  }
}

TEST(GraphOps, RProductExamples) {
  const std::size_t n = 10;
  const auto fib = family_spec(Family::fibonacci, n), pascal = family_spec(Family::pascal, n);
  const auto prod = r_product(fib, pascal);
  EXPECT_EQ(build_graph(prod), build_graph(spec("rat:1/(1+t+t^2)", "rat:(t+t^2)/(1+t+t^2)", n)));
  const auto path = family_spec(Family::path, n);
  EXPECT_EQ(build_graph(r_product(pascal, path)), build_graph(pascal));
  EXPECT_EQ(build_graph(r_product(path, pascal)), build_graph(pascal));
}

TEST(GraphOps, PascalCheckerboardWalkMatrix) {
  const auto g = family_spec(Family::pascal, 6);
  const auto h = spec("rat:1/(1+t^2)", "poly:t^2", 6);
  const std::vector<std::vector<std::int64_t>> expect = {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                                                         {1, 0, 0, 0, 0, 0}, {2, 1, 0, 0, 0, 0},
                                                         {2, 1, 0, 0, 0, 0}, {2, 1, 1, 0, 0, 0}};
  for (auto exec : {Execution::serial, Execution::parallel}) {
    const WalkMatrix d = rgb_walk_matrix(g, h, exec);
    for (std::size_t i = 1; i <= 6; ++i)
      for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(d.at(i, j), expect[i - 1][j - 1]) << i << "," << j;
    EXPECT_EQ(d.at(5, 1), 2);
    const Graph sym = d.parity_graph();
    EXPECT_EQ(sym.adjacency(), BitMatrix::from_rows({"011000", "100111", "100001", "010000", "010000", "011000"}));
    EXPECT_EQ(sym, build_graph(r_product(g, h)));
    EXPECT_EQ(sym, build_graph(spec("poly:1+t", "rat:t^2/(1+t^2)", 6)));
  }
}

TEST(GraphOps, ZeroGeneratorGivesZeroWalks) {
  const auto d = rgb_walk_matrix(family_spec(Family::null, 7), family_spec(Family::pascal, 7));
  for (auto x : d.entries) EXPECT_EQ(x, 0);
}

TEST(GraphOpsProperty, WalkParityIsRProduct) {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 32;
    const auto a = random_spec(rng, n), b = random_spec(rng, n);
    const WalkMatrix d = rgb_walk_matrix(a, b);
    EXPECT_EQ(d, rgb_walk_matrix(a, b, Execution::serial));
    EXPECT_EQ(d.parity_graph(), build_graph(r_product(a, b)));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) EXPECT_EQ(d.at(i, j), 0);
  }
}

TEST(GraphOpsProperty, WalkCountsMatchNaiveDefinition) {
  std::mt19937_64 rng(56);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng() % 12;
    ref::Poly g = ref::random_poly(rng, n), f = ref::random_poly(rng, n), h = ref::random_poly(rng, n),
              l = ref::random_poly(rng, n);
    f[0] = l[0] = 0;
    const auto a = with_pair({test_util::series(g, n + 2), test_util::series(f, n + 2)}, n);
    const auto b = with_pair({test_util::series(h, n + 2), test_util::series(l, n + 2)}, n);
    const WalkMatrix d = rgb_walk_matrix(a, b);
    const auto want = naive_walks(g, f, h, l, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(d.at(i + 1, j + 1), want[i][j]);
  }
}

TEST(GraphOpsProperty, AppellClosedUnderOperations) {
  std::mt19937_64 rng(57);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 2 + rng() % 20;
    const auto a = with_pair({test_util::random_pair(rng, n + 2).g, BitSeries::monomial(1, n + 2)}, n);
    const auto b = with_pair({test_util::random_pair(rng, n + 2).g, BitSeries::monomial(1, n + 2)}, n);
    EXPECT_TRUE(has_subgroup(ring_sum(a, b), Subgroup::appell));
    EXPECT_TRUE(has_subgroup(r_product(a, b), Subgroup::appell));
  }
}

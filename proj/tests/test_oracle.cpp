#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "riordan/error.hpp"
#include "riordan/oracle.hpp"
#include "riordan/riordan_graph.hpp"

using namespace riordan;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, int percent) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
  return g;
}

// Brute-force references over all permutations / subsets, n <= 8.
bool brute_hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = g.adjacent(p[k], p[(k + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

std::size_t brute_clique(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (unsigned s = 0; s < (1U << n); ++s) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1U) vs.push_back(v + 1);
    bool ok = true;
    for (std::size_t a = 0; a < vs.size() && ok; ++a)
      for (std::size_t b = a + 1; b < vs.size() && ok; ++b) ok = g.adjacent(vs[a], vs[b]);
    if (ok) best = std::max(best, vs.size());
  }
  return best;
}

std::size_t brute_chromatic(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> c(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t u = 1; u <= n && ok; ++u)
        for (std::size_t v = u + 1; v <= n && ok; ++v) ok = !(g.adjacent(u, v) && c[u - 1] == c[v - 1]);
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

std::size_t brute_matching(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  for (unsigned s = 0; s < (1U << edges.size()); ++s) {
    std::vector<bool> used(g.order() + 1, false);
    std::size_t k = 0;
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e)
      if (s >> e & 1U) {
        ok = !used[edges[e].first] && !used[edges[e].second];
        used[edges[e].first] = used[edges[e].second] = true;
        ++k;
      }
    if (ok) best = std::max(best, k);
  }
  return best;
}

std::optional<std::size_t> floyd_diameter(const Graph& g) {
  const std::size_t n = g.order(), inf = 1000;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d[u][v] = u == v ? 0 : g.adjacent(u + 1, v + 1) ? 1 : inf;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t best = 0;
  for (const auto& row : d)
    for (std::size_t x : row) best = std::max(best, x);
  if (best >= inf) return std::nullopt;
  return best;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), 1);
  do {
    if (a.relabeled(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Graph complete(std::size_t n) { return build_graph(family_spec(Family::complete, n)); }

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_TRUE(hamilton_search(complete(4)).found);
  EXPECT_EQ(clique_number(complete(5)), 5U);
  EXPECT_EQ(chromatic_number(complete(5)), 5U);
  EXPECT_EQ(diameter(build_graph(family_spec(Family::path, 5))), std::optional<std::size_t>(4));
  const auto cg9 = build_graph(family_spec(Family::catalan, 9));
  const HamiltonResult h = hamilton_search(cg9);
  ASSERT_TRUE(h.found);
  EXPECT_TRUE(is_hamiltonian_cycle(cg9, h.cycle));
  EXPECT_FALSE(hamilton_search(build_graph(RiordanGraphSpec::parse("named:geometric", "poly:t^2", 6))).found);
  EXPECT_EQ(clique_number(build_graph(family_spec(Family::pascal, 16))), 5U);
  EXPECT_FALSE(diameter(build_graph(family_spec(Family::null, 3))));
}

TEST(Oracle, AgreesWithBruteForce) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph(rng, n, static_cast<int>(rng() % 100));
    EXPECT_EQ(hamilton_search(g).found, brute_hamiltonian(g));
    EXPECT_EQ(clique_number(g), brute_clique(g));
    if (n <= 6) EXPECT_EQ(chromatic_number(g), brute_chromatic(g));
    EXPECT_EQ(diameter(g), floyd_diameter(g));
    if (g.edge_count() <= 12) EXPECT_EQ(max_matching(g), brute_matching(g));
    const Graph h = random_graph(rng, n, 50);
    if (n <= 6) EXPECT_EQ(isomorphic(g, h), brute_isomorphic(g, h));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(isomorphic(g, g.relabeled(perm)));
  }
}

TEST(Oracle, EulerTrail) {
  const auto p5 = build_graph(family_spec(Family::path, 5));
  const auto walk = euler_trail(p5);
  ASSERT_TRUE(walk);
  EXPECT_TRUE(is_euler_trail(p5, *walk));
  EXPECT_FALSE(euler_trail(complete(4)));
  const auto k5 = complete(5);
  const auto cyc = euler_trail(k5);
  ASSERT_TRUE(cyc);
  EXPECT_EQ(cyc->front(), cyc->back());
  EXPECT_TRUE(is_euler_trail(k5, *cyc));
  Graph two_triangles(6);
  for (auto [u, v] : std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}) two_triangles.add_edge(u, v);
  EXPECT_FALSE(euler_trail(two_triangles));
}

TEST(Oracle, BudgetsRefuse) {
  OracleBudget b;
  b.hamilton = 5;
  EXPECT_THROW(hamilton_search(complete(6), b), Error);
  b.isomorphism = 3;
  EXPECT_THROW(isomorphic(complete(4), complete(4), b), Error);
  try {
    chromatic_number(complete(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget);
  }
  b = OracleBudget{};
  b.time_limit = std::chrono::milliseconds(0);
  EXPECT_THROW(clique_number(build_graph(family_spec(Family::catalan, 32)), b), Error);
}

TEST(Oracle, BudgetFromEnvironment) {
  ::setenv("RIORDAN_BUDGET_CLIQUE", "7", 1);
  EXPECT_EQ(OracleBudget::from_env().clique, 7U);
  EXPECT_THROW(clique_number(complete(8)), Error);
  ::setenv("RIORDAN_BUDGET_CLIQUE", "x", 1);
  EXPECT_THROW(OracleBudget::from_env(), Error);
  ::unsetenv("RIORDAN_BUDGET_CLIQUE");
}

TEST(Oracle, PrismIsRiordan) {
  Graph prism(6);
  for (auto [u, v] : std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}})
    prism.add_edge(u, v);
  EXPECT_TRUE(isomorphic(prism, build_graph(RiordanGraphSpec::parse("poly:t+t^2+t^3", "named:t", 6))));
  EXPECT_TRUE(isomorphic(prism, prism));
  EXPECT_FALSE(isomorphic(build_graph(family_spec(Family::path, 3)), complete(3)));
}

// Every unlabeled graph on at most four vertices has a Riordan labeling.
TEST(Oracle, SmallUnlabeledGraphsAreRiordan) {
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (unsigned s = 0; s < (1U << pairs); ++s) {
      Graph g(n);
      std::size_t bit = 0;
      for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v, ++bit)
          if (s >> bit & 1U) g.add_edge(u, v);
      if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return brute_isomorphic(r, g); }))
        reps.push_back(g);
    }
    for (const auto& g : reps) {
      const auto w = is_riordan_unlabeled(g);
      ASSERT_TRUE(w);
      EXPECT_TRUE(brute_isomorphic(build_graph(*w), g));
    }
    classes += reps.size();
  }
  EXPECT_EQ(classes, 18U);
}

TEST(Oracle, CompletePlusIsolatedIsNotRiordan) {
  Graph g(5);
  for (std::size_t u = 1; u <= 4; ++u)
    for (std::size_t v = u + 1; v <= 4; ++v) g.add_edge(u, v);
  EXPECT_FALSE(is_riordan_unlabeled(g));
  const auto null5 = is_riordan_unlabeled(Graph(5));
  ASSERT_TRUE(null5);
  EXPECT_EQ(build_graph(*null5).edge_count(), 0U);
}

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>

#include "figures.hpp"
#include "oracles.hpp"
#include "riordan/error.hpp"
#include "riordan/riordan_graph.hpp"
#include "test_util.hpp"

using namespace riordan;
namespace ref = oracle_ref;

namespace {

RiordanGraphSpec spec(const char* g, const char* f, std::size_t n) { return RiordanGraphSpec::parse(g, f, n); }

Graph graph_of_rows(const std::vector<std::string>& rows) { return Graph::from_adjacency(BitMatrix::from_rows(rows)); }

Graph naive_graph(const ref::Poly& g, const ref::Poly& f, std::size_t n) {
  const auto a = ref::riordan_graph(g, f, n);
  Graph out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j]) out.add_edge(i + 1, j + 1);
  return out;
}

}  // namespace

TEST(RiordanGraph, Figures) {
  for (const auto& fig : test_figures::all()) {
    SCOPED_TRACE(fig.name);
    EXPECT_EQ(build_graph(spec(fig.g, fig.f, 6)), graph_of_rows(fig.rows));
  }
}

TEST(RiordanGraph, GoldenFilesMatchFigures) {
  for (const auto& fig : test_figures::all()) {
    std::ifstream in(std::string(RIORDAN_GOLDEN_DIR) + "/" + fig.golden);
    ASSERT_TRUE(in) << fig.golden;
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) rows.push_back(line);
    EXPECT_EQ(rows, fig.rows) << fig.golden;
  }
}

TEST(RiordanGraph, MatchesNaiveDefinition) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 24;
    ref::Poly g = ref::random_poly(rng, n + 2), f = ref::random_poly(rng, n + 2);
    f[0] = 0;
    const RiordanPair p{test_util::series(g, n + 2), test_util::series(f, n + 2)};
    EXPECT_EQ(build_graph(p, n), naive_graph(g, f, n));
  }
}

TEST(RiordanGraph, EdgeCounts) {
  EXPECT_EQ(basic_stats(family_spec(Family::pascal, 6)).edge_count, 11U);
  EXPECT_EQ(basic_stats(family_spec(Family::catalan, 6)).edge_count, 10U);
  EXPECT_EQ(basic_stats(family_spec(Family::pascal, 9)).edge_count, 27U);
  const BasicStats null = basic_stats(family_spec(Family::null, 7));
  EXPECT_EQ(null.edge_count, 0U);
  EXPECT_EQ(null.degrees, std::vector<std::size_t>(7, 0));
  EXPECT_FALSE(null.matching_number);
  EXPECT_EQ(basic_stats(family_spec(Family::complete, 5)).degrees, std::vector<std::size_t>(5, 4));
}

TEST(RiordanGraph, StatsOnFamilies) {
  for (auto fam : {Family::pascal, Family::catalan, Family::motzkin, Family::fibonacci, Family::path, Family::complete,
                   Family::complete_bipartite, Family::null, Family::star, Family::kary_tree})
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto s = family_spec(fam, n);
      const BasicStats st = basic_stats(s);  // throws if the two degree computations disagree
      EXPECT_EQ(st.has_consecutive_ham_path, is_proper(s));
    }
}

// Column-polynomial degrees equal row sums for random specs up to n = 64, and
// proper specs contain the path 1-2-...-n.
TEST(RiordanGraphProperty, DegreesAndConsecutivePath) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + rng() % 64;
    const bool proper = it % 2 == 0;
    const RiordanPair p = proper ? test_util::random_proper_pair(rng, n + 2) : test_util::random_pair(rng, n + 2);
    const RiordanGraphSpec s = with_pair(p, n);
    const BasicStats st = basic_stats(s);
    const Graph graph = build_graph(s);
    EXPECT_EQ(st.degrees, graph.degrees());
    EXPECT_EQ(graph.adjacency(), graph.adjacency().transpose());
    for (std::size_t v = 1; v <= n; ++v) EXPECT_FALSE(graph.adjacent(v, v));
    if (is_proper(s))
      for (std::size_t v = 1; v < n; ++v) EXPECT_TRUE(graph.adjacent(v, v + 1));
    if (st.has_consecutive_ham_cycle) EXPECT_TRUE(graph.adjacent(1, n));
  }
}

TEST(RiordanGraph, SubdiagonalPattern) {
  EXPECT_EQ(subdiagonal_pattern(family_spec(Family::star, 5)), Subdiagonal::first_only);
  EXPECT_EQ(subdiagonal_pattern(family_spec(Family::pascal, 5)), Subdiagonal::full);
  EXPECT_EQ(subdiagonal_pattern(family_spec(Family::null, 5)), Subdiagonal::none);
  const Graph star = build_graph(family_spec(Family::star, 5));
  EXPECT_TRUE(star.adjacent(1, 2));
  EXPECT_FALSE(star.adjacent(2, 3));
}

TEST(RiordanGraph, ClassifySubgroup) {
  using S = Subgroup;
  EXPECT_EQ(classify_subgroup(family_spec(Family::catalan, 10)), std::vector<S>{S::bell});
  EXPECT_EQ(classify_subgroup(family_spec(Family::path, 10)),
            (std::vector<S>{S::appell, S::bell, S::lagrange, S::checkerboard, S::derivative, S::hitting_time}));
  EXPECT_EQ(classify_subgroup(family_spec(Family::complete_bipartite, 10)), (std::vector<S>{S::appell, S::checkerboard}));
  EXPECT_TRUE(has_subgroup(family_spec(Family::pascal, 10), S::bell));
  EXPECT_TRUE(has_subgroup(family_spec(Family::fibonacci, 10), S::lagrange));
  EXPECT_TRUE(has_subgroup(spec("poly:1", "fix:X=t+X^2", 12), S::derivative));
}

TEST(RiordanGraph, PrecisionErrors) {
  const RiordanGraphSpec short_window{SeriesSpec::window(BitSeries::one(3)), SeriesSpec::named(NamedSeries::t), 8};
  EXPECT_THROW(build_graph(short_window), Error);
  EXPECT_THROW(build_graph(spec("poly:1", "poly:1+t", 4)), Error);
  EXPECT_EQ(build_graph(spec("poly:1", "poly:t", 1)).order(), 1U);
}

TEST(RiordanGraph, EnumerateCounts) {
  const std::vector<std::size_t> expected = {1, 2, 6, 22, 86, 342, 1366};
  for (std::size_t n = 1; n <= 7; ++n) {
    const LabeledCensus c = enumerate_labeled(n);
    EXPECT_EQ(c.count, expected[n - 1]);
    EXPECT_EQ(c.count, c.expected);
    EXPECT_EQ(c.normal_forms, c.count);
    EXPECT_TRUE(c.collisions.empty());
    for (const auto& lg : c.graphs) EXPECT_EQ(build_graph(lg.witness), lg.graph);
  }
  const LabeledCensus two = enumerate_labeled(2);
  std::set<std::size_t> edge_counts;
  for (const auto& lg : two.graphs) edge_counts.insert(lg.graph.edge_count());
  EXPECT_EQ(edge_counts, (std::set<std::size_t>{0, 1}));
  EXPECT_THROW(enumerate_labeled(9), Error);
}

TEST(RiordanGraph, EnumerateSerialMatchesParallel) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = enumerate_labeled(n, Execution::serial), b = enumerate_labeled(n, Execution::parallel);
    ASSERT_EQ(a.count, b.count);
    for (std::size_t i = 0; i < a.count; ++i) EXPECT_EQ(a.graphs[i].graph, b.graphs[i].graph);
  }
}

TEST(RiordanGraph, ComplementAppell) {
  const Graph kn = build_graph(family_spec(Family::complete, 7));
  EXPECT_EQ(build_graph(complement_appell(family_spec(Family::complete, 7))).edge_count(), 0U);
  EXPECT_EQ(build_graph(complement_appell(family_spec(Family::null, 7))), kn);
  const auto path_c = complement_appell(family_spec(Family::path, 8));
  EXPECT_EQ(build_graph(path_c), build_graph(spec("rat:t/(1+t)", "named:t", 8)));
  const auto tg = family_spec(FamilyId::toeplitz(SeriesSpec::parse("poly:1+t^2+t^4")), 6);
  const auto tgc = complement_appell(tg);
  EXPECT_EQ(build_graph(tgc), build_graph(spec("poly:t+t^3+t^5", "named:t", 6)));
  EXPECT_EQ(build_graph(tgc), build_graph(tg).complement());
  EXPECT_THROW(complement_appell(family_spec(Family::pascal, 6)), Error);
}

TEST(RiordanGraphProperty, ComplementIsInvolution) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 40;
    const RiordanGraphSpec s = with_pair({test_util::random_pair(rng, n + 2).g, BitSeries::monomial(1, n + 2)}, n);
    const RiordanGraphSpec c = complement_appell(s);
    EXPECT_EQ(build_graph(c), build_graph(s).complement());
    const RiordanGraphSpec cc = complement_appell(c);
    EXPECT_TRUE(expand_pair(cc, n).g.agrees_with(expand_pair(s, n).g, n));
  }
}

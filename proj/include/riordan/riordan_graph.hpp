#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/execution.hpp"
#include "riordan/graph.hpp"
#include "riordan/riordan_matrix.hpp"
#include "riordan/series_spec.hpp"

namespace riordan {

// G_n(g, f): adjacency B + B^T with B the order-n matrix of (t g, f).
struct RiordanGraphSpec {
  SeriesSpec g;
  SeriesSpec f;
  std::size_t n = 1;

  static RiordanGraphSpec parse(std::string_view g, std::string_view f, std::size_t n);
  std::string to_string() const;
};

inline std::size_t working_precision(std::size_t n) { return n + 2; }

// Expands g and f to the working precision, or as far as a coefficient window
// allows; fails if that is below `need`.
RiordanPair expand_pair(const RiordanGraphSpec& spec, std::size_t need);

RiordanGraphSpec with_pair(const RiordanPair& p, std::size_t n);

enum class Family {
  pascal,
  catalan,
  motzkin,
  toeplitz,
  fibonacci,
  path,
  complete,
  complete_bipartite,
  null,
  star,
  kary_tree,
};

struct FamilyId {
  Family kind = Family::path;
  SeriesSpec toeplitz_g;  // toeplitz only
  std::size_t arity = 2;  // kary_tree only

  static FamilyId toeplitz(SeriesSpec g) { return {Family::toeplitz, std::move(g), 2}; }
  static FamilyId kary_tree(std::size_t k) { return {Family::kary_tree, SeriesSpec{}, k}; }
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
RiordanGraphSpec family_spec(const FamilyId& id, std::size_t n);
inline RiordanGraphSpec family_spec(Family kind, std::size_t n) { return family_spec(FamilyId{kind, {}, 2}, n); }

Graph build_graph(const RiordanPair& p, std::size_t n);
Graph build_graph(const RiordanGraphSpec& spec);

// g(0) = 1, f(0) = 0, [t]f = 1.
bool is_proper(const RiordanGraphSpec& spec);

struct BasicStats {
  std::vector<std::size_t> degrees;  // degrees[v-1]
  std::size_t edge_count = 0;
  std::optional<std::size_t> matching_number;  // floor(n/2) for proper specs
  bool has_consecutive_ham_path = false;
  bool has_consecutive_ham_cycle = false;
};

// Degrees from the column polynomials of the order-(n-1) matrix, checked
// against row sums of the built adjacency.
BasicStats basic_stats(const RiordanGraphSpec& spec);

enum class Subdiagonal { none, first_only, full };
std::string_view to_string(Subdiagonal s);
Subdiagonal subdiagonal_pattern(const RiordanGraphSpec& spec);

enum class Subgroup { appell, bell, lagrange, checkerboard, derivative, hitting_time };
std::string_view to_string(Subgroup s);
std::vector<Subgroup> classify_subgroup(const RiordanGraphSpec& spec);
bool has_subgroup(const RiordanGraphSpec& spec, Subgroup s);

struct LabeledGraph {
  Graph graph;
  RiordanGraphSpec witness;
};

struct LabeledCensus {
  std::size_t n = 0;
  std::size_t count = 0;           // distinct adjacency matrices
  std::size_t expected = 0;        // (4^(n-1) + 2) / 3
  std::size_t normal_forms = 0;    // generator tuples visited
  std::vector<LabeledGraph> graphs;
  std::vector<std::pair<RiordanGraphSpec, RiordanGraphSpec>> collisions;
};

inline constexpr std::size_t kMaxLabeledOrder = 8;

LabeledCensus enumerate_labeled(std::size_t n, Execution exec = Execution::parallel);

// (g + 1/(1-t), t) for an Appell spec.
RiordanGraphSpec complement_appell(const RiordanGraphSpec& spec);

}  // namespace riordan

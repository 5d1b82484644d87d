#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "riordan/bit_matrix.hpp"

namespace riordan {

using Edge = std::pair<std::size_t, std::size_t>;  // (u, v) with u < v, 1-based

// Simple undirected graph on vertices 1..n. Equality is labeled equality.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n, n) {}
  // Validates symmetry and an empty diagonal.
  static Graph from_adjacency(BitMatrix adj);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return adj_.rows(); }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_.get(u - 1, v - 1); }
  void add_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t v) const noexcept { return adj_.row_popcount(v - 1); }
  std::vector<std::size_t> degrees() const;
  std::size_t edge_count() const noexcept { return adj_.popcount() / 2; }
  std::vector<Edge> edges() const;  // lexicographic
  std::vector<std::size_t> neighbors(std::size_t v) const;

  const BitMatrix& adjacency() const noexcept { return adj_; }

  // Subgraph induced on the listed vertices, relabeled 1..k in list order.
  Graph induced(const std::vector<std::size_t>& vertices) const;
  // Vertex v of the result is vertex perm[v-1] of this graph.
  Graph relabeled(const std::vector<std::size_t>& perm) const;
  Graph complement() const;
  // Vertex i becomes n+1-i.
  Graph reversed() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitMatrix adj_;
};

Graph symmetric_difference(const Graph& a, const Graph& b);

}  // namespace riordan

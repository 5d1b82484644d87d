#include "riordan/graph.hpp"

#include "riordan/error.hpp"

namespace riordan {

Graph Graph::from_adjacency(BitMatrix adj) {
  require(adj.rows() == adj.cols(), ErrorKind::domain, "adjacency matrix must be square");
  for (std::size_t i = 0; i < adj.rows(); ++i) {
    require(!adj.get(i, i), ErrorKind::domain, "adjacency matrix has a loop at vertex " + std::to_string(i + 1));
    for (std::size_t j = 0; j < i; ++j)
      require(adj.get(i, j) == adj.get(j, i), ErrorKind::domain, "adjacency matrix is not symmetric");
  }
  Graph g;
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  require(u >= 1 && v >= 1 && u <= order() && v <= order() && u != v, ErrorKind::domain,
          "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not valid in a graph of order " +
              std::to_string(order()));
  adj_.set(u - 1, v - 1);
  adj_.set(v - 1, u - 1);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (std::size_t v = 1; v <= order(); ++v) d[v - 1] = degree(v);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 1; u <= order(); ++u)
    for (std::size_t v = u + 1; v <= order(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 1; u <= order(); ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph h(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b])) h.add_edge(a + 1, b + 1);
  return h;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  require(perm.size() == order(), ErrorKind::domain, "relabeling must list every vertex");
  return induced(perm);
}

Graph Graph::complement() const {
  Graph h(order());
  for (std::size_t u = 1; u <= order(); ++u)
    for (std::size_t v = u + 1; v <= order(); ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::reversed() const {
  std::vector<std::size_t> perm(order());
  for (std::size_t i = 0; i < order(); ++i) perm[i] = order() - i;
  return relabeled(perm);
}

Graph symmetric_difference(const Graph& a, const Graph& b) {
  return Graph::from_adjacency(a.adjacency() + b.adjacency());
}

}  // namespace riordan

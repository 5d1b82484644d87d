#include "riordan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "riordan/error.hpp"

namespace riordan {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') fail(ErrorKind::invalid_spec, std::string(name) + " must be a nonnegative integer");
  return static_cast<std::size_t>(x);
}

void check_budget(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    fail(ErrorKind::budget, std::string(what) + " oracle refuses n = " + std::to_string(n) + " (budget " +
                                std::to_string(limit) + ")");
}

class Deadline {
 public:
  Deadline(std::chrono::milliseconds limit, const char* what) : end_(Clock::now() + limit), what_(what) {}
  void tick() {
    if ((++calls_ & 0xFFF) == 1 && Clock::now() > end_)
      fail(ErrorKind::budget, std::string(what_) + " oracle exceeded its time limit");
  }

 private:
  Clock::time_point end_;
  const char* what_;
  std::uint64_t calls_ = 0;
};

// Bitmask adjacency, vertex v-1 at bit v-1; valid for n <= 64.
std::vector<Mask> masks_of(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Mask> m(n, 0);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = 1; v <= n; ++v)
      if (u != v && g.adjacent(u, v)) m[u - 1] |= Mask{1} << (v - 1);
  return m;
}

std::vector<std::vector<std::size_t>> lists_of(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = 1; v <= n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u - 1].push_back(v - 1);
  return adj;
}

Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  b.hamilton = env_size("RIORDAN_BUDGET_HAMILTON", b.hamilton);
  b.clique = env_size("RIORDAN_BUDGET_CLIQUE", b.clique);
  b.chromatic = env_size("RIORDAN_BUDGET_CHROMATIC", b.chromatic);
  b.isomorphism = env_size("RIORDAN_BUDGET_ISOMORPHISM", b.isomorphism);
  b.unlabeled = env_size("RIORDAN_BUDGET_UNLABELED", b.unlabeled);
  b.time_limit = std::chrono::milliseconds(env_size("RIORDAN_BUDGET_TIME_MS", b.time_limit.count()));
  return b;
}

HamiltonResult hamilton_search(const Graph& g, const OracleBudget& budget) {
  const std::size_t n = g.order();
  check_budget(n, std::min<std::size_t>(budget.hamilton, 24), "hamilton");
  HamiltonResult res;
  if (n < 3) return res;
  const auto adj = masks_of(g);
  for (Mask m : adj)
    if (std::popcount(m) < 2) return res;
  Deadline deadline(budget.time_limit, "hamilton");
  const Mask full = low_bits(n);
  // dead[mask * n + v]: no completion from v having visited mask.
  std::vector<bool> dead((std::size_t{1} << n) * n, false);
  std::vector<std::size_t> path{0};
  auto dfs = [&](auto&& self, Mask visited, std::size_t v) -> bool {
    deadline.tick();
    if (visited == full) return (adj[v] & 1U) != 0;
    const std::size_t key = static_cast<std::size_t>(visited) * n + v;
    if (dead[key]) return false;
    Mask cand = adj[v] & ~visited;
    while (cand) {
      const auto w = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      path.push_back(w);
      if (self(self, visited | (Mask{1} << w), w)) return true;
      path.pop_back();
    }
    dead[key] = true;
    return false;
  };
  if (dfs(dfs, 1, 0)) {
    res.found = true;
    for (std::size_t v : path) res.cycle.push_back(v + 1);
  }
  return res;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t n = g.order();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t v : cycle) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!g.adjacent(cycle[k], cycle[(k + 1) % n])) return false;
  return true;
}

std::size_t clique_number(const Graph& g, const OracleBudget& budget) {
  const std::size_t n = g.order();
  check_budget(n, std::min<std::size_t>(budget.clique, 64), "clique");
  const auto adj = masks_of(g);
  Deadline deadline(budget.time_limit, "clique");
  std::size_t best = 0;
  auto expand = [&](auto&& self, Mask cand, std::size_t size) -> void {
    deadline.tick();
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      self(self, cand & adj[v], size + 1);
    }
  };
  expand(expand, low_bits(n), 0);
  return best;
}

std::size_t chromatic_number(const Graph& g, const OracleBudget& budget) {
  const std::size_t n = g.order();
  check_budget(n, std::min<std::size_t>(budget.chromatic, 64), "chromatic");
  if (n == 0) return 0;
  const auto adj = lists_of(g);
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return adj[a].size() > adj[b].size(); });
  Deadline deadline(budget.time_limit, "chromatic");
  std::vector<int> colour(n, -1);
  auto colourable = [&](auto&& self, std::size_t idx, int k, int used) -> bool {
    deadline.tick();
    if (idx == n) return true;
    const std::size_t v = order[idx];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (std::size_t w : adj[v])
        if (colour[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour[v] = c;
      if (self(self, idx + 1, k, std::max(used, c + 1))) return true;
      colour[v] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(colour.begin(), colour.end(), -1);
    if (colourable(colourable, 0, k, 0)) return static_cast<std::size_t>(k);
  }
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

namespace {

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t src) {
  std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
  std::deque<std::size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    for (std::size_t w : adj[u])
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs(lists_of(g), 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == SIZE_MAX; });
}

std::optional<std::size_t> diameter(const Graph& g) {
  const auto adj = lists_of(g);
  std::size_t best = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    const auto d = bfs(adj, s);
    for (std::size_t x : d) {
      if (x == SIZE_MAX) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

std::size_t max_matching(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const std::size_t n = g.order();
  BGraph bg(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v)
      if (g.adjacent(u, v)) boost::add_edge(u - 1, v - 1, bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

std::optional<std::vector<std::size_t>> euler_trail(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = lists_of(g);
  std::vector<std::size_t> odd;
  std::size_t start = SIZE_MAX;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() % 2) odd.push_back(v);
    if (start == SIZE_MAX && !adj[v].empty()) start = v;
  }
  if (odd.size() != 0 && odd.size() != 2) return std::nullopt;
  if (start == SIZE_MAX) return std::vector<std::size_t>{};
  if (!odd.empty()) start = odd.front();
  // Hierholzer with per-vertex edge cursors and a used-edge matrix.
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<std::size_t> cursor(n, 0), stack{start}, walk;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    while (cursor[v] < adj[v].size() && used[v][adj[v][cursor[v]]]) ++cursor[v];
    if (cursor[v] == adj[v].size()) {
      walk.push_back(v + 1);
      stack.pop_back();
    } else {
      const std::size_t w = adj[v][cursor[v]];
      used[v][w] = used[w][v] = true;
      stack.push_back(w);
    }
  }
  std::reverse(walk.begin(), walk.end());
  if (walk.size() != g.edge_count() + 1) return std::nullopt;  // edges in more than one component
  return walk;
}

bool is_euler_trail(const Graph& g, const std::vector<std::size_t>& walk) {
  if (g.edge_count() == 0) return walk.empty() || walk.size() == 1;
  if (walk.size() != g.edge_count() + 1) return false;
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    const std::size_t u = walk[k], v = walk[k + 1];
    if (u < 1 || v < 1 || u > n || v > n || u == v || !g.adjacent(u, v) || used[u][v]) return false;
    used[u][v] = used[v][u] = true;
  }
  return true;
}

bool isomorphic(const Graph& a, const Graph& b, const OracleBudget& budget) {
  const std::size_t n = a.order();
  check_budget(std::max(n, b.order()), std::min<std::size_t>(budget.isomorphism, 12), "isomorphism");
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Sorted neighbour-degree multisets as a finer vertex invariant.
  auto signature = [](const Graph& g, const std::vector<std::size_t>& deg) {
    std::vector<std::vector<std::size_t>> sig(g.order());
    for (std::size_t v = 1; v <= g.order(); ++v) {
      sig[v - 1].push_back(deg[v - 1]);
      std::vector<std::size_t> nd;
      for (std::size_t w = 1; w <= g.order(); ++w)
        if (w != v && g.adjacent(v, w)) nd.push_back(deg[w - 1]);
      std::sort(nd.begin(), nd.end());
      sig[v - 1].insert(sig[v - 1].end(), nd.begin(), nd.end());
    }
    return sig;
  };
  const auto sa = signature(a, da), sb = signature(b, db);
  Deadline deadline(budget.time_limit, "isomorphism");
  std::vector<std::size_t> image(n + 1, 0);
  std::vector<bool> taken(n + 1, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    deadline.tick();
    if (v > n) return true;
    for (std::size_t w = 1; w <= n; ++w) {
      if (taken[w] || sa[v - 1] != sb[w - 1]) continue;
      bool ok = true;
      for (std::size_t u = 1; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      taken[w] = true;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 1);
}

std::optional<RiordanGraphSpec> is_riordan_unlabeled(const Graph& g, const OracleBudget& budget) {
  const std::size_t n = g.order();
  check_budget(n, std::min<std::size_t>(budget.unlabeled, kMaxLabeledOrder), "unlabeled-search");
  require(n >= 1, ErrorKind::domain, "graph must have at least one vertex");
  const LabeledCensus census = enumerate_labeled(n, Execution::serial);
  for (const auto& lg : census.graphs)
    if (isomorphic(lg.graph, g, budget)) return lg.witness;
  return std::nullopt;
}

}  // namespace riordan

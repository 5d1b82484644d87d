#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "riordan/graph.hpp"
#include "riordan/riordan_graph.hpp"

namespace riordan {

// Exhaustive reference searches. They read the graph only through
// Graph::adjacent and share no code with the series or matrix layers.
// Inputs above a budget are refused with ErrorKind::budget.
struct OracleBudget {
  std::size_t hamilton = 20;
  std::size_t clique = 32;
  std::size_t chromatic = 16;
  std::size_t isomorphism = 8;
  std::size_t unlabeled = 7;
  std::chrono::milliseconds time_limit{20000};

  // Defaults overridden by RIORDAN_BUDGET_{HAMILTON,CLIQUE,CHROMATIC,ISOMORPHISM,UNLABELED,TIME_MS}.
  static OracleBudget from_env();
};

struct HamiltonResult {
  bool found = false;
  std::vector<std::size_t> cycle;  // vertices in order, first vertex not repeated
};

// A cycle through every vertex exactly once; needs n >= 3.
HamiltonResult hamilton_search(const Graph& g, const OracleBudget& budget = OracleBudget::from_env());
bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle);

std::size_t clique_number(const Graph& g, const OracleBudget& budget = OracleBudget::from_env());
std::size_t chromatic_number(const Graph& g, const OracleBudget& budget = OracleBudget::from_env());
bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);
bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices);

bool is_connected(const Graph& g);
// Largest shortest-path distance; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);
std::size_t max_matching(const Graph& g);

// Walk using every edge once (Hierholzer); closed when all degrees are even.
std::optional<std::vector<std::size_t>> euler_trail(const Graph& g);
bool is_euler_trail(const Graph& g, const std::vector<std::size_t>& walk);

bool isomorphic(const Graph& a, const Graph& b, const OracleBudget& budget = OracleBudget::from_env());

// A labeled Riordan graph isomorphic to g, by exhaustive search.
std::optional<RiordanGraphSpec> is_riordan_unlabeled(const Graph& g,
                                                     const OracleBudget& budget = OracleBudget::from_env());

}  // namespace riordan

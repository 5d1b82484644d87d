#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/graph.hpp"
#include "riordan/riordan_graph.hpp"

namespace riordan {

struct DegreeParity {
  std::vector<bool> phi;     // [t^j] tg/(1-f), j < n
  std::vector<bool> psi;     // [t^j] t g(fbar) fbar' (t/fbar)^(n-1) / (1-fbar), j < n
  std::vector<bool> parity;  // parity[i-1] = phi_(i-1) + psi_(n-i)
  bool by_formula = true;    // false when [t]f = 0 and parities come from the degrees
};

DegreeParity degree_parity(const RiordanGraphSpec& spec);

enum class EulerKind { cycle, trail, none };
std::string_view to_string(EulerKind k);

struct EulerVerdict {
  EulerKind kind = EulerKind::none;
  std::vector<std::size_t> odd_vertices;
  std::optional<Edge> endpoints;  // trail only
  bool connected = false;         // all edges in one component
  bool palindromic_appell = false;
};

EulerVerdict eulerian_check(const RiordanGraphSpec& spec);

enum class HamiltonStatus { guaranteed, impossible, unknown };
enum class HamiltonReason { improper_f1_zero, checkerboard_odd_n, e_decomposable_odd_n, split_graph_bound };
std::string_view to_string(HamiltonStatus s);
std::string_view to_string(HamiltonReason r);

struct HamiltonVerdict {
  HamiltonStatus status = HamiltonStatus::unknown;
  std::vector<std::size_t> witness;  // closed cycle, first vertex repeated at the end
  std::optional<HamiltonReason> reason;
  std::optional<std::size_t> pivot;  // the i of the first sufficient condition
  std::string detail;
};

// Constructive sufficient conditions; the witness is checked edge by edge.
HamiltonVerdict hamiltonian_sufficient(const RiordanGraphSpec& spec);
// Structural reasons a cycle cannot exist.
HamiltonVerdict hamiltonian_obstruction(const RiordanGraphSpec& spec);

// Motzkin number M_k mod 2.
bool motzkin_parity(std::uint64_t k);

}  // namespace riordan

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riordan/bit_matrix.hpp"
#include "riordan/graph.hpp"
#include "riordan/riordan_graph.hpp"

namespace riordan {

// Odd-first block form [[X, B], [B^T, Y]] of an adjacency matrix.
struct DecompositionBlocks {
  Graph x_graph;                       // odd vertices 1, 3, 5, ...
  Graph y_graph;                       // even vertices 2, 4, ...
  BitMatrix bridge;                    // ceil(n/2) x floor(n/2)
  std::vector<std::size_t> permutation;  // position k holds original vertex permutation[k]

  // Undoes the permutation.
  Graph reassemble() const;
  // The permuted adjacency as one matrix.
  BitMatrix block_matrix() const;
  friend bool operator==(const DecompositionBlocks&, const DecompositionBlocks&) = default;
};

// Blocks read directly off an adjacency matrix.
DecompositionBlocks literal_blocks(const Graph& g);

// Blocks from the generating functions: X from (g'(sqrt t), f), Y from
// ((gf/t)'(sqrt t), f), and the bridge from (t (gf)'(sqrt t), f) plus the
// transpose of ((tg)'(sqrt t), f). Checked against literal_blocks.
DecompositionBlocks decompose(const RiordanGraphSpec& spec);

struct Flag {
  bool value = false;
  std::optional<std::size_t> index;  // coefficient index m that witnesses a failure
  std::string evidence;
};

struct DecompClass {
  Flag o_decomposable;   // even vertices independent
  Flag e_decomposable;   // odd vertices independent
  Flag io_decomposable;  // o, and the odd part is G_ceil(n/2)(g, f)
  Flag ie_decomposable;  // e, and the even part is G_floor(n/2)(g, f)
  std::optional<Flag> oe_isomorphic;  // even n only
  Flag oe_bipartite;
  Flag oe_disconnected;  // no odd-even edges
  bool checkerboard = false;
  bool null_graph = false;
};

// Coefficient conditions on finite windows, each cross-checked against the
// literal blocks.
DecompClass classify_oe(const RiordanGraphSpec& spec);

struct DecompVerdict {
  bool value = false;
  bool by_coefficients = false;
  bool by_blocks = false;
  std::optional<bool> by_a_sequence;  // Bell specs for io, derivative specs for ie
  std::string evidence;
};

// g' = g^2 and gf = t (f/t)'.
DecompVerdict io_check(const RiordanGraphSpec& spec);
// g' = 0 and t^2 g = t f' + f.
DecompVerdict ie_check(const RiordanGraphSpec& spec);

struct EdgeCount {
  std::size_t direct = 0;
  std::size_t recursive = 0;
  bool recursion_check = false;
  std::optional<std::size_t> closed_form;
};

// m(G_n) = 2 m(G_ceil(n/2)) + m(H_(floor(n/2)+1)), H_j = G_j((tg)'(sqrt t), tg).
EdgeCount bell_edge_count(const RiordanGraphSpec& spec);
// Known closed forms for Pascal and Catalan at n = 2^k and 2^k + 1.
std::optional<std::size_t> bell_closed_form(Family family, std::size_t n);

std::vector<std::size_t> universal_vertices(const Graph& g);
// As above; for io Bell specs with n = 2^i + 1 or 2^i + 2, vertex 2^i + 1 must appear.
std::vector<std::size_t> universal_vertices(const RiordanGraphSpec& spec);

struct LogPartition {
  std::vector<std::vector<std::size_t>> parts;  // V_1 .. V_ceil(log2 n), then {1}
  std::vector<std::size_t> clique;              // {1} and the vertices 2^i + 1
  std::size_t bound = 0;                        // ceil(log2 n) + 1
};

LogPartition log_partition(const RiordanGraphSpec& spec);

struct DiameterBound {
  std::size_t bound = 0;
  bool exact_two = false;
};

DiameterBound diameter_bound(const RiordanGraphSpec& spec);

std::size_t ceil_log2(std::size_t n);
std::size_t floor_log2(std::size_t n);

}  // namespace riordan

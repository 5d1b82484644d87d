#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "riordan/execution.hpp"
#include "riordan/graph.hpp"
#include "riordan/riordan_graph.hpp"

namespace riordan {

// (g + h, f) for operands sharing f and n; the edge set is the symmetric
// difference of the operands' edge sets.
RiordanGraphSpec ring_sum(const RiordanGraphSpec& a, const RiordanGraphSpec& b);

// (g h(f), l(f)) for a = (g, f), b = (h, l).
RiordanGraphSpec r_product(const RiordanGraphSpec& a, const RiordanGraphSpec& b);

// Integer walk counts d(i, j), 1-based, zero unless i > j.
struct WalkMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> entries;  // row-major n x n

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[(i - 1) * n + (j - 1)]; }
  // D + D^T reduced mod 2.
  Graph parity_graph() const;
  friend bool operator==(const WalkMatrix&, const WalkMatrix&) = default;
};

// D = B1 B2 B3 over the integers with B1 the order-n matrix of (t g, f), B2 the
// superdiagonal shift and B3 the order-n matrix of (t h, l).
WalkMatrix rgb_walk_matrix(const RiordanGraphSpec& a, const RiordanGraphSpec& b,
                           Execution exec = Execution::parallel);

}  // namespace riordan

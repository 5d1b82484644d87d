#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "riordan/graph.hpp"
#include "riordan/riordan_graph.hpp"

namespace riordan {

// Shift data for the vertex pair (i, j), i > j.
struct CognateSpec {
  std::size_t i = 0, j = 0;
  std::size_t s = 0;    // least s with 2^s (ell + 1) >= i - j
  std::size_t ell = 0;  // zeros after a0 in the binary A-sequence
  std::int64_t m_low = 0, m_high = 0;

  std::size_t step() const { return std::size_t{1} << s; }
};

// A proper non-Appell spec with its graph and A-sequence gap computed once.
class FractalView {
 public:
  explicit FractalView(const RiordanGraphSpec& spec);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t ell() const noexcept { return ell_; }
  CognateSpec cognate_spec(std::size_t u, std::size_t v) const;
  std::vector<Edge> cognate_pairs(std::size_t u, std::size_t v) const;
  bool isomorphism_check(std::size_t u, std::size_t v, std::int64_t m) const;

 private:
  std::string name_;
  Graph graph_;
  std::size_t ell_ = 0;
};

// Pairs may be given in either order. Appell specs (f = t on the window) have
// no gap in the A-sequence and are rejected.
CognateSpec cognate_spec(const RiordanGraphSpec& spec, std::size_t u, std::size_t v);

// The shift family (j + m 2^s, i + m 2^s) for m in [m_low, m_high], smaller
// vertex first. Other cognate pairs may exist; only this family is returned.
std::vector<Edge> cognate_pairs(const RiordanGraphSpec& spec, std::size_t u, std::size_t v);

// Compares <{j..i}> with <{j + m 2^s .. i + m 2^s}> under k -> k + m 2^s.
bool fractal_isomorphism_check(const RiordanGraphSpec& spec, std::size_t u, std::size_t v, std::int64_t m);

// The spec whose graph is G with vertex k renamed n + 1 - k:
// (g(fbar) fbar' (t/fbar)^(n-1), fbar). Requires [t]f = 1.
RiordanGraphSpec reverse_relabel(const RiordanGraphSpec& spec);

// C(m, k) mod 2.
bool lucas_binomial(std::uint64_t m, std::uint64_t k);

}  // namespace riordan

#include "riordan/graph_ops.hpp"

#include <bit>

#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_same_order(const RiordanGraphSpec& a, const RiordanGraphSpec& b) {
  require(a.n == b.n, ErrorKind::incompatible,
          "operands have different orders " + std::to_string(a.n) + " and " + std::to_string(b.n));
}

}  // namespace

RiordanGraphSpec ring_sum(const RiordanGraphSpec& a, const RiordanGraphSpec& b) {
  require_same_order(a, b);
  const std::size_t n = a.n;
  const RiordanPair p = expand_pair(a, n), q = expand_pair(b, n);
  if (!p.f.agrees_with(q.f, n))
    fail(ErrorKind::incompatible, "ring sum needs a common f; got " + a.f.to_string() + " and " + b.f.to_string());
  return RiordanGraphSpec{SeriesSpec::window(p.g + q.g), a.f, n};
}

RiordanGraphSpec r_product(const RiordanGraphSpec& a, const RiordanGraphSpec& b) {
  require_same_order(a, b);
  const std::size_t n = a.n;
  const RiordanPair p = expand_pair(a, n), q = expand_pair(b, n);
  const RiordanPair r = riordan_multiply(p, q);
  require(r.g.trunc() >= n && r.f.trunc() >= n, ErrorKind::precision,
          "R-product window too short for order " + std::to_string(n));
  return with_pair(r, n);
}

Graph WalkMatrix::parity_graph() const {
  Graph g(n);
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j)
      if ((at(i, j) + at(j, i)) & 1) g.add_edge(i, j);
  return g;
}

WalkMatrix rgb_walk_matrix(const RiordanGraphSpec& a, const RiordanGraphSpec& b, Execution exec) {
  require_same_order(a, b);
  const std::size_t n = a.n;
  const RiordanPair p = expand_pair(a, n), q = expand_pair(b, n);
  const BitMatrix red = riordan_block(shift_up(p.g, 1), p.f, n, n);
  const BitMatrix blue = riordan_block(shift_up(q.g, 1), q.f, n, n);
  WalkMatrix d{n, std::vector<std::int64_t>(n * n, 0)};

  if (exec == Execution::serial) {
    // Literal triple product with the shift matrix materialized.
    std::vector<std::int64_t> green(n * n, 0), rg(n * n, 0);
    for (std::size_t k = 0; k + 1 < n; ++k) green[k * n + k + 1] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (red.get(i, k))
          for (std::size_t m = 0; m < n; ++m) rg[i * n + m] += green[k * n + m];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        if (rg[i * n + m])
          for (std::size_t j = 0; j < n; ++j) d.entries[i * n + j] += rg[i * n + m] * (blue.get(m, j) ? 1 : 0);
    return d;
  }

  // d(i, j) = popcount(red row i AND (blue column j shifted up by one)).
  const BitMatrix blue_t = blue.transpose();
  const std::size_t words = red.words_per_row();
#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const std::uint64_t* r = red.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t* c = blue_t.row(j);
      std::int64_t s = 0;
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t shifted = (c[w] >> 1) | (w + 1 < words ? c[w + 1] << 63 : 0);
        s += std::popcount(r[w] & shifted);
      }
      d.entries[i * n + j] = s;
    }
  }
  return d;
}

}  // namespace riordan

#include "riordan/fractal_relabel.hpp"

#include <algorithm>

#include "riordan/error.hpp"
#include "riordan/riordan_matrix.hpp"

namespace riordan {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

FractalView::FractalView(const RiordanGraphSpec& spec) : name_(spec.to_string()) {
  const std::size_t n = spec.n;
  if (!is_proper(spec)) fail(ErrorKind::not_applicable, "cognate pairs need a proper spec; got " + name_);
  if (has_subgroup(spec, Subgroup::appell))
    fail(ErrorKind::not_applicable, "Appell type (f = t) has no gap in its A-sequence; the cognate theorem needs f != t");
  const RiordanPair p = expand_pair(spec, n + 1);
  graph_ = build_graph(p, n);
  // With no 1 after a0 inside the window the matrix is Toeplitz there and any shift works.
  const auto gap = n >= 2 ? leading_gap(a_sequence(build_matrix(p.g, p.f, n))) : std::nullopt;
  ell_ = gap.value_or(n >= 2 ? n - 2 : 0);
}

CognateSpec FractalView::cognate_spec(std::size_t u, std::size_t v) const {
  const std::size_t n = graph_.order();
  if (u == v || u < 1 || v < 1 || u > n || v > n)
    fail(ErrorKind::domain, "cognate pairs need two distinct vertices in 1.." + std::to_string(n));
  CognateSpec c;
  c.i = std::max(u, v);
  c.j = std::min(u, v);
  c.ell = ell_;
  while (c.step() * (c.ell + 1) < c.i - c.j) ++c.s;
  const auto step = static_cast<std::int64_t>(c.step());
  c.m_low = ceil_div(1 - static_cast<std::int64_t>(c.j), step);
  c.m_high = floor_div(static_cast<std::int64_t>(n - c.i), step);
  return c;
}

std::vector<Edge> FractalView::cognate_pairs(std::size_t u, std::size_t v) const {
  const CognateSpec c = cognate_spec(u, v);
  const bool base = graph_.adjacent(c.i, c.j);
  std::vector<Edge> out;
  for (std::int64_t m = c.m_low; m <= c.m_high; ++m) {
    const auto shift = m * static_cast<std::int64_t>(c.step());
    const auto a = static_cast<std::size_t>(static_cast<std::int64_t>(c.j) + shift);
    const auto b = static_cast<std::size_t>(static_cast<std::int64_t>(c.i) + shift);
    if (graph_.adjacent(a, b) != base)
      fail(ErrorKind::internal, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not cognate with (" +
                                    std::to_string(c.j) + "," + std::to_string(c.i) + ") in " + name_);
    out.emplace_back(a, b);
  }
  return out;
}

bool FractalView::isomorphism_check(std::size_t u, std::size_t v, std::int64_t m) const {
  const CognateSpec c = cognate_spec(u, v);
  if (m < c.m_low || m > c.m_high)
    fail(ErrorKind::domain, "shift m = " + std::to_string(m) + " leaves the vertex range; allowed " +
                                std::to_string(c.m_low) + ".." + std::to_string(c.m_high));
  const auto shift = m * static_cast<std::int64_t>(c.step());
  auto moved = [&](std::size_t k) { return static_cast<std::size_t>(static_cast<std::int64_t>(k) + shift); };
  for (std::size_t a = c.j; a <= c.i; ++a)
    for (std::size_t b = a + 1; b <= c.i; ++b)
      if (graph_.adjacent(a, b) != graph_.adjacent(moved(a), moved(b))) return false;
  return true;
}

CognateSpec cognate_spec(const RiordanGraphSpec& spec, std::size_t u, std::size_t v) {
  return FractalView(spec).cognate_spec(u, v);
}

std::vector<Edge> cognate_pairs(const RiordanGraphSpec& spec, std::size_t u, std::size_t v) {
  return FractalView(spec).cognate_pairs(u, v);
}

bool fractal_isomorphism_check(const RiordanGraphSpec& spec, std::size_t u, std::size_t v, std::int64_t m) {
  return FractalView(spec).isomorphism_check(u, v, m);
}

RiordanGraphSpec reverse_relabel(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  const RiordanPair p = expand_pair(spec, n + 1);
  if (p.f.trunc() < 2 || !p.f.coeff(1))
    fail(ErrorKind::not_applicable, "reverse relabeling needs [t]f = 1; got " + spec.to_string());
  const BitSeries fbar = comp_inverse(p.f);
  const BitSeries t_over = divide(BitSeries::monomial(1, fbar.trunc()), fbar);
  const BitSeries g = compose(p.g, fbar) * derivative(fbar) * power(t_over, n - 1);
  const RiordanGraphSpec out = with_pair({g, fbar}, n);
  if (!(build_graph(out) == build_graph(spec).reversed()))
    fail(ErrorKind::internal, "reverse relabeling of " + spec.to_string() + " does not reverse the graph");
  return out;
}

bool lucas_binomial(std::uint64_t m, std::uint64_t k) { return (k & m) == k; }

}  // namespace riordan

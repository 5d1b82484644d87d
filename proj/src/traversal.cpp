#include "riordan/traversal.hpp"

#include <algorithm>

#include "riordan/decomposition.hpp"
#include "riordan/error.hpp"
#include "riordan/oracle.hpp"

namespace riordan {

std::string_view to_string(EulerKind k) {
  switch (k) {
    case EulerKind::cycle: return "eulerian_cycle";
    case EulerKind::trail: return "eulerian_trail";
    case EulerKind::none: return "none";
  }
  return "?";
}

std::string_view to_string(HamiltonStatus s) {
  switch (s) {
    case HamiltonStatus::guaranteed: return "guaranteed";
    case HamiltonStatus::impossible: return "impossible";
    case HamiltonStatus::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(HamiltonReason r) {
  switch (r) {
    case HamiltonReason::improper_f1_zero: return "improper_f1_zero";
    case HamiltonReason::checkerboard_odd_n: return "checkerboard_odd_n";
    case HamiltonReason::e_decomposable_odd_n: return "e_decomposable_odd_n";
    case HamiltonReason::split_graph_bound: return "split_graph_bound";
  }
  return "?";
}

DegreeParity degree_parity(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  const Graph graph = build_graph(spec);
  DegreeParity out;
  const RiordanPair p = expand_pair(spec, n + 1);
  if (p.f.trunc() < 2 || !p.f.coeff(1)) {
    out.by_formula = false;
    for (std::size_t v = 1; v <= n; ++v) out.parity.push_back(graph.degree(v) % 2 == 1);
    return out;
  }
  const BitSeries one = BitSeries::one(p.f.trunc());
  const BitSeries phi = divide(shift_up(p.g, 1), one + p.f);
  const BitSeries fbar = comp_inverse(p.f);
  const BitSeries t_over = divide(BitSeries::monomial(1, fbar.trunc()), fbar);
  const BitSeries rev_g = compose(p.g, fbar) * derivative(fbar) * power(t_over, n - 1);
  const BitSeries psi = divide(shift_up(rev_g, 1), BitSeries::one(fbar.trunc()) + fbar);
  for (std::size_t j = 0; j < n; ++j) {
    out.phi.push_back(phi.coeff(j));
    out.psi.push_back(psi.coeff(j));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const bool bit = out.phi[i - 1] != out.psi[n - i];
    if (bit != (graph.degree(i) % 2 == 1))
      fail(ErrorKind::internal, "degree parity formula disagrees at vertex " + std::to_string(i) + " of " +
                                    spec.to_string());
    out.parity.push_back(bit);
  }
  return out;
}

namespace {

// Edges confined to one component; isolated vertices are ignored.
bool edges_connected(const Graph& g) {
  std::vector<std::size_t> touched;
  for (std::size_t v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 0) touched.push_back(v);
  return touched.empty() || is_connected(g.induced(touched));
}

bool palindromic_appell(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 3 || !has_subgroup(spec, Subgroup::appell)) return false;
  const BitSeries g = expand_pair(spec, n + 1).g;
  std::size_t ones = 0;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    if (g.coeff(k) != g.coeff(n - 2 - k)) return false;
    ones += g.coeff(k);
  }
  return ones % 2 == 0;
}

}  // namespace

EulerVerdict eulerian_check(const RiordanGraphSpec& spec) {
  const Graph g = build_graph(spec);
  const DegreeParity dp = degree_parity(spec);
  EulerVerdict out;
  for (std::size_t v = 1; v <= spec.n; ++v)
    if (dp.parity[v - 1]) out.odd_vertices.push_back(v);
  out.connected = is_proper(spec) || edges_connected(g);
  out.palindromic_appell = palindromic_appell(spec);
  if (out.palindromic_appell && !out.odd_vertices.empty())
    fail(ErrorKind::internal, "palindromic Appell spec with odd vertices: " + spec.to_string());
  if (!out.connected || g.edge_count() == 0) return out;
  if (out.odd_vertices.empty()) {
    out.kind = EulerKind::cycle;
  } else if (out.odd_vertices.size() == 2) {
    out.kind = EulerKind::trail;
    out.endpoints = Edge{out.odd_vertices[0], out.odd_vertices[1]};
  }
  return out;
}

namespace {

void validate_witness(const Graph& g, const HamiltonVerdict& v, const RiordanGraphSpec& spec) {
  std::vector<std::size_t> cycle(v.witness.begin(), v.witness.end() - 1);
  if (!is_hamiltonian_cycle(g, cycle))
    fail(ErrorKind::internal, "witness is not a Hamiltonian cycle of " + spec.to_string());
}

}  // namespace

HamiltonVerdict hamiltonian_sufficient(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  HamiltonVerdict out;
  if (!is_proper(spec)) {
    out.detail = "sufficient conditions need a proper spec";
    return out;
  }
  if (n < 3) {
    out.detail = "a cycle needs at least three vertices";
    return out;
  }
  const RiordanPair p = expand_pair(spec, n + 1);
  const Graph g = build_graph(p, n);
  BitSeries gf = p.g;  // g f^(i-1)
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    gf = gf * p.f;
    if (p.g.coeff(i - 1) && gf.coeff(n - 2)) {
      out.status = HamiltonStatus::guaranteed;
      out.pivot = i;
      for (std::size_t v = 1; v <= i; ++v) out.witness.push_back(v);
      for (std::size_t v = n; v > i; --v) out.witness.push_back(v);
      out.witness.push_back(1);
      out.detail = "[t^" + std::to_string(i - 1) + "]g = 1 and [t^" + std::to_string(n - 2) + "]g f^" +
                   std::to_string(i - 1) + " = 1";
      validate_witness(g, out, spec);
      return out;
    }
  }
  if (p.g.coeff(1) && !p.f.coeff(2)) {
    out.status = HamiltonStatus::guaranteed;
    for (std::size_t v = 1; v <= n; v += 2) out.witness.push_back(v);
    for (std::size_t v = 2 * (n / 2); v >= 2; v -= 2) out.witness.push_back(v);
    out.witness.push_back(1);
    out.detail = "[t]g = 1 and [t^2]f = 0: odd vertices up, even vertices down";
    validate_witness(g, out, spec);
    return out;
  }
  out.detail = "neither sufficient condition holds";
  return out;
}

HamiltonVerdict hamiltonian_obstruction(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  HamiltonVerdict out;
  const RiordanPair p = expand_pair(spec, std::min<std::size_t>(n + 1, 2));
  auto impossible = [&](HamiltonReason r, std::string detail) {
    out.status = HamiltonStatus::impossible;
    out.reason = r;
    out.detail = std::move(detail);
    return out;
  };
  if (p.f.trunc() >= 2 && !p.f.coeff(1)) {
    if (n % 2 == 1)
      return impossible(HamiltonReason::split_graph_bound,
                        "[t]f = 0: vertices ceil(n/2)..n are independent and outnumber the rest");
    return impossible(HamiltonReason::improper_f1_zero,
                      "[t]f = 0 with even n: the bipartite part of the split supergraph has a vertex of degree 1");
  }
  if (n % 2 == 1) {
    if (has_subgroup(spec, Subgroup::checkerboard))
      return impossible(HamiltonReason::checkerboard_odd_n, "checkerboard type: bipartite with parts of unequal size");
    const DecompClass c = classify_oe(spec);
    if (c.e_decomposable.value)
      return impossible(HamiltonReason::e_decomposable_odd_n,
                        "odd vertices are independent and outnumber the even ones");
  }
  out.detail = "no obstruction applies";
  return out;
}

bool motzkin_parity(std::uint64_t k) {
  // M_k is even iff k + 1 or k + 2 is 4^i (2j - 1), i.e. has even 2-adic valuation >= 2.
  auto in_family = [](std::uint64_t x) {
    const int v = __builtin_ctzll(x);
    return v >= 2 && v % 2 == 0;
  };
  return !(in_family(k + 1) || in_family(k + 2));
}

}  // namespace riordan

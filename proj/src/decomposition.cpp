#include "riordan/decomposition.hpp"

#include <algorithm>

#include "riordan/error.hpp"

namespace riordan {

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::size_t floor_log2(std::size_t n) {
  require(n >= 1, ErrorKind::domain, "log2 of zero");
  std::size_t k = 0;
  while ((n >> (k + 1)) != 0) ++k;
  return k;
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// sqrt_substitute(derivative(s)), i.e. coefficient k is s_(2k+1).
BitSeries odd_part_halved(const BitSeries& s) { return sqrt_substitute(derivative(s)); }

BitMatrix stack_blocks(const DecompositionBlocks& b) {
  const std::size_t n1 = b.x_graph.order(), n2 = b.y_graph.order(), n = n1 + n2;
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c) m.set(r, c, b.x_graph.adjacent(r + 1, c + 1));
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) m.set(n1 + r, n1 + c, b.y_graph.adjacent(r + 1, c + 1));
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n2; ++c)
      if (b.bridge.get(r, c)) {
        m.set(r, n1 + c);
        m.set(n1 + c, r);
      }
  return m;
}

std::vector<std::size_t> odd_first(std::size_t n) {
  std::vector<std::size_t> perm;
  for (std::size_t v = 1; v <= n; v += 2) perm.push_back(v);
  for (std::size_t v = 2; v <= n; v += 2) perm.push_back(v);
  return perm;
}

struct Expanded {
  std::size_t n, n1, n2;
  RiordanPair p;
  BitSeries gf;
};

Expanded expand_for_blocks(const RiordanGraphSpec& spec) {
  Expanded e{spec.n, (spec.n + 1) / 2, spec.n / 2, expand_pair(spec, spec.n + 1), BitSeries()};
  e.gf = e.p.g * e.p.f;
  return e;
}

// First m in [lo, hi] where pred(m) fails.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t lo, std::size_t hi, Pred pred) {
  for (std::size_t m = lo; m <= hi && hi != SIZE_MAX; ++m)
    if (!pred(m)) return m;
  return std::nullopt;
}

// Inclusive upper bound a - b, or SIZE_MAX (empty range) when negative.
std::size_t upto(std::size_t a, std::size_t b) { return a >= b ? a - b : SIZE_MAX; }

Flag make_flag(std::optional<std::size_t> bad, const std::string& condition, const std::string& range) {
  Flag f;
  f.value = !bad.has_value();
  f.index = bad;
  f.evidence = f.value ? condition + " for " + range : condition + " fails at m = " + std::to_string(*bad);
  return f;
}

std::string range_text(std::size_t lo, std::size_t hi) {
  if (hi == SIZE_MAX || hi < lo) return "an empty window";
  return "m = " + std::to_string(lo) + ".." + std::to_string(hi);
}

Flag e_flag(const Expanded& e) {
  const std::size_t hi = upto(e.n1, 1);
  return make_flag(first_failure(1, hi, [&](std::size_t m) { return !e.p.g.coeff(2 * m - 1); }),
                   "[t^(2m-1)]g = 0", range_text(1, hi));
}

Flag o_flag(const Expanded& e) {
  const std::size_t hi = upto(e.n2, 1);
  return make_flag(first_failure(1, hi, [&](std::size_t m) { return !e.gf.coeff(2 * m); }), "[t^2m]gf = 0",
                   range_text(1, hi));
}

Flag iso_flag(const Expanded& e) {
  const std::size_t hi = upto(e.n1, 1);
  return make_flag(first_failure(1, hi, [&](std::size_t m) { return e.p.g.coeff(2 * m - 1) == e.gf.coeff(2 * m); }),
                   "[t^(2m-1)]g = [t^2m]gf", range_text(1, hi));
}

Flag disconnected_flag(const Expanded& e) {
  const std::size_t hi_g = upto(e.n2, 1), hi_gf = upto(e.n1, 2);
  const auto bad_g = first_failure(0, hi_g, [&](std::size_t m) { return !e.p.g.coeff(2 * m); });
  if (bad_g) return make_flag(bad_g, "[t^2m]g = 0", range_text(0, hi_g));
  return make_flag(first_failure(0, hi_gf, [&](std::size_t m) { return !e.gf.coeff(2 * m + 1); }),
                   "[t^2m]g = 0 for " + range_text(0, hi_g) + " and [t^(2m+1)]gf = 0", range_text(0, hi_gf));
}

// io: g_(2k+1) = g_k for k <= n1 - 2, and gf = t (f/t)' mod t^(2 n2 - 2).
std::optional<std::string> io_coefficient_failure(const Expanded& e) {
  if (auto k = first_failure(0, upto(e.n1, 2), [&](std::size_t k) { return e.p.g.coeff(2 * k + 1) == e.p.g.coeff(k); }))
    return "g' = g^2 fails: [t^" + std::to_string(2 * *k + 1) + "]g != [t^" + std::to_string(*k) + "]g";
  if (e.n2 >= 2) {
    const std::size_t w = 2 * e.n2 - 2;
    const BitSeries rhs = shift_up(derivative(shift_down(e.p.f, 1)), 1);
    for (std::size_t k = 0; k < w; ++k)
      if (e.gf.coeff(k) != rhs.coeff(k)) return "gf = t(f/t)' fails at [t^" + std::to_string(k) + "]";
  }
  return std::nullopt;
}

// ie: g' = 0 mod t^(2 n1 - 3), and t^2 g = t f' + f mod t^(2 n2 - 1).
std::optional<std::string> ie_coefficient_failure(const Expanded& e) {
  if (auto k = first_failure(0, upto(e.n1, 2), [&](std::size_t k) { return !e.p.g.coeff(2 * k + 1); }))
    return "g' = 0 fails: [t^" + std::to_string(2 * *k + 1) + "]g = 1";
  if (e.n2 >= 1) {
    const std::size_t w = 2 * e.n2 - 1;
    const BitSeries lhs = shift_up(e.p.g, 2);
    const BitSeries rhs = shift_up(derivative(e.p.f), 1) + e.p.f;
    for (std::size_t k = 0; k < w; ++k)
      if (lhs.coeff(k) != rhs.coeff(k)) return "t^2 g = t f' + f fails at [t^" + std::to_string(k) + "]";
  }
  return std::nullopt;
}

BitSeries a_sequence_of(const RiordanPair& p) {
  const BitSeries fbar = comp_inverse(p.f);
  return divide(BitSeries::monomial(1, fbar.trunc()), fbar);
}

// (1, 1, a2, a2, a4, a4, ...): a_2i = a_(2i+1) for i <= n1 - 2.
bool bell_io_a_form(const Expanded& e) {
  const BitSeries a = a_sequence_of(e.p);
  for (std::size_t i = 0; i + 2 <= e.n1; ++i)
    if (a.coeff(2 * i) != a.coeff(2 * i + 1)) return false;
  return true;
}

// (1, 1, a2, 0, a4, 0, ...): a_1 = 1 and a_(2i+1) = 0 for 1 <= i <= n2 - 2.
bool derivative_ie_a_form(const Expanded& e) {
  const BitSeries a = a_sequence_of(e.p);
  if (e.n2 >= 2 && !a.coeff(1)) return false;
  for (std::size_t i = 1; i + 2 <= e.n2; ++i)
    if (a.coeff(2 * i + 1)) return false;
  return true;
}

void require_proper(const RiordanGraphSpec& spec, const char* what) {
  if (!is_proper(spec))
    fail(ErrorKind::not_applicable, std::string(what) + " is defined for proper specs only; got " + spec.to_string());
}

bool io_by_blocks(const Expanded& e, const DecompositionBlocks& b) {
  return b.y_graph.edge_count() == 0 && b.x_graph == build_graph(e.p, e.n1);
}

bool ie_by_blocks(const Expanded& e, const DecompositionBlocks& b) {
  return b.x_graph.edge_count() == 0 && (e.n2 == 0 || b.y_graph == build_graph(e.p, e.n2));
}

DecompVerdict combine(const std::optional<std::string>& coeff_failure, bool blocks, std::optional<bool> a_form,
                      const char* name, const std::string& spec_text) {
  DecompVerdict v;
  v.by_coefficients = !coeff_failure.has_value();
  v.by_blocks = blocks;
  v.by_a_sequence = a_form;
  if (v.by_coefficients != v.by_blocks || (a_form && *a_form != v.by_blocks))
    fail(ErrorKind::internal, std::string(name) + " congruences, blocks and A-sequence disagree for " + spec_text);
  v.value = v.by_blocks;
  v.evidence = coeff_failure ? *coeff_failure : std::string("both congruences hold on the window");
  return v;
}

}  // namespace

Graph DecompositionBlocks::reassemble() const {
  const BitMatrix m = block_matrix();
  const std::size_t n = m.rows();
  Graph g(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (m.get(r, c)) g.add_edge(permutation[r], permutation[c]);
  return g;
}

BitMatrix DecompositionBlocks::block_matrix() const { return stack_blocks(*this); }

DecompositionBlocks literal_blocks(const Graph& g) {
  const std::size_t n = g.order();
  DecompositionBlocks b;
  b.permutation = odd_first(n);
  const std::size_t n1 = (n + 1) / 2, n2 = n / 2;
  const std::vector<std::size_t> odd(b.permutation.begin(), b.permutation.begin() + static_cast<long>(n1));
  const std::vector<std::size_t> even(b.permutation.begin() + static_cast<long>(n1), b.permutation.end());
  b.x_graph = g.induced(odd);
  b.y_graph = g.induced(even);
  b.bridge = BitMatrix(n1, n2);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n2; ++c) b.bridge.set(r, c, g.adjacent(odd[r], even[c]));
  return b;
}

DecompositionBlocks decompose(const RiordanGraphSpec& spec) {
  const Expanded e = expand_for_blocks(spec);
  DecompositionBlocks b;
  b.permutation = odd_first(e.n);
  b.x_graph = e.n1 >= 2 ? build_graph({odd_part_halved(e.p.g), e.p.f}, e.n1) : Graph(e.n1);
  b.y_graph = e.n2 >= 2 ? build_graph({odd_part_halved(shift_down(e.gf, 1)), e.p.f}, e.n2) : Graph(e.n2);
  b.bridge = BitMatrix(e.n1, e.n2);
  if (e.n2 >= 1) {
    const BitMatrix lower = riordan_block(shift_up(odd_part_halved(e.gf), 1), e.p.f, e.n1, e.n2);
    const BitMatrix upper = riordan_block(odd_part_halved(shift_up(e.p.g, 1)), e.p.f, e.n2, e.n1).transpose();
    b.bridge = lower + upper;
  }
  if (!(b == literal_blocks(build_graph(e.p, e.n))))
    fail(ErrorKind::internal, "generating-function blocks disagree with the permuted adjacency of " + spec.to_string());
  return b;
}

DecompClass classify_oe(const RiordanGraphSpec& spec) {
  const Expanded e = expand_for_blocks(spec);
  const DecompositionBlocks b = decompose(spec);
  DecompClass c;
  c.null_graph = !e.p.g.truncated(std::max<std::size_t>(e.n, 2) - 1).valuation().has_value();
  c.e_decomposable = e_flag(e);
  c.o_decomposable = o_flag(e);
  if (e.n % 2 == 0) c.oe_isomorphic = iso_flag(e);
  c.oe_bipartite = c.e_decomposable.value ? c.o_decomposable : c.e_decomposable;
  c.oe_bipartite.evidence = "e: " + c.e_decomposable.evidence + "; o: " + c.o_decomposable.evidence;
  c.oe_disconnected = disconnected_flag(e);
  c.checkerboard = has_subgroup(spec, Subgroup::checkerboard);

  auto cross = [&](const Flag& f, bool literal, const char* name) {
    if (f.value != literal)
      fail(ErrorKind::internal, std::string(name) + " coefficient condition disagrees with the blocks of " +
                                    spec.to_string() + " (" + f.evidence + ")");
  };
  cross(c.e_decomposable, b.x_graph.edge_count() == 0, "e-decomposable");
  cross(c.o_decomposable, b.y_graph.edge_count() == 0, "o-decomposable");
  cross(c.oe_bipartite, b.x_graph.edge_count() == 0 && b.y_graph.edge_count() == 0, "bipartite");
  cross(c.oe_disconnected, b.bridge.is_zero(), "disconnected");
  if (c.oe_isomorphic) cross(*c.oe_isomorphic, b.x_graph == b.y_graph, "odd/even isomorphic");

  const bool proper = is_proper(e.p.g, e.p.f);
  if (!proper) {
    c.io_decomposable = Flag{false, std::nullopt, "not proper"};
    c.ie_decomposable = Flag{false, std::nullopt, "not proper"};
  } else {
    const auto io_fail = io_coefficient_failure(e), ie_fail = ie_coefficient_failure(e);
    c.io_decomposable = Flag{!io_fail, std::nullopt, io_fail.value_or("both io congruences hold")};
    c.ie_decomposable = Flag{!ie_fail, std::nullopt, ie_fail.value_or("both ie congruences hold")};
    cross(c.io_decomposable, io_by_blocks(e, b), "io");
    cross(c.ie_decomposable, ie_by_blocks(e, b), "ie");
  }
  if ((c.io_decomposable.value && !c.o_decomposable.value) || (c.ie_decomposable.value && !c.e_decomposable.value))
    fail(ErrorKind::internal, "io/ie flag without the matching o/e flag for " + spec.to_string());
  return c;
}

DecompVerdict io_check(const RiordanGraphSpec& spec) {
  require_proper(spec, "io-decomposability");
  const Expanded e = expand_for_blocks(spec);
  std::optional<bool> a_form;
  if (has_subgroup(spec, Subgroup::bell)) a_form = bell_io_a_form(e);
  return combine(io_coefficient_failure(e), io_by_blocks(e, decompose(spec)), a_form, "io", spec.to_string());
}

DecompVerdict ie_check(const RiordanGraphSpec& spec) {
  require_proper(spec, "ie-decomposability");
  const Expanded e = expand_for_blocks(spec);
  std::optional<bool> a_form;
  if (has_subgroup(spec, Subgroup::derivative)) a_form = derivative_ie_a_form(e);
  return combine(ie_coefficient_failure(e), ie_by_blocks(e, decompose(spec)), a_form, "ie", spec.to_string());
}

namespace {

bool is_io_bell(const RiordanGraphSpec& spec) {
  return is_proper(spec) && has_subgroup(spec, Subgroup::bell) && io_check(spec).value;
}

void require_io_bell(const RiordanGraphSpec& spec, const char* what) {
  if (!is_io_bell(spec))
    fail(ErrorKind::not_applicable, std::string(what) + " needs an io-decomposable Bell spec; got " + spec.to_string());
}

}  // namespace

EdgeCount bell_edge_count(const RiordanGraphSpec& spec) {
  require_io_bell(spec, "edge recursion");
  const std::size_t n = spec.n;
  const RiordanPair p = expand_pair(spec, n + 1);
  const BitSeries h = odd_part_halved(shift_up(p.g, 1));
  auto rec = [&](auto&& self, std::size_t k) -> std::size_t {
    if (k <= 1) return 0;
    const std::size_t k1 = (k + 1) / 2, k2 = k / 2;
    return 2 * self(self, k1) + build_graph({h, p.f}, k2 + 1).edge_count();
  };
  EdgeCount out;
  out.direct = build_graph(p, n).edge_count();
  out.recursive = rec(rec, n);
  out.recursion_check = out.direct == out.recursive;
  return out;
}

std::optional<std::size_t> bell_closed_form(Family family, std::size_t n) {
  if (n == 0 || (family != Family::pascal && family != Family::catalan)) return std::nullopt;
  auto pow3 = [](std::size_t k) {
    std::size_t r = 1;
    while (k--) r *= 3;
    return r;
  };
  if (is_power_of_two(n)) {
    const std::size_t k = floor_log2(n);
    return family == Family::pascal ? pow3(k) - n : (pow3(k) - 1) / 2;
  }
  if (is_power_of_two(n - 1)) {
    const std::size_t k = floor_log2(n - 1);
    return family == Family::pascal ? pow3(k) : (pow3(k) - 1) / 2 + (n - 1);
  }
  return std::nullopt;
}

std::vector<std::size_t> universal_vertices(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  return out;
}

std::vector<std::size_t> universal_vertices(const RiordanGraphSpec& spec) {
  const std::vector<std::size_t> out = universal_vertices(build_graph(spec));
  const std::size_t n = spec.n;
  if (n >= 2 && is_io_bell(spec))
    for (std::size_t back : {std::size_t{1}, std::size_t{2}})
      if (n > back && is_power_of_two(n - back)) {
        const std::size_t v = n - back + 1;
        if (std::find(out.begin(), out.end(), v) == out.end())
          fail(ErrorKind::internal, "vertex " + std::to_string(v) + " of " + spec.to_string() + " is not universal");
      }
  return out;
}

LogPartition log_partition(const RiordanGraphSpec& spec) {
  require_io_bell(spec, "log partition");
  const std::size_t n = spec.n, levels = ceil_log2(n);
  LogPartition out;
  out.bound = levels + 1;
  for (std::size_t j = 1; j <= levels; ++j) {
    const std::size_t first = (std::size_t{1} << (j - 1)) + 1, step = std::size_t{1} << j;
    std::vector<std::size_t> part;
    for (std::size_t v = first; v <= n; v += step) part.push_back(v);
    out.parts.push_back(part);
  }
  out.parts.push_back({1});
  out.clique.push_back(1);
  for (std::size_t i = 0; (std::size_t{1} << i) + 1 <= n; ++i) out.clique.push_back((std::size_t{1} << i) + 1);

  const Graph g = build_graph(spec);
  std::vector<int> seen(n + 1, 0);
  for (const auto& part : out.parts) {
    for (std::size_t v : part) ++seen[v];
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (g.adjacent(part[a], part[b]))
          fail(ErrorKind::internal, "part contains the edge " + std::to_string(part[a]) + "-" + std::to_string(part[b]));
  }
  for (std::size_t v = 1; v <= n; ++v)
    require(seen[v] == 1, ErrorKind::internal, "log partition does not cover vertex " + std::to_string(v) + " once");
  require(out.clique.size() == out.bound, ErrorKind::internal, "explicit clique has the wrong size");
  for (std::size_t a = 0; a < out.clique.size(); ++a)
    for (std::size_t b = a + 1; b < out.clique.size(); ++b)
      require(g.adjacent(out.clique[a], out.clique[b]), ErrorKind::internal, "explicit clique is missing an edge");
  return out;
}

DiameterBound diameter_bound(const RiordanGraphSpec& spec) {
  require_io_bell(spec, "diameter bound");
  const std::size_t n = spec.n;
  const std::size_t k = floor_log2(n);
  DiameterBound out{k, false};
  const std::size_t low = std::size_t{1} << k;
  if (n >= 6 && low + 1 < n && n < 2 * low) out.bound = std::min(out.bound, floor_log2(n - low) + 1);
  out.exact_two = (n >= 4 && is_power_of_two(n - 2)) || (n >= 5 && is_power_of_two(n - 1));
  return out;
}

}  // namespace riordan

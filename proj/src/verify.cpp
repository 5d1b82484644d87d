#include "riordan/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "riordan/decomposition.hpp"
#include "riordan/error.hpp"
#include "riordan/fractal_relabel.hpp"
#include "riordan/graph_ops.hpp"
#include "riordan/riordan_matrix.hpp"
#include "riordan/series_spec.hpp"
#include "riordan/traversal.hpp"

namespace riordan {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::figures: return "figures";
    case Suite::theorems: return "theorems";
    case Suite::conjectures: return "conjectures";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::figures, Suite::theorems, Suite::conjectures})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

const std::vector<FigureMatrix>& figure_matrices() {
  static const std::vector<FigureMatrix> figs = {
      {"pascal PG6", "fig1.txt", "named:pascal_g", "named:pascal_f", 6,
       {"011111", "101010", "110110", "101010", "111101", "100010"}},
      {"toeplitz TG6", "fig2.txt", "poly:1+t^2+t^4", "named:t", 6,
       {"010101", "101010", "010101", "101010", "010101", "101010"}},
      {"catalan CG6", "fig3.txt", "named:catalan", "fix:X=t+X^2", 6,
       {"011010", "101010", "110111", "001010", "111101", "001010"}},
      {"prism labeling", "fig5.txt", "poly:t+t^2+t^3", "named:t", 6,
       {"001110", "000111", "100011", "110001", "111000", "011100"}},
  };
  return figs;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(std::string line) { notes.push_back(std::move(line)); }
  void absorb(std::vector<std::string> more) {
    for (auto& m : more) failures.push_back(std::move(m));
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::mt19937_64 instance_rng(const VerifyOptions& o, int criterion, std::size_t instance) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(instance)};
  return std::mt19937_64(seq);
}

// Runs fn(k) for every instance; each returns an empty string on success.
// Failures come back in instance order whatever the schedule.
std::vector<std::string> for_instances(std::size_t count, Execution exec,
                                       const std::function<std::string(std::size_t)>& fn) {
  std::vector<std::string> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(k)] = std::string("instance ") + std::to_string(k) + ": " + e.what();
    }
  }
  std::vector<std::string> failures;
  for (auto& s : out)
    if (!s.empty()) failures.push_back(std::move(s));
  return failures;
}

BitSeries random_series(std::mt19937_64& rng, std::size_t trunc) {
  BitSeries s(trunc);
  for (std::size_t k = 0; k < trunc; ++k)
    if (rng() & 1U) s.set(k);
  return s;
}

RiordanPair random_pair(std::mt19937_64& rng, std::size_t trunc) {
  BitSeries f = random_series(rng, trunc);
  f.set(0, false);
  return {random_series(rng, trunc), f};
}

RiordanPair random_proper_pair(std::mt19937_64& rng, std::size_t trunc) {
  RiordanPair p = random_pair(rng, trunc);
  p.g.set(0);
  if (trunc > 1) p.f.set(1);
  return p;
}

// io Bell: g(0) = 1, g_(2k+1) = g_k, f = tg.
RiordanPair random_io_bell(std::mt19937_64& rng, std::size_t trunc) {
  BitSeries g(trunc);
  g.set(0);
  for (std::size_t k = 1; k < trunc; ++k) g.set(k, k % 2 == 1 ? g.coeff(k / 2) : static_cast<bool>(rng() & 1U));
  return {g, shift_up(g, 1).truncated(trunc)};
}

// Every io Bell window of order n; the free bits are g_2, g_4, ..., g_(n-2).
std::vector<RiordanPair> io_bell_windows(std::size_t n) {
  const std::size_t free = n >= 2 ? (n - 2) / 2 : 0;
  std::vector<RiordanPair> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << free); ++s) {
    BitSeries g(n + 2);
    g.set(0);
    for (std::size_t k = 1; k < n + 2; ++k) g.set(k, k % 2 == 1 ? g.coeff(k / 2) : k / 2 <= free && (s >> (k / 2 - 1) & 1U));
    out.push_back({g, shift_up(g, 1).truncated(n + 2)});
  }
  return out;
}

Graph graph_of_rows(const std::vector<std::string>& rows) { return Graph::from_adjacency(BitMatrix::from_rows(rows)); }

std::string spec_name(const RiordanGraphSpec& s) { return s.to_string(); }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// ---------------------------------------------------------------------------

void figures(const VerifyOptions& o, Check& c) {
  for (const auto& fig : figure_matrices()) {
    const Graph g = build_graph(RiordanGraphSpec::parse(fig.g, fig.f, fig.n));
    c.expect(g == graph_of_rows(fig.rows), std::string(fig.name) + ": built adjacency differs from the figure");
    if (!o.golden_dir.empty()) {
      std::ifstream in(o.golden_dir + "/" + std::string(fig.file));
      std::vector<std::string> rows;
      for (std::string line; std::getline(in, line);)
        if (!line.empty()) rows.push_back(line);
      c.expect(rows == fig.rows, std::string(fig.file) + ": golden file differs from the figure");
    }
  }
}

void counting(const VerifyOptions& o, Check& c) {
  const std::vector<std::size_t> want = {1, 2, 6, 22, 86, 342, 1366};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto start = Clock::now();
    const LabeledCensus census = enumerate_labeled(n, o.exec);
    const double secs = seconds_since(start);
    const std::size_t formula = ((std::size_t{1} << (2 * (n - 1))) + 2) / 3;
    c.expect(census.count == want[n - 1] && census.count == formula && census.expected == formula,
             "n=" + std::to_string(n) + ": count " + std::to_string(census.count));
    c.expect(census.collisions.empty(), "n=" + std::to_string(n) + ": adjacency collisions between distinct specs");
    if (n == 7) {
      c.expect(secs < 30.0, "n=7 took " + std::to_string(secs) + " s");
      c.note("n=7 enumeration: " + std::to_string(secs) + " s");
    }
  }
}

void order_three_census(const VerifyOptions& o, Check& c) {
  const MatrixCensus census = enumerate_order_n(3, o.exec);
  c.expect(census.total == 22, "total " + std::to_string(census.total));
  c.expect(census.invertible == 8, "invertible " + std::to_string(census.invertible));
  std::vector<BinaryRiordanMatrix> group;
  for (const auto& m : census.matrices)
    if (m.is_proper()) group.push_back(m);
  auto member = [&](const BitMatrix& b) {
    return std::any_of(group.begin(), group.end(), [&](const BinaryRiordanMatrix& m) { return m.bits() == b; });
  };
  c.expect(member(BitMatrix::identity(3)), "identity (1,t) missing");
  for (const auto& a : group)
    for (const auto& b : group) {
      const RiordanPair ab = riordan_multiply(*a.generator(), *b.generator());
      const BitMatrix prod = build_matrix(ab.g, ab.f, 3).bits();
      c.expect(prod == a.bits() * b.bits(), "pair product differs from the matrix product");
      c.expect(member(prod), "product leaves the invertible set");
    }
  std::vector<int> orders;
  for (const auto& a : group) {
    BitMatrix p = a.bits();
    int k = 1;
    for (; !(p == BitMatrix::identity(3)) && k <= 8; ++k) p = p * a.bits();
    orders.push_back(k);
  }
  std::sort(orders.begin(), orders.end());
  c.expect(orders == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4}, "element orders are not those of D4");
}

void sequences_check(const VerifyOptions& o, Check& c) {
  auto seq_of = [](Family fam, std::size_t n) {
    const RiordanPair p = expand_pair(family_spec(fam, n), n);
    return sequences(build_matrix(p.g, p.f, n));
  };
  const std::size_t n = 16;
  const SequencePair pascal = seq_of(Family::pascal, n);
  c.expect(pascal.a_seq.to_bits().substr(0, 3) == "110" && pascal.a_seq.popcount() == 2, "Pascal A is not (1,1,0,...)");
  c.expect(pascal.z_seq.popcount() == 1 && pascal.z_seq.coeff(0), "Pascal Z is not (1,0,...)");
  const SequencePair catalan = seq_of(Family::catalan, n);
  c.expect(catalan.a_seq.popcount() == catalan.a_seq.trunc(), "Catalan A is not all ones");
  const SequencePair motzkin = seq_of(Family::motzkin, n);
  c.expect(motzkin.a_seq.to_bits().substr(0, 3) == "111" && motzkin.a_seq.popcount() == 3, "Motzkin A is not 1+t+t^2");
  c.absorb(for_instances(500, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 4, k);
    const std::size_t m = 2 + rng() % 31;
    const RiordanPair p = random_proper_pair(rng, m + 2);
    const BinaryRiordanMatrix mat = build_matrix(p.g, p.f, m);
    const SequencePair seq = sequences(mat);  // analytic and recurrence forms are compared inside
    if (!(rebuild_from_sequences(seq, m) == mat)) return "order " + std::to_string(m) + ": sequences do not rebuild";
    return std::string();
  }));
}

void decomposition_check(const VerifyOptions& o, Check& c) {
  c.absorb(for_instances(200, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 5, k);
    const std::size_t n = 1 + rng() % 128;
    const auto spec = with_pair(random_pair(rng, n + 2), n);
    const auto blocks = decompose(spec);
    if (!(blocks.reassemble() == build_graph(spec))) return "reassembly fails for " + spec_name(spec);
    return std::string();
  }));
  c.absorb(for_instances(100, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 50, k);
    const std::size_t n = 2 + rng() % 127;
    const BitSeries g = random_series(rng, n + 2);
    const auto bell = with_pair({g, shift_up(g, 1).truncated(n + 2)}, n);
    BitSeries f = random_series(rng, n + 3);
    f.set(0, false);
    const auto deriv = with_pair({derivative(f), f.truncated(n + 2)}, n);
    if (decompose(bell).y_graph.edge_count() != 0) return "Bell spec with edges among even vertices";
    if (decompose(deriv).x_graph.edge_count() != 0) return "derivative spec with edges among odd vertices";
    return std::string();
  }));
}

void io_ie_check(const VerifyOptions& o, Check& c) {
  c.expect(io_check(family_spec(Family::pascal, 16)).value, "Pascal is not io");
  c.expect(io_check(family_spec(Family::catalan, 17)).value, "Catalan is not io");
  c.expect(!io_check(family_spec(Family::motzkin, 12)).value, "Motzkin is io");
  const auto spec = RiordanGraphSpec::parse("rat:1/(1+t^2)", "rat:t/(1+t)", 9);
  c.expect(build_graph(spec) == graph_of_rows({"010101010", "101100110", "010100010", "111011110", "000101010",
                                               "100110110", "010101010", "111111101", "000000010"}),
           "derivative example adjacency differs");
  const auto b = decompose(spec);
  c.expect(b.x_graph.edge_count() == 0, "derivative example: X is not null");
  c.expect(b.bridge == BitMatrix::from_rows({"1111", "1101", "0111", "1111", "0001"}), "derivative example: bridge");
  c.expect(b.y_graph == graph_of_rows({"0101", "1011", "0101", "1110"}), "derivative example: Y");
  c.expect(ie_check(spec).value, "derivative example is not ie");

  std::vector<std::size_t> orders;
  for (std::size_t n = 2; n <= 14; ++n) orders.push_back(n);
  std::vector<std::size_t> counts(orders.size(), 0);
  c.absorb(for_instances(orders.size(), o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t n = orders[idx];
    std::size_t count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 2)); ++s) {
      BitSeries g(n + 2);
      g.set(0);
      for (std::size_t k = 1; k + 1 < n; ++k) g.set(k, (s >> (k - 1)) & 1U);
      const auto bell = with_pair({g, shift_up(g, 1).truncated(n + 2)}, n);
      const DecompVerdict v = io_check(bell);
      if (v.by_coefficients != v.by_blocks || !v.by_a_sequence || *v.by_a_sequence != v.by_blocks)
        return "n=" + std::to_string(n) + ": congruence, block and A-sequence checks disagree for " + spec_name(bell);
      count += v.value;
    }
    counts[idx] = count;
    const std::size_t want = std::size_t{1} << (n / 2 - 1);
    if (count != want)
      return "n=" + std::to_string(n) + ": " + std::to_string(count) + " io Bell windows, expected " +
             std::to_string(want);
    return std::string();
  }));
  std::string line = "io Bell windows per n=2..14:";
  for (std::size_t x : counts) line += " " + std::to_string(x);
  c.note(line);
}

void edge_counts(const VerifyOptions& o, Check& c) {
  for (std::size_t k = 0; k <= 6; ++k)
    for (std::size_t n : {std::size_t{1} << k, (std::size_t{1} << k) + 1})
      for (Family fam : {Family::pascal, Family::catalan}) {
        const EdgeCount e = bell_edge_count(family_spec(fam, n));
        const auto closed = bell_closed_form(fam, n);
        c.expect(closed && *closed == e.direct, std::string(to_string(fam)) + " n=" + std::to_string(n) +
                                                    ": direct count " + std::to_string(e.direct));
      }
  c.absorb(for_instances(256, o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t n = idx + 1;
    for (Family fam : {Family::pascal, Family::catalan}) {
      const EdgeCount e = bell_edge_count(family_spec(fam, n));
      if (!e.recursion_check) return std::string(to_string(fam)) + " n=" + std::to_string(n) + ": recursion differs";
    }
    auto rng = instance_rng(o, 7, idx);
    for (int it = 0; it < 3; ++it) {
      const auto spec = with_pair(random_io_bell(rng, n + 2), n);
      if (!bell_edge_count(spec).recursion_check) return "recursion differs for " + spec_name(spec);
    }
    return std::string();
  }));
  std::size_t windows = 0;
  for (std::size_t n = 1; n <= 20; ++n)
    for (const RiordanPair& p : io_bell_windows(n)) {
      ++windows;
      c.expect(bell_edge_count(with_pair(p, n)).recursion_check, "recursion differs for " + spec_name(with_pair(p, n)));
    }
  c.note("recursion checked on all " + std::to_string(windows) + " io Bell windows n <= 20 and 3 random ones per n <= 256");
}

void partite_clique_chromatic(const VerifyOptions& o, Check& c) {
  std::vector<std::pair<Family, std::size_t>> cases;
  for (std::size_t n = 1; n <= 32; ++n)
    for (Family fam : {Family::pascal, Family::catalan}) cases.emplace_back(fam, n);
  c.absorb(for_instances(cases.size(), o.exec, [&](std::size_t k) -> std::string {
    const auto [fam, n] = cases[k];
    const auto spec = family_spec(fam, n);
    const std::string tag = std::string(to_string(fam)) + " n=" + std::to_string(n);
    const LogPartition lp = log_partition(spec);
    const Graph g = build_graph(spec);
    for (const auto& part : lp.parts)
      if (!is_independent(g, part)) return tag + ": a part is not independent";
    if (lp.bound != ceil_log2(n) + 1) return tag + ": bound";
    if (clique_number(g, o.budget) != lp.bound) return tag + ": clique number differs";
    if (n <= o.budget.chromatic && chromatic_number(g, o.budget) != lp.bound) return tag + ": chromatic number differs";
    return std::string();
  }));
}

void diameter_check(const VerifyOptions& o, Check& c) {
  std::vector<std::pair<Family, std::size_t>> cases;
  for (std::size_t n = 1; n <= 128; ++n)
    for (Family fam : {Family::pascal, Family::catalan}) cases.emplace_back(fam, n);
  c.absorb(for_instances(cases.size(), o.exec, [&](std::size_t k) -> std::string {
    const auto [fam, n] = cases[k];
    const auto spec = family_spec(fam, n);
    const std::string tag = std::string(to_string(fam)) + " n=" + std::to_string(n);
    const auto d = diameter(build_graph(spec));
    if (!d) return tag + ": disconnected";
    if (*d > floor_log2(n)) return tag + ": diameter " + std::to_string(*d) + " exceeds floor(log2 n)";
    const DiameterBound b = diameter_bound(spec);
    if (*d > b.bound) return tag + ": diameter exceeds the refined bound";
    const bool two = (n >= 4 && is_power_of_two(n - 2)) || (n >= 5 && is_power_of_two(n - 1));
    if (two != b.exact_two) return tag + ": exact-two classification";
    if (two && *d != 2) return tag + ": diameter " + std::to_string(*d) + ", expected 2";
    return std::string();
  }));
  c.absorb(for_instances(128, o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t n = idx + 1;
    std::vector<RiordanPair> specs;
    if (n <= 20) {
      specs = io_bell_windows(n);
    } else {
      auto rng = instance_rng(o, 9, idx);
      for (int it = 0; it < 16; ++it) specs.push_back(random_io_bell(rng, n + 2));
    }
    for (const RiordanPair& p : specs) {
      const auto spec = with_pair(p, n);
      const auto d = diameter(build_graph(spec));
      const DiameterBound b = diameter_bound(spec);
      if (!d || *d > floor_log2(n) || *d > b.bound) return spec_name(spec) + ": diameter above the bound";
      if (b.exact_two && *d != 2) return spec_name(spec) + ": diameter " + std::to_string(*d) + ", expected 2";
    }
    return std::string();
  }));
  std::string line = "diam(CG_2^k), k=1..5 (conjectured k):";
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto d = diameter(build_graph(family_spec(Family::catalan, std::size_t{1} << k)));
    line += " " + (d ? std::to_string(*d) : std::string("inf"));
  }
  c.note(line);
}

void fractal_check(const VerifyOptions& o, Check& c) {
  std::vector<std::pair<Family, std::size_t>> cases;
  for (std::size_t n = 3; n <= 64; ++n)
    for (Family fam : {Family::pascal, Family::catalan}) cases.emplace_back(fam, n);
  c.absorb(for_instances(cases.size(), o.exec, [&](std::size_t k) -> std::string {
    const auto [fam, n] = cases[k];
    const FractalView view(family_spec(fam, n));
    const Graph& g = view.graph();
    for (std::size_t i = 2; i <= n; ++i)
      for (std::size_t j = 1; j < i; ++j)
        for (auto [a, b] : view.cognate_pairs(i, j))
          if (b - a != i - j || g.adjacent(a, b) != g.adjacent(i, j))
            return std::string(to_string(fam)) + " n=" + std::to_string(n) + ": pair not cognate";
    return std::string();
  }));
  const FractalView cg15(family_spec(Family::catalan, 15));
  c.expect(cg15.cognate_pairs(5, 1) == std::vector<Edge>{{1, 5}, {5, 9}, {9, 13}}, "Catalan n=15 cognates of (1,5)");
  for (std::int64_t m = 0; m <= 2; ++m)
    c.expect(cg15.isomorphism_check(5, 1, m), "Catalan n=15 window shift m=" + std::to_string(m));
}

void reverse_check(const VerifyOptions& o, Check& c) {
  c.absorb(for_instances(200, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 11, k);
    const std::size_t n = 1 + rng() % 64;
    const auto spec = with_pair(random_proper_pair(rng, n + 2), n);
    if (!(build_graph(reverse_relabel(spec)) == build_graph(spec).reversed()))
      return "reversal differs for " + spec_name(spec);
    return std::string();
  }));
  for (std::size_t j = 2; j <= 6; ++j) {
    const std::size_t n = (std::size_t{1} << j) - 1;
    const auto rev = reverse_relabel(family_spec(Family::catalan, n));
    c.expect(build_graph(rev) == build_graph(RiordanGraphSpec::parse("poly:1+t", "poly:t+t^2", n)),
             "Catalan n=" + std::to_string(n) + ": reversal is not (1+t, t+t^2)");
    const RiordanPair cat = expand_pair(family_spec(Family::catalan, n), n);
    const RiordanPair prod = riordan_multiply(cat, expand_pair(rev, n));
    bool identity = true;
    for (std::size_t k = 0; k < n; ++k) identity = identity && prod.g.coeff(k) == (k == 0) && prod.f.coeff(k) == (k == 1);
    c.expect(identity, "Catalan n=" + std::to_string(n) + ": product with the reversal is not (1,t)");
  }
}

// Union of all graphs a reason covers; adding edges never destroys a cycle.
Graph obstruction_supergraph(HamiltonReason r, std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) {
      bool edge = false;
      switch (r) {
        case HamiltonReason::improper_f1_zero:
        case HamiltonReason::split_graph_bound: edge = v - 2 >= 2 * (u - 1); break;  // support of (1/(1-t), t^2)
        case HamiltonReason::checkerboard_odd_n: edge = (u + v) % 2 == 1; break;
        case HamiltonReason::e_decomposable_odd_n: edge = u % 2 == 0 || v % 2 == 0; break;
      }
      if (edge) g.add_edge(u, v);
    }
  return g;
}

bool is_subgraph(const Graph& a, const Graph& b) {
  for (auto [u, v] : a.edges())
    if (!b.adjacent(u, v)) return false;
  return true;
}

void euler_hamilton(const VerifyOptions& o, Check& c) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::size_t n = (std::size_t{1} << k) + 1;
    const auto spec = family_spec(Family::pascal, n);
    const EulerVerdict v = eulerian_check(spec);
    c.expect(v.odd_vertices == std::vector<std::size_t>{2, n - 1} && v.kind == EulerKind::trail,
             "PG_" + std::to_string(n) + ": odd vertices are not {2, " + std::to_string(n - 1) + "}");
    if (k <= 4) c.expect(euler_trail(build_graph(spec)).has_value(), "PG_" + std::to_string(n) + ": oracle finds no trail");
  }
  for (std::size_t k = 3; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const auto spec = family_spec(Family::pascal, n);
    c.expect(eulerian_check(spec).kind == EulerKind::none, "PG_" + std::to_string(n) + " has a trail");
    if (k <= 4) c.expect(!euler_trail(build_graph(spec)), "PG_" + std::to_string(n) + ": oracle finds a trail");
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t n = (std::size_t{1} << k) + 1;
    const auto spec = family_spec(Family::catalan, n);
    const HamiltonVerdict v = hamiltonian_sufficient(spec);
    c.expect(v.status == HamiltonStatus::guaranteed, "CG_" + std::to_string(n) + " not guaranteed");
    if (v.status == HamiltonStatus::guaranteed) {
      const std::vector<std::size_t> cycle(v.witness.begin(), v.witness.end() - 1);
      c.expect(is_hamiltonian_cycle(build_graph(spec), cycle), "CG_" + std::to_string(n) + ": witness invalid");
    }
    if (k <= 4) c.expect(hamilton_search(build_graph(spec), o.budget).found, "CG_" + std::to_string(n) + ": oracle");
  }
  std::string exceptions = "Motzkin n = 4^i(2j-1) <= 18, oracle Hamiltonian:";
  for (std::size_t n = 3; n <= 18; ++n) {
    std::size_t m = n;
    while (m % 4 == 0) m /= 4;
    const bool exception = n % 4 == 0 && m % 2 == 1;
    const auto spec = family_spec(Family::motzkin, n);
    const bool oracle = hamilton_search(build_graph(spec), o.budget).found;
    const HamiltonVerdict v = hamiltonian_sufficient(spec);
    if (!exception) {
      c.expect(v.status == HamiltonStatus::guaranteed && oracle, "Motzkin n=" + std::to_string(n));
    } else {
      exceptions += " n=" + std::to_string(n) + (oracle ? ":yes" : ":no");
      c.expect(v.status != HamiltonStatus::guaranteed || oracle, "Motzkin n=" + std::to_string(n) + ": false witness");
    }
  }
  c.note(exceptions);

  for (std::size_t n = 3; n <= 14; ++n)
    for (HamiltonReason r : {HamiltonReason::improper_f1_zero, HamiltonReason::split_graph_bound,
                             HamiltonReason::checkerboard_odd_n, HamiltonReason::e_decomposable_odd_n}) {
      const bool applies = r == HamiltonReason::improper_f1_zero ? n % 2 == 0 : n % 2 == 1;
      if (applies)
        c.expect(!hamilton_search(obstruction_supergraph(r, n), o.budget).found,
                 "n=" + std::to_string(n) + ": " + std::string(to_string(r)) + " supergraph is Hamiltonian");
    }
  std::vector<std::size_t> counts(15, 0);
  c.absorb(for_instances(14, o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t n = idx + 1;
    auto check_one = [&](const RiordanPair& p) -> std::string {
      const auto spec = with_pair(p, n);
      const HamiltonVerdict v = hamiltonian_obstruction(spec);
      if (v.status != HamiltonStatus::impossible) return {};
      ++counts[n];
      const Graph g = build_graph(spec);
      if (!is_subgraph(g, obstruction_supergraph(*v.reason, n)))
        return spec_name(spec) + ": not inside the " + std::string(to_string(*v.reason)) + " supergraph";
      if (n >= 3 && hamilton_search(g, o.budget).found) return spec_name(spec) + ": impossible but Hamiltonian";
      return {};
    };
    if (n <= 7) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * n)); ++s) {
        BitSeries g(n + 2), f(n + 2);
        for (std::size_t k = 0; k < n; ++k) g.set(k, (s >> k) & 1U);
        for (std::size_t k = 1; k <= n; ++k) f.set(k, (s >> (n + k - 1)) & 1U);
        if (auto e = check_one({g, f}); !e.empty()) return e;
      }
    } else {
      for (std::size_t it = 0; it < 400; ++it) {
        auto rng = instance_rng(o, 12, idx * 1000 + it);
        RiordanPair p = random_pair(rng, n + 2);
        if (it % 4 == 1) {
          p.f.set(1);
          p.g = derivative(p.f);
        } else if (it % 4 == 2) {
          for (std::size_t k = 1; k < n + 2; k += 2) p.g.set(k, false);
          for (std::size_t k = 0; k < n + 2; k += 2) p.f.set(k, false);
        } else if (it % 4 == 3) {
          p.f.set(1, false);
        }
        if (auto e = check_one(p); !e.empty()) return e;
      }
    }
    return std::string();
  }));
  std::string line = "impossible verdicts confirmed per n=1..14:";
  for (std::size_t n = 1; n <= 14; ++n) line += " " + std::to_string(counts[n]);
  c.note(line);
}

void rgb_check(const VerifyOptions& o, Check& c) {
  const auto g = family_spec(Family::pascal, 6);
  const auto h = RiordanGraphSpec::parse("rat:1/(1+t^2)", "poly:t^2", 6);
  const std::vector<std::vector<std::int64_t>> want = {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                                                       {2, 1, 0, 0, 0, 0}, {2, 1, 0, 0, 0, 0}, {2, 1, 1, 0, 0, 0}};
  const WalkMatrix d = rgb_walk_matrix(g, h, o.exec);
  bool same = true;
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) same = same && d.at(i, j) == want[i - 1][j - 1];
  c.expect(same, "Pascal x (1/(1+t^2), t^2) walk matrix differs");
  c.expect(d.at(5, 1) == 2, "omega_51 is not 2");
  const Graph sym = d.parity_graph();
  c.expect(sym == graph_of_rows({"011000", "100111", "100001", "010000", "010000", "011000"}),
           "walk parity D + D^T mod 2 differs");
  c.expect(sym == build_graph(r_product(g, h)), "walk parity graph is not the R-product");
  c.absorb(for_instances(200, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 13, k);
    const std::size_t n = 1 + rng() % 32;
    const auto a = with_pair(random_pair(rng, n + 2), n), b = with_pair(random_pair(rng, n + 2), n);
    const WalkMatrix w = rgb_walk_matrix(a, b, Execution::serial);
    if (!(w == rgb_walk_matrix(a, b, Execution::parallel))) return std::string("serial and parallel walks differ");
    if (!(w.parity_graph() == build_graph(r_product(a, b)))) return "walk parity differs from the R-product";
    return std::string();
  }));
}

void unlabeled_check(const VerifyOptions& o, Check& c) {
  std::size_t classes = 0, certified = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (unsigned s = 0; s < (1U << pairs); ++s) {
      Graph g(n);
      std::size_t bit = 0;
      for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v, ++bit)
          if (s >> bit & 1U) g.add_edge(u, v);
      if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(r, g, o.budget); }))
        reps.push_back(g);
    }
    classes += reps.size();
    for (const auto& g : reps)
      if (const auto w = is_riordan_unlabeled(g, o.budget); w && isomorphic(build_graph(*w), g, o.budget)) ++certified;
  }
  c.expect(classes == 18, std::to_string(classes) + " unlabeled graphs on at most 4 vertices");
  c.expect(certified == classes, std::to_string(certified) + " certified Riordan");
  Graph k4k1(5);
  for (std::size_t u = 1; u <= 4; ++u)
    for (std::size_t v = u + 1; v <= 4; ++v) k4k1.add_edge(u, v);
  c.expect(enumerate_labeled(5, o.exec).count == 86, "order-5 census is not 86");
  c.expect(!is_riordan_unlabeled(k4k1, o.budget), "K4 + K1 has a Riordan labeling");
}

void algebra_check(const VerifyOptions& o, Check& c) {
  c.absorb(for_instances(10000, o.exec, [&](std::size_t k) -> std::string {
    auto rng = instance_rng(o, 15, k);
    const std::size_t n = 2 + rng() % 40;
    const BitSeries a = random_series(rng, n), b = random_series(rng, n);
    BitSeries f = random_series(rng, n);
    f.set(0, false);
    const BitSeries lhs = compose(a, f) * compose(a, f);
    if (!lhs.congruent(compose(a, f * f))) return "Frobenius identity fails";
    if (!derivative(a * b).congruent(derivative(a) * b + a * derivative(b))) return "Leibniz rule fails";
    f.set(1);
    const BitSeries fbar = comp_inverse(f);
    const BitSeries t = BitSeries::monomial(1, n);
    if (!compose(f, fbar).congruent(t) || !compose(fbar, f).congruent(t)) return "compositional inverse fails";
    return std::string();
  }));
}

struct CriterionDef {
  std::string_view name;
  std::optional<double> limit;
  void (*run)(const VerifyOptions&, Check&);
};

const std::vector<CriterionDef>& criteria() {
  static const std::vector<CriterionDef> defs = {
      {"figure reproduction", 0.1, figures},
      {"labeled counting", std::nullopt, counting},
      {"order-3 matrix census", 1.0, order_three_census},
      {"A- and Z-sequences", std::nullopt, sequences_check},
      {"odd/even decomposition", 10.0, decomposition_check},
      {"io/ie decomposability", std::nullopt, io_ie_check},
      {"edge closed forms and recursion", 5.0, edge_counts},
      {"partition, clique and chromatic number", 60.0, partite_clique_chromatic},
      {"diameter", std::nullopt, diameter_check},
      {"fractal cognate pairs", std::nullopt, fractal_check},
      {"reverse relabeling", std::nullopt, reverse_check},
      {"Euler and Hamilton", std::nullopt, euler_hamilton},
      {"R-product and RGB walks", std::nullopt, rgb_check},
      {"unlabeled graphs", 10.0, unlabeled_check},
      {"algebraic identities", std::nullopt, algebra_check},
  };
  return defs;
}

// ---------------------------------------------------------------------------

ConjectureReport conjecture_catalan_diameter() {
  ConjectureReport r{"diam(CG_2^k) = k", {}};
  for (std::size_t k = 1; k <= 7; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const auto d = diameter(build_graph(family_spec(Family::catalan, n)));
    r.lines.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) + " diam=" +
                      (d ? std::to_string(*d) : std::string("inf")) + (d && *d == k ? " (matches)" : " (differs)"));
  }
  return r;
}

ConjectureReport conjecture_diameter_sandwich(const VerifyOptions& o) {
  ConjectureReport r{"2 = diam(PG_n) <= diam(G_n) <= diam(CG_n) over io Bell windows", {}};
  std::vector<std::string> lines(13);
  for_instances(13, o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t n = idx + 4;
    const auto dp = diameter(build_graph(family_spec(Family::pascal, n)));
    const auto dc = diameter(build_graph(family_spec(Family::catalan, n)));
    std::size_t windows = 0, below = 0, above = 0, two = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 2)); ++s) {
      BitSeries g(n + 2);
      g.set(0);
      for (std::size_t k = 1; k + 1 < n; ++k) g.set(k, (s >> (k - 1)) & 1U);
      const auto spec = with_pair({g, shift_up(g, 1).truncated(n + 2)}, n);
      if (!io_check(spec).value) continue;
      ++windows;
      const auto d = diameter(build_graph(spec));
      if (d && dp && *d < *dp) ++below;
      if (d && dc && *d > *dc) ++above;
      if (d && *d == 2) ++two;
    }
    lines[idx] = "n=" + std::to_string(n) + " diam(PG)=" + std::to_string(dp.value_or(0)) +
                 " diam(CG)=" + std::to_string(dc.value_or(0)) + " windows=" + std::to_string(windows) +
                 " below=" + std::to_string(below) + " above=" + std::to_string(above) + " diam2=" + std::to_string(two);
    return std::string();
  });
  r.lines = std::move(lines);
  return r;
}

ConjectureReport conjecture_unique_diameter_k(const VerifyOptions& o) {
  ConjectureReport r{"io Bell G_2^k with diam k coincide with CG_2^k", {}};
  std::vector<std::string> lines(4);
  for_instances(4, o.exec, [&](std::size_t idx) -> std::string {
    const std::size_t k = idx + 1, n = std::size_t{1} << k;
    const Graph cg = build_graph(family_spec(Family::catalan, n));
    std::size_t hits = 0, equal = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n >= 2 ? n - 2 : 0)); ++s) {
      BitSeries g(n + 2);
      g.set(0);
      for (std::size_t j = 1; j + 1 < n; ++j) g.set(j, (s >> (j - 1)) & 1U);
      const auto spec = with_pair({g, shift_up(g, 1).truncated(n + 2)}, n);
      if (!io_check(spec).value) continue;
      const Graph h = build_graph(spec);
      if (diameter(h) == std::optional<std::size_t>(k)) {
        ++hits;
        equal += h == cg;
      }
    }
    lines[idx] = "k=" + std::to_string(k) + ": " + std::to_string(hits) + " labeled graphs with diam k, " +
                 std::to_string(equal) + " equal to CG";
    return std::string();
  });
  r.lines = std::move(lines);
  return r;
}

}  // namespace

std::string_view criterion_name(int id) {
  require(id >= 1 && id <= kCriterionCount, ErrorKind::domain, "criterion ids run from 1 to 15");
  return criteria()[static_cast<std::size_t>(id - 1)].name;
}

std::vector<int> suite_criteria(Suite s) {
  switch (s) {
    case Suite::figures: return {1};
    case Suite::conjectures: return {};
    case Suite::theorems: {
      std::vector<int> ids;
      for (int id = 2; id <= kCriterionCount; ++id) ids.push_back(id);
      return ids;
    }
    case Suite::all: break;
  }
  std::vector<int> ids;
  for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  return ids;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  const CriterionDef& def = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = def.limit;
  Check c;
  const auto start = Clock::now();
  try {
    def.run(options, c);
  } catch (const std::exception& e) {
    c.failures.push_back(e.what());
  }
  r.seconds = seconds_since(start);
  if (def.limit && r.seconds >= *def.limit)
    c.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(*def.limit) + " s");
  r.failures = std::move(c.failures);
  r.notes = std::move(c.notes);
  r.passed = r.failures.empty();
  return r;
}

std::vector<ConjectureReport> run_conjectures(const VerifyOptions& options) {
  return {conjecture_catalan_diameter(), conjecture_diameter_sandwich(options), conjecture_unique_diameter_k(options)};
}

VerifyReport run_suite(Suite s, const VerifyOptions& options) {
  VerifyReport r;
  r.seed = options.seed;
  r.suite = s;
  for (int id : suite_criteria(s)) r.criteria.push_back(run_criterion(id, options));
  if (s == Suite::all || s == Suite::conjectures) r.conjectures = run_conjectures(options);
  return r;
}

std::string to_text(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << ' ';
  os.width(2);
  os << r.id << ' ' << r.name << " (";
  os.precision(3);
  os << std::fixed << r.seconds << " s)\n";
  for (const auto& f : r.failures) os << "    failure: " << f << '\n';
  for (const auto& n : r.notes) os << "    note: " << n << '\n';
  return os.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite " << to_string(r.suite) << ", seed " << r.seed << '\n';
  for (const auto& c : r.criteria) os << to_text(c);
  for (const auto& c : r.conjectures) {
    os << "REPORT " << c.name << '\n';
    for (const auto& line : c.lines) os << "    " << line << '\n';
  }
  std::size_t passed = 0;
  for (const auto& c : r.criteria) passed += c.passed;
  os << passed << '/' << r.criteria.size() << " criteria passed\n";
  return os.str();
}

Json to_json(const VerifyReport& r) {
  Json criteria_json = Json::array();
  for (const auto& c : r.criteria) {
    Json j;
    j["id"] = c.id;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["seconds"] = c.seconds;
    j["time_limit"] = c.time_limit ? Json(*c.time_limit) : Json(nullptr);
    j["failures"] = c.failures;
    j["notes"] = c.notes;
    criteria_json.push_back(j);
  }
  Json conj = Json::array();
  for (const auto& c : r.conjectures) conj.push_back({{"name", c.name}, {"lines", c.lines}, {"asserted", false}});
  Json payload;
  payload["suite"] = to_string(r.suite);
  payload["seed"] = r.seed;
  payload["passed"] = r.passed();
  payload["criteria"] = criteria_json;
  payload["conjectures"] = conj;
  return envelope("verify", payload);
}

}  // namespace riordan

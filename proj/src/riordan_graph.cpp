#include "riordan/riordan_graph.hpp"

#include <algorithm>
#include <cstdint>

#include "riordan/error.hpp"

namespace riordan {

RiordanGraphSpec RiordanGraphSpec::parse(std::string_view g, std::string_view f, std::size_t n) {
  require(n >= 1, ErrorKind::invalid_spec, "graph order must be at least 1");
  return RiordanGraphSpec{SeriesSpec::parse(g), SeriesSpec::parse(f), n};
}

std::string RiordanGraphSpec::to_string() const {
  return "G_" + std::to_string(n) + "(" + g.to_string() + ", " + f.to_string() + ")";
}

RiordanPair expand_pair(const RiordanGraphSpec& spec, std::size_t need) {
  require(spec.n >= 1, ErrorKind::invalid_spec, "graph order must be at least 1");
  auto expand_one = [&](const SeriesSpec& s, const char* name) {
    const std::size_t t = std::min(working_precision(spec.n), s.available());
    if (t < need)
      fail(ErrorKind::precision, std::string(name) + " = " + s.to_string() + " is known mod t^" + std::to_string(t) +
                                     " but t^" + std::to_string(need) + " is needed");
    return s.expand(t);
  };
  RiordanPair p{expand_one(spec.g, "g"), expand_one(spec.f, "f")};
  require(!p.f.coeff(0), ErrorKind::invalid_spec, "f must have zero constant term");
  return p;
}

RiordanGraphSpec with_pair(const RiordanPair& p, std::size_t n) {
  return RiordanGraphSpec{SeriesSpec::window(p.g), SeriesSpec::window(p.f), n};
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::pascal: return "pascal";
    case Family::catalan: return "catalan";
    case Family::motzkin: return "motzkin";
    case Family::toeplitz: return "toeplitz";
    case Family::fibonacci: return "fibonacci";
    case Family::path: return "path";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::null: return "null";
    case Family::star: return "star";
    case Family::kary_tree: return "kary_tree";
  }
  return "path";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::pascal, Family::catalan, Family::motzkin, Family::toeplitz, Family::fibonacci, Family::path,
                 Family::complete, Family::complete_bipartite, Family::null, Family::star, Family::kary_tree})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

RiordanGraphSpec family_spec(const FamilyId& id, std::size_t n) {
  auto spec = [n](const char* g, const char* f) { return RiordanGraphSpec::parse(g, f, n); };
  switch (id.kind) {
    case Family::pascal: return spec("named:pascal_g", "named:pascal_f");
    case Family::catalan: return spec("named:catalan", "fix:X=t+X^2");
    case Family::motzkin: return spec("named:motzkin", "fix:X=t+t*X+t*X^2");
    case Family::toeplitz: return RiordanGraphSpec{id.toeplitz_g, SeriesSpec::named(NamedSeries::t), n};
    case Family::fibonacci: return spec("named:one", "named:fibonacci_f");
    case Family::path: return spec("named:one", "named:t");
    case Family::complete: return spec("named:geometric", "named:t");
    case Family::complete_bipartite: return spec("rat:1/(1+t^2)", "named:t");
    case Family::null: return spec("named:zero", "named:t");
    case Family::star: return spec("named:geometric", "named:zero");
    case Family::kary_tree: {
      require(id.arity >= 2, ErrorKind::invalid_spec, "k-ary tree needs k >= 2");
      std::vector<std::size_t> g(id.arity);
      for (std::size_t k = 0; k < id.arity; ++k) g[k] = k;
      return RiordanGraphSpec{SeriesSpec::polynomial(g), SeriesSpec::polynomial({id.arity}), n};
    }
  }
  return spec("named:one", "named:t");
}

Graph build_graph(const RiordanPair& p, std::size_t n) {
  require(n >= 1, ErrorKind::domain, "graph order must be at least 1");
  Graph graph(n);
  if (n == 1) return graph;
  // Vertex i > j >= 1 is adjacent iff entry (i-2, j-1) of the order-(n-1) matrix is set.
  const BitMatrix b = riordan_block(p.g, p.f, n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (b.get(r, c)) graph.add_edge(r + 2, c + 1);
  return graph;
}

Graph build_graph(const RiordanGraphSpec& spec) {
  return build_graph(expand_pair(spec, spec.n > 1 ? spec.n - 1 : 1), spec.n);
}

bool is_proper(const RiordanGraphSpec& spec) {
  const RiordanPair p = expand_pair(spec, 2);
  return is_proper(p.g, p.f);
}

BasicStats basic_stats(const RiordanGraphSpec& spec) {
  const std::size_t n = spec.n;
  const RiordanPair p = expand_pair(spec, std::max<std::size_t>(n, 2));
  const Graph graph = build_graph(p, n);
  BasicStats st;
  st.degrees.assign(n, 0);
  if (n >= 2) {
    // Column j of the order-(n-1) matrix is g f^j mod t^(n-1).
    const std::size_t w = n - 1;
    std::vector<BitSeries> cols;
    BitSeries col = p.g.truncated(w);
    for (std::size_t j = 0; j < w; ++j) {
      if (j > 0) col = (col * p.f).truncated(w);
      cols.push_back(col);
    }
    auto col_at_one = [&](std::size_t j) { return cols[j].popcount(); };
    auto row_sum = [&](std::size_t i) {
      std::size_t s = 0;
      for (std::size_t j = 0; j <= i; ++j) s += cols[j].coeff(i) ? 1 : 0;
      return s;
    };
    st.degrees[0] = col_at_one(0);
    st.degrees[n - 1] = row_sum(n - 2);
    for (std::size_t k = 2; k < n; ++k) st.degrees[k - 1] = col_at_one(k - 1) + row_sum(k - 2);
    for (std::size_t j = 0; j < w; ++j) st.edge_count += col_at_one(j);
  }
  if (st.degrees != graph.degrees() || st.edge_count != graph.edge_count())
    fail(ErrorKind::internal, "column-polynomial degrees disagree with adjacency row sums for " + spec.to_string());
  const bool proper = is_proper(p.g, p.f);
  if (proper) st.matching_number = n / 2;
  st.has_consecutive_ham_path = proper;
  st.has_consecutive_ham_cycle = proper && n >= 3 && p.g.coeff(n - 2);
  return st;
}

std::string_view to_string(Subdiagonal s) {
  switch (s) {
    case Subdiagonal::none: return "none";
    case Subdiagonal::first_only: return "first_only";
    case Subdiagonal::full: return "full";
  }
  return "none";
}

Subdiagonal subdiagonal_pattern(const RiordanGraphSpec& spec) {
  const RiordanPair p = expand_pair(spec, 2);
  if (!p.g.coeff(0) || spec.n < 2) return Subdiagonal::none;
  return p.f.coeff(1) ? Subdiagonal::full : Subdiagonal::first_only;
}

std::string_view to_string(Subgroup s) {
  switch (s) {
    case Subgroup::appell: return "appell";
    case Subgroup::bell: return "bell";
    case Subgroup::lagrange: return "lagrange";
    case Subgroup::checkerboard: return "checkerboard";
    case Subgroup::derivative: return "derivative";
    case Subgroup::hitting_time: return "hitting_time";
  }
  return "appell";
}

std::vector<Subgroup> classify_subgroup(const RiordanGraphSpec& spec) {
  const std::size_t w = spec.n;
  const RiordanPair p = expand_pair(spec, w + 1);
  const BitSeries t = BitSeries::monomial(1, w + 1);
  const BitSeries df = derivative(p.f);
  auto same = [w](const BitSeries& a, const BitSeries& b) { return a.agrees_with(b, w); };
  std::vector<Subgroup> out;
  if (same(p.f, t)) out.push_back(Subgroup::appell);
  if (same(p.f, t * p.g)) out.push_back(Subgroup::bell);
  if (same(p.g, BitSeries::one(w))) out.push_back(Subgroup::lagrange);
  if (is_even_series(p.g, w) && is_odd_series(p.f, w)) out.push_back(Subgroup::checkerboard);
  if (same(p.g, df)) out.push_back(Subgroup::derivative);
  if (same(t * df, p.g * p.f)) out.push_back(Subgroup::hitting_time);
  return out;
}

bool has_subgroup(const RiordanGraphSpec& spec, Subgroup s) {
  const auto c = classify_subgroup(spec);
  return std::find(c.begin(), c.end(), s) != c.end();
}

namespace {

std::uint64_t pack_lower(const Graph& g) {
  std::uint64_t key = 0;
  std::size_t bit = 0;
  for (std::size_t i = 2; i <= g.order(); ++i)
    for (std::size_t j = 1; j < i; ++j, ++bit)
      if (g.adjacent(i, j)) key |= std::uint64_t{1} << bit;
  return key;
}

struct NormalForm {
  std::size_t lead;  // valuation of g; lead == n marks the null graph
  std::uint64_t g_tail;
  std::uint64_t f_bits;
};

RiordanPair normal_form_pair(const NormalForm& nf, std::size_t n) {
  const std::size_t t = std::max<std::size_t>(n - 1, 1);
  if (nf.lead >= n) return {BitSeries::zero(t), BitSeries::monomial(1, t)};
  BitSeries g = BitSeries::monomial(nf.lead, t);
  for (std::size_t k = nf.lead + 1; k + 2 <= n; ++k)
    if ((nf.g_tail >> (k - nf.lead - 1)) & 1U) g.set(k);
  BitSeries f(t);
  for (std::size_t k = 1; k + nf.lead + 2 <= n; ++k)
    if ((nf.f_bits >> (k - 1)) & 1U) f.set(k);
  return {g, f};
}

}  // namespace

LabeledCensus enumerate_labeled(std::size_t n, Execution exec) {
  require(n >= 1, ErrorKind::domain, "graph order must be at least 1");
  if (n > kMaxLabeledOrder)
    fail(ErrorKind::budget, "labeled enumeration is limited to n <= " + std::to_string(kMaxLabeledOrder) +
                                " (there are (4^(n-1)+2)/3 graphs)");
  // g = t^i + sum_{i<k<=n-2} g_k t^k, f of degree <= n-i-2, plus the null graph.
  std::vector<NormalForm> forms;
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    const std::size_t free_bits = n - 2 - i;
    for (std::uint64_t gt = 0; gt < (std::uint64_t{1} << free_bits); ++gt)
      for (std::uint64_t fb = 0; fb < (std::uint64_t{1} << free_bits); ++fb) forms.push_back({i, gt, fb});
  }
  forms.push_back({n, 0, 0});

  std::vector<std::uint64_t> keys(forms.size());
  auto visit = [&](std::size_t idx) { keys[idx] = pack_lower(build_graph(normal_form_pair(forms[idx], n), n)); };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(forms.size()); ++idx)
      visit(static_cast<std::size_t>(idx));
  } else {
    for (std::size_t idx = 0; idx < forms.size(); ++idx) visit(idx);
  }

  auto witness = [&](std::size_t idx) {
    const RiordanPair p = normal_form_pair(forms[idx], n);
    return RiordanGraphSpec{SeriesSpec::polynomial(p.g.support()), SeriesSpec::polynomial(p.f.support()), n};
  };
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t idx = 0; idx < forms.size(); ++idx) order.emplace_back(keys[idx], idx);
  std::sort(order.begin(), order.end());

  LabeledCensus census;
  census.n = n;
  census.normal_forms = forms.size();
  census.expected = static_cast<std::size_t>(((std::uint64_t{1} << (2 * (n - 1))) + 2) / 3);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && order[k].first == order[k - 1].first) {
      census.collisions.emplace_back(witness(order[k - 1].second), witness(order[k].second));
      continue;
    }
    census.graphs.push_back({build_graph(normal_form_pair(forms[order[k].second], n), n), witness(order[k].second)});
  }
  census.count = census.graphs.size();
  return census;
}

RiordanGraphSpec complement_appell(const RiordanGraphSpec& spec) {
  const RiordanPair p = expand_pair(spec, spec.n);
  if (!has_subgroup(spec, Subgroup::appell))
    fail(ErrorKind::not_applicable, "complement stays Riordan only for Appell specs (f = t); got f = " +
                                        spec.f.to_string());
  const BitSeries g = p.g + BitSeries::all_ones(p.g.trunc());
  return RiordanGraphSpec{SeriesSpec::window(g), spec.f, spec.n};
}

}  // namespace riordan

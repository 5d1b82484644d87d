#include "riordan/report.hpp"

#include <sstream>

namespace riordan {

Json envelope(std::string_view kind, Json payload) {
  Json out;
  out["schema"] = kReportSchemaVersion;
  out["kind"] = kind;
  for (auto& [key, value] : payload.items()) out[key] = value;
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ',' << v << '\n';
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Json to_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
  return rows;
}

Json to_json(const RiordanGraphSpec& spec, const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json out;
  out["spec"] = {{"g", spec.g.to_string()}, {"f", spec.f.to_string()}, {"n", spec.n}};
  out["n"] = g.order();
  out["edge_count"] = g.edge_count();
  out["edges"] = edges;
  out["degrees"] = g.degrees();
  out["adjacency"] = to_json(g.adjacency());
  return out;
}

Json to_json(const BasicStats& s) {
  Json out;
  out["degrees"] = s.degrees;
  out["edge_count"] = s.edge_count;
  out["matching_number"] = s.matching_number ? Json(*s.matching_number) : Json(nullptr);
  out["consecutive_hamiltonian_path"] = s.has_consecutive_ham_path;
  out["consecutive_hamiltonian_cycle"] = s.has_consecutive_ham_cycle;
  return out;
}

Json to_json(const Flag& f) {
  Json out;
  out["value"] = f.value;
  out["index"] = f.index ? Json(*f.index) : Json(nullptr);
  out["evidence"] = f.evidence;
  return out;
}

Json to_json(const DecompClass& c) {
  Json out;
  out["o_decomposable"] = to_json(c.o_decomposable);
  out["e_decomposable"] = to_json(c.e_decomposable);
  out["io_decomposable"] = to_json(c.io_decomposable);
  out["ie_decomposable"] = to_json(c.ie_decomposable);
  out["oe_isomorphic"] = c.oe_isomorphic ? to_json(*c.oe_isomorphic) : Json(nullptr);
  out["oe_bipartite"] = to_json(c.oe_bipartite);
  out["oe_disconnected"] = to_json(c.oe_disconnected);
  out["checkerboard"] = c.checkerboard;
  out["null_graph"] = c.null_graph;
  return out;
}

Json to_json(const DecompositionBlocks& b) {
  Json out;
  out["odd_vertices"] = Json::array();
  out["even_vertices"] = Json::array();
  for (std::size_t k = 0; k < b.permutation.size(); ++k)
    out[k < b.x_graph.order() ? "odd_vertices" : "even_vertices"].push_back(b.permutation[k]);
  out["x"] = to_json(b.x_graph.adjacency());
  out["y"] = to_json(b.y_graph.adjacency());
  out["bridge"] = to_json(b.bridge);
  return out;
}

Json to_json(const DecompVerdict& v) {
  Json out;
  out["value"] = v.value;
  out["by_coefficients"] = v.by_coefficients;
  out["by_blocks"] = v.by_blocks;
  out["by_a_sequence"] = v.by_a_sequence ? Json(*v.by_a_sequence) : Json(nullptr);
  out["evidence"] = v.evidence;
  return out;
}

namespace {

std::string bits(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

}  // namespace

Json to_json(const DegreeParity& d) {
  Json out;
  out["by_formula"] = d.by_formula;
  out["phi"] = bits(d.phi);
  out["psi"] = bits(d.psi);
  out["parity"] = bits(d.parity);
  return out;
}

Json to_json(const EulerVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["odd_vertices"] = v.odd_vertices;
  out["endpoints"] = v.endpoints ? Json({v.endpoints->first, v.endpoints->second}) : Json(nullptr);
  out["connected"] = v.connected;
  out["palindromic_appell"] = v.palindromic_appell;
  return out;
}

Json to_json(const HamiltonVerdict& v, std::optional<bool> oracle_confirmed) {
  Json out;
  out["status"] = to_string(v.status);
  if (!v.witness.empty()) out["witness"] = v.witness;
  if (v.reason) out["reason"] = to_string(*v.reason);
  if (v.pivot) out["pivot"] = *v.pivot;
  out["detail"] = v.detail;
  out["oracle_confirmed"] = oracle_confirmed.value_or(false);
  return out;
}

Json to_json(const WalkMatrix& w) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= w.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= w.n; ++j) row.push_back(w.at(i, j));
    rows.push_back(row);
  }
  Json out;
  out["n"] = w.n;
  out["walks"] = rows;
  out["parity_graph"] = to_json(w.parity_graph().adjacency());
  return out;
}

Json fractal_report(const FractalView& view, std::size_t u, std::size_t v) {
  const CognateSpec c = view.cognate_spec(u, v);
  Json cognates = Json::array();
  for (auto [a, b] : view.cognate_pairs(u, v)) cognates.push_back({a, b});
  bool verified = true;
  for (std::int64_t m = c.m_low; m <= c.m_high; ++m) verified = verified && view.isomorphism_check(u, v, m);
  Json out;
  out["pair"] = {c.j, c.i};
  out["s"] = c.s;
  out["ell"] = c.ell;
  out["m_range"] = {c.m_low, c.m_high};
  out["cognates"] = cognates;
  out["verified"] = verified;
  return out;
}

}  // namespace riordan

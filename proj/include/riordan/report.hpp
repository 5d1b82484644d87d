#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "riordan/bit_matrix.hpp"
#include "riordan/decomposition.hpp"
#include "riordan/fractal_relabel.hpp"
#include "riordan/graph.hpp"
#include "riordan/graph_ops.hpp"
#include "riordan/riordan_graph.hpp"
#include "riordan/traversal.hpp"

namespace riordan {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// {"schema": 1, "kind": kind, ...payload}
Json envelope(std::string_view kind, Json payload);

// Edges sorted lexicographically, one per line.
std::string to_dot(const Graph& g, std::string_view name = "G");
std::string to_csv(const Graph& g);
std::string to_edge_list(const Graph& g);

Json to_json(const BitMatrix& m);  // list of row strings
Json to_json(const RiordanGraphSpec& spec, const Graph& g);
Json to_json(const BasicStats& s);
Json to_json(const Flag& f);
Json to_json(const DecompClass& c);
Json to_json(const DecompositionBlocks& b);
Json to_json(const DecompVerdict& v);
Json to_json(const DegreeParity& d);
Json to_json(const EulerVerdict& v);
Json to_json(const HamiltonVerdict& v, std::optional<bool> oracle_confirmed = std::nullopt);
Json to_json(const WalkMatrix& w);
// {pair, s, ell, cognates, verified}
Json fractal_report(const FractalView& view, std::size_t u, std::size_t v);

}  // namespace riordan

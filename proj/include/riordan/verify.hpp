#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/execution.hpp"
#include "riordan/oracle.hpp"
#include "riordan/report.hpp"

namespace riordan {

enum class Suite { all, figures, theorems, conjectures };
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 20180813;
inline constexpr int kCriterionCount = 15;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  Execution exec = Execution::parallel;
  OracleBudget budget;
  std::string golden_dir;  // figure files golden/figN.txt; skipped when empty
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::optional<double> time_limit;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Report-only exploration; never fails a run.
struct ConjectureReport {
  std::string name;
  std::vector<std::string> lines;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  Suite suite = Suite::all;
  std::vector<CriterionResult> criteria;
  std::vector<ConjectureReport> conjectures;

  bool passed() const;
};

std::string_view criterion_name(int id);
std::vector<int> suite_criteria(Suite s);
CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<ConjectureReport> run_conjectures(const VerifyOptions& options);
VerifyReport run_suite(Suite s, const VerifyOptions& options);

// One line per criterion: "PASS  1 figures (0.01 s)", failures indented below.
std::string to_text(const CriterionResult& r);
std::string to_text(const VerifyReport& r);
Json to_json(const VerifyReport& r);

// The four printed 6-vertex adjacency matrices kept as golden files.
struct FigureMatrix {
  std::string_view name;
  std::string_view file;  // golden/<file>
  std::string_view g, f;
  std::size_t n;
  std::vector<std::string> rows;
};
const std::vector<FigureMatrix>& figure_matrices();

}  // namespace riordan

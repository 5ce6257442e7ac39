#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicheck {

using json = nlohmann::json;

// One law instance to evaluate: `check(i)` inspects the i-th sample and
// returns a counterexample payload on failure. Checks must be pure and
// independent across indices so they can run in parallel.
struct LawRun {
  std::string id;
  std::string anchor;                 // reference into the source theory
  std::optional<std::string> script;  // equation script name, if script-based
  std::string mode = "sampled";       // "sampled" | "exhaustive"
  std::size_t count = 0;
  std::function<std::optional<json>(std::size_t)> check;
};

struct EquationResult {
  std::string id;
  std::string anchor;
  std::optional<std::string> script;
  std::string mode;
  std::size_t samples = 0;
  std::size_t failures = 0;
  bool passed = true;
  json counterexample;  // first failure, by sample index
  double wall_ms = 0.0;

  json to_json(bool timings) const;
};

struct Report {
  std::string instance;
  std::string suite;
  std::uint64_t seed = 0;
  json config;
  std::vector<EquationResult> equations;

  bool passed() const;
  std::size_t total_failures() const;
  // Deterministic for identical configs; wall times are included only when
  // `timings` is set.
  json to_json(bool timings = false) const;
  std::string to_text() const;
  void sort_by_id();
};

enum class ExecPolicy { Serial, Parallel };

// Evaluates one law over its sample space; parallel execution merges
// deterministically by sample index.
EquationResult execute_law(const LawRun& law, ExecPolicy policy);
std::vector<EquationResult> execute_laws(const std::vector<LawRun>& laws,
                                         ExecPolicy policy);

}  // namespace bicheck

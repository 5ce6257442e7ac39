#pragma once

#include "bicheck/core/pasting.hpp"
#include "bicheck/core/report.hpp"

namespace bicheck {

// A shipped equation script: a paper anchor plus two pasting expressions to
// compare. Scripts live as text files under the equations directory
// (BICHECK_EQN_DIR overrides the configured default) in the format
//
//   ; comment
//   anchor <free text up to end of line>
//   lhs <s-expression>
//   rhs <s-expression>
struct EquationScript {
  std::string name;
  std::string anchor;
  PastingExpr lhs, rhs;
};

std::string equations_dir();
const EquationScript& load_script(const std::string& name);
std::vector<std::string> shipped_scripts();

// Evaluates both sides against the environment; nullopt when equal.
std::optional<json> script_failure(const Bicategory& b,
                                   const EquationScript& s, const Env& env);
std::optional<json> script_failure(const Bicategory& b,
                                   const std::string& name, const Env& env);

}  // namespace bicheck

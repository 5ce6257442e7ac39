#include "bicheck/core/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bicheck/core/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bicheck {

json EquationResult::to_json(bool timings) const {
  json j{{"id", id},
         {"anchor", anchor},
         {"script", script ? json(*script) : json(nullptr)},
         {"mode", mode},
         {"samples", samples},
         {"failures", failures},
         {"passed", passed},
         {"counterexample", counterexample}};
  if (timings) j["wall_ms"] = wall_ms;
  return j;
}

bool Report::passed() const {
  for (const auto& e : equations)
    if (!e.passed) return false;
  return true;
}

std::size_t Report::total_failures() const {
  std::size_t n = 0;
  for (const auto& e : equations) n += e.failures;
  return n;
}

void Report::sort_by_id() {
  std::stable_sort(equations.begin(), equations.end(),
                   [](const EquationResult& a, const EquationResult& b) {
                     return a.id < b.id;
                   });
}

json Report::to_json(bool timings) const {
  json eqs = json::array();
  for (const auto& e : equations) eqs.push_back(e.to_json(timings));
  return json{{"schema", 1},
              {"instance", instance},
              {"suite", suite},
              {"seed", seed},
              {"config", config},
              {"passed", passed()},
              {"equations", eqs}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "instance: " << instance << "  suite: " << suite << "  seed: " << seed
     << "\n";
  for (const auto& e : equations) {
    os << (e.passed ? "  PASS  " : "  FAIL  ") << e.id << "  [" << e.mode
       << ", " << e.samples << " samples, " << e.wall_ms << " ms]\n"
       << "        " << e.anchor << "\n";
    if (!e.passed)
      os << "        failures: " << e.failures
         << "  first: " << e.counterexample.dump() << "\n";
  }
  os << (passed() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

EquationResult execute_law(const LawRun& law, ExecPolicy policy) {
  EquationResult r;
  r.id = law.id;
  r.anchor = law.anchor;
  r.script = law.script;
  r.mode = law.mode;
  r.samples = law.count;
  r.counterexample = json(nullptr);
  auto t0 = std::chrono::steady_clock::now();

  auto run_one = [&](std::size_t i) -> std::optional<json> {
    try {
      return law.check(i);
    } catch (const Error& e) {
      return json{{"error", e.kind}, {"what", e.what()}};
    } catch (const std::exception& e) {
      return json{{"error", "exception"}, {"what", e.what()}};
    }
  };

  std::vector<unsigned char> failed(law.count, 0);
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long i = 0; i < static_cast<long long>(law.count); ++i) {
      if (run_one(static_cast<std::size_t>(i))) failed[i] = 1;
    }
  } else {
    for (std::size_t i = 0; i < law.count; ++i)
      if (run_one(i)) failed[i] = 1;
  }

  for (std::size_t i = 0; i < law.count; ++i) {
    if (!failed[i]) continue;
    ++r.failures;
    if (r.counterexample.is_null()) {
      json payload = *run_one(i);  // deterministic re-evaluation
      r.counterexample = json{{"sample", i}, {"detail", payload}};
    }
  }
  r.passed = r.failures == 0;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

std::vector<EquationResult> execute_laws(const std::vector<LawRun>& laws,
                                         ExecPolicy policy) {
  std::vector<EquationResult> out;
  out.reserve(laws.size());
  for (const auto& l : laws) out.push_back(execute_law(l, policy));
  return out;
}

}  // namespace bicheck

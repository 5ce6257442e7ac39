#include "bicheck/structures/scripts.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "bicheck/core/config.hpp"
#include "bicheck/core/errors.hpp"

namespace bicheck {

std::string equations_dir() {
  if (const char* env = std::getenv("BICHECK_EQN_DIR")) return env;
  return BICHECK_DEFAULT_EQN_DIR;
}

namespace {

EquationScript parse_script(const std::string& name,
                            const std::string& text) {
  EquationScript s;
  s.name = name;
  std::string lhs, rhs;
  std::istringstream in(text);
  std::string line;
  std::string* sink = nullptr;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == ';') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "anchor") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t i = rest.find_first_not_of(" \t");
      s.anchor = i == std::string::npos ? "" : rest.substr(i);
      sink = nullptr;
    } else if (word == "lhs") {
      std::string rest;
      std::getline(ls, rest);
      lhs = rest;
      sink = &lhs;
    } else if (word == "rhs") {
      std::string rest;
      std::getline(ls, rest);
      rhs = rest;
      sink = &rhs;
    } else if (sink != nullptr) {
      *sink += "\n" + line;
    }
  }
  if (s.anchor.empty())
    throw IoError("script " + name + " is missing an anchor");
  if (lhs.empty() || rhs.empty())
    throw IoError("script " + name + " is missing lhs or rhs");
  s.lhs = PastingExpr::parse(lhs);
  s.rhs = PastingExpr::parse(rhs);
  return s;
}

std::map<std::string, EquationScript>& cache() {
  static std::map<std::string, EquationScript> c;
  return c;
}
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const EquationScript& load_script(const std::string& name) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache().find(name);
  if (it != cache().end()) return it->second;
  std::filesystem::path path =
      std::filesystem::path(equations_dir()) / (name + ".eqn");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open equation script " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto [pos, ok] = cache().emplace(name, parse_script(name, buf.str()));
  return pos->second;
}

std::vector<std::string> shipped_scripts() {
  std::vector<std::string> out;
  std::filesystem::path dir(equations_dir());
  if (!std::filesystem::exists(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".eqn") out.push_back(e.path().stem());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<json> script_failure(const Bicategory& b,
                                   const EquationScript& s, const Env& env) {
  TwoCell lhs = s.lhs.eval(b, env);
  TwoCell rhs = s.rhs.eval(b, env);
  if (auto e = b.validate2(lhs))
    return json{{"invalid", "lhs"}, {"reason", *e}, {"lhs", lhs.to_json()}};
  if (auto e = b.validate2(rhs))
    return json{{"invalid", "rhs"}, {"reason", *e}, {"rhs", rhs.to_json()}};
  if (lhs == rhs) return std::nullopt;
  return json{{"script", s.name},
              {"lhs", lhs.to_json()},
              {"rhs", rhs.to_json()}};
}

std::optional<json> script_failure(const Bicategory& b,
                                   const std::string& name, const Env& env) {
  return script_failure(b, load_script(name), env);
}

}  // namespace bicheck

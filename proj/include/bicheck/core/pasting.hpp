#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bicheck/core/coherence.hpp"

namespace bicheck {

// Name bindings a pasting expression is evaluated against.
struct Env {
  std::map<std::string, Obj> objs;
  std::map<std::string, OneCell> ones;
  std::map<std::string, TwoCell> twos;

  Env& obj(const std::string& n, Obj a);
  Env& one(const std::string& n, OneCell f);
  Env& two(const std::string& n, TwoCell a);
  const Obj& lookup_obj(const std::string& n) const;
  const OneCell& lookup_one(const std::string& n) const;
  const TwoCell& lookup_two(const std::string& n) const;
};

// A formal expression tree of named 2-cell generators, whiskerings,
// vertical/horizontal composites, inverses and structural-cell requests.
// Concrete syntax (s-expressions):
//   2-cells:  name | (id2 F) | (vcomp a b ...)      -- diagram order, a first
//           | (hcomp b a) | (whiskl H a) | (whiskr a F) | (inv a)
//           | (assoc H G F) | (assoc- H G F) | (lunit F) | (lunit- F)
//           | (runit F) | (runit- F) | (coh W1 W2)
//           | (expect a W1 W2)                      -- boundary assertion
//   1-cell words:  name | (id1 A) | (comp U V)      -- U after V
class PastingExpr {
 public:
  static PastingExpr parse(const std::string& sexpr);

  TwoCell eval(const Bicategory& B, const Env& env) const;
  const std::string& text() const { return text_; }

 private:
  struct Node;
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Evaluates a pasting expression to a concrete 2-cell; deterministic given
// the environment.
TwoCell eval_pasting(const Bicategory& B, const PastingExpr& e,
                     const Env& env);

}  // namespace bicheck

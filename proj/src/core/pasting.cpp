#include "bicheck/core/pasting.hpp"

#include <cctype>

#include "bicheck/core/errors.hpp"

namespace bicheck {

Env& Env::obj(const std::string& n, Obj a) {
  objs[n] = std::move(a);
  return *this;
}
Env& Env::one(const std::string& n, OneCell f) {
  ones[n] = std::move(f);
  return *this;
}
Env& Env::two(const std::string& n, TwoCell a) {
  twos[n] = std::move(a);
  return *this;
}
const Obj& Env::lookup_obj(const std::string& n) const {
  auto it = objs.find(n);
  if (it == objs.end()) throw UnknownGenerator("object " + n);
  return it->second;
}
const OneCell& Env::lookup_one(const std::string& n) const {
  auto it = ones.find(n);
  if (it == ones.end()) throw UnknownGenerator("1-cell " + n);
  return it->second;
}
const TwoCell& Env::lookup_two(const std::string& n) const {
  auto it = twos.find(n);
  if (it == twos.end()) throw UnknownGenerator("2-cell " + n);
  return it->second;
}

namespace {

struct Sexp {
  std::string atom;            // nonempty for leaves
  std::vector<Sexp> children;  // for lists
  bool is_atom() const { return !atom.empty(); }
};

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      } else if (s[i] == ';') {  // comment to end of line
        while (i < s.size() && s[i] != '\n') ++i;
      } else {
        break;
      }
    }
  }

  Sexp parse() {
    skip_ws();
    if (i >= s.size()) throw InvalidValue("unexpected end of expression");
    if (s[i] == '(') {
      ++i;
      Sexp e;
      while (true) {
        skip_ws();
        if (i >= s.size()) throw InvalidValue("unterminated list");
        if (s[i] == ')') {
          ++i;
          return e;
        }
        e.children.push_back(parse());
      }
    }
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
           s[i] != '(' && s[i] != ')')
      ++i;
    if (start == i) throw InvalidValue("empty token");
    Sexp e;
    e.atom = s.substr(start, i - start);
    return e;
  }
};

const Sexp& arg(const Sexp& e, std::size_t k, const char* op,
                std::size_t want) {
  if (e.children.size() != want + 1)
    throw InvalidValue(std::string(op) + " expects " + std::to_string(want) +
                       " arguments");
  return e.children[k + 1];
}

Word eval_word(const Sexp& e, const Bicategory& B, const Env& env) {
  if (e.is_atom()) return Word::gen(env.lookup_one(e.atom));
  if (e.children.empty() || !e.children[0].is_atom())
    throw InvalidValue("malformed 1-cell word");
  const std::string& op = e.children[0].atom;
  if (op == "id1") {
    const Sexp& a = arg(e, 0, "id1", 1);
    if (!a.is_atom()) throw InvalidValue("id1 expects an object name");
    return Word::unit(env.lookup_obj(a.atom));
  }
  if (op == "comp") {
    return Word::comp(eval_word(arg(e, 0, "comp", 2), B, env),
                      eval_word(arg(e, 1, "comp", 2), B, env));
  }
  throw InvalidValue("unknown 1-cell operator " + op);
}

OneCell eval_one(const Sexp& e, const Bicategory& B, const Env& env) {
  return eval_word(e, B, env).eval(B);
}

TwoCell eval_two(const Sexp& e, const Bicategory& B, const Env& env) {
  if (e.is_atom()) return env.lookup_two(e.atom);
  if (e.children.empty() || !e.children[0].is_atom())
    throw InvalidValue("malformed 2-cell expression");
  const std::string& op = e.children[0].atom;
  if (op == "id2") return B.id2(eval_one(arg(e, 0, "id2", 1), B, env));
  if (op == "vcomp") {
    if (e.children.size() < 3) throw InvalidValue("vcomp expects >= 2 cells");
    TwoCell acc = eval_two(e.children[1], B, env);
    for (std::size_t k = 2; k < e.children.size(); ++k) {
      TwoCell next = eval_two(e.children[k], B, env);
      if (acc.dst != next.src)
        throw BoundaryMismatch("vcomp chain breaks between steps " +
                               std::to_string(k - 1) + " and " +
                               std::to_string(k));
      acc = B.vcomp(next, acc);
    }
    return acc;
  }
  if (op == "hcomp")
    return B.hcomp2(eval_two(arg(e, 0, "hcomp", 2), B, env),
                    eval_two(arg(e, 1, "hcomp", 2), B, env));
  if (op == "whiskl")
    return B.whisker_l(eval_one(arg(e, 0, "whiskl", 2), B, env),
                       eval_two(arg(e, 1, "whiskl", 2), B, env));
  if (op == "whiskr")
    return B.whisker_r(eval_two(arg(e, 0, "whiskr", 2), B, env),
                       eval_one(arg(e, 1, "whiskr", 2), B, env));
  if (op == "inv") return B.inv(eval_two(arg(e, 0, "inv", 1), B, env));
  if (op == "assoc" || op == "assoc-") {
    TwoCell a = B.associator(eval_one(arg(e, 0, op.c_str(), 3), B, env),
                             eval_one(arg(e, 1, op.c_str(), 3), B, env),
                             eval_one(arg(e, 2, op.c_str(), 3), B, env));
    return op == "assoc" ? a : B.inv(a);
  }
  if (op == "lunit" || op == "lunit-") {
    TwoCell a = B.lunitor(eval_one(arg(e, 0, op.c_str(), 1), B, env));
    return op == "lunit" ? a : B.inv(a);
  }
  if (op == "runit" || op == "runit-") {
    TwoCell a = B.runitor(eval_one(arg(e, 0, op.c_str(), 1), B, env));
    return op == "runit" ? a : B.inv(a);
  }
  if (op == "coh")
    return coherence_cell(B, eval_word(arg(e, 0, "coh", 2), B, env),
                          eval_word(arg(e, 1, "coh", 2), B, env));
  if (op == "expect") {
    TwoCell a = eval_two(arg(e, 0, "expect", 3), B, env);
    OneCell s = eval_one(arg(e, 1, "expect", 3), B, env);
    OneCell d = eval_one(arg(e, 2, "expect", 3), B, env);
    if (a.src != s)
      throw BoundaryMismatch("declared source disagrees with computed one");
    if (a.dst != d)
      throw BoundaryMismatch("declared target disagrees with computed one");
    return a;
  }
  throw UnknownGenerator("2-cell operator " + op);
}

}  // namespace

struct PastingExpr::Node {
  Sexp sexp;
};

PastingExpr PastingExpr::parse(const std::string& sexpr) {
  Parser p{sexpr};
  Sexp e = p.parse();
  p.skip_ws();
  if (p.i != sexpr.size())
    throw InvalidValue("trailing characters after expression");
  PastingExpr out;
  out.root_ = std::make_shared<const Node>(Node{std::move(e)});
  out.text_ = sexpr;
  return out;
}

TwoCell PastingExpr::eval(const Bicategory& B, const Env& env) const {
  if (!root_) throw InvalidValue("empty pasting expression");
  return eval_two(root_->sexp, B, env);
}

TwoCell eval_pasting(const Bicategory& B, const PastingExpr& e,
                     const Env& env) {
  return e.eval(B, env);
}

}  // namespace bicheck

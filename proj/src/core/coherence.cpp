#include "bicheck/core/coherence.hpp"

#include <functional>

#include "bicheck/core/errors.hpp"

namespace bicheck {

Word Word::gen(OneCell f) {
  Word w;
  w.kind_ = Kind::Gen;
  w.cell_ = std::move(f);
  return w;
}

Word Word::unit(Obj a) {
  Word w;
  w.kind_ = Kind::Unit;
  w.obj_ = std::move(a);
  return w;
}

Word Word::comp(Word u, Word v) {
  if (!(v.dst() == u.src()))
    throw BoundaryMismatch("word composition endpoints");
  Word w;
  w.kind_ = Kind::Comp;
  w.l_ = std::make_shared<const Word>(std::move(u));
  w.r_ = std::make_shared<const Word>(std::move(v));
  return w;
}

Obj Word::src() const {
  switch (kind_) {
    case Kind::Gen: return cell_.src;
    case Kind::Unit: return obj_;
    case Kind::Comp: return r_->src();
  }
  throw InvalidValue("corrupt word");
}

Obj Word::dst() const {
  switch (kind_) {
    case Kind::Gen: return cell_.dst;
    case Kind::Unit: return obj_;
    case Kind::Comp: return l_->dst();
  }
  throw InvalidValue("corrupt word");
}

std::vector<OneCell> Word::letters() const {
  std::vector<OneCell> out;
  std::function<void(const Word&)> go = [&](const Word& w) {
    switch (w.kind_) {
      case Kind::Gen: out.push_back(w.cell_); break;
      case Kind::Unit: break;
      case Kind::Comp:
        go(*w.r_);
        go(*w.l_);
        break;
    }
  };
  go(*this);
  return out;
}

std::size_t Word::node_count() const {
  if (kind_ != Kind::Comp) return 1;
  return 1 + l_->node_count() + r_->node_count();
}

bool Word::operator==(const Word& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Gen: return cell_ == o.cell_;
    case Kind::Unit: return obj_ == o.obj_;
    case Kind::Comp: return *l_ == *o.l_ && *r_ == *o.r_;
  }
  return false;
}

OneCell Word::eval(const Bicategory& B) const {
  switch (kind_) {
    case Kind::Gen: return cell_;
    case Kind::Unit: return B.id1(obj_);
    case Kind::Comp: return B.compose1(l_->eval(B), r_->eval(B));
  }
  throw InvalidValue("corrupt word");
}

json Word::to_json() const {
  switch (kind_) {
    case Kind::Gen: return cell_.to_json();
    case Kind::Unit: return json{{"id", obj_.to_json()}};
    case Kind::Comp: return json::array({l_->to_json(), r_->to_json()});
  }
  return json();
}

OneCell realize_normal_form(const Bicategory& B,
                            const std::vector<OneCell>& letters,
                            const Obj& at) {
  if (letters.empty()) return B.id1(at);
  OneCell acc = letters.front();
  for (std::size_t i = 1; i < letters.size(); ++i)
    acc = B.compose1(letters[i], acc);
  return acc;
}

namespace {

// merge_cell(Lu, Lv) : realize(Lu) o realize(Lv) => realize(Lv ++ Lu).
TwoCell merge_cell(const Bicategory& B, const std::vector<OneCell>& lu,
                   const Obj& lu_src, const std::vector<OneCell>& lv,
                   const Obj& lv_src) {
  OneCell ru = realize_normal_form(B, lu, lu_src);
  OneCell rv = realize_normal_form(B, lv, lv_src);
  if (lu.empty()) return B.lunitor(rv);
  if (lv.empty()) return B.runitor(ru);
  if (lu.size() == 1) return B.id2(B.compose1(ru, rv));
  // Peel the outermost generator of lu.
  std::vector<OneCell> rest(lu.begin(), lu.end() - 1);
  const OneCell& outer = lu.back();
  OneCell rrest = realize_normal_form(B, rest, lu_src);
  TwoCell step = B.associator(outer, rrest, rv);
  TwoCell inner = merge_cell(B, rest, lu_src, lv, lv_src);
  return B.vcomp(B.whisker_l(outer, inner), step);
}

}  // namespace

TwoCell normalization_cell(const Bicategory& B, const Word& w) {
  switch (w.kind()) {
    case Word::Kind::Gen: return B.id2(w.cell());
    case Word::Kind::Unit: return B.id2(B.id1(w.unit_obj()));
    case Word::Kind::Comp: {
      TwoCell au = normalization_cell(B, w.left());
      TwoCell av = normalization_cell(B, w.right());
      TwoCell h = B.hcomp2(au, av);
      TwoCell m = merge_cell(B, w.left().letters(), w.left().src(),
                             w.right().letters(), w.right().src());
      return B.vcomp(m, h);
    }
  }
  throw InvalidValue("corrupt word");
}

TwoCell coherence_cell(const Bicategory& B, const Word& w1, const Word& w2) {
  std::vector<OneCell> l1 = w1.letters();
  std::vector<OneCell> l2 = w2.letters();
  if (l1.size() != l2.size())
    throw WordMismatch("words have different generator counts");
  for (std::size_t i = 0; i < l1.size(); ++i)
    if (l1[i] != l2[i]) throw WordMismatch("generator sequences differ");
  if (!(w1.src() == w2.src()) || !(w1.dst() == w2.dst()))
    throw WordMismatch("word endpoints differ");
  TwoCell n1 = normalization_cell(B, w1);
  TwoCell n2 = normalization_cell(B, w2);
  return B.vcomp(B.inv(n2), n1);
}

namespace {

struct Move {
  Word target;
  TwoCell cell;  // structural 2-cell (whiskered into context)
  std::string desc;
};

// All single structural moves applicable anywhere inside w.
void collect_moves(const Bicategory& B, const Word& w,
                   std::vector<Move>& out, int unit_budget) {
  // Moves at the root.
  if (w.kind() == Word::Kind::Comp) {
    const Word& u = w.left();
    const Word& v = w.right();
    if (u.kind() == Word::Kind::Comp) {
      // (h o g) o f => h o (g o f)
      Word t = Word::comp(u.left(), Word::comp(u.right(), v));
      TwoCell c = B.associator(u.left().eval(B), u.right().eval(B), v.eval(B));
      out.push_back({t, c, "assoc>"});
    }
    if (v.kind() == Word::Kind::Comp) {
      // h o (g o f) => (h o g) o f
      Word t = Word::comp(Word::comp(u, v.left()), v.right());
      TwoCell c = B.assoc_inv(u.eval(B), v.left().eval(B), v.right().eval(B));
      out.push_back({t, c, "assoc<"});
    }
    if (u.kind() == Word::Kind::Unit) {
      out.push_back({v, B.lunitor(v.eval(B)), "lunit>"});
    }
    if (v.kind() == Word::Kind::Unit) {
      out.push_back({u, B.runitor(u.eval(B)), "runit>"});
    }
  }
  if (unit_budget > 0) {
    // Unit insertions at the root.
    out.push_back({Word::comp(Word::unit(w.dst()), w),
                   B.lunitor_inv(w.eval(B)), "lunit<"});
    out.push_back({Word::comp(w, Word::unit(w.src())),
                   B.runitor_inv(w.eval(B)), "runit<"});
  }
  // Moves inside subtrees, whiskered into context.
  if (w.kind() == Word::Kind::Comp) {
    const Word& u = w.left();
    const Word& v = w.right();
    std::vector<Move> lm;
    collect_moves(B, u, lm, unit_budget);
    for (Move& m : lm) {
      out.push_back({Word::comp(m.target, v),
                     B.whisker_r(m.cell, v.eval(B)), "L." + m.desc});
    }
    std::vector<Move> rm;
    collect_moves(B, v, rm, unit_budget);
    for (Move& m : rm) {
      out.push_back({Word::comp(u, m.target),
                     B.whisker_l(u.eval(B), m.cell), "R." + m.desc});
    }
  }
}

void dfs_paths(const Bicategory& B, const Word& cur, const Word& goal,
               int depth_left, std::vector<std::string>& moves,
               const TwoCell* acc, std::vector<WordPath>& out) {
  if (cur == goal && acc != nullptr) {
    out.push_back(WordPath{moves, *acc});
  }
  if (depth_left == 0) return;
  std::vector<Move> ms;
  collect_moves(B, cur, ms, depth_left);
  for (const Move& m : ms) {
    // A unit insertion must be removable within the remaining budget.
    long diff = static_cast<long>(m.target.letters().size()) -
                static_cast<long>(goal.letters().size());
    if (diff != 0) continue;  // letters are invariant under all moves
    long units = static_cast<long>(m.target.node_count()) -
                 static_cast<long>(goal.node_count());
    if (units > 2L * (depth_left - 1)) continue;
    TwoCell next = acc ? B.vcomp(m.cell, *acc) : m.cell;
    moves.push_back(m.desc);
    dfs_paths(B, m.target, goal, depth_left - 1, moves, &next, out);
    moves.pop_back();
  }
}

}  // namespace

std::vector<WordPath> enumerate_structural_paths(const Bicategory& B,
                                                 const Word& w1,
                                                 const Word& w2, int max_len) {
  std::vector<WordPath> out;
  if (w1 == w2) out.push_back(WordPath{{}, B.id2(w1.eval(B))});
  std::vector<std::string> moves;
  dfs_paths(B, w1, w2, max_len, moves, nullptr, out);
  return out;
}

}  // namespace bicheck

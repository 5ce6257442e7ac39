#pragma once

#include <memory>
#include <vector>

#include "bicheck/core/bicategory.hpp"

namespace bicheck {

// A bracketed composable word of 1-cells, with explicit unit insertions.
// comp(u, v) denotes "u after v".
class Word {
 public:
  enum class Kind { Gen, Unit, Comp };

  static Word gen(OneCell f);
  static Word unit(Obj a);
  static Word comp(Word u, Word v);

  Kind kind() const { return kind_; }
  const OneCell& cell() const { return cell_; }
  const Obj& unit_obj() const { return obj_; }
  const Word& left() const { return *l_; }   // outer factor (applied second)
  const Word& right() const { return *r_; }  // inner factor (applied first)

  Obj src() const;
  Obj dst() const;
  // Generators in application order (innermost first).
  std::vector<OneCell> letters() const;
  std::size_t node_count() const;
  bool operator==(const Word& o) const;

  OneCell eval(const Bicategory& B) const;
  json to_json() const;

 private:
  Kind kind_ = Kind::Unit;
  OneCell cell_;
  Obj obj_;
  std::shared_ptr<const Word> l_, r_;
};

// Right-nested unit-free realization of a generator list starting at `at`.
OneCell realize_normal_form(const Bicategory& B, const std::vector<OneCell>& letters, const Obj& at);

// Canonical structural 2-cell eval(w) => realize_normal_form(letters(w)).
TwoCell normalization_cell(const Bicategory& B, const Word& w);

// Canonical structural 2-cell w1 => w2 between two bracketings (with unit
// insertions) of the same generator word, via the right-nested normal form.
// Throws WordMismatch when the generator sequences differ.
TwoCell coherence_cell(const Bicategory& B, const Word& w1, const Word& w2);

// One re-bracketing / unit move applied at a subtree, together with the
// structural 2-cell it evaluates to under whiskering into the context.
struct WordPath {
  std::vector<std::string> moves;  // human-readable move descriptions
  TwoCell cell;                    // composite structural 2-cell w1 => w2
};

// All structural paths w1 => w2 of at most max_len moves. Each move is one
// associator or unitor (either direction) applied at some subtree.
std::vector<WordPath> enumerate_structural_paths(const Bicategory& B,
                                                 const Word& w1,
                                                 const Word& w2,
                                                 int max_len);

}  // namespace bicheck

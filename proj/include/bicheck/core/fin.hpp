#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicheck {

using json = nlohmann::json;

// An atom is either an integer or a nested pair of atoms. Product sets keep
// their pair structure; re-bracketing a product is a genuine bijection, not
// a no-op.
class Atom {
 public:
  Atom() : n_(0) {}
  explicit Atom(std::int64_t n) : n_(n) {}
  static Atom pair(const Atom& a, const Atom& b) {
    Atom r;
    r.p_ = std::make_shared<const std::pair<Atom, Atom>>(a, b);
    return r;
  }

  bool is_pair() const { return p_ != nullptr; }
  std::int64_t num() const { return n_; }
  const Atom& first() const { return p_->first; }
  const Atom& second() const { return p_->second; }

  // Total order: integers first (by value), then pairs lexicographically.
  int cmp(const Atom& o) const {
    if (!is_pair() && !o.is_pair()) return n_ < o.n_ ? -1 : n_ > o.n_ ? 1 : 0;
    if (!is_pair()) return -1;
    if (!o.is_pair()) return 1;
    int c = first().cmp(o.first());
    return c != 0 ? c : second().cmp(o.second());
  }
  bool operator==(const Atom& o) const { return cmp(o) == 0; }
  bool operator!=(const Atom& o) const { return cmp(o) != 0; }
  bool operator<(const Atom& o) const { return cmp(o) < 0; }

  json to_json() const {
    if (!is_pair()) return json(n_);
    return json::array({first().to_json(), second().to_json()});
  }
  std::string str() const { return to_json().dump(); }

 private:
  std::int64_t n_;
  std::shared_ptr<const std::pair<Atom, Atom>> p_;
};

// Ordered finite set of distinct atoms. Ordering is fixed at construction
// and serialization-stable.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<Atom> atoms);

  static FiniteSet range(std::int64_t n);
  static FiniteSet singleton(const Atom& a) { return FiniteSet({a}); }
  // Cartesian product; atoms are pairs, ordered a-major (lexicographic).
  static FiniteSet product(const FiniteSet& a, const FiniteSet& b);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Atom& at(std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool contains(const Atom& a) const { return index_of(a).has_value(); }
  std::optional<std::size_t> index_of(const Atom& a) const;

  bool operator==(const FiniteSet& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const FiniteSet& o) const { return !(*this == o); }
  int cmp(const FiniteSet& o) const;

  json to_json() const;
  std::string str() const { return to_json().dump(); }

 private:
  std::vector<Atom> atoms_;  // sorted, distinct
};

// Total function between finite sets, stored as the image list aligned with
// the domain's atom order. Equality is extensional.
class FiniteFun {
 public:
  FiniteFun() = default;
  FiniteFun(FiniteSet dom, FiniteSet cod, std::vector<Atom> values);

  static FiniteFun identity(const FiniteSet& a);
  static FiniteFun from_fn(const FiniteSet& dom, const FiniteSet& cod,
                           const std::function<Atom(const Atom&)>& f);
  static FiniteFun constant(const FiniteSet& dom, const FiniteSet& cod,
                            const Atom& value);
  // Componentwise product f x g : dom_f x dom_g -> cod_f x cod_g.
  static FiniteFun product(const FiniteFun& f, const FiniteFun& g);

  const FiniteSet& dom() const { return dom_; }
  const FiniteSet& cod() const { return cod_; }
  const Atom& apply(const Atom& a) const;
  Atom operator()(const Atom& a) const { return apply(a); }

  // g.after(f) = g o f
  FiniteFun after(const FiniteFun& f) const;
  bool is_bijective() const;
  std::optional<FiniteFun> inverse() const;

  bool operator==(const FiniteFun& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && values_ == o.values_;
  }
  bool operator!=(const FiniteFun& o) const { return !(*this == o); }
  int cmp(const FiniteFun& o) const;

  json to_json() const;
  std::string str() const { return to_json().dump(); }

 private:
  FiniteSet dom_, cod_;
  std::vector<Atom> values_;
};

// Structural bijections on nested products.
FiniteFun rebracket_fun(const FiniteSet& a, const FiniteSet& b,
                        const FiniteSet& c);            // (AxB)xC -> Ax(BxC)
FiniteFun swap_fun(const FiniteSet& a, const FiniteSet& b);  // AxB -> BxA
FiniteFun lunit_fun(const FiniteSet& unit, const FiniteSet& a);  // IxA -> A
FiniteFun runit_fun(const FiniteSet& a, const FiniteSet& unit);  // AxI -> A

// Enumeration helpers (used by exhaustive checking).
std::int64_t count_functions(const FiniteSet& dom, const FiniteSet& cod);
// The k-th function dom -> cod in lexicographic order, k < |cod|^|dom|.
FiniteFun nth_function(const FiniteSet& dom, const FiniteSet& cod,
                       std::int64_t k);

}  // namespace bicheck

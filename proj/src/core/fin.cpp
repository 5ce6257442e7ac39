#include "bicheck/core/fin.hpp"

#include <algorithm>

#include "bicheck/core/errors.hpp"

namespace bicheck {

FiniteSet::FiniteSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i - 1] == atoms_[i])
      throw InvalidValue("duplicate atom in finite set: " + atoms_[i].str());
  }
}

FiniteSet FiniteSet::range(std::int64_t n) {
  std::vector<Atom> v;
  v.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) v.emplace_back(Atom(i));
  return FiniteSet(std::move(v));
}

FiniteSet FiniteSet::product(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Atom> v;
  v.reserve(a.size() * b.size());
  for (const Atom& x : a.atoms())
    for (const Atom& y : b.atoms()) v.push_back(Atom::pair(x, y));
  return FiniteSet(std::move(v));
}

std::optional<std::size_t> FiniteSet::index_of(const Atom& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it != atoms_.end() && *it == a)
    return static_cast<std::size_t>(it - atoms_.begin());
  return std::nullopt;
}

int FiniteSet::cmp(const FiniteSet& o) const {
  std::size_t n = std::min(size(), o.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = atoms_[i].cmp(o.atoms_[i]);
    if (c != 0) return c;
  }
  return size() < o.size() ? -1 : size() > o.size() ? 1 : 0;
}

json FiniteSet::to_json() const {
  json arr = json::array();
  for (const Atom& a : atoms_) arr.push_back(a.to_json());
  return json{{"atoms", arr}};
}

FiniteFun::FiniteFun(FiniteSet dom, FiniteSet cod, std::vector<Atom> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (values_.size() != dom_.size())
    throw InvalidValue("function graph size mismatch");
  for (const Atom& v : values_) {
    if (!cod_.contains(v))
      throw InvalidValue("function value outside codomain: " + v.str());
  }
}

FiniteFun FiniteFun::identity(const FiniteSet& a) {
  return FiniteFun(a, a, a.atoms());
}

FiniteFun FiniteFun::from_fn(const FiniteSet& dom, const FiniteSet& cod,
                             const std::function<Atom(const Atom&)>& f) {
  std::vector<Atom> v;
  v.reserve(dom.size());
  for (const Atom& a : dom.atoms()) v.push_back(f(a));
  return FiniteFun(dom, cod, std::move(v));
}

FiniteFun FiniteFun::constant(const FiniteSet& dom, const FiniteSet& cod,
                              const Atom& value) {
  return FiniteFun(dom, cod, std::vector<Atom>(dom.size(), value));
}

FiniteFun FiniteFun::product(const FiniteFun& f, const FiniteFun& g) {
  FiniteSet dom = FiniteSet::product(f.dom(), g.dom());
  FiniteSet cod = FiniteSet::product(f.cod(), g.cod());
  return from_fn(dom, cod, [&](const Atom& a) {
    return Atom::pair(f(a.first()), g(a.second()));
  });
}

const Atom& FiniteFun::apply(const Atom& a) const {
  auto i = dom_.index_of(a);
  if (!i) throw InvalidValue("function applied outside domain: " + a.str());
  return values_[*i];
}

FiniteFun FiniteFun::after(const FiniteFun& f) const {
  if (f.cod() != dom_)
    throw BoundaryMismatch("function composition: codomain/domain mismatch");
  std::vector<Atom> v;
  v.reserve(f.values_.size());
  for (const Atom& a : f.values_) v.push_back(apply(a));
  return FiniteFun(f.dom(), cod_, std::move(v));
}

bool FiniteFun::is_bijective() const {
  if (dom_.size() != cod_.size()) return false;
  std::vector<Atom> v = values_;
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return false;
  return true;
}

std::optional<FiniteFun> FiniteFun::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<Atom> v(cod_.size(), Atom());
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    auto j = cod_.index_of(values_[i]);
    v[*j] = dom_.at(i);
  }
  return FiniteFun(cod_, dom_, std::move(v));
}

int FiniteFun::cmp(const FiniteFun& o) const {
  int c = dom_.cmp(o.dom_);
  if (c != 0) return c;
  c = cod_.cmp(o.cod_);
  if (c != 0) return c;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    c = values_[i].cmp(o.values_[i]);
    if (c != 0) return c;
  }
  return 0;
}

json FiniteFun::to_json() const {
  json pairs = json::array();
  for (std::size_t i = 0; i < dom_.size(); ++i)
    pairs.push_back(json::array({dom_.at(i).to_json(), values_[i].to_json()}));
  return json{{"map", pairs}};
}

FiniteFun rebracket_fun(const FiniteSet& a, const FiniteSet& b,
                        const FiniteSet& c) {
  FiniteSet src = FiniteSet::product(FiniteSet::product(a, b), c);
  FiniteSet dst = FiniteSet::product(a, FiniteSet::product(b, c));
  return FiniteFun::from_fn(src, dst, [](const Atom& x) {
    return Atom::pair(x.first().first(),
                      Atom::pair(x.first().second(), x.second()));
  });
}

FiniteFun swap_fun(const FiniteSet& a, const FiniteSet& b) {
  FiniteSet src = FiniteSet::product(a, b);
  FiniteSet dst = FiniteSet::product(b, a);
  return FiniteFun::from_fn(src, dst, [](const Atom& x) {
    return Atom::pair(x.second(), x.first());
  });
}

FiniteFun lunit_fun(const FiniteSet& unit, const FiniteSet& a) {
  FiniteSet src = FiniteSet::product(unit, a);
  return FiniteFun::from_fn(src, a,
                            [](const Atom& x) { return x.second(); });
}

FiniteFun runit_fun(const FiniteSet& a, const FiniteSet& unit) {
  FiniteSet src = FiniteSet::product(a, unit);
  return FiniteFun::from_fn(src, a, [](const Atom& x) { return x.first(); });
}

std::int64_t count_functions(const FiniteSet& dom, const FiniteSet& cod) {
  if (dom.empty()) return 1;
  if (cod.empty()) return 0;
  std::int64_t n = 1;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    n *= static_cast<std::int64_t>(cod.size());
    if (n > (std::int64_t{1} << 40)) return std::int64_t{1} << 40;  // saturate
  }
  return n;
}

FiniteFun nth_function(const FiniteSet& dom, const FiniteSet& cod,
                       std::int64_t k) {
  std::vector<Atom> v;
  v.reserve(dom.size());
  std::int64_t m = static_cast<std::int64_t>(cod.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    v.push_back(cod.at(static_cast<std::size_t>(k % m)));
    k /= m;
  }
  return FiniteFun(dom, cod, std::move(v));
}

}  // namespace bicheck

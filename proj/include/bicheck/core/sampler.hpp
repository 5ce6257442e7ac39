#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "bicheck/core/bicategory.hpp"
#include "bicheck/core/fin.hpp"

namespace bicheck {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n);
  }
  bool coin() { return (eng_() & 1) != 0; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

struct Bounds {
  int max_size = 3;    // object cardinality
  int max_grade = 2;   // grade cardinality (graded instance)
  int max_apex = 3;    // span apex cardinality
  std::int64_t exhaustive_threshold = 10000;

  json to_json() const {
    return json{{"max_size", max_size},
                {"max_grade", max_grade},
                {"max_apex", max_apex},
                {"exhaustive_threshold", exhaustive_threshold}};
  }
};

// Per-instance cell generation. Sampling is driven by an explicit seeded
// generator; enumeration (when offered) is over the canonical universe of
// integer-range objects.
class InstanceSampler {
 public:
  virtual ~InstanceSampler() = default;
  virtual Bicategory::Ptr bicat() const = 0;
  virtual Obj obj(Rng& rng) const = 0;
  virtual std::optional<OneCell> one(Rng& rng, const Obj& a,
                                     const Obj& b) const = 0;
  virtual TwoCell two_from(Rng& rng, const OneCell& f) const = 0;

  virtual std::vector<Obj> universe() const = 0;
  // Enumeration of hom(a, b); nullopt when the instance does not enumerate.
  virtual std::optional<std::vector<OneCell>> all_ones(const Obj& a,
                                                       const Obj& b) const {
    (void)a;
    (void)b;
    return std::nullopt;
  }

  // Composable chain a0 -> a1 -> ... -> ak; entry i is the cell applied
  // i-th. Retries object draws until all homs are inhabited.
  std::vector<OneCell> chain(Rng& rng, int k) const;
  TwoCell two(Rng& rng) const;  // 2-cell out of a random 1-cell
};

std::shared_ptr<const InstanceSampler> span_sampler(Bounds b);
std::shared_ptr<const InstanceSampler> graded_sampler(Bounds b);
std::shared_ptr<const InstanceSampler> state_sampler(const FiniteSet& s,
                                                     Bounds b);
std::shared_ptr<const InstanceSampler> finfun_sampler(Bounds b);
// Pairwise sampler over a product bicategory.
std::shared_ptr<const InstanceSampler> product_sampler(
    std::shared_ptr<const InstanceSampler> l,
    std::shared_ptr<const InstanceSampler> r);

// The exhaustive space of composable k-chains over an instance's canonical
// universe, indexed decodably for deterministic parallel checking.
class ChainSpace {
 public:
  ChainSpace(const InstanceSampler& s, int k);
  bool available() const { return available_; }
  std::int64_t total() const { return total_; }
  std::vector<OneCell> decode(std::int64_t index) const;

 private:
  struct Block {
    std::vector<std::vector<OneCell>> homs;
    std::int64_t count;
  };
  std::vector<Block> blocks_;
  std::vector<std::int64_t> prefix_;
  std::int64_t total_ = 0;
  bool available_ = false;
};

}  // namespace bicheck

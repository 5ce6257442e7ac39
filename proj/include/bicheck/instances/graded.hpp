#pragma once

#include "bicheck/core/bicategory.hpp"
#include "bicheck/core/fin.hpp"

namespace bicheck {

// Kleisli bicategory for the monad graded by finite sets with cartesian
// product, T_e(A) = A x e. A 1-cell A ~> B is a grade e and a total map
// A -> B x e; 2-cells are re-gradings.
struct GradedData {
  FiniteSet grade;
  FiniteFun map;  // src -> dst x grade
  bool operator==(const GradedData& o) const {
    return grade == o.grade && map == o.map;
  }
  json to_json() const {
    return json{{"grade", grade.to_json()}, {"map", map.to_json()}};
  }
};

struct RegradeData {
  FiniteFun regrade;  // grade -> grade'
  bool operator==(const RegradeData& o) const { return regrade == o.regrade; }
  json to_json() const { return regrade.to_json(); }
};

Obj graded_obj(const FiniteSet& a);
// The unit grade (a fixed singleton).
const FiniteSet& unit_grade();
OneCell mk_graded(const FiniteSet& src, const FiniteSet& dst, GradedData d);
// Re-grading 2-cell; validates (dst x regrade) o map = map' unless raw.
TwoCell mk_regrade(const OneCell& src, const OneCell& dst, FiniteFun regrade,
                   bool raw = false);
const GradedData& graded_of(const OneCell& f);
const FiniteFun& regrade_of(const TwoCell& a);

// eta o f : the cell with unit grade determined by a plain function.
OneCell graded_pure_cell(const FiniteFun& f);

class GradedBicat final : public Bicategory {
 public:
  std::string name() const override { return "copara"; }
  OneCell id1(const Obj& a) const override;
  OneCell compose1(const OneCell& g, const OneCell& f) const override;
  TwoCell id2(const OneCell& f) const override;
  TwoCell vcomp(const TwoCell& b, const TwoCell& a) const override;
  TwoCell whisker_l(const OneCell& h, const TwoCell& a) const override;
  TwoCell whisker_r(const TwoCell& a, const OneCell& f) const override;
  TwoCell associator(const OneCell& h, const OneCell& g,
                     const OneCell& f) const override;
  TwoCell lunitor(const OneCell& f) const override;
  TwoCell runitor(const OneCell& f) const override;
  std::optional<TwoCell> invert(const TwoCell& a) const override;
  std::optional<std::string> validate2(const TwoCell& a) const override;
};

Bicategory::Ptr graded_bicat();

}  // namespace bicheck

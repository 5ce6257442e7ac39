#pragma once

#include "bicheck/core/bicategory.hpp"

namespace bicheck {

// Product of two bicategories; cells are pairs of component cells.
class ProductBicat final : public Bicategory {
 public:
  ProductBicat(Bicategory::Ptr l, Bicategory::Ptr r)
      : l_(std::move(l)), r_(std::move(r)) {}
  std::string name() const override {
    return l_->name() + "*" + r_->name();
  }

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

  const Bicategory::Ptr& left() const { return l_; }
  const Bicategory::Ptr& right() const { return r_; }

 private:
  Bicategory::Ptr l_, r_;
};

Bicategory::Ptr product_bicat(Bicategory::Ptr l, Bicategory::Ptr r);

Obj pair_obj(const Obj& a, const Obj& b);
OneCell pair_cell(const OneCell& f, const OneCell& g);
TwoCell pair_cell2(const TwoCell& a, const TwoCell& b);
Obj obj_fst(const Obj& p);
Obj obj_snd(const Obj& p);
OneCell cell_fst(const OneCell& p);
OneCell cell_snd(const OneCell& p);
TwoCell cell2_fst(const TwoCell& p);
TwoCell cell2_snd(const TwoCell& p);

}  // namespace bicheck

#include "bicheck/instances/product.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

Obj pair_obj(const Obj& a, const Obj& b) {
  return Obj{Value::of(PairV{a.v, b.v})};
}
OneCell pair_cell(const OneCell& f, const OneCell& g) {
  return OneCell{pair_obj(f.src, g.src), pair_obj(f.dst, g.dst),
                 Value::of(PairV{f.v, g.v})};
}
TwoCell pair_cell2(const TwoCell& a, const TwoCell& b) {
  return TwoCell{pair_cell(a.src, b.src), pair_cell(a.dst, b.dst),
                 Value::of(PairV{a.v, b.v})};
}
Obj obj_fst(const Obj& p) { return Obj{p.v.as<PairV>().first}; }
Obj obj_snd(const Obj& p) { return Obj{p.v.as<PairV>().second}; }
OneCell cell_fst(const OneCell& p) {
  return OneCell{obj_fst(p.src), obj_fst(p.dst), p.v.as<PairV>().first};
}
OneCell cell_snd(const OneCell& p) {
  return OneCell{obj_snd(p.src), obj_snd(p.dst), p.v.as<PairV>().second};
}
TwoCell cell2_fst(const TwoCell& p) {
  return TwoCell{cell_fst(p.src), cell_fst(p.dst), p.v.as<PairV>().first};
}
TwoCell cell2_snd(const TwoCell& p) {
  return TwoCell{cell_snd(p.src), cell_snd(p.dst), p.v.as<PairV>().second};
}

OneCell ProductBicat::id1(const Obj& a) const {
  return pair_cell(l_->id1(obj_fst(a)), r_->id1(obj_snd(a)));
}
OneCell ProductBicat::compose1(const OneCell& g, const OneCell& f) const {
  return pair_cell(l_->compose1(cell_fst(g), cell_fst(f)),
                   r_->compose1(cell_snd(g), cell_snd(f)));
}
TwoCell ProductBicat::id2(const OneCell& f) const {
  return pair_cell2(l_->id2(cell_fst(f)), r_->id2(cell_snd(f)));
}
TwoCell ProductBicat::vcomp(const TwoCell& b, const TwoCell& a) const {
  return pair_cell2(l_->vcomp(cell2_fst(b), cell2_fst(a)),
                    r_->vcomp(cell2_snd(b), cell2_snd(a)));
}
TwoCell ProductBicat::whisker_l(const OneCell& h, const TwoCell& a) const {
  return pair_cell2(l_->whisker_l(cell_fst(h), cell2_fst(a)),
                    r_->whisker_l(cell_snd(h), cell2_snd(a)));
}
TwoCell ProductBicat::whisker_r(const TwoCell& a, const OneCell& f) const {
  return pair_cell2(l_->whisker_r(cell2_fst(a), cell_fst(f)),
                    r_->whisker_r(cell2_snd(a), cell_snd(f)));
}
TwoCell ProductBicat::associator(const OneCell& h, const OneCell& g,
                                 const OneCell& f) const {
  return pair_cell2(
      l_->associator(cell_fst(h), cell_fst(g), cell_fst(f)),
      r_->associator(cell_snd(h), cell_snd(g), cell_snd(f)));
}
TwoCell ProductBicat::lunitor(const OneCell& f) const {
  return pair_cell2(l_->lunitor(cell_fst(f)), r_->lunitor(cell_snd(f)));
}
TwoCell ProductBicat::runitor(const OneCell& f) const {
  return pair_cell2(l_->runitor(cell_fst(f)), r_->runitor(cell_snd(f)));
}
std::optional<TwoCell> ProductBicat::invert(const TwoCell& a) const {
  auto il = l_->invert(cell2_fst(a));
  auto ir = r_->invert(cell2_snd(a));
  if (!il || !ir) return std::nullopt;
  return pair_cell2(*il, *ir);
}
std::optional<std::string> ProductBicat::validate2(const TwoCell& a) const {
  if (auto e = l_->validate2(cell2_fst(a))) return "left: " + *e;
  if (auto e = r_->validate2(cell2_snd(a))) return "right: " + *e;
  return std::nullopt;
}

Bicategory::Ptr product_bicat(Bicategory::Ptr l, Bicategory::Ptr r) {
  return std::make_shared<ProductBicat>(std::move(l), std::move(r));
}

}  // namespace bicheck

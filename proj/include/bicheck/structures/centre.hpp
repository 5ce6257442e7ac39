#pragma once

#include "bicheck/structures/premonoidal.hpp"

namespace bicheck {

enum class Side { Left, Right };  // Left: X |> f, Right: f <| X

// Centre 1-cell payload; equality compares the underlying cell (witness
// families are function-valued and determined by construction).
struct CentralPayload {
  std::shared_ptr<const CentralOneCell> c;
  bool operator==(const CentralPayload& o) const {
    return c->cell == o.c->cell;
  }
  json to_json() const { return c->cell.to_json(); }
};

OneCell centre_cell(const CentralOneCell& c);
const CentralOneCell& central_of(const OneCell& f);

// The bicategory of central 1-cells and central 2-cells. 2-cells carry the
// underlying payloads; composition composes witness families through the
// hom-bicategory.
class CentreBicat final : public Bicategory {
 public:
  explicit CentreBicat(PremonoidalStructure p)
      : p_(std::move(p)), base_(p_.bin.B) {}
  std::string name() const override { return base_->name() + ".centre"; }
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

 private:
  PremonoidalStructure p_;
  Bicategory::Ptr base_;
};

Bicategory::Ptr centre_bicat(const PremonoidalStructure& p);

// Solves z = e.fwd . x for x : u => v, using the adjoint data of e.
TwoCell unwhisker_l(const Bicategory& B, const AdjointEquivalence& e,
                    const OneCell& u, const OneCell& v, const TwoCell& z);
// Solves z = x . e.fwd for x : u => v.
TwoCell unwhisker_r(const Bicategory& B, const AdjointEquivalence& e,
                    const OneCell& u, const OneCell& v, const TwoCell& z);

// Whiskering a central cell by an object: the witness families of X |> f
// (resp. f <| X) are the unique 2-cells making the transport pastings along
// the associator commute; they are solved by isolating the unknown with the
// adjoint-equivalence data.
CentralOneCell centre_whisker(const PremonoidalStructure& p, const Obj& x,
                              const CentralOneCell& c, Side side);

// The two sides of the defining pasting for the lc family of the whiskered
// cell at g, with the solved witness substituted into the left-hand side.
std::pair<TwoCell, TwoCell> whisker_eq_sides(const PremonoidalStructure& p,
                                             const Obj& x,
                                             const CentralOneCell& c,
                                             const CentralOneCell& out,
                                             Side side, const OneCell& g);

// Law set: the defining equation holds exactly on whiskered cells, the
// outputs carry valid pseudonatural witness families, and composites and
// identities of central cells stay central.
std::vector<LawRun> centre_laws(const CheckCtx& ctx,
                                const PremonoidalStructure& p,
                                const CentralGen& gen);

}  // namespace bicheck

#pragma once

#include "bicheck/core/report.hpp"
#include "bicheck/core/sampler.hpp"
#include "bicheck/core/transforms.hpp"

namespace bicheck {

// Shared configuration for the generic law checkers. `sampler` must sample
// the bicategory the checked laws quantify over.
struct CheckCtx {
  std::shared_ptr<const InstanceSampler> sampler;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  std::int64_t threshold = 10000;
  std::string id_prefix;  // prepended to law ids, e.g. "span."
};

// Law over composable k-chains of 1-cells (entry 0 applied first).
// Exhaustive when the instance enumerates and the space fits the threshold.
LawRun law_over_chains(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k,
    std::function<std::optional<json>(const std::vector<OneCell>&)> body);

// Law over a composable k-chain plus sampled 2-cells out of each chain cell
// (always sample-based; the generator is handed to the body for extra draws).
LawRun law_over_cells(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k,
    std::function<std::optional<json>(const std::vector<OneCell>&,
                                      const std::vector<TwoCell>&, Rng&)>
        body);

// Law over k-tuples of objects.
LawRun law_over_objs(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k, std::function<std::optional<json>(const std::vector<Obj>&)> body);

json law_failure(std::initializer_list<std::pair<std::string, json>> fields);
json cells_json(const std::vector<OneCell>& cells);

// Pass/fail comparison helper: nullopt when equal, serialized payload when
// different or invalid.
std::optional<json> expect_equal(const Bicategory& B, const TwoCell& lhs,
                                 const TwoCell& rhs);
// Validates a 2-cell's structural well-formedness before use in a law.
std::optional<json> expect_valid(const Bicategory& B, const TwoCell& a);

// Single-sample law bodies, shared between the packaged law sets below and
// the structure suites (which instantiate functors per sampled object).
std::optional<json> psf_respects_vcomp_at(const Pseudofunctor& F,
                                          const TwoCell& b, const TwoCell& a);
std::optional<json> psf_compositor_natural_at(const Pseudofunctor& F,
                                              const TwoCell& b,
                                              const TwoCell& a);
std::optional<json> psf_hexagon_at(const Pseudofunctor& F, const OneCell& h,
                                   const OneCell& g, const OneCell& f);
std::optional<json> psf_unit_laws_at(const Pseudofunctor& Fstruct,
                                     const OneCell& f);
std::optional<json> psnat_natural2_at(const PseudonatTrans& s,
                                      const TwoCell& tau);
std::optional<json> psnat_unit_at(const PseudonatTrans& s, const Obj& a);
std::optional<json> psnat_composition_at(const PseudonatTrans& s,
                                         const OneCell& g, const OneCell& f);
std::optional<json> modification_square_at(const Modification& m,
                                           const OneCell& f);
std::optional<json> icon_natural_at(const Icon& icon, const TwoCell& tau);
std::optional<json> icon_identity_at(const Icon& icon, const Obj& a);
std::optional<json> icon_composition_at(const Icon& icon, const OneCell& g,
                                        const OneCell& f);

// The bicategory axioms: pentagon, triangle, naturality of the structural
// cells, interchange, invertibility.
std::vector<LawRun> bicategory_laws(const CheckCtx& ctx);

// Defining laws of a pseudofunctor; ctx samples the source bicategory.
std::vector<LawRun> pseudofunctor_laws(const CheckCtx& ctx,
                                       const Pseudofunctor& F,
                                       const std::string& name,
                                       const std::string& anchor);

// Defining laws of a pseudonatural transformation (naturality in 2-cells,
// unit and composition laws, invertibility of the witnesses).
std::vector<LawRun> pseudonat_laws(const CheckCtx& ctx,
                                   const PseudonatTrans& s,
                                   const std::string& name,
                                   const std::string& anchor);

// Modification square at sampled 1-cells.
std::vector<LawRun> modification_laws(const CheckCtx& ctx,
                                      const Modification& m,
                                      const std::string& name,
                                      const std::string& anchor);

// Icon laws: objects agree, naturality, identity and composition laws.
std::vector<LawRun> icon_laws(const CheckCtx& ctx, const Icon& icon,
                              const std::string& name,
                              const std::string& anchor,
                              bool require_invertible = true);

// Both triangle identities, evaluated exactly.
std::optional<json> adjoint_equivalence_failure(const AdjointEquivalence& e);
std::vector<LawRun> adjoint_equivalence_laws(const std::string& id,
                                             const std::string& anchor,
                                             const AdjointEquivalence& e);

}  // namespace bicheck

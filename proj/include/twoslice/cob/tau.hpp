#pragma once

#include <deque>
#include <memory>

#include "twoslice/cob/opfib.hpp"
#include "twoslice/two/model.hpp"

namespace twoslice::cob {

using core::NatTransf;
using two::CatModel;
using two::SliceModel;
using SliceCat = SliceModel<CatModel>;

// Change of base along a split opfibration: pulling back extends to a
// 2-functor between lax slices, computed on chosen (pair-construction)
// pullbacks. All equalities downstream are literal on the chosen data.
class ChangeOfBase {
 public:
  ChangeOfBase(SplitOpfibration t, const CatModel* base_b, const CatModel* base_e)
      : tau_(std::move(t)), mb_(base_b), me_(base_e) {}

  const SplitOpfibration& tau() const { return tau_; }
  const CatModel& model_b() const { return *mb_; }
  const CatModel& model_e() const { return *me_; }

  const core::PullbackResult& pullback_of(const core::FinFunctor& f) const;

  SliceCat::Obj star_obj(const core::FinFunctor& f) const { return {pullback_of(f).pr2}; }
  SliceCat::One star_one(const SliceCat::One& u) const;
  SliceCat::Two star_two(const SliceCat::Two& x) const;
  two::TwoFunctorMap<SliceCat, SliceCat> star_map() const;

  // Cocartesian lifting of mu : tau ∘ g => k at g, in the hom-level split
  // opfibration (tau ∘ -): the lifted transformation and its target.
  std::pair<core::FinFunctor, NatTransf> hom_lift(const core::FinFunctor& g,
                                                  const NatTransf& mu) const;

 private:
  SplitOpfibration tau_;
  const CatModel* mb_;
  const CatModel* me_;
  // deque keeps references stable while the cache grows
  mutable std::deque<std::pair<core::FinFunctor, core::PullbackResult>> pb_cache_;
};

// The right adjoint value tau_* H: the category of pairs (X, (alpha_hat,
// alpha)) with projection to the base, composition by Conduché factorization.
struct HCategoryResult {
  core::CatPtr total;
  core::FinFunctor pr1;  // to B
  struct HObj {
    int x;                       // object of B
    core::FinFunctor alpha_hat;  // fibre(x) -> D
    NatTransf alpha;             // incl => H ∘ alpha_hat
  };
  struct HMor {
    int f;                     // morphism of B
    core::FinFunctor phi_hat;  // fibre(f) -> D
    NatTransf phi;             // incl => H ∘ phi_hat
  };
  std::vector<HObj> objs;
  std::vector<HMor> mors;  // aligned with total->morphisms
  // fibre data per object / morphism of B, shared by the constructions
  std::vector<std::pair<core::CatPtr, core::FinFunctor>> fibre;  // per B object
  std::vector<FibreData> fibre_mor;                              // per B morphism

  int obj_index(int x, const core::FinFunctor& ah, const NatTransf& a) const;
  int mor_index(int f, const core::FinFunctor& ph) const;
};

// Builds tau_* H by exhaustive enumeration of fibre functors and fillers;
// verifies that composition is independent of the chosen factorization.
HCategoryResult tau_lower_star(const SplitOpfibration& t, const core::FinFunctor& h,
                               std::size_t limit = two::kDefaultSizeLimit);

struct CobUnitCounit {
  std::shared_ptr<HCategoryResult> hcat;  // tau_* H
  SliceCat::One eps;                      // tau* (tau_* H) -> H, the evaluation
  std::shared_ptr<HCategoryResult> hcat_unit;  // tau_* (tau* F)
  SliceCat::One eta;                      // F -> tau_* (tau* F), tight
};

CobUnitCounit cob_unit_counit(const ChangeOfBase& cob, const core::FinFunctor& h,
                              const core::FinFunctor& f);

// The evaluation counit for a given tau_* H.
SliceCat::One cob_counit(const ChangeOfBase& cob, const core::FinFunctor& h,
                         const std::shared_ptr<HCategoryResult>& hcat);

// The unique tight mediator F -> tau_* H through the evaluation: satisfies
// eps ∘ tau*(mediator) = (gamma_hat, gamma) exactly.
SliceCat::One cob_mediator(const ChangeOfBase& cob, const core::FinFunctor& h,
                           const std::shared_ptr<HCategoryResult>& hcat,
                           const core::FinFunctor& f, const SliceCat::One& gamma);

// The mediating 2-cell induced by a 2-cell into the evaluation; satisfies the
// whiskering equation exactly and is unique by exhaustive scan.
SliceCat::Two cob_mediator_2cell(const ChangeOfBase& cob, const core::FinFunctor& h,
                                 const std::shared_ptr<HCategoryResult>& hcat,
                                 const core::FinFunctor& f, const SliceCat::One& gamma,
                                 const SliceCat::One& xi, const SliceCat::Two& bigxi);

}  // namespace twoslice::cob

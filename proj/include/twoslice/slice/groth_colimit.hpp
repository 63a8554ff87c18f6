#pragma once

#include "twoslice/fixtures.hpp"
#include "twoslice/slice/oracle.hpp"

namespace twoslice::slice {

using core::CatPtr;
using core::FinFunctor;
using core::NatTransf;
using two::CatModel;

// A 1-category as a cocone shape with only identities tight: the Grothendieck
// construction of the marking on the terminal base valued at J.
inline groth::GrothResult oplax_shape(const CatPtr& j) {
  auto base = fixtures::one2();
  std::vector<CatPtr> at = {j};
  std::vector<std::vector<FinFunctor>> on1(1);
  on1[0] = {core::identity_functor(j)};
  return groth::groth_construct(groth::make_marking_on_promoted(base, at, on1));
}

// A covariant CAT-valued diagram on a finite 1-category, fully tabulated.
struct CatDiagram {
  CatPtr shape;                // J
  std::vector<CatPtr> at;      // G(j)
  std::vector<FinFunctor> on;  // G(u), per morphism of J (identities included)
};

struct GrothColimit {
  std::shared_ptr<groth::GrothResult> shape;  // oplax shape of J, kept alive
  CatPtr total;                               // covariant ∫G
  UniversalCocone<CatModel> cocone;
  std::vector<std::pair<int, int>> obj_decode;       // total object -> (j, x)
  std::vector<std::pair<int, int>> mor_decode;       // total morphism -> (u, m)
  int total_obj(int j, int x) const;
};

// The covariant Grothendieck construction of G as the oplax conical colimit in
// desk-scale CAT: canonical insertions with cocartesian structure cells, and
// mediator procedures given by the explicit pairing formulas, asserted exact.
GrothColimit oplax_colimit_groth(const CatModel& m, const CatDiagram& g);

// The binary coproduct cocone in CAT over the discrete two-object shape, with
// copairing mediators.
struct CoproductColimit {
  std::shared_ptr<groth::GrothResult> shape;
  core::CoproductResult coproduct;
  UniversalCocone<CatModel> cocone;
};

CoproductColimit coproduct_colimit(const CatModel& m, const CatPtr& c, const CatPtr& d);

}  // namespace twoslice::slice

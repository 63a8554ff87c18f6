#pragma once

#include <vector>

#include "twoslice/two/fin2cat.hpp"

namespace twoslice::groth {

using core::CatPtr;
using core::FinFunctor;
using core::NatTransf;
using two::Cat2Ptr;
using two::OneCell;
using two::TwoCell;

// A CAT-valued 2-presheaf on a finite base: contravariant on 1-cells,
// covariant on 2-cells. Strict 2-functoriality is validated exhaustively.
struct Marking {
  Cat2Ptr base;
  std::vector<CatPtr> at;                    // W(A), per base object
  std::vector<std::vector<FinFunctor>> on1;  // per pair (a,b): W(f) : W(b) -> W(a)
  std::vector<std::vector<NatTransf>> on2;   // per pair (a,b): W(delta) : W(f) => W(g)

  const FinFunctor& on_one(OneCell f) const {
    return on1[f.a * base->num_objects() + f.b][f.idx];
  }
  const NatTransf& on_two(TwoCell x) const {
    return on2[x.a * base->num_objects() + x.b][x.idx];
  }
};

// Throws ValidationError naming the violated law and the witness cells.
void validate_marking(const Marking& w);

// Convenience builder for base a promoted 1-category: only object and 1-cell
// data are supplied; 2-cell actions are forced (identities).
Marking make_marking_on_promoted(const Cat2Ptr& base, std::vector<CatPtr> at,
                                 std::vector<std::vector<FinFunctor>> on1);

// The representable y_M = Hom(-, M) of a finite 2-category as a marking.
Marking representable_marking(const Cat2Ptr& e, int m);

}  // namespace twoslice::groth

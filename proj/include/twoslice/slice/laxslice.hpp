#pragma once

#include "twoslice/slice/bijection.hpp"

namespace twoslice::slice {

using two::Cat2Ptr;
using two::SliceModel;

// The realized lax slice of a finite 2-category over an object: an F-category
// (tight part the strict slice) together with its domain 2-functor.
struct LaxSliceResult {
  Cat2Ptr ambient;
  int m = -1;
  two::Materialized<SliceModel<Fin2Model>> mat;
  two::TwoFunctor dom;  // mat.cat -> ambient

  Fin2Model ambient_model() const { return {ambient.get(), nullptr}; }
};

LaxSliceResult lax_slice(const Cat2Ptr& ambient, int m);

// A triangle is cartesian for dom exactly when its filling is invertible.
bool is_cartesian_morphism(const LaxSliceResult& ls, two::OneCell slice_cell);

struct RepresentableIsoReport {
  bool ok = false;
  std::string detail;
};

// The Grothendieck construction of the representable Hom(-, M) is isomorphic
// to the lax slice as an F-category, with the projection matching dom.
RepresentableIsoReport check_representable_iso(const Cat2Ptr& ambient, int m);

}  // namespace twoslice::slice

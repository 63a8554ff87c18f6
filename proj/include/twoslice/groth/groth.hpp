#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twoslice/groth/marking.hpp"
#include "twoslice/two/model.hpp"

namespace twoslice::groth {

using two::Fin2Model;
using two::FMarking;
using two::TwoFunctor;

// The Grothendieck construction of a marking: a finite 2-category of pairs,
// with projection, split cleavage, and the cleavage cells marked tight.
struct GrothResult {
  Marking w;
  Cat2Ptr total;
  FMarking marking;  // tight = morphisms of the cleavage (alpha = id)
  TwoFunctor proj;   // total -> base

  // decode tables
  std::vector<std::pair<int, int>> obj_decode;  // total object -> (A, X in W(A))
  std::vector<std::vector<std::pair<int, int>>> one_decode;  // (base 1-cell idx, alpha idx)
  std::vector<std::vector<std::pair<int, int>>> two_decode;  // (base 2-cell idx, source alpha idx)

  int total_obj(int base_obj, int fibre_obj) const;
  // the chosen cartesian lift (f, id) of a base 1-cell into an object over its
  // codomain
  OneCell cleavage(OneCell base_f, int obj_over_cod) const;

  Fin2Model shape_model() const { return {total.get(), &marking}; }
};

GrothResult groth_construct(const Marking& w);
GrothResult groth_of_representable(const Cat2Ptr& e, int m);

// A 2-functor together with a chosen cleavage, the operational interface of a
// cloven fibration on tabulated data.
struct ClovenPair {
  Cat2Ptr total_cat;
  Cat2Ptr base_cat;
  TwoFunctor p;
  std::function<OneCell(OneCell, int)> lift;  // (base 1-cell e, object over cod e)
};

ClovenPair cloven_of_groth(const GrothResult& g);
ClovenPair cloven_identity(const Cat2Ptr& c);
ClovenPair cloven_of_functor(const TwoFunctor& p, std::function<OneCell(OneCell, int)> lift);

// Returns the chosen lift after verifying it projects correctly and satisfies
// the cartesian factorization property by enumeration.
OneCell cartesian_lift(const ClovenPair& fib, OneCell e, int s);

// The unique 2-cell over phi with the given domain 1-cell; throws NoLift /
// NonUniqueLift with witnesses.
TwoCell lift_2cell_fixed_domain(const ClovenPair& fib, TwoCell phi, OneCell u);

struct FibCheckItem {
  std::string check;
  bool pass;
  std::string witness;
};

struct TwoSetFibrationReport {
  bool ok = true;
  bool split = true;
  std::vector<FibCheckItem> items;
  void add(const std::string& c, bool p, const std::string& w = "") {
    items.push_back({c, p, w});
    if (!p) ok = false;
  }
};

// Verifies cleavage cartesianness, splitness, and unique lifting of 2-cells to
// a fixed domain 1-cell, all by enumeration.
TwoSetFibrationReport check_two_set_fibration(const ClovenPair& fib);

}  // namespace twoslice::groth

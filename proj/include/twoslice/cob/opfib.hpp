#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twoslice/core/constructions.hpp"

namespace twoslice::cob {

using core::CatPtr;
using core::FinFunctor;

// A functor with a chosen cocartesian cleavage that strictly respects
// identities and composition. (Cleavage morphisms are often called cartesian
// for opfibrations elsewhere; this artifact says cocartesian throughout to
// keep them separate from the iso-filled cartesian triangles of lax slices.)
struct SplitOpfibration {
  FinFunctor tau;  // E -> B
  std::vector<std::vector<int>> kappa;  // kappa[e][f] = cleavage morphism, -1 if untyped

  int lift(int e, int f) const { return kappa[e][f]; }
  int act(int f, int e) const { return tau.dom()->tgt(kappa[e][f]); }  // f · e
};

struct OpfibCheckItem {
  std::string check;
  bool pass;
  std::string witness;
};

struct OpfibReport {
  bool ok = true;
  std::vector<OpfibCheckItem> items;
  void add(const std::string& c, bool p, const std::string& w = "") {
    items.push_back({c, p, w});
    if (!p) ok = false;
  }
};

// Verifies typing, cocartesianness (unique factorization, by enumeration) and
// the splitness equations.
OpfibReport validate_split_opfibration(const SplitOpfibration& t);

// Builds the cleavage table from entries (object name, base morphism name,
// cleavage morphism name); identity lifts are filled automatically.
SplitOpfibration make_split_opfibration(
    const FinFunctor& tau,
    const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& entries);

// Factors g with tau(g) = f' ∘ f as g2 ∘ g1 with g1 the cleavage lift of f at
// src g and tau(g2) = f'. The validated cleavage guarantees existence and
// uniqueness of g2.
std::pair<int, int> conduche_factor(const SplitOpfibration& t, int g, int f, int fp);

// All factorizations of g over (f, f'), for the independence checks.
std::vector<std::pair<int, int>> all_factorizations(const SplitOpfibration& t, int g, int f, int fp);

// The fibre of tau over an object X, and over a morphism f, with inclusions
// and the two endpoint embeddings. Computed as pullbacks.
struct FibreData {
  CatPtr fibre;             // tau^{-1}(X)
  FinFunctor incl;          // into E
  CatPtr fibre_cod;         // tau^{-1}(X')
  FinFunctor incl_cod;
  CatPtr fibre_mor;         // tau^{-1}(f)
  FinFunctor incl_mor;      // into E
  FinFunctor proj_arrow;    // to the walking arrow; separates the three layers
  FinFunctor end0, end1;    // fibre -> fibre_mor, fibre_cod -> fibre_mor
};

FibreData fibre_data(const SplitOpfibration& t, int f);
// Just the fibre over an object.
std::pair<CatPtr, FinFunctor> fibre_over(const FinFunctor& tau, int x);

// The free split opfibration on rho : J -> B, i.e. the codomain projection of
// comma(rho, id_B) with the postcomposition cleavage.
struct FreeOpfibration {
  FinFunctor rho;
  core::CommaResult comma;
  SplitOpfibration opfib;
};

FreeOpfibration free_opfibration(const FinFunctor& rho);

// comma(rho, F) is isomorphic to the pullback of the free opfibration along F,
// compatibly with projections and the canonical 2-cell; exhibits the iso.
struct ReplacementCheck {
  bool ok = false;
  std::string detail;
};

ReplacementCheck check_replacement(const FreeOpfibration& fo, const FinFunctor& probe);

}  // namespace twoslice::cob

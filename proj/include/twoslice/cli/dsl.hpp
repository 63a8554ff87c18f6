#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoslice/cob/opfib.hpp"
#include "twoslice/groth/marking.hpp"

namespace twoslice::cli {

using core::CatPtr;
using core::FinFunctor;
using core::NatTransf;
using two::Cat2Ptr;

struct ParseError : core::ValidationError {
  int line;
  int col;
  ParseError(std::string w, int l, int c)
      : core::ValidationError("ParseError", w + " at " + std::to_string(l) + ":" +
                                                std::to_string(c)),
        line(l), col(c) {}
};

// A reference to a 1-cell or 2-cell of a finite 2-category: source object,
// target object, cell name inside the hom category.
struct CellRef {
  std::string a, b, name;
};

struct CoconeDef {
  std::string shape;    // marking name
  std::string ambient;  // 2-category name
  std::string apex;     // object of the ambient
  // shape cells are referenced by (source object, target object, cell name)
  std::vector<std::pair<std::string, std::string>> dobj;  // shape object -> ambient object
  std::vector<std::pair<CellRef, CellRef>> done;          // shape 1-cell -> ambient 1-cell
  std::vector<std::pair<CellRef, CellRef>> dtwo;          // shape 2-cell -> ambient 2-cell
  std::vector<std::pair<std::string, CellRef>> leg;       // shape object -> 1-cell into apex
  std::vector<std::pair<CellRef, CellRef>> str;           // shape 1-cell -> structure 2-cell
};

struct TwoFunctorDef {
  std::string dom, cod;
  std::vector<std::pair<std::string, std::string>> obj;
  std::vector<std::pair<CellRef, CellRef>> one;
  std::vector<std::pair<CellRef, CellRef>> two;
};

struct AdjunctionDef {
  TwoFunctorDef left, right;
  std::vector<std::pair<std::string, CellRef>> unit_at;     // object of S -> 1-cell of S
  std::vector<std::pair<CellRef, CellRef>> unit_str;        // 1-cell of S -> 2-cell of S
  std::vector<std::pair<std::string, CellRef>> counit_at;   // object of E -> 1-cell of E
  std::vector<std::pair<CellRef, CellRef>> counit_str;      // 1-cell of E -> 2-cell of E
  std::vector<std::pair<std::string, CellRef>> s_at;        // object of S -> 2-cell of E
  std::vector<std::pair<std::string, CellRef>> t_at;        // object of E -> 2-cell of S
};

struct MarkingDef {
  std::string base;  // 2-category name
  std::vector<std::pair<std::string, std::string>> at;      // base object -> category
  std::vector<std::pair<CellRef, std::string>> on1;         // base 1-cell -> functor
  std::vector<std::pair<CellRef, std::string>> on2;         // base 2-cell -> nat
};

struct OpfibDef {
  std::string functor;
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> lifts;
};

struct TwoCatDef {
  std::vector<std::string> objects;
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> homs;
  std::vector<std::pair<std::string, std::string>> units;
  struct Comp {
    std::string c, b, a, g, f, result;
  };
  std::vector<Comp> comp1, comp2;
};

// Parsed and name-resolved specification: raw blocks for printing plus the
// validated values. Every block passes its module validator at parse time.
struct SpecFile {
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in declaration order

  std::map<std::string, core::RawCategory> raw_categories;
  std::map<std::string, core::RawFunctor> raw_functors;
  struct RawNat {
    std::string dom, cod;
    std::vector<std::pair<std::string, std::string>> at;
  };
  std::map<std::string, RawNat> raw_nats;
  std::map<std::string, TwoCatDef> raw_twocats;
  std::map<std::string, MarkingDef> raw_markings;
  std::map<std::string, OpfibDef> raw_opfibs;
  std::map<std::string, CoconeDef> raw_cocones;
  std::map<std::string, CoconeDef> raw_diagrams;
  std::map<std::string, AdjunctionDef> raw_adjunctions;

  std::map<std::string, CatPtr> categories;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, NatTransf> nats;
  std::map<std::string, Cat2Ptr> twocats;
  std::map<std::string, groth::Marking> markings;
  std::map<std::string, cob::SplitOpfibration> opfibrations;

  CatPtr category(const std::string& name) const;   // falls back to the catalog
  Cat2Ptr twocat(const std::string& name) const;    // falls back to the catalog
};

SpecFile parse_spec(const std::string& text);
std::string print_spec(const SpecFile& spec);

}  // namespace twoslice::cli

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "twoslice/core/fincat.hpp"

namespace twoslice::two {

using core::CatPtr;
using core::FinCategory;
using core::FinFunctor;
using core::NatTransf;
using core::ValidationError;

// 1-cells are objects of a hom category, 2-cells its morphisms.
struct OneCell {
  int a = -1, b = -1, idx = -1;
  auto operator<=>(const OneCell&) const = default;
};

struct TwoCell {
  int a = -1, b = -1, idx = -1;
  auto operator<=>(const TwoCell&) const = default;
};

class Fin2Category;
using Cat2Ptr = std::shared_ptr<const Fin2Category>;

struct Raw2Category {
  std::string name;
  std::vector<std::string> objects;
  std::vector<CatPtr> homs;        // row-major (a,b)
  std::vector<std::string> units;  // object name in hom(a,a), per object
  struct Comp1 {
    int a, b, c;
    std::string g, f, result;
  };
  struct Comp2 {
    int a, b, c;
    std::string y, x, result;
  };
  std::vector<Comp1> comp1;
  std::vector<Comp2> comp2;
};

// A finite strict 2-category by full tabulation: hom categories plus total
// horizontal-composition tables on 1-cells and 2-cells. Functoriality of the
// 2-cell table is exactly the interchange law and is checked on all pairs.
class Fin2Category {
 public:
  const std::string& name() const { return name_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  int object_index(const std::string& n) const;

  const FinCategory& hom(int a, int b) const { return *homs_[a * num_objects() + b]; }
  const CatPtr& hom_ptr(int a, int b) const { return homs_[a * num_objects() + b]; }

  OneCell unit1(int a) const { return {a, a, unit_[a]}; }
  TwoCell id2(OneCell f) const { return {f.a, f.b, hom(f.a, f.b).identity(f.idx)}; }
  OneCell two_src(TwoCell x) const { return {x.a, x.b, hom(x.a, x.b).src(x.idx)}; }
  OneCell two_tgt(TwoCell x) const { return {x.a, x.b, hom(x.a, x.b).tgt(x.idx)}; }

  OneCell comp1(OneCell g, OneCell f) const;
  TwoCell vcomp(TwoCell y, TwoCell x) const;
  TwoCell hcomp(TwoCell y, TwoCell x) const;
  TwoCell lwhisk(OneCell g, TwoCell x) const { return hcomp(id2(g), x); }
  TwoCell rwhisk(TwoCell y, OneCell f) const { return hcomp(y, id2(f)); }

  bool is_id2(TwoCell x) const { return hom(x.a, x.b).is_identity(x.idx); }

  std::vector<OneCell> one_cells(int a, int b) const;
  std::vector<TwoCell> two_cells(OneCell f, OneCell g) const;

  std::string show1(OneCell f) const;
  std::string show2(TwoCell x) const;

  // Dense indexing of all 1-cells/2-cells, used by cocone tables.
  int one_index(OneCell f) const { return one_base_[f.a * num_objects() + f.b] + f.idx; }
  int num_one_cells() const { return total_ones_; }
  OneCell one_at(int dense) const;
  int two_index(TwoCell x) const { return two_base_[x.a * num_objects() + x.b] + x.idx; }
  int num_two_cells() const { return total_twos_; }
  TwoCell two_at(int dense) const;

  friend Fin2Category build_2category(const Raw2Category& raw);
  friend Fin2Category promote_category(const CatPtr& c);

 private:
  void finish_tables();
  void validate() const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<CatPtr> homs_;
  std::vector<int> unit_;
  // per (a,b,c) flattened: comp1_[t][g * nf + f], comp2_[t][y * mf + x]
  std::vector<std::vector<int>> comp1_, comp2_;
  std::vector<int> one_base_, two_base_;
  int total_ones_ = 0, total_twos_ = 0;
};

Fin2Category build_2category(const Raw2Category& raw);
Cat2Ptr build_2category_ptr(const Raw2Category& raw);

// A 1-category seen as a 2-category with only identity 2-cells.
Fin2Category promote_category(const CatPtr& c);
Cat2Ptr promote_category_ptr(const CatPtr& c);

// A strict 2-functor between finite 2-categories.
class TwoFunctor {
 public:
  TwoFunctor() = default;
  TwoFunctor(Cat2Ptr dom, Cat2Ptr cod, std::vector<int> omap,
             std::vector<std::vector<int>> one_map, std::vector<std::vector<int>> two_map)
      : dom_(std::move(dom)), cod_(std::move(cod)), omap_(std::move(omap)),
        one_map_(std::move(one_map)), two_map_(std::move(two_map)) {}

  const Cat2Ptr& dom() const { return dom_; }
  const Cat2Ptr& cod() const { return cod_; }
  int on_obj(int o) const { return omap_[o]; }
  OneCell on_one(OneCell f) const {
    return {omap_[f.a], omap_[f.b], one_map_[f.a * dom_->num_objects() + f.b][f.idx]};
  }
  TwoCell on_two(TwoCell x) const {
    return {omap_[x.a], omap_[x.b], two_map_[x.a * dom_->num_objects() + x.b][x.idx]};
  }

 private:
  Cat2Ptr dom_, cod_;
  std::vector<int> omap_;
  std::vector<std::vector<int>> one_map_, two_map_;
};

// Law-checks the candidate maps: per-hom functoriality, units, and strict
// preservation of both horizontal composition tables.
TwoFunctor build_2functor(const Cat2Ptr& dom, const Cat2Ptr& cod, const std::vector<int>& omap,
                          const std::vector<std::vector<int>>& one_map,
                          const std::vector<std::vector<int>>& two_map);
TwoFunctor identity_2functor(const Cat2Ptr& c);

// A 2-category with a selected class of tight 1-cells containing the units
// and closed under composition.
struct FMarking {
  Cat2Ptr carrier;
  std::vector<std::vector<char>> tight;  // per pair index, per 1-cell
  bool is_tight(OneCell f) const { return tight[f.a * carrier->num_objects() + f.b][f.idx] != 0; }
};

FMarking attach_marking(const Cat2Ptr& c, const std::vector<OneCell>& tight_cells);
FMarking trivial_marking(const Cat2Ptr& c);  // everything tight
FMarking units_marking(const Cat2Ptr& c);    // only units tight

// Checks that a 2-functor between marked carriers sends tight cells to tight
// cells; returns a witness 1-cell on failure.
bool preserves_tightness(const TwoFunctor& f, const FMarking& dom_m, const FMarking& cod_m,
                         std::string* witness = nullptr);

}  // namespace twoslice::two

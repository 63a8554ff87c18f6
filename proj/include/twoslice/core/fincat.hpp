#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twoslice::core {

// Thrown by builders on malformed input. `kind` is a stable machine-readable
// tag (MissingComposite, NonAssociative, BadUnit, NotFunctorial, NotNatural,
// SizeLimitExceeded, ...), `witness` names the offending cells.
struct ValidationError : std::runtime_error {
  std::string kind;
  std::string witness;
  ValidationError(std::string k, std::string w)
      : std::runtime_error(k + ": " + w), kind(std::move(k)), witness(std::move(w)) {}
};

struct RawMorphism {
  std::string name, src, tgt;
};

struct RawComposite {
  std::string g, f, result;  // g . f = result, with src g = tgt f
};

// Plain description of a category by full tabulation. Composites with an
// identity on either side may be omitted; they are filled in by the unit law.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  std::vector<RawComposite> composites;
};

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// A finite category given by a total composition table. Immutable once built;
// all law checks (units, associativity, closure) run at build time.
class FinCategory {
 public:
  const std::string& name() const { return name_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names_.size()); }

  const std::string& object_name(int o) const { return objects_[o]; }
  const std::string& morphism_name(int m) const { return mor_names_[m]; }
  int object_index(const std::string& n) const;   // -1 when absent
  int morphism_index(const std::string& n) const; // -1 when absent

  int src(int m) const { return src_[m]; }
  int tgt(int m) const { return tgt_[m]; }
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int m) const { return identity_[src_[m]] == m && src_[m] == tgt_[m]; }
  bool composable(int g, int f) const { return src_[g] == tgt_[f]; }
  int compose(int g, int f) const { return table_[g * num_morphisms() + f]; }

  std::vector<int> hom_set(int a, int b) const;

  bool same_content(const FinCategory& other) const;
  std::size_t content_hash() const { return hash_; }

  friend FinCategory build_category(const RawCategory& raw);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> mor_names_;
  std::vector<int> src_, tgt_;
  std::vector<int> identity_;
  std::vector<int> table_;  // -1 on non-composable pairs
  std::unordered_map<std::string, int> obj_index_, mor_index_;
  std::size_t hash_ = 0;
};

FinCategory build_category(const RawCategory& raw);
CatPtr build_category_ptr(const RawCategory& raw);

// Value-level equality of category references: pointer fast path, then content.
bool same_category(const CatPtr& a, const CatPtr& b);

// A functor between finite categories, law-checked at build time.
class FinFunctor {
 public:
  FinFunctor() = default;
  FinFunctor(CatPtr dom, CatPtr cod, std::vector<int> omap, std::vector<int> mmap)
      : dom_(std::move(dom)), cod_(std::move(cod)), omap_(std::move(omap)), mmap_(std::move(mmap)) {}

  const CatPtr& dom() const { return dom_; }
  const CatPtr& cod() const { return cod_; }
  int on_obj(int o) const { return omap_[o]; }
  int on_mor(int m) const { return mmap_[m]; }
  const std::vector<int>& omap() const { return omap_; }
  const std::vector<int>& mmap() const { return mmap_; }

  bool operator==(const FinFunctor& other) const;
  bool operator!=(const FinFunctor& other) const { return !(*this == other); }

 private:
  CatPtr dom_, cod_;
  std::vector<int> omap_, mmap_;
};

struct RawFunctor {
  std::string name, dom, cod;
  std::vector<std::pair<std::string, std::string>> obj_map;
  std::vector<std::pair<std::string, std::string>> mor_map;
};

FinFunctor build_functor(const CatPtr& dom, const CatPtr& cod,
                         const std::vector<int>& omap, const std::vector<int>& mmap);
FinFunctor build_functor_by_names(const CatPtr& dom, const CatPtr& cod, const RawFunctor& raw);
FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
bool is_identity_functor(const FinFunctor& f);

// A natural transformation between parallel functors; naturality is verified
// exhaustively at build time.
class NatTransf {
 public:
  NatTransf() = default;
  NatTransf(FinFunctor dom, FinFunctor cod, std::vector<int> comp)
      : dom_(std::move(dom)), cod_(std::move(cod)), comp_(std::move(comp)) {}

  const FinFunctor& dom() const { return dom_; }
  const FinFunctor& cod() const { return cod_; }
  int at(int obj) const { return comp_[obj]; }
  const std::vector<int>& components() const { return comp_; }

  bool operator==(const NatTransf& other) const;
  bool operator!=(const NatTransf& other) const { return !(*this == other); }

 private:
  FinFunctor dom_, cod_;
  std::vector<int> comp_;  // per dom-category object, a morphism of cod category
};

NatTransf build_nat_transf(const FinFunctor& f, const FinFunctor& g, const std::vector<int>& comp);
NatTransf identity_nat(const FinFunctor& f);
NatTransf vcomp_nat(const NatTransf& b, const NatTransf& a);
// H * a : H∘F => H∘G for a : F => G
NatTransf lwhisk_nat(const FinFunctor& h, const NatTransf& a);
// a * K : F∘K => G∘K
NatTransf rwhisk_nat(const NatTransf& a, const FinFunctor& k);
NatTransf hcomp_nat(const NatTransf& b, const NatTransf& a);
bool is_identity_nat(const NatTransf& a);

}  // namespace twoslice::core

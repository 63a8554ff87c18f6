#include "twoslice/core/fincat.hpp"

#include <algorithm>
#include <functional>

namespace twoslice::core {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

int FinCategory::object_index(const std::string& n) const {
  auto it = obj_index_.find(n);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& n) const {
  auto it = mor_index_.find(n);
  return it == mor_index_.end() ? -1 : it->second;
}

std::vector<int> FinCategory::hom_set(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (src_[m] == a && tgt_[m] == b) out.push_back(m);
  return out;
}

bool FinCategory::same_content(const FinCategory& other) const {
  return objects_ == other.objects_ && mor_names_ == other.mor_names_ &&
         src_ == other.src_ && tgt_ == other.tgt_ && identity_ == other.identity_ &&
         table_ == other.table_;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->content_hash() == b->content_hash() && a->same_content(*b);
}

FinCategory build_category(const RawCategory& raw) {
  FinCategory c;
  c.name_ = raw.name;
  for (const auto& o : raw.objects) {
    if (c.obj_index_.count(o))
      throw ValidationError("DuplicateName", "object " + o + " in " + raw.name);
    c.obj_index_[o] = static_cast<int>(c.objects_.size());
    c.objects_.push_back(o);
  }
  for (const auto& m : raw.morphisms) {
    if (c.mor_index_.count(m.name))
      throw ValidationError("DuplicateName", "morphism " + m.name + " in " + raw.name);
    int s = c.object_index(m.src), t = c.object_index(m.tgt);
    if (s < 0 || t < 0)
      throw ValidationError("UnresolvedName", "endpoints of " + m.name + " in " + raw.name);
    c.mor_index_[m.name] = static_cast<int>(c.mor_names_.size());
    c.mor_names_.push_back(m.name);
    c.src_.push_back(s);
    c.tgt_.push_back(t);
  }
  const int n = c.num_morphisms();

  c.identity_.assign(c.objects_.size(), -1);
  for (const auto& [obj, mor] : raw.identities) {
    int o = c.object_index(obj), m = c.morphism_index(mor);
    if (o < 0 || m < 0) throw ValidationError("UnresolvedName", "identity of " + obj);
    if (c.src_[m] != o || c.tgt_[m] != o)
      throw ValidationError("BadUnit", "identity " + mor + " of " + obj + " is not an endomorphism");
    if (c.identity_[o] != -1) throw ValidationError("BadUnit", "two identities declared for " + obj);
    c.identity_[o] = m;
  }
  for (std::size_t o = 0; o < c.objects_.size(); ++o)
    if (c.identity_[o] < 0) throw ValidationError("BadUnit", "no identity for object " + c.objects_[o]);

  c.table_.assign(static_cast<std::size_t>(n) * n, -1);
  auto is_id = [&](int m) { return c.identity_[c.src_[m]] == m && c.src_[m] == c.tgt_[m]; };

  // Unit law fills every pair involving an identity.
  for (int m = 0; m < n; ++m) {
    c.table_[m * n + c.identity_[c.src_[m]]] = m;
    c.table_[c.identity_[c.tgt_[m]] * n + m] = m;
  }
  for (const auto& e : raw.composites) {
    int g = c.morphism_index(e.g), f = c.morphism_index(e.f), r = c.morphism_index(e.result);
    if (g < 0 || f < 0 || r < 0)
      throw ValidationError("UnresolvedName", "composite " + e.g + " . " + e.f + " = " + e.result);
    if (!c.composable(g, f))
      throw ValidationError("MissingComposite",
                            "pair (" + e.g + ", " + e.f + ") is not composable: src " + e.g +
                                " != tgt " + e.f);
    if (c.src_[r] != c.src_[f] || c.tgt_[r] != c.tgt_[g])
      throw ValidationError("MissingComposite",
                            "entry " + e.g + " . " + e.f + " = " + e.result + " has wrong endpoints");
    int& slot = c.table_[g * n + f];
    if (slot != -1 && slot != r) {
      if (is_id(g) || is_id(f))
        throw ValidationError("BadUnit", "entry " + e.g + " . " + e.f + " = " + e.result +
                                             " contradicts the unit law");
      throw ValidationError("MissingComposite",
                            "conflicting entries for (" + e.g + ", " + e.f + ")");
    }
    slot = r;
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (c.composable(g, f) && c.table_[g * n + f] < 0)
        throw ValidationError("MissingComposite",
                              "no entry for (" + c.mor_names_[g] + ", " + c.mor_names_[f] + ")");

  // Associativity on every composable triple.
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        int l = c.table_[c.table_[h * n + g] * n + f];
        int r = c.table_[h * n + c.table_[g * n + f]];
        if (l != r)
          throw ValidationError("NonAssociative", "(" + c.mor_names_[h] + ", " + c.mor_names_[g] +
                                                      ", " + c.mor_names_[f] + ")");
      }
    }

  std::size_t h = std::hash<std::string>{}(raw.name);
  for (const auto& on : c.objects_) h = hash_combine(h, std::hash<std::string>{}(on));
  for (const auto& mn : c.mor_names_) h = hash_combine(h, std::hash<std::string>{}(mn));
  for (int v : c.src_) h = hash_combine(h, static_cast<std::size_t>(v));
  for (int v : c.tgt_) h = hash_combine(h, static_cast<std::size_t>(v));
  for (int v : c.table_) h = hash_combine(h, static_cast<std::size_t>(v + 1));
  c.hash_ = h;
  return c;
}

CatPtr build_category_ptr(const RawCategory& raw) {
  return std::make_shared<const FinCategory>(build_category(raw));
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  if (omap_ != other.omap_ || mmap_ != other.mmap_) return false;
  return same_category(dom_, other.dom_) && same_category(cod_, other.cod_);
}

FinFunctor build_functor(const CatPtr& dom, const CatPtr& cod,
                         const std::vector<int>& omap, const std::vector<int>& mmap) {
  if (static_cast<int>(omap.size()) != dom->num_objects() ||
      static_cast<int>(mmap.size()) != dom->num_morphisms())
    throw ValidationError("NotFunctorial", "map sizes do not match " + dom->name());
  for (int m = 0; m < dom->num_morphisms(); ++m) {
    int im = mmap[m];
    if (im < 0 || im >= cod->num_morphisms())
      throw ValidationError("NotFunctorial", "image of " + dom->morphism_name(m) + " out of range");
    if (cod->src(im) != omap[dom->src(m)] || cod->tgt(im) != omap[dom->tgt(m)])
      throw ValidationError("NotFunctorial",
                            "src/tgt not preserved at " + dom->morphism_name(m));
  }
  for (int o = 0; o < dom->num_objects(); ++o)
    if (mmap[dom->identity(o)] != cod->identity(omap[o]))
      throw ValidationError("NotFunctorial", "identity of " + dom->object_name(o) + " not preserved");
  for (int g = 0; g < dom->num_morphisms(); ++g)
    for (int f = 0; f < dom->num_morphisms(); ++f)
      if (dom->composable(g, f) &&
          mmap[dom->compose(g, f)] != cod->compose(mmap[g], mmap[f]))
        throw ValidationError("NotFunctorial", "composition not preserved at (" +
                                                   dom->morphism_name(g) + ", " +
                                                   dom->morphism_name(f) + ")");
  return FinFunctor(dom, cod, omap, mmap);
}

FinFunctor build_functor_by_names(const CatPtr& dom, const CatPtr& cod, const RawFunctor& raw) {
  std::vector<int> omap(dom->num_objects(), -1), mmap(dom->num_morphisms(), -1);
  for (const auto& [a, b] : raw.obj_map) {
    int i = dom->object_index(a), j = cod->object_index(b);
    if (i < 0 || j < 0) throw ValidationError("UnresolvedName", "object map " + a + " -> " + b);
    omap[i] = j;
  }
  for (const auto& [a, b] : raw.mor_map) {
    int i = dom->morphism_index(a), j = cod->morphism_index(b);
    if (i < 0 || j < 0) throw ValidationError("UnresolvedName", "morphism map " + a + " -> " + b);
    mmap[i] = j;
  }
  // Identities may be omitted; they are forced.
  for (int o = 0; o < dom->num_objects(); ++o) {
    if (omap[o] < 0) throw ValidationError("NotFunctorial", "no image for object " + dom->object_name(o));
    if (mmap[dom->identity(o)] < 0) mmap[dom->identity(o)] = cod->identity(omap[o]);
  }
  for (int m = 0; m < dom->num_morphisms(); ++m)
    if (mmap[m] < 0)
      throw ValidationError("NotFunctorial", "no image for morphism " + dom->morphism_name(m));
  return build_functor(dom, cod, omap, mmap);
}

FinFunctor identity_functor(const CatPtr& c) {
  std::vector<int> omap(c->num_objects()), mmap(c->num_morphisms());
  for (int o = 0; o < c->num_objects(); ++o) omap[o] = o;
  for (int m = 0; m < c->num_morphisms(); ++m) mmap[m] = m;
  return FinFunctor(c, c, std::move(omap), std::move(mmap));
}

bool is_identity_functor(const FinFunctor& f) {
  if (!same_category(f.dom(), f.cod())) return false;
  for (int o = 0; o < f.dom()->num_objects(); ++o)
    if (f.on_obj(o) != o) return false;
  for (int m = 0; m < f.dom()->num_morphisms(); ++m)
    if (f.on_mor(m) != m) return false;
  return true;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.cod(), g.dom()))
    throw ValidationError("NotFunctorial", "functor composition endpoint mismatch");
  std::vector<int> omap(f.dom()->num_objects()), mmap(f.dom()->num_morphisms());
  for (int o = 0; o < f.dom()->num_objects(); ++o) omap[o] = g.on_obj(f.on_obj(o));
  for (int m = 0; m < f.dom()->num_morphisms(); ++m) mmap[m] = g.on_mor(f.on_mor(m));
  return FinFunctor(f.dom(), g.cod(), std::move(omap), std::move(mmap));
}

bool NatTransf::operator==(const NatTransf& other) const {
  return comp_ == other.comp_ && dom_ == other.dom_ && cod_ == other.cod_;
}

NatTransf build_nat_transf(const FinFunctor& f, const FinFunctor& g, const std::vector<int>& comp) {
  if (!same_category(f.dom(), g.dom()) || !same_category(f.cod(), g.cod()))
    throw ValidationError("NotNatural", "functors are not parallel");
  const auto& a = f.dom();
  const auto& c = f.cod();
  if (static_cast<int>(comp.size()) != a->num_objects())
    throw ValidationError("NotNatural", "wrong number of components");
  for (int o = 0; o < a->num_objects(); ++o) {
    int k = comp[o];
    if (k < 0 || k >= c->num_morphisms() || c->src(k) != f.on_obj(o) || c->tgt(k) != g.on_obj(o))
      throw ValidationError("NotNatural", "component at " + a->object_name(o) + " has wrong endpoints");
  }
  for (int m = 0; m < a->num_morphisms(); ++m) {
    int x = a->src(m), y = a->tgt(m);
    if (c->compose(comp[y], f.on_mor(m)) != c->compose(g.on_mor(m), comp[x]))
      throw ValidationError("NotNatural", "naturality fails at " + a->morphism_name(m));
  }
  return NatTransf(f, g, comp);
}

NatTransf identity_nat(const FinFunctor& f) {
  std::vector<int> comp(f.dom()->num_objects());
  for (int o = 0; o < f.dom()->num_objects(); ++o) comp[o] = f.cod()->identity(f.on_obj(o));
  return NatTransf(f, f, std::move(comp));
}

bool is_identity_nat(const NatTransf& a) {
  for (int o = 0; o < a.dom().dom()->num_objects(); ++o)
    if (!a.dom().cod()->is_identity(a.at(o))) return false;
  return a.dom() == a.cod();
}

NatTransf vcomp_nat(const NatTransf& b, const NatTransf& a) {
  if (!(a.cod() == b.dom()))
    throw ValidationError("NotNatural", "vertical composition endpoint mismatch");
  const auto& c = a.dom().cod();
  std::vector<int> comp(a.components().size());
  for (std::size_t o = 0; o < comp.size(); ++o)
    comp[o] = c->compose(b.at(static_cast<int>(o)), a.at(static_cast<int>(o)));
  return NatTransf(a.dom(), b.cod(), std::move(comp));
}

NatTransf lwhisk_nat(const FinFunctor& h, const NatTransf& a) {
  std::vector<int> comp(a.components().size());
  for (std::size_t o = 0; o < comp.size(); ++o) comp[o] = h.on_mor(a.at(static_cast<int>(o)));
  return NatTransf(compose_functors(h, a.dom()), compose_functors(h, a.cod()), std::move(comp));
}

NatTransf rwhisk_nat(const NatTransf& a, const FinFunctor& k) {
  std::vector<int> comp(k.dom()->num_objects());
  for (int o = 0; o < k.dom()->num_objects(); ++o) comp[o] = a.at(k.on_obj(o));
  return NatTransf(compose_functors(a.dom(), k), compose_functors(a.cod(), k), std::move(comp));
}

NatTransf hcomp_nat(const NatTransf& b, const NatTransf& a) {
  // b * a = (b rwhisked on cod a) after (dom b lwhisked on a)
  return vcomp_nat(rwhisk_nat(b, a.cod()), lwhisk_nat(b.dom(), a));
}

}  // namespace twoslice::core

#include "twoslice/two/fin2cat.hpp"

namespace twoslice::two {

int Fin2Category::object_index(const std::string& n) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects_[i] == n) return i;
  return -1;
}

OneCell Fin2Category::comp1(OneCell g, OneCell f) const {
  const int n = num_objects();
  const auto& table = comp1_[(f.a * n + f.b) * n + g.b];
  int nf = hom(f.a, f.b).num_objects();
  return {f.a, g.b, table[g.idx * nf + f.idx]};
}

TwoCell Fin2Category::vcomp(TwoCell y, TwoCell x) const {
  return {x.a, x.b, hom(x.a, x.b).compose(y.idx, x.idx)};
}

TwoCell Fin2Category::hcomp(TwoCell y, TwoCell x) const {
  const int n = num_objects();
  const auto& table = comp2_[(x.a * n + x.b) * n + y.b];
  int mf = hom(x.a, x.b).num_morphisms();
  return {x.a, y.b, table[y.idx * mf + x.idx]};
}

std::vector<OneCell> Fin2Category::one_cells(int a, int b) const {
  std::vector<OneCell> out;
  for (int i = 0; i < hom(a, b).num_objects(); ++i) out.push_back({a, b, i});
  return out;
}

std::vector<TwoCell> Fin2Category::two_cells(OneCell f, OneCell g) const {
  std::vector<TwoCell> out;
  if (f.a != g.a || f.b != g.b) return out;
  const auto& h = hom(f.a, f.b);
  for (int m = 0; m < h.num_morphisms(); ++m)
    if (h.src(m) == f.idx && h.tgt(m) == g.idx) out.push_back({f.a, f.b, m});
  return out;
}

std::string Fin2Category::show1(OneCell f) const {
  return hom(f.a, f.b).object_name(f.idx) + ":" + objects_[f.a] + "->" + objects_[f.b];
}

std::string Fin2Category::show2(TwoCell x) const {
  return hom(x.a, x.b).morphism_name(x.idx) + ":" + objects_[x.a] + "->" + objects_[x.b];
}

OneCell Fin2Category::one_at(int dense) const {
  const int n = num_objects();
  for (int p = n * n - 1; p >= 0; --p)
    if (one_base_[p] <= dense && dense < one_base_[p] + homs_[p]->num_objects())
      return {p / n, p % n, dense - one_base_[p]};
  return {};
}

TwoCell Fin2Category::two_at(int dense) const {
  const int n = num_objects();
  for (int p = n * n - 1; p >= 0; --p)
    if (two_base_[p] <= dense && dense < two_base_[p] + homs_[p]->num_morphisms())
      return {p / n, p % n, dense - two_base_[p]};
  return {};
}

void Fin2Category::finish_tables() {
  const int n = num_objects();
  one_base_.assign(n * n, 0);
  two_base_.assign(n * n, 0);
  total_ones_ = 0;
  total_twos_ = 0;
  for (int p = 0; p < n * n; ++p) {
    one_base_[p] = total_ones_;
    two_base_[p] = total_twos_;
    total_ones_ += homs_[p]->num_objects();
    total_twos_ += homs_[p]->num_morphisms();
  }
}

void Fin2Category::validate() const {
  const int n = num_objects();
  // typing of both tables
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& hab = hom(a, b);
        const auto& hbc = hom(b, c);
        const auto& hac = hom(a, c);
        const auto& t1 = comp1_[(a * n + b) * n + c];
        const auto& t2 = comp2_[(a * n + b) * n + c];
        for (int g = 0; g < hbc.num_objects(); ++g)
          for (int f = 0; f < hab.num_objects(); ++f) {
            int r = t1[g * hab.num_objects() + f];
            if (r < 0 || r >= hac.num_objects())
              throw ValidationError("MissingComposite",
                                    "1-cell table at (" + objects_[a] + "," + objects_[b] + "," +
                                        objects_[c] + ") entry (" + hbc.object_name(g) + "," +
                                        hab.object_name(f) + ")");
          }
        for (int y = 0; y < hbc.num_morphisms(); ++y)
          for (int x = 0; x < hab.num_morphisms(); ++x) {
            int r = t2[y * hab.num_morphisms() + x];
            if (r < 0 || r >= hac.num_morphisms())
              throw ValidationError("MissingComposite", "2-cell table entry (" +
                                                            hbc.morphism_name(y) + "," +
                                                            hab.morphism_name(x) + ")");
            int want_src = t1[hbc.src(y) * hab.num_objects() + hab.src(x)];
            int want_tgt = t1[hbc.tgt(y) * hab.num_objects() + hab.tgt(x)];
            if (hac.src(r) != want_src || hac.tgt(r) != want_tgt)
              throw ValidationError("MissingComposite",
                                    "2-cell table entry ill-typed at (" + hbc.morphism_name(y) +
                                        "," + hab.morphism_name(x) + ")");
          }
      }
  // units
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int f = 0; f < hom(a, b).num_objects(); ++f) {
        OneCell fc{a, b, f};
        if (comp1(fc, unit1(a)) != fc || comp1(unit1(b), fc) != fc)
          throw ValidationError("BadUnit", "unit law fails at 1-cell " + show1(fc));
      }
      for (int x = 0; x < hom(a, b).num_morphisms(); ++x) {
        TwoCell xc{a, b, x};
        if (hcomp(xc, id2(unit1(a))) != xc || hcomp(id2(unit1(b)), xc) != xc)
          throw ValidationError("BadUnit", "unit law fails at 2-cell " + show2(xc));
      }
    }
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          for (int f = 0; f < hom(a, b).num_objects(); ++f)
            for (int g = 0; g < hom(b, c).num_objects(); ++g)
              for (int h = 0; h < hom(c, d).num_objects(); ++h) {
                OneCell fc{a, b, f}, gc{b, c, g}, hc{c, d, h};
                if (comp1(hc, comp1(gc, fc)) != comp1(comp1(hc, gc), fc))
                  throw ValidationError("NonAssociative",
                                        "1-cells (" + show1(hc) + "," + show1(gc) + "," + show1(fc) + ")");
              }
          for (int x = 0; x < hom(a, b).num_morphisms(); ++x)
            for (int y = 0; y < hom(b, c).num_morphisms(); ++y)
              for (int z = 0; z < hom(c, d).num_morphisms(); ++z) {
                TwoCell xc{a, b, x}, yc{b, c, y}, zc{c, d, z};
                if (hcomp(zc, hcomp(yc, xc)) != hcomp(hcomp(zc, yc), xc))
                  throw ValidationError("NonAssociative",
                                        "2-cells (" + show2(zc) + "," + show2(yc) + "," + show2(xc) + ")");
              }
        }
  // functoriality of horizontal composition = interchange, on all pairs
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& hab = hom(a, b);
        const auto& hbc = hom(b, c);
        for (int g = 0; g < hbc.num_objects(); ++g)
          for (int f = 0; f < hab.num_objects(); ++f) {
            OneCell gc{b, c, g}, fc{a, b, f};
            if (hcomp(id2(gc), id2(fc)) != id2(comp1(gc, fc)))
              throw ValidationError("InterchangeViolation",
                                    "identities at (" + show1(gc) + "," + show1(fc) + ")");
          }
        for (int y2 = 0; y2 < hbc.num_morphisms(); ++y2)
          for (int y1 = 0; y1 < hbc.num_morphisms(); ++y1) {
            if (!hbc.composable(y2, y1)) continue;
            for (int x2 = 0; x2 < hab.num_morphisms(); ++x2)
              for (int x1 = 0; x1 < hab.num_morphisms(); ++x1) {
                if (!hab.composable(x2, x1)) continue;
                TwoCell y2c{b, c, y2}, y1c{b, c, y1}, x2c{a, b, x2}, x1c{a, b, x1};
                if (hcomp(vcomp(y2c, y1c), vcomp(x2c, x1c)) !=
                    vcomp(hcomp(y2c, x2c), hcomp(y1c, x1c)))
                  throw ValidationError("InterchangeViolation",
                                        "(" + show2(y2c) + "," + show2(y1c) + ";" + show2(x2c) +
                                            "," + show2(x1c) + ")");
              }
          }
      }
}

Fin2Category build_2category(const Raw2Category& raw) {
  Fin2Category c;
  c.name_ = raw.name;
  c.objects_ = raw.objects;
  const int n = c.num_objects();
  if (static_cast<int>(raw.homs.size()) != n * n)
    throw ValidationError("MissingComposite", "hom grid incomplete in " + raw.name);
  c.homs_ = raw.homs;
  c.unit_.resize(n);
  for (int a = 0; a < n; ++a) {
    int u = c.hom(a, a).object_index(raw.units[a]);
    if (u < 0) throw ValidationError("UnresolvedName", "unit 1-cell of " + raw.objects[a]);
    c.unit_[a] = u;
  }
  c.comp1_.assign(n * n * n, {});
  c.comp2_.assign(n * n * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        c.comp1_[(a * n + b) * n + d].assign(
            static_cast<std::size_t>(c.hom(b, d).num_objects()) * c.hom(a, b).num_objects(), -1);
        c.comp2_[(a * n + b) * n + d].assign(
            static_cast<std::size_t>(c.hom(b, d).num_morphisms()) * c.hom(a, b).num_morphisms(), -1);
      }
  // unit-law fills: composing with a unit 1-cell (or its identity 2-cell) is
  // the identity operation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& hab = c.hom(a, b);
      auto& left = c.comp1_[(a * n + a) * n + b];   // f ∘ unit_a
      auto& right = c.comp1_[(a * n + b) * n + b];  // unit_b ∘ f
      for (int f = 0; f < hab.num_objects(); ++f) {
        left[f * c.hom(a, a).num_objects() + c.unit_[a]] = f;
        right[c.unit_[b] * hab.num_objects() + f] = f;
      }
      auto& left2 = c.comp2_[(a * n + a) * n + b];
      auto& right2 = c.comp2_[(a * n + b) * n + b];
      int ua = c.hom(a, a).identity(c.unit_[a]);
      int ub = c.hom(b, b).identity(c.unit_[b]);
      for (int x = 0; x < hab.num_morphisms(); ++x) {
        left2[x * c.hom(a, a).num_morphisms() + ua] = x;
        right2[ub * hab.num_morphisms() + x] = x;
      }
    }
  for (const auto& e : raw.comp1) {
    const auto& hab = c.hom(e.a, e.b);
    const auto& hbc = c.hom(e.b, e.c);
    const auto& hac = c.hom(e.a, e.c);
    int g = hbc.object_index(e.g), f = hab.object_index(e.f), r = hac.object_index(e.result);
    if (g < 0 || f < 0 || r < 0)
      throw ValidationError("UnresolvedName", "1-cell composite " + e.g + " . " + e.f);
    int& slot = c.comp1_[(e.a * n + e.b) * n + e.c][g * hab.num_objects() + f];
    if (slot != -1 && slot != r)
      throw ValidationError("MissingComposite", "conflicting 1-cell entries for " + e.g + " . " + e.f);
    slot = r;
  }
  for (const auto& e : raw.comp2) {
    const auto& hab = c.hom(e.a, e.b);
    const auto& hbc = c.hom(e.b, e.c);
    const auto& hac = c.hom(e.a, e.c);
    int y = hbc.morphism_index(e.y), x = hab.morphism_index(e.x), r = hac.morphism_index(e.result);
    if (y < 0 || x < 0 || r < 0)
      throw ValidationError("UnresolvedName", "2-cell composite " + e.y + " * " + e.x);
    int& slot = c.comp2_[(e.a * n + e.b) * n + e.c][y * hab.num_morphisms() + x];
    if (slot != -1 && slot != r)
      throw ValidationError("MissingComposite", "conflicting 2-cell entries for " + e.y + " * " + e.x);
    slot = r;
  }
  c.finish_tables();
  c.validate();
  return c;
}

Cat2Ptr build_2category_ptr(const Raw2Category& raw) {
  return std::make_shared<const Fin2Category>(build_2category(raw));
}

Fin2Category promote_category(const CatPtr& cat) {
  Fin2Category c;
  c.name_ = cat->name();
  for (int i = 0; i < cat->num_objects(); ++i) c.objects_.push_back(cat->object_name(i));
  const int n = c.num_objects();
  // each hom is the discrete category on the hom-set
  std::vector<std::vector<int>> decode(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      core::RawCategory raw;
      raw.name = cat->name() + "(" + cat->object_name(a) + "," + cat->object_name(b) + ")";
      for (int m : cat->hom_set(a, b)) {
        raw.objects.push_back(cat->morphism_name(m));
        raw.morphisms.push_back({"id_" + cat->morphism_name(m), cat->morphism_name(m),
                                 cat->morphism_name(m)});
        raw.identities.push_back({cat->morphism_name(m), "id_" + cat->morphism_name(m)});
        decode[a * n + b].push_back(m);
      }
      c.homs_.push_back(core::build_category_ptr(raw));
    }
  c.unit_.resize(n);
  for (int a = 0; a < n; ++a)
    c.unit_[a] = c.hom(a, a).object_index(cat->morphism_name(cat->identity(a)));
  c.comp1_.assign(n * n * n, {});
  c.comp2_.assign(n * n * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const auto& hab = c.hom(a, b);
        const auto& hbd = c.hom(b, d);
        const auto& had = c.hom(a, d);
        auto& t1 = c.comp1_[(a * n + b) * n + d];
        auto& t2 = c.comp2_[(a * n + b) * n + d];
        t1.assign(static_cast<std::size_t>(hbd.num_objects()) * hab.num_objects(), -1);
        t2.assign(static_cast<std::size_t>(hbd.num_morphisms()) * hab.num_morphisms(), -1);
        for (int g = 0; g < hbd.num_objects(); ++g)
          for (int f = 0; f < hab.num_objects(); ++f) {
            int comp = cat->compose(decode[b * n + d][g], decode[a * n + b][f]);
            int r = had.object_index(cat->morphism_name(comp));
            t1[g * hab.num_objects() + f] = r;
            t2[g * hab.num_morphisms() + f] = r;  // discrete homs: morphisms = objects
          }
      }
  c.finish_tables();
  c.validate();
  return c;
}

Cat2Ptr promote_category_ptr(const CatPtr& c) {
  return std::make_shared<const Fin2Category>(promote_category(c));
}

TwoFunctor build_2functor(const Cat2Ptr& dom, const Cat2Ptr& cod, const std::vector<int>& omap,
                          const std::vector<std::vector<int>>& one_map,
                          const std::vector<std::vector<int>>& two_map) {
  const int n = dom->num_objects();
  if (static_cast<int>(omap.size()) != n)
    throw ValidationError("NotFunctorial", "object map size mismatch");
  TwoFunctor f(dom, cod, omap, one_map, two_map);
  // per-hom functoriality reuses the 1-dimensional checker
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      core::build_functor(dom->hom_ptr(a, b), cod->hom_ptr(omap[a], omap[b]),
                          one_map[a * n + b], two_map[a * n + b]);
    }
  for (int a = 0; a < n; ++a)
    if (f.on_one(dom->unit1(a)) != cod->unit1(omap[a]))
      throw ValidationError("NotFunctorial", "unit 1-cell of " + dom->object_name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        for (int g = 0; g < dom->hom(b, c).num_objects(); ++g)
          for (int fx = 0; fx < dom->hom(a, b).num_objects(); ++fx) {
            OneCell gc{b, c, g}, fc{a, b, fx};
            if (f.on_one(dom->comp1(gc, fc)) != cod->comp1(f.on_one(gc), f.on_one(fc)))
              throw ValidationError("NotFunctorial", "1-cell composition at (" + dom->show1(gc) +
                                                         "," + dom->show1(fc) + ")");
          }
        for (int y = 0; y < dom->hom(b, c).num_morphisms(); ++y)
          for (int x = 0; x < dom->hom(a, b).num_morphisms(); ++x) {
            TwoCell yc{b, c, y}, xc{a, b, x};
            if (f.on_two(dom->hcomp(yc, xc)) != cod->hcomp(f.on_two(yc), f.on_two(xc)))
              throw ValidationError("NotFunctorial", "2-cell composition at (" + dom->show2(yc) +
                                                         "," + dom->show2(xc) + ")");
          }
      }
  return f;
}

TwoFunctor identity_2functor(const Cat2Ptr& c) {
  const int n = c->num_objects();
  std::vector<int> omap(n);
  std::vector<std::vector<int>> ones(n * n), twos(n * n);
  for (int a = 0; a < n; ++a) omap[a] = a;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& o1 = ones[a * n + b];
      auto& o2 = twos[a * n + b];
      o1.resize(c->hom(a, b).num_objects());
      o2.resize(c->hom(a, b).num_morphisms());
      for (std::size_t i = 0; i < o1.size(); ++i) o1[i] = static_cast<int>(i);
      for (std::size_t i = 0; i < o2.size(); ++i) o2[i] = static_cast<int>(i);
    }
  return TwoFunctor(c, c, std::move(omap), std::move(ones), std::move(twos));
}

FMarking attach_marking(const Cat2Ptr& c, const std::vector<OneCell>& tight_cells) {
  const int n = c->num_objects();
  FMarking m;
  m.carrier = c;
  m.tight.assign(n * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.tight[a * n + b].assign(c->hom(a, b).num_objects(), 0);
  for (const auto& f : tight_cells) m.tight[f.a * n + f.b][f.idx] = 1;
  for (int a = 0; a < n; ++a)
    if (!m.is_tight(c->unit1(a)))
      throw ValidationError("MissingUnits", "unit of " + c->object_name(a) + " is not tight");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int g = 0; g < c->hom(b, d).num_objects(); ++g)
          for (int f = 0; f < c->hom(a, b).num_objects(); ++f) {
            OneCell gc{b, d, g}, fc{a, b, f};
            if (m.is_tight(gc) && m.is_tight(fc) && !m.is_tight(c->comp1(gc, fc)))
              throw ValidationError("NotClosed", "composite of tight (" + c->show1(gc) + "," +
                                                     c->show1(fc) + ") is loose");
          }
  return m;
}

FMarking trivial_marking(const Cat2Ptr& c) {
  std::vector<OneCell> all;
  for (int a = 0; a < c->num_objects(); ++a)
    for (int b = 0; b < c->num_objects(); ++b)
      for (auto f : c->one_cells(a, b)) all.push_back(f);
  return attach_marking(c, all);
}

FMarking units_marking(const Cat2Ptr& c) {
  std::vector<OneCell> units;
  for (int a = 0; a < c->num_objects(); ++a) units.push_back(c->unit1(a));
  return attach_marking(c, units);
}

bool preserves_tightness(const TwoFunctor& f, const FMarking& dom_m, const FMarking& cod_m,
                         std::string* witness) {
  const auto& d = f.dom();
  for (int a = 0; a < d->num_objects(); ++a)
    for (int b = 0; b < d->num_objects(); ++b)
      for (auto one : d->one_cells(a, b))
        if (dom_m.is_tight(one) && !cod_m.is_tight(f.on_one(one))) {
          if (witness) *witness = d->show1(one);
          return false;
        }
  return true;
}

}  // namespace twoslice::two

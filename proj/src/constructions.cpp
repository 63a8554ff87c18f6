#include "twoslice/core/constructions.hpp"

#include <map>

namespace twoslice::core {

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

ProductResult binary_product_category(const CatPtr& c, const CatPtr& d) {
  RawCategory raw;
  raw.name = pair_name(c->name(), d->name());
  for (int i = 0; i < c->num_objects(); ++i)
    for (int j = 0; j < d->num_objects(); ++j)
      raw.objects.push_back(pair_name(c->object_name(i), d->object_name(j)));
  auto mname = [&](int m, int k) {
    return pair_name(c->morphism_name(m), d->morphism_name(k));
  };
  for (int m = 0; m < c->num_morphisms(); ++m)
    for (int k = 0; k < d->num_morphisms(); ++k)
      raw.morphisms.push_back({mname(m, k),
                               pair_name(c->object_name(c->src(m)), d->object_name(d->src(k))),
                               pair_name(c->object_name(c->tgt(m)), d->object_name(d->tgt(k)))});
  for (int i = 0; i < c->num_objects(); ++i)
    for (int j = 0; j < d->num_objects(); ++j)
      raw.identities.push_back({pair_name(c->object_name(i), d->object_name(j)),
                                mname(c->identity(i), d->identity(j))});
  for (int m2 = 0; m2 < c->num_morphisms(); ++m2)
    for (int k2 = 0; k2 < d->num_morphisms(); ++k2)
      for (int m1 = 0; m1 < c->num_morphisms(); ++m1)
        for (int k1 = 0; k1 < d->num_morphisms(); ++k1)
          if (c->composable(m2, m1) && d->composable(k2, k1))
            raw.composites.push_back({mname(m2, k2), mname(m1, k1),
                                      mname(c->compose(m2, m1), d->compose(k2, k1))});
  CatPtr total = build_category_ptr(raw);

  std::vector<int> o1(total->num_objects()), o2(total->num_objects());
  std::vector<int> m1(total->num_morphisms()), m2(total->num_morphisms());
  for (int i = 0; i < c->num_objects(); ++i)
    for (int j = 0; j < d->num_objects(); ++j) {
      int o = total->object_index(pair_name(c->object_name(i), d->object_name(j)));
      o1[o] = i;
      o2[o] = j;
    }
  for (int m = 0; m < c->num_morphisms(); ++m)
    for (int k = 0; k < d->num_morphisms(); ++k) {
      int idx = total->morphism_index(mname(m, k));
      m1[idx] = m;
      m2[idx] = k;
    }
  return {total, FinFunctor(total, c, o1, m1), FinFunctor(total, d, o2, m2)};
}

FinFunctor product_pairing(const ProductResult& p, const FinFunctor& f, const FinFunctor& g) {
  const auto& a = f.dom();
  std::vector<int> omap(a->num_objects()), mmap(a->num_morphisms());
  for (int o = 0; o < a->num_objects(); ++o) {
    std::string n = pair_name(p.pr1.cod()->object_name(f.on_obj(o)),
                              p.pr2.cod()->object_name(g.on_obj(o)));
    omap[o] = p.total->object_index(n);
  }
  for (int m = 0; m < a->num_morphisms(); ++m) {
    std::string n = pair_name(p.pr1.cod()->morphism_name(f.on_mor(m)),
                              p.pr2.cod()->morphism_name(g.on_mor(m)));
    mmap[m] = p.total->morphism_index(n);
  }
  return FinFunctor(a, p.total, std::move(omap), std::move(mmap));
}

NatTransf product_pairing_nat(const ProductResult& p, const FinFunctor& u, const FinFunctor& v,
                              const NatTransf& a, const NatTransf& b) {
  std::vector<int> comp(a.dom().dom()->num_objects());
  for (int o = 0; o < static_cast<int>(comp.size()); ++o) {
    std::string n = pair_name(p.pr1.cod()->morphism_name(a.at(o)),
                              p.pr2.cod()->morphism_name(b.at(o)));
    comp[o] = p.total->morphism_index(n);
  }
  return NatTransf(u, v, std::move(comp));
}

bool verify_product_universal(const ProductResult& p) {
  // every cone of morphisms into the factors has exactly one pairing
  const auto& c = p.pr1.cod();
  const auto& d = p.pr2.cod();
  for (int x = 0; x < p.total->num_objects(); ++x)
    for (int i = 0; i < c->num_morphisms(); ++i)
      for (int j = 0; j < d->num_morphisms(); ++j) {
        if (c->src(i) != p.pr1.on_obj(x) || d->src(j) != p.pr2.on_obj(x)) continue;
        int count = 0;
        for (int w = 0; w < p.total->num_morphisms(); ++w)
          if (p.total->src(w) == x && p.pr1.on_mor(w) == i && p.pr2.on_mor(w) == j) ++count;
        if (count != 1) return false;
      }
  return true;
}

CoproductResult binary_coproduct_category(const CatPtr& c, const CatPtr& d) {
  RawCategory raw;
  raw.name = c->name() + "+" + d->name();
  auto lo = [&](const std::string& n) { return "l:" + n; };
  auto ro = [&](const std::string& n) { return "r:" + n; };
  for (int i = 0; i < c->num_objects(); ++i) raw.objects.push_back(lo(c->object_name(i)));
  for (int j = 0; j < d->num_objects(); ++j) raw.objects.push_back(ro(d->object_name(j)));
  for (int m = 0; m < c->num_morphisms(); ++m)
    raw.morphisms.push_back({lo(c->morphism_name(m)), lo(c->object_name(c->src(m))),
                             lo(c->object_name(c->tgt(m)))});
  for (int k = 0; k < d->num_morphisms(); ++k)
    raw.morphisms.push_back({ro(d->morphism_name(k)), ro(d->object_name(d->src(k))),
                             ro(d->object_name(d->tgt(k)))});
  for (int i = 0; i < c->num_objects(); ++i)
    raw.identities.push_back({lo(c->object_name(i)), lo(c->morphism_name(c->identity(i)))});
  for (int j = 0; j < d->num_objects(); ++j)
    raw.identities.push_back({ro(d->object_name(j)), ro(d->morphism_name(d->identity(j)))});
  for (int g = 0; g < c->num_morphisms(); ++g)
    for (int f = 0; f < c->num_morphisms(); ++f)
      if (c->composable(g, f))
        raw.composites.push_back({lo(c->morphism_name(g)), lo(c->morphism_name(f)),
                                  lo(c->morphism_name(c->compose(g, f)))});
  for (int g = 0; g < d->num_morphisms(); ++g)
    for (int f = 0; f < d->num_morphisms(); ++f)
      if (d->composable(g, f))
        raw.composites.push_back({ro(d->morphism_name(g)), ro(d->morphism_name(f)),
                                  ro(d->morphism_name(d->compose(g, f)))});
  CatPtr total = build_category_ptr(raw);

  std::vector<int> ol(c->num_objects()), ml(c->num_morphisms());
  std::vector<int> orr(d->num_objects()), mr(d->num_morphisms());
  for (int i = 0; i < c->num_objects(); ++i) ol[i] = total->object_index(lo(c->object_name(i)));
  for (int m = 0; m < c->num_morphisms(); ++m) ml[m] = total->morphism_index(lo(c->morphism_name(m)));
  for (int j = 0; j < d->num_objects(); ++j) orr[j] = total->object_index(ro(d->object_name(j)));
  for (int k = 0; k < d->num_morphisms(); ++k) mr[k] = total->morphism_index(ro(d->morphism_name(k)));
  return {total, FinFunctor(c, total, ol, ml), FinFunctor(d, total, orr, mr)};
}

FinFunctor coproduct_copairing(const CoproductResult& cp, const FinFunctor& f, const FinFunctor& g) {
  const auto& total = cp.total;
  std::vector<int> omap(total->num_objects(), -1), mmap(total->num_morphisms(), -1);
  const auto& c = cp.inl.dom();
  const auto& d = cp.inr.dom();
  for (int i = 0; i < c->num_objects(); ++i) omap[cp.inl.on_obj(i)] = f.on_obj(i);
  for (int m = 0; m < c->num_morphisms(); ++m) mmap[cp.inl.on_mor(m)] = f.on_mor(m);
  for (int j = 0; j < d->num_objects(); ++j) omap[cp.inr.on_obj(j)] = g.on_obj(j);
  for (int k = 0; k < d->num_morphisms(); ++k) mmap[cp.inr.on_mor(k)] = g.on_mor(k);
  return FinFunctor(total, f.cod(), std::move(omap), std::move(mmap));
}

PullbackResult pullback_category(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.cod(), g.cod()))
    throw ValidationError("NotFunctorial", "pullback legs do not share a codomain");
  const auto& a = f.dom();
  const auto& b = g.dom();
  RawCategory raw;
  raw.name = "pb(" + a->name() + "," + b->name() + ")";
  for (int i = 0; i < a->num_objects(); ++i)
    for (int j = 0; j < b->num_objects(); ++j)
      if (f.on_obj(i) == g.on_obj(j))
        raw.objects.push_back(pair_name(a->object_name(i), b->object_name(j)));
  auto mname = [&](int m, int k) { return pair_name(a->morphism_name(m), b->morphism_name(k)); };
  for (int m = 0; m < a->num_morphisms(); ++m)
    for (int k = 0; k < b->num_morphisms(); ++k)
      if (f.on_mor(m) == g.on_mor(k))
        raw.morphisms.push_back({mname(m, k),
                                 pair_name(a->object_name(a->src(m)), b->object_name(b->src(k))),
                                 pair_name(a->object_name(a->tgt(m)), b->object_name(b->tgt(k)))});
  for (int i = 0; i < a->num_objects(); ++i)
    for (int j = 0; j < b->num_objects(); ++j)
      if (f.on_obj(i) == g.on_obj(j))
        raw.identities.push_back({pair_name(a->object_name(i), b->object_name(j)),
                                  mname(a->identity(i), b->identity(j))});
  for (int m2 = 0; m2 < a->num_morphisms(); ++m2)
    for (int k2 = 0; k2 < b->num_morphisms(); ++k2) {
      if (f.on_mor(m2) != g.on_mor(k2)) continue;
      for (int m1 = 0; m1 < a->num_morphisms(); ++m1)
        for (int k1 = 0; k1 < b->num_morphisms(); ++k1) {
          if (f.on_mor(m1) != g.on_mor(k1)) continue;
          if (a->composable(m2, m1) && b->composable(k2, k1))
            raw.composites.push_back({mname(m2, k2), mname(m1, k1),
                                      mname(a->compose(m2, m1), b->compose(k2, k1))});
        }
    }
  CatPtr total = build_category_ptr(raw);
  std::vector<int> o1(total->num_objects()), o2(total->num_objects());
  std::vector<int> m1(total->num_morphisms()), m2(total->num_morphisms());
  for (int i = 0; i < a->num_objects(); ++i)
    for (int j = 0; j < b->num_objects(); ++j) {
      if (f.on_obj(i) != g.on_obj(j)) continue;
      int o = total->object_index(pair_name(a->object_name(i), b->object_name(j)));
      o1[o] = i;
      o2[o] = j;
    }
  for (int m = 0; m < a->num_morphisms(); ++m)
    for (int k = 0; k < b->num_morphisms(); ++k) {
      if (f.on_mor(m) != g.on_mor(k)) continue;
      int idx = total->morphism_index(mname(m, k));
      m1[idx] = m;
      m2[idx] = k;
    }
  return {total, FinFunctor(total, a, o1, m1), FinFunctor(total, b, o2, m2)};
}

CommaResult comma_category(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.cod(), g.cod()))
    throw ValidationError("NotFunctorial", "comma legs do not share a codomain");
  const auto& a = f.dom();
  const auto& b = g.dom();
  const auto& c = f.cod();
  RawCategory raw;
  raw.name = "comma(" + a->name() + "," + b->name() + ")";
  // objects (x, y, h : F x -> G y)
  struct Obj {
    int x, y, h;
  };
  std::vector<Obj> objs;
  auto oname = [&](const Obj& o) {
    return "(" + a->object_name(o.x) + "|" + c->morphism_name(o.h) + "|" + b->object_name(o.y) + ")";
  };
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y)
      for (int h = 0; h < c->num_morphisms(); ++h)
        if (c->src(h) == f.on_obj(x) && c->tgt(h) == g.on_obj(y)) objs.push_back({x, y, h});
  for (const auto& o : objs) raw.objects.push_back(oname(o));
  // morphisms (u, v) with h' ∘ F u = G v ∘ h
  struct Mor {
    int from, to, u, v;
  };
  std::vector<Mor> mors;
  auto mor_name = [&](const Mor& m) {
    return "(" + a->morphism_name(m.u) + "," + b->morphism_name(m.v) + ")@" + oname(objs[m.from]);
  };
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    for (int j = 0; j < static_cast<int>(objs.size()); ++j)
      for (int u = 0; u < a->num_morphisms(); ++u) {
        if (a->src(u) != objs[i].x || a->tgt(u) != objs[j].x) continue;
        for (int v = 0; v < b->num_morphisms(); ++v) {
          if (b->src(v) != objs[i].y || b->tgt(v) != objs[j].y) continue;
          if (c->compose(objs[j].h, f.on_mor(u)) == c->compose(g.on_mor(v), objs[i].h))
            mors.push_back({i, j, u, v});
        }
      }
  for (const auto& m : mors)
    raw.morphisms.push_back({mor_name(m), oname(objs[m.from]), oname(objs[m.to])});
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    raw.identities.push_back(
        {oname(objs[i]), mor_name({i, i, a->identity(objs[i].x), b->identity(objs[i].y)})});
  for (const auto& m2 : mors)
    for (const auto& m1 : mors)
      if (m1.to == m2.from)
        raw.composites.push_back(
            {mor_name(m2), mor_name(m1),
             mor_name({m1.from, m2.to, a->compose(m2.u, m1.u), b->compose(m2.v, m1.v)})});
  CatPtr total = build_category_ptr(raw);

  std::vector<int> o0(total->num_objects()), o1(total->num_objects());
  std::vector<int> can(total->num_objects());
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    int o = total->object_index(oname(objs[i]));
    o0[o] = objs[i].x;
    o1[o] = objs[i].y;
    can[o] = objs[i].h;
  }
  std::vector<int> mu(total->num_morphisms()), mv(total->num_morphisms());
  for (const auto& m : mors) {
    int idx = total->morphism_index(mor_name(m));
    mu[idx] = m.u;
    mv[idx] = m.v;
  }
  FinFunctor d0(total, a, o0, mu), d1(total, b, o1, mv);
  NatTransf canonical(compose_functors(f, d0), compose_functors(g, d1), can);
  return {total, d0, d1, canonical};
}

SliceResult slice_category(const CatPtr& c, int m) {
  RawCategory raw;
  raw.name = c->name() + "/" + c->object_name(m);
  std::vector<int> objs;  // morphisms into m
  for (int h = 0; h < c->num_morphisms(); ++h)
    if (c->tgt(h) == m) objs.push_back(h);
  auto oname = [&](int h) { return c->morphism_name(h); };
  for (int h : objs) raw.objects.push_back(oname(h));
  struct Mor {
    int from, to, u;  // u with to ∘ u = from
  };
  std::vector<Mor> mors;
  auto mor_name = [&](const Mor& t) {
    return c->morphism_name(t.u) + ":" + oname(t.from) + "=>" + oname(t.to);
  };
  for (int f : objs)
    for (int g : objs)
      for (int u = 0; u < c->num_morphisms(); ++u)
        if (c->src(u) == c->src(f) && c->tgt(u) == c->src(g) && c->compose(g, u) == f)
          mors.push_back({f, g, u});
  for (const auto& t : mors) raw.morphisms.push_back({mor_name(t), oname(t.from), oname(t.to)});
  for (int f : objs) raw.identities.push_back({oname(f), mor_name({f, f, c->identity(c->src(f))})});
  for (const auto& t2 : mors)
    for (const auto& t1 : mors)
      if (t1.to == t2.from)
        raw.composites.push_back(
            {mor_name(t2), mor_name(t1), mor_name({t1.from, t2.to, c->compose(t2.u, t1.u)})});
  CatPtr total = build_category_ptr(raw);

  std::vector<int> omap(total->num_objects()), mmap(total->num_morphisms());
  std::vector<int> object_of(total->num_objects());
  for (int f : objs) {
    int o = total->object_index(oname(f));
    omap[o] = c->src(f);
    object_of[o] = f;
  }
  for (const auto& t : mors) mmap[total->morphism_index(mor_name(t))] = t.u;
  return {total, FinFunctor(total, c, omap, mmap), object_of};
}

}  // namespace twoslice::core

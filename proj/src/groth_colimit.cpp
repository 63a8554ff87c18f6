#include "twoslice/slice/groth_colimit.hpp"

namespace twoslice::slice {

using core::ValidationError;

int GrothColimit::total_obj(int j, int x) const {
  for (std::size_t i = 0; i < obj_decode.size(); ++i)
    if (obj_decode[i].first == j && obj_decode[i].second == x) return static_cast<int>(i);
  return -1;
}

GrothColimit oplax_colimit_groth(const CatModel& m, const CatDiagram& g) {
  const auto& j = g.shape;
  // functoriality of the covariant diagram
  for (int u = 0; u < j->num_morphisms(); ++u) {
    if (!core::same_category(g.on[u].dom(), g.at[j->src(u)]) ||
        !core::same_category(g.on[u].cod(), g.at[j->tgt(u)]))
      throw ValidationError("NotFunctorial", "diagram leg at " + j->morphism_name(u));
  }
  for (int o = 0; o < j->num_objects(); ++o)
    if (!(g.on[j->identity(o)] == core::identity_functor(g.at[o])))
      throw ValidationError("NotFunctorial", "diagram identity at " + j->object_name(o));
  for (int v = 0; v < j->num_morphisms(); ++v)
    for (int u = 0; u < j->num_morphisms(); ++u)
      if (j->composable(v, u) &&
          !(g.on[j->compose(v, u)] == core::compose_functors(g.on[v], g.on[u])))
        throw ValidationError("NotFunctorial",
                              "diagram composition at (" + j->morphism_name(v) + "," +
                                  j->morphism_name(u) + ")");

  GrothColimit out;
  out.shape = std::make_shared<groth::GrothResult>(oplax_shape(j));

  // covariant total: objects (j, x), morphisms (u, m) with m : G(u)(x) -> x'
  core::RawCategory raw;
  raw.name = "int(" + j->name() + ")";
  auto oname = [&](int jj, int x) {
    return "(" + j->object_name(jj) + "|" + g.at[jj]->object_name(x) + ")";
  };
  for (int jj = 0; jj < j->num_objects(); ++jj)
    for (int x = 0; x < g.at[jj]->num_objects(); ++x) {
      out.obj_decode.push_back({jj, x});
      raw.objects.push_back(oname(jj, x));
    }
  auto mname = [&](int u, int mm, int srcx) {
    return "(" + j->morphism_name(u) + "|" + g.at[j->tgt(u)]->morphism_name(mm) + "@" +
           g.at[j->src(u)]->object_name(srcx) + ")";
  };
  for (int u = 0; u < j->num_morphisms(); ++u) {
    int jt = j->tgt(u), js = j->src(u);
    for (int x = 0; x < g.at[js]->num_objects(); ++x)
      for (int mm = 0; mm < g.at[jt]->num_morphisms(); ++mm) {
        if (g.at[jt]->src(mm) != g.on[u].on_obj(x)) continue;
        out.mor_decode.push_back({u, mm});
        raw.morphisms.push_back(
            {mname(u, mm, x), oname(js, x), oname(jt, g.at[jt]->tgt(mm))});
      }
  }
  for (int jj = 0; jj < j->num_objects(); ++jj)
    for (int x = 0; x < g.at[jj]->num_objects(); ++x)
      raw.identities.push_back(
          {oname(jj, x), mname(j->identity(jj), g.at[jj]->identity(x), x)});
  // (u2, m2) ∘ (u1, m1) = (u2 ∘ u1, m2 ∘ G(u2)(m1))
  for (std::size_t q2 = 0; q2 < out.mor_decode.size(); ++q2)
    for (std::size_t q1 = 0; q1 < out.mor_decode.size(); ++q1) {
      auto [u2, m2] = out.mor_decode[q2];
      auto [u1, m1] = out.mor_decode[q1];
      if (!j->composable(u2, u1)) continue;
      int j2 = j->tgt(u1);
      // target of (u1, m1) must be the source of (u2, m2)
      int x_mid = g.at[j2]->tgt(m1);
      int src_x1 = -1;
      {  // recover the source object annotation of q1 and q2 from the names
        const std::string& nm = raw.morphisms[q1].name;
        auto at_pos = nm.rfind('@');
        std::string srcname = nm.substr(at_pos + 1, nm.size() - at_pos - 2);
        src_x1 = g.at[j->src(u1)]->object_index(srcname);
      }
      const std::string& nm2 = raw.morphisms[q2].name;
      auto at2 = nm2.rfind('@');
      int src_x2 = g.at[j->src(u2)]->object_index(nm2.substr(at2 + 1, nm2.size() - at2 - 2));
      if (src_x2 != x_mid) continue;
      int cu = j->compose(u2, u1);
      int jf = j->tgt(u2);
      int cm = g.at[jf]->compose(m2, g.on[u2].on_mor(m1));
      raw.composites.push_back(
          {raw.morphisms[q2].name, raw.morphisms[q1].name, mname(cu, cm, src_x1)});
    }
  out.total = core::build_category_ptr(raw);

  // canonical cocone over the oplax shape of J
  const auto& sh = *out.shape;
  const Fin2Category& shc = *sh.total;
  auto tables = std::make_shared<ShapeTables<CatModel>>();
  tables->objs.resize(shc.num_objects());
  tables->ones.resize(shc.num_one_cells());
  tables->twos.resize(shc.num_two_cells());
  OplaxCocone<CatModel> canonical;
  canonical.shape = sh.shape_model();
  canonical.apex = out.total;
  canonical.leg.resize(shc.num_objects());
  canonical.str.resize(shc.num_one_cells());

  auto insertion = [&](int jj) {
    std::vector<int> omap(g.at[jj]->num_objects()), mmap(g.at[jj]->num_morphisms());
    for (int x = 0; x < g.at[jj]->num_objects(); ++x)
      omap[x] = out.total->object_index(oname(jj, x));
    for (int mm = 0; mm < g.at[jj]->num_morphisms(); ++mm)
      mmap[mm] = out.total->morphism_index(
          mname(j->identity(jj), mm, g.at[jj]->src(mm)));
    return core::build_functor(g.at[jj], out.total, omap, mmap);
  };
  std::vector<FinFunctor> iota(j->num_objects());
  for (int jj = 0; jj < j->num_objects(); ++jj) iota[jj] = insertion(jj);

  for (int s = 0; s < shc.num_objects(); ++s) {
    int jj = sh.obj_decode[s].second;
    tables->objs[s] = g.at[jj];
    canonical.leg[s] = iota[jj];
  }
  const int n = shc.num_objects();
  for (int i = 0; i < n; ++i)
    for (int jdx = 0; jdx < n; ++jdx) {
      int js = sh.obj_decode[i].second, jt = sh.obj_decode[jdx].second;
      const auto& ones = sh.one_decode[i * n + jdx];
      for (std::size_t k = 0; k < ones.size(); ++k) {
        two::OneCell u{i, jdx, static_cast<int>(k)};
        int alpha = ones[k].second;  // morphism of J
        tables->ones[shc.one_index(u)] = g.on[alpha];
        // structure cell: component at x is (alpha, id_{G(alpha)(x)})
        std::vector<int> comp(g.at[js]->num_objects());
        for (int x = 0; x < g.at[js]->num_objects(); ++x)
          comp[x] = out.total->morphism_index(
              mname(alpha, g.at[jt]->identity(g.on[alpha].on_obj(x)), x));
        canonical.str[shc.one_index(u)] = core::build_nat_transf(
            iota[js], core::compose_functors(iota[jt], g.on[alpha]), comp);
      }
      const auto& twos = sh.two_decode[i * n + jdx];
      for (std::size_t k = 0; k < twos.size(); ++k) {
        two::TwoCell x2{i, jdx, static_cast<int>(k)};
        two::OneCell u = shc.two_src(x2);
        tables->twos[shc.two_index(x2)] = m.id2(tables->ones[shc.one_index(u)]);
      }
    }
  canonical.diagram = table_map(canonical.shape, tables);
  auto vrep = validate_cocone(m, canonical);
  if (!vrep.ok) throw ValidationError("NotNatural", vrep.failures.front());

  const CatModel* mp = &m;
  auto total = out.total;
  auto shape_keep = out.shape;
  auto jcat = j;
  auto gg = g;
  auto iotas = iota;
  out.cocone.cocone = canonical;
  out.cocone.mediate1 = [mp, total, shape_keep, jcat, gg, canonical,
                         oname](const OplaxCocone<CatModel>& probe) -> FinFunctor {
    const Fin2Category& shc2 = *shape_keep->total;
    std::vector<int> omap(total->num_objects()), mmap(total->num_morphisms());
    for (int o = 0; o < total->num_objects(); ++o) {
      int jj = -1, x = -1;
      for (int cand_j = 0; cand_j < jcat->num_objects(); ++cand_j)
        for (int cand_x = 0; cand_x < gg.at[cand_j]->num_objects(); ++cand_x)
          if (total->object_name(o) == oname(cand_j, cand_x)) {
            jj = cand_j;
            x = cand_x;
          }
      int s = -1;
      for (int si = 0; si < shc2.num_objects(); ++si)
        if (shape_keep->obj_decode[si].second == jj) s = si;
      omap[o] = probe.leg[s].on_obj(x);
    }
    for (int mo = 0; mo < total->num_morphisms(); ++mo) {
      // decode (u, mm, src_x) from the name
      const std::string& nm = total->morphism_name(mo);
      auto bar = nm.find('|');
      auto at = nm.rfind('@');
      int u = jcat->morphism_index(nm.substr(1, bar - 1));
      int js = jcat->src(u), jt = jcat->tgt(u);
      int mm = gg.at[jt]->morphism_index(nm.substr(bar + 1, at - bar - 1));
      int sx = gg.at[js]->object_index(nm.substr(at + 1, nm.size() - at - 2));
      int si = -1, sj = -1;
      for (int k = 0; k < shc2.num_objects(); ++k) {
        if (shape_keep->obj_decode[k].second == js) si = k;
        if (shape_keep->obj_decode[k].second == jt) sj = k;
      }
      // the unique shape 1-cell over u
      const auto& ones = shape_keep->one_decode[si * shc2.num_objects() + sj];
      int uidx = -1;
      for (std::size_t k = 0; k < ones.size(); ++k)
        if (ones[k].second == u) uidx = static_cast<int>(k);
      const auto& str = probe.str[shc2.one_index({si, sj, uidx})];
      mmap[mo] = probe.apex->compose(probe.leg[sj].on_mor(mm), str.at(sx));
    }
    auto med = core::build_functor(total, probe.apex, omap, mmap);
    if (!cocones_equal(*mp, whisker_cocone(*mp, med, canonical), probe))
      throw ValidationError("MediatorFactorizationFailed", "pairing functor does not factor");
    if (!mediator_unique(*mp, canonical, probe, med))
      throw ValidationError("NotUniversal", "pairing functor is not the unique mediator");
    return med;
  };
  out.cocone.mediate2 = [mp, total, shape_keep, jcat, canonical, iotas](
                            const CoconeModification<CatModel>& mod, const FinFunctor& q1,
                            const FinFunctor& q2) -> NatTransf {
    const Fin2Category& shc2 = *shape_keep->total;
    std::vector<int> comp(total->num_objects());
    for (int o = 0; o < total->num_objects(); ++o) {
      // locate (j, x) via the insertion images
      int done = 0;
      for (int s = 0; s < shc2.num_objects() && !done; ++s) {
        int jj = shape_keep->obj_decode[s].second;
        for (int x = 0; x < iotas[jj].dom()->num_objects(); ++x)
          if (iotas[jj].on_obj(x) == o) {
            comp[o] = mod.comp[s].at(x);
            done = 1;
            break;
          }
      }
    }
    auto gamma = core::build_nat_transf(q1, q2, comp);
    for (int s = 0; s < shc2.num_objects(); ++s) {
      int jj = shape_keep->obj_decode[s].second;
      if (!(core::rwhisk_nat(gamma, iotas[jj]) == mod.comp[s]))
        throw ValidationError("MediatorFactorizationFailed", "2-cell mediator does not factor");
    }
    int count = 0;
    for (const auto& cand : two::enumerate_nats(q1, q2)) {
      bool match = true;
      for (int s = 0; s < shc2.num_objects() && match; ++s)
        if (!(core::rwhisk_nat(cand, canonical.leg[s]) == mod.comp[s])) match = false;
      if (match) ++count;
    }
    if (count != 1)
      throw ValidationError("NotUniversal",
                            std::to_string(count) + " mediating 2-cells for a modification");
    return gamma;
  };
  return out;
}

CoproductColimit coproduct_colimit(const CatModel& m, const CatPtr& c, const CatPtr& d) {
  CoproductColimit out;
  auto disc2 = core::binary_coproduct_category(fixtures::one(), fixtures::one()).total;
  out.shape = std::make_shared<groth::GrothResult>(oplax_shape(disc2));
  out.coproduct = core::binary_coproduct_category(c, d);
  const Fin2Category& shc = *out.shape->total;
  int sl = -1, sr = -1;
  for (int s = 0; s < shc.num_objects(); ++s) {
    int x = out.shape->obj_decode[s].second;
    if (disc2->object_name(x)[0] == 'l')
      sl = s;
    else
      sr = s;
  }
  auto tables = std::make_shared<ShapeTables<CatModel>>();
  tables->objs.resize(shc.num_objects());
  tables->ones.resize(shc.num_one_cells());
  tables->twos.resize(shc.num_two_cells());
  tables->objs[sl] = c;
  tables->objs[sr] = d;
  OplaxCocone<CatModel> cocone;
  cocone.shape = out.shape->shape_model();
  cocone.apex = out.coproduct.total;
  cocone.leg.resize(shc.num_objects());
  cocone.str.resize(shc.num_one_cells());
  cocone.leg[sl] = out.coproduct.inl;
  cocone.leg[sr] = out.coproduct.inr;
  for (int s = 0; s < shc.num_objects(); ++s) {
    tables->ones[shc.one_index(shc.unit1(s))] = m.id1(tables->objs[s]);
    cocone.str[shc.one_index(shc.unit1(s))] = m.id2(cocone.leg[s]);
    tables->twos[shc.two_index(shc.id2(shc.unit1(s)))] = m.id2(m.id1(tables->objs[s]));
  }
  cocone.diagram = table_map(cocone.shape, tables);
  auto vrep = validate_cocone(m, cocone);
  if (!vrep.ok) throw ValidationError("NotNatural", vrep.failures.front());

  const CatModel* mp = &m;
  auto cp = out.coproduct;
  out.cocone.cocone = cocone;
  out.cocone.mediate1 = [mp, cp, cocone, sl, sr](const OplaxCocone<CatModel>& probe) {
    auto med = core::coproduct_copairing(cp, probe.leg[sl], probe.leg[sr]);
    if (!cocones_equal(*mp, whisker_cocone(*mp, med, cocone), probe))
      throw ValidationError("MediatorFactorizationFailed", "copairing does not factor");
    if (!mediator_unique(*mp, cocone, probe, med))
      throw ValidationError("NotUniversal", "copairing is not the unique mediator");
    return med;
  };
  out.cocone.mediate2 = [mp, cp, cocone, sl, sr](const CoconeModification<CatModel>& mod,
                                                 const FinFunctor& q1, const FinFunctor& q2) {
    std::vector<int> comp(cp.total->num_objects());
    for (int x = 0; x < cp.inl.dom()->num_objects(); ++x)
      comp[cp.inl.on_obj(x)] = mod.comp[sl].at(x);
    for (int x = 0; x < cp.inr.dom()->num_objects(); ++x)
      comp[cp.inr.on_obj(x)] = mod.comp[sr].at(x);
    auto gamma = core::build_nat_transf(q1, q2, comp);
    if (!(core::rwhisk_nat(gamma, cocone.leg[sl]) == mod.comp[sl]) ||
        !(core::rwhisk_nat(gamma, cocone.leg[sr]) == mod.comp[sr]))
      throw ValidationError("MediatorFactorizationFailed", "2-cell copairing does not factor");
    return gamma;
  };
  return out;
}

}  // namespace twoslice::slice

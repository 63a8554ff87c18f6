#include "twoslice/cli/commands.hpp"

#include "twoslice/adj/dom_adj.hpp"
#include "twoslice/cob/adjunction.hpp"
#include "twoslice/core/colimit1.hpp"
#include "twoslice/fixtures.hpp"
#include "twoslice/groth/groth.hpp"
#include "twoslice/slice/groth_colimit.hpp"
#include "twoslice/slice/laxslice.hpp"
#include "twoslice/slice/lift.hpp"

namespace twoslice::cli {

using core::ValidationError;
using nlohmann::ordered_json;
using report::Report;
using two::Fin2Model;
using two::OneCell;
using two::SliceModel;
using two::TwoCell;

namespace {

OneCell resolve_one(const Cat2Ptr& c, const CellRef& r) {
  int a = c->object_index(r.a), b = c->object_index(r.b);
  if (a < 0 || b < 0) throw ValidationError("UnresolvedName", r.a + " or " + r.b);
  int i = c->hom(a, b).object_index(r.name);
  if (i < 0) throw ValidationError("UnresolvedName", "1-cell " + r.name);
  return {a, b, i};
}

TwoCell resolve_two(const Cat2Ptr& c, const CellRef& r) {
  int a = c->object_index(r.a), b = c->object_index(r.b);
  if (a < 0 || b < 0) throw ValidationError("UnresolvedName", r.a + " or " + r.b);
  int i = c->hom(a, b).morphism_index(r.name);
  if (i < 0) throw ValidationError("UnresolvedName", "2-cell " + r.name);
  return {a, b, i};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ordered_json groth_total_json(const groth::GrothResult& g) {
  ordered_json j;
  j["total"] = g.total->name();
  j["objects"] = ordered_json::array();
  for (int i = 0; i < g.total->num_objects(); ++i) {
    auto [a, x] = g.obj_decode[i];
    j["objects"].push_back({{"name", g.total->object_name(i)},
                            {"base", g.w.base->object_name(a)},
                            {"fibre_object", g.w.at[a]->object_name(x)}});
  }
  j["one_cells"] = ordered_json::array();
  const int n = g.total->num_objects();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (std::size_t q = 0; q < g.one_decode[i * n + k].size(); ++q) {
        OneCell cell{i, k, static_cast<int>(q)};
        j["one_cells"].push_back({{"name", g.total->show1(cell)},
                                  {"tight", g.marking.is_tight(cell)},
                                  {"proj", g.w.base->show1(g.proj.on_one(cell))}});
      }
  return j;
}

}  // namespace

RealizedCocone realize_cocone(const SpecFile& spec, const CoconeDef& def) {
  RealizedCocone out;
  auto wi = spec.markings.find(def.shape);
  if (wi == spec.markings.end())
    throw ValidationError("UnresolvedName", "shape marking " + def.shape);
  out.shape = std::make_shared<groth::GrothResult>(groth::groth_construct(wi->second));
  out.ambient = spec.twocat(def.ambient);
  if (!out.ambient) throw ValidationError("UnresolvedName", "ambient " + def.ambient);
  Fin2Model amb{out.ambient.get(), nullptr};
  const auto& sh = *out.shape->total;
  int apex = out.ambient->object_index(def.apex);

  auto tables = std::make_shared<slice::ShapeTables<Fin2Model>>();
  tables->objs.assign(sh.num_objects(), -1);
  tables->ones.resize(sh.num_one_cells());
  tables->twos.resize(sh.num_two_cells());
  std::vector<char> has_one(sh.num_one_cells(), 0), has_two(sh.num_two_cells(), 0);
  for (const auto& [k, v] : def.dobj) {
    int s = sh.object_index(k);
    int o = out.ambient->object_index(v);
    if (s < 0 || o < 0) throw ValidationError("UnresolvedName", k + " or " + v);
    tables->objs[s] = o;
  }
  for (int s = 0; s < sh.num_objects(); ++s)
    if (tables->objs[s] < 0)
      throw ValidationError("UnresolvedName", "diagram object missing for " + sh.object_name(s));
  auto locate_shape_one = [&](const CellRef& r) {
    int a = sh.object_index(r.a), b = sh.object_index(r.b);
    if (a < 0 || b < 0) throw ValidationError("UnresolvedName", r.a + " or " + r.b);
    int i = sh.hom(a, b).object_index(r.name);
    if (i < 0) throw ValidationError("UnresolvedName", "shape 1-cell " + r.name);
    return OneCell{a, b, i};
  };
  auto locate_shape_two = [&](const CellRef& r) {
    int a = sh.object_index(r.a), b = sh.object_index(r.b);
    if (a < 0 || b < 0) throw ValidationError("UnresolvedName", r.a + " or " + r.b);
    int i = sh.hom(a, b).morphism_index(r.name);
    if (i < 0) throw ValidationError("UnresolvedName", "shape 2-cell " + r.name);
    return TwoCell{a, b, i};
  };
  for (const auto& [k, v] : def.done) {
    auto cell = locate_shape_one(k);
    tables->ones[sh.one_index(cell)] = resolve_one(out.ambient, v);
    has_one[sh.one_index(cell)] = 1;
  }
  // unit 1-cells map to units
  for (int s = 0; s < sh.num_objects(); ++s) {
    tables->ones[sh.one_index(sh.unit1(s))] = amb.id1(tables->objs[s]);
    has_one[sh.one_index(sh.unit1(s))] = 1;
  }
  for (int i = 0; i < sh.num_one_cells(); ++i)
    if (!has_one[i])
      throw ValidationError("UnresolvedName",
                            "diagram 1-cell missing for " + sh.show1(sh.one_at(i)));
  for (const auto& [k, v] : def.dtwo) {
    auto cell = locate_shape_two(k);
    tables->twos[sh.two_index(cell)] = resolve_two(out.ambient, v);
    has_two[sh.two_index(cell)] = 1;
  }
  // identity 2-cells are forced
  for (int i = 0; i < sh.num_two_cells(); ++i) {
    TwoCell x = sh.two_at(i);
    if (sh.is_id2(x)) {
      tables->twos[i] = amb.id2(tables->ones[sh.one_index(sh.two_src(x))]);
      has_two[i] = 1;
    }
  }
  for (int i = 0; i < sh.num_two_cells(); ++i)
    if (!has_two[i]) throw ValidationError("UnresolvedName", "diagram 2-cell missing");

  out.cocone.shape = out.shape->shape_model();
  out.cocone.diagram = slice::table_map(out.cocone.shape, tables);
  out.cocone.apex = apex;
  out.cocone.leg.assign(sh.num_objects(), OneCell{});
  out.cocone.str.assign(sh.num_one_cells(), TwoCell{});
  std::vector<char> has_leg(sh.num_objects(), 0), has_str(sh.num_one_cells(), 0);
  for (const auto& [k, v] : def.leg) {
    int s = sh.object_index(k);
    if (s < 0) throw ValidationError("UnresolvedName", "shape object " + k);
    out.cocone.leg[s] = resolve_one(out.ambient, v);
    has_leg[s] = 1;
  }
  for (int s = 0; s < sh.num_objects(); ++s)
    if (!has_leg[s])
      throw ValidationError("UnresolvedName", "leg missing for " + sh.object_name(s));
  for (const auto& [k, v] : def.str) {
    auto cell = locate_shape_one(k);
    out.cocone.str[sh.one_index(cell)] = resolve_two(out.ambient, v);
    has_str[sh.one_index(cell)] = 1;
  }
  // normality pins tight cells to identity structure cells
  Fin2Model shm = out.shape->shape_model();
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b))
        if (!has_str[sh.one_index(u)]) {
          if (!shm.tight(u))
            throw ValidationError("UnresolvedName",
                                  "structure cell missing for loose " + sh.show1(u));
          out.cocone.str[sh.one_index(u)] = amb.id2(out.cocone.leg[a]);
          has_str[sh.one_index(u)] = 1;
        }
  auto rep = slice::validate_cocone(amb, out.cocone);
  if (!rep.ok) throw ValidationError("NotNatural", rep.failures.front());
  return out;
}

namespace {

struct RealizedAdjunction {
  Cat2Ptr s_cat, e_cat;
  Fin2Model s_model, e_model;
  adj::LaxAdjunction<Fin2Model, Fin2Model> adj;
};

two::TwoFunctorMap<Fin2Model, Fin2Model> realize_two_functor(const SpecFile& spec,
                                                             const TwoFunctorDef& def,
                                                             Cat2Ptr& dom_out, Cat2Ptr& cod_out) {
  auto dom = spec.twocat(def.dom);
  auto cod = spec.twocat(def.cod);
  if (!dom || !cod) throw ValidationError("UnresolvedName", def.dom + " or " + def.cod);
  dom_out = dom;
  cod_out = cod;
  const int n = dom->num_objects();
  std::vector<int> omap(n, -1);
  for (const auto& [a, b] : def.obj) {
    int i = dom->object_index(a), j = cod->object_index(b);
    if (i < 0 || j < 0) throw ValidationError("UnresolvedName", a + " or " + b);
    omap[i] = j;
  }
  for (int i = 0; i < n; ++i)
    if (omap[i] < 0)
      throw ValidationError("UnresolvedName", "object image missing for " + dom->object_name(i));
  std::vector<std::vector<int>> ones(n * n), twos(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ones[a * n + b].assign(dom->hom(a, b).num_objects(), -1);
      twos[a * n + b].assign(dom->hom(a, b).num_morphisms(), -1);
    }
  for (const auto& [x, y] : def.one) {
    auto cx = resolve_one(dom, x);
    auto cy = resolve_one(cod, y);
    ones[cx.a * n + cx.b][cx.idx] = cy.idx;
  }
  for (const auto& [x, y] : def.two) {
    auto cx = resolve_two(dom, x);
    auto cy = resolve_two(cod, y);
    twos[cx.a * n + cx.b][cx.idx] = cy.idx;
  }
  // units and identity 2-cells are forced
  for (int a = 0; a < n; ++a) {
    auto u = dom->unit1(a);
    if (ones[a * n + a][u.idx] < 0) ones[a * n + a][u.idx] = cod->unit1(omap[a]).idx;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& h = dom->hom(a, b);
      for (int x = 0; x < h.num_morphisms(); ++x) {
        if (!h.is_identity(x) || twos[a * n + b][x] >= 0) continue;
        int f_img = ones[a * n + b][h.src(x)];
        if (f_img < 0)
          throw ValidationError("UnresolvedName", "1-cell image missing in 2-functor block");
        twos[a * n + b][x] =
            cod->id2({omap[a], omap[b], f_img}).idx;
      }
      for (int x = 0; x < h.num_objects(); ++x)
        if (ones[a * n + b][x] < 0)
          throw ValidationError("UnresolvedName", "1-cell image missing in 2-functor block");
      for (int x = 0; x < h.num_morphisms(); ++x)
        if (twos[a * n + b][x] < 0)
          throw ValidationError("UnresolvedName", "2-cell image missing in 2-functor block");
    }
  auto tf = two::build_2functor(dom, cod, omap, ones, twos);
  return two::from_two_functor(tf);
}

RealizedAdjunction realize_adjunction(const SpecFile& spec, const AdjunctionDef& def) {
  RealizedAdjunction out;
  Cat2Ptr ldom, lcod, rdom, rcod;
  auto left = realize_two_functor(spec, def.left, ldom, lcod);
  auto right = realize_two_functor(spec, def.right, rdom, rcod);
  out.s_cat = ldom;
  out.e_cat = lcod;
  out.s_model = {out.s_cat.get(), nullptr};
  out.e_model = {out.e_cat.get(), nullptr};
  out.adj.left = left;
  out.adj.right = right;
  auto s_cat = out.s_cat;
  auto e_cat = out.e_cat;
  auto unit_at = def.unit_at;
  auto unit_str = def.unit_str;
  auto counit_at = def.counit_at;
  auto counit_str = def.counit_str;
  auto s_at = def.s_at;
  auto t_at = def.t_at;
  out.adj.unit.comp = [s_cat, unit_at](const int& a) {
    for (const auto& [o, r] : unit_at)
      if (s_cat->object_index(o) == a) return resolve_one(s_cat, r);
    throw ValidationError("UnresolvedName", "unit component missing");
  };
  out.adj.unit.str = [s_cat, unit_str](const OneCell& f) {
    for (const auto& [k, r] : unit_str)
      if (resolve_one(s_cat, k) == f) return resolve_two(s_cat, r);
    throw ValidationError("UnresolvedName", "unit structure cell missing");
  };
  out.adj.counit.comp = [e_cat, counit_at](const int& a) {
    for (const auto& [o, r] : counit_at)
      if (e_cat->object_index(o) == a) return resolve_one(e_cat, r);
    throw ValidationError("UnresolvedName", "counit component missing");
  };
  out.adj.counit.str = [e_cat, counit_str](const OneCell& f) {
    for (const auto& [k, r] : counit_str)
      if (resolve_one(e_cat, k) == f) return resolve_two(e_cat, r);
    throw ValidationError("UnresolvedName", "counit structure cell missing");
  };
  out.adj.s = [e_cat, s_cat, s_at](const int& a) {
    for (const auto& [o, r] : s_at)
      if (s_cat->object_index(o) == a) return resolve_two(e_cat, r);
    throw ValidationError("UnresolvedName", "s component missing");
  };
  out.adj.t = [s_cat, e_cat, t_at](const int& a) {
    for (const auto& [o, r] : t_at)
      if (e_cat->object_index(o) == a) return resolve_two(s_cat, r);
    throw ValidationError("UnresolvedName", "t component missing");
  };
  return out;
}

void add_input(Report& rep, const CommandOptions& opts) {
  if (!opts.spec_name.empty())
    rep.inputs.push_back({opts.spec_name, report::fnv1a_hex(opts.spec_text)});
}

// dim-1 probe suite: universal cocones over small shapes into the category
std::vector<core::Cocone1> dim1_probes(const core::CatPtr& c) {
  std::vector<core::Cocone1> out;
  std::vector<core::CatPtr> shapes = {fixtures::one(), fixtures::two()};
  auto disc2 = core::binary_coproduct_category(fixtures::one(), fixtures::one()).total;
  shapes.push_back(disc2);
  for (const auto& shape : shapes)
    for (const auto& d : two::enumerate_functors(shape, c))
      for (int apex = 0; apex < c->num_objects(); ++apex)
        for (const auto& cc : core::enumerate_cocones1(d, apex))
          if (core::decide_colimit_dim1(cc).universal) out.push_back(cc);
  return out;
}

}  // namespace

Report run_command(const std::string& command, const SpecFile& spec, const CommandOptions& opts) {
  Report rep;
  rep.command = command;
  add_input(rep, opts);

  if (command == "validate") {
    bool all = opts.arg("all") == "1" || opts.arg("all") == "true";
    // blocks were validated at parse time; report one entry per block
    for (const auto& [kind, name] : spec.order) rep.add(kind + " " + name, true);
    if (all) {
      for (const auto& name : {"ONE", "TWO", "PAIR", "TRI", "SQ"})
        rep.add(std::string("catalog category ") + name,
                fixtures::catalog_category(name) != nullptr);
      for (const auto& name : {"C2CAT", "GRPD2"})
        rep.add(std::string("catalog 2category ") + name,
                fixtures::catalog_2category(name) != nullptr);
      rep.add("catalog marking WFIX", true);
      rep.add("catalog opfibration OPF", cob::validate_split_opfibration(fixtures::opf()).ok);
    }
    return rep;
  }

  if (command == "groth") {
    std::string mname = opts.arg("marking");
    groth::GrothResult g = [&] {
      auto it = spec.markings.find(mname);
      if (it != spec.markings.end()) return groth::groth_construct(it->second);
      if (mname == "WFIX") return groth::groth_construct(fixtures::wfix());
      throw ValidationError("UnresolvedName", "marking " + mname);
    }();
    rep.add("marking valid", true);
    rep.add("total 2-category valid", true);
    auto fibrep = groth::check_two_set_fibration(groth::cloven_of_groth(g));
    rep.add("projection is a split two-set fibration", fibrep.ok && fibrep.split);
    rep.certificates.push_back(groth_total_json(g));
    return rep;
  }

  if (command == "laxslice") {
    auto amb = spec.twocat(opts.arg("ambient"));
    if (!amb) throw ValidationError("UnresolvedName", "ambient " + opts.arg("ambient"));
    int m = amb->object_index(opts.arg("object"));
    if (m < 0) throw ValidationError("UnresolvedName", "object " + opts.arg("object"));
    auto ls = slice::lax_slice(amb, m);
    rep.add("lax slice realized", true);
    auto iso = slice::check_representable_iso(amb, m);
    rep.add("isomorphic to the groth construction of the representable", iso.ok, {iso.detail});
    ordered_json j;
    j["objects"] = ls.mat.cat->num_objects();
    j["one_cells"] = ls.mat.cat->num_one_cells();
    j["two_cells"] = ls.mat.cat->num_two_cells();
    int tight = 0;
    for (int a = 0; a < ls.mat.cat->num_objects(); ++a)
      for (int b = 0; b < ls.mat.cat->num_objects(); ++b)
        for (auto u : ls.mat.cat->one_cells(a, b))
          if (ls.mat.marking.is_tight(u)) ++tight;
    j["tight_one_cells"] = tight;
    rep.certificates.push_back(j);
    return rep;
  }

  if (command == "decide-colimit") {
    auto it = spec.raw_cocones.find(opts.arg("cocone"));
    if (it == spec.raw_cocones.end())
      throw ValidationError("UnresolvedName", "cocone " + opts.arg("cocone"));
    if (!opts.arg("ambient").empty() && opts.arg("ambient") != it->second.ambient)
      throw ValidationError("UnresolvedName", "ambient flag disagrees with the cocone block");
    auto rc = realize_cocone(spec, it->second);
    Fin2Model amb{rc.ambient.get(), nullptr};
    auto cert = slice::decide_oplax_colimit(amb, rc.cocone);
    rep.add("cocone valid", true);
    rep.add("universal", cert.universal, cert.universal ? std::vector<std::string>{}
                                                        : std::vector<std::string>{cert.failure});
    ordered_json j;
    j["mediators"] = ordered_json::array();
    for (const auto& row : cert.rows) j["mediators"].push_back({{"probe", row.probe},
                                                                {"mediator", row.mediator}});
    rep.certificates.push_back(j);
    return rep;
  }

  if (command == "lift-cocone") {
    auto it = spec.raw_cocones.find(opts.arg("cocone"));
    if (it == spec.raw_cocones.end())
      throw ValidationError("UnresolvedName", "cocone " + opts.arg("cocone"));
    auto rc = realize_cocone(spec, it->second);
    Fin2Model amb{rc.ambient.get(), nullptr};
    int m = rc.ambient->object_index(opts.arg("object"));
    if (m < 0) throw ValidationError("UnresolvedName", "object " + opts.arg("object"));
    auto cert = slice::decide_oplax_colimit(amb, rc.cocone);
    rep.add("input certified universal", cert.universal,
            cert.universal ? std::vector<std::string>{} : std::vector<std::string>{cert.failure});
    if (!cert.universal) return rep;
    SliceModel<Fin2Model> sl{&amb, m};
    int lifted = 0;
    for (const auto& q : sl.objects()) {
      if (!amb.eq_obj(amb.one_src(q.g), rc.cocone.apex)) continue;
      auto lift = slice::lift_cocone_dom(sl, rc.cocone, q);
      auto up = slice::decide_oplax_colimit(sl, lift.theta_bar);
      rep.add("lift at " + sl.show_obj(q) + " universal", up.universal,
              up.universal ? std::vector<std::string>{} : std::vector<std::string>{up.failure});
      ++lifted;
    }
    rep.add("objects over the apex", lifted > 0,
            {std::to_string(lifted) + " objects over the apex"});
    return rep;
  }

  if (command == "check-colim-fibration") {
    std::string dim = opts.arg("dim", "1");
    if (dim == "1") {
      auto c = spec.category(opts.arg("category"));
      if (!c) throw ValidationError("UnresolvedName", "category " + opts.arg("category"));
      int m = c->object_index(opts.arg("object"));
      if (m < 0) throw ValidationError("UnresolvedName", "object " + opts.arg("object"));
      auto probes = dim1_probes(c);
      auto s = core::slice_category(c, m);
      auto r = core::check_colim_fibration_dim1(s.dom_functor, probes);
      rep.add("dom of the slice is a discrete fibration", true);
      rep.add("all probes lift to universal cocones", r.ok);
      ordered_json j;
      j["probes"] = static_cast<int>(probes.size());
      j["lifts"] = static_cast<int>(r.results.size());
      rep.certificates.push_back(j);
      return rep;
    }
    auto amb = spec.twocat(opts.arg("ambient"));
    if (!amb) throw ValidationError("UnresolvedName", "ambient " + opts.arg("ambient"));
    int m = amb->object_index(opts.arg("object"));
    if (m < 0) throw ValidationError("UnresolvedName", "object " + opts.arg("object"));
    Fin2Model base{amb.get(), nullptr};
    SliceModel<Fin2Model> sl{&base, m};
    auto shape = std::make_shared<groth::GrothResult>(slice::oplax_shape(fixtures::one()));
    std::vector<slice::OplaxCocone<Fin2Model>> suite;
    for (const auto& diag : slice::enumerate_diagrams(shape->shape_model(), base))
      for (const auto& q : base.objects())
        for (const auto& c : slice::enumerate_cocones(shape->shape_model(), diag, base, q))
          if (slice::decide_oplax_colimit(base, c).universal) suite.push_back(c);
    auto r = slice::check_2colim_fibration_dom(sl, suite);
    rep.add("all lifted cocones universal; cartesian reflection holds", r.ok);
    ordered_json j;
    j["suite"] = static_cast<int>(suite.size());
    j["lifts_checked"] = r.lifts_checked;
    j["reflections_checked"] = r.reflections_checked;
    rep.certificates.push_back(j);
    return rep;
  }

  if (command == "check-adjunction") {
    auto it = spec.raw_adjunctions.find(opts.arg("adjunction"));
    if (it == spec.raw_adjunctions.end())
      throw ValidationError("UnresolvedName", "adjunction " + opts.arg("adjunction"));
    auto ra = realize_adjunction(spec, it->second);
    auto probes = adj::full_probes(ra.s_model, ra.e_model);
    auto [laws, cls] = adj::validate_lax_adjunction(ra.s_model, ra.e_model, ra.adj, probes);
    rep.add("laws", laws.ok, laws.failures);
    rep.add("right_semi_lax", cls.right_semi_lax);
    rep.add("strict", cls.strict);
    rep.add("loose_F", cls.loose_f);
    rep.add("tight_F", cls.tight_f);
    return rep;
  }

  if (command == "dom-adjunction") {
    auto amb = spec.twocat(opts.arg("ambient"));
    if (!amb) throw ValidationError("UnresolvedName", "ambient " + opts.arg("ambient"));
    int m = amb->object_index(opts.arg("object"));
    if (m < 0) throw ValidationError("UnresolvedName", "object " + opts.arg("object"));
    Fin2Model base{amb.get(), nullptr};
    SliceModel<Fin2Model> sl{&base, m};
    auto prods = adj::fin2_products(base);
    auto adjunction = adj::dom_product_adjunction(sl, prods);
    auto probes = adj::full_probes(sl, base);
    auto [laws, cls] = adj::validate_lax_adjunction(sl, base, adjunction, probes);
    rep.add("laws", laws.ok, laws.failures);
    rep.add("strict", cls.strict);
    rep.add("right_semi_lax", cls.right_semi_lax);
    rep.add("tight_F", cls.tight_f);
    bool hom_ok = true, chi_id = true, ts_id = true;
    for (const auto& t : probes.s_objs)
      for (const auto& e : probes.e_objs) {
        auto hom = adj::check_hom_adjunction(sl, base, adjunction, t, e);
        hom_ok = hom_ok && hom.report.ok;
        chi_id = chi_id && hom.chi_identity;
        ts_id = ts_id && hom.ts_identity;
      }
    rep.add("hom adjunction triangle identities", hom_ok);
    rep.add("chi = id", chi_id);
    rep.add("T after S = Id", ts_id);
    return rep;
  }

  if (command == "change-of-base") {
    auto ti = spec.opfibrations.find(opts.arg("opfibration"));
    cob::SplitOpfibration t;
    if (ti != spec.opfibrations.end())
      t = ti->second;
    else if (opts.arg("opfibration") == "OPF")
      t = fixtures::opf();
    else
      throw ValidationError("UnresolvedName", "opfibration " + opts.arg("opfibration"));
    std::string action = opts.arg("action", "check");
    two::CatModel mb{{t.tau.cod(), fixtures::one()}, opts.size_limit};
    two::CatModel me{{t.tau.dom(), fixtures::one()}, opts.size_limit};
    if (action == "tau-star") {
      auto fi = spec.functors.find(opts.arg("functor"));
      if (fi == spec.functors.end())
        throw ValidationError("UnresolvedName", "functor " + opts.arg("functor"));
      cob::ChangeOfBase cb(t, &mb, &me);
      auto so = cb.star_obj(fi->second);
      rep.add("pullback computed", true);
      ordered_json j;
      j["objects"] = so.g.dom()->num_objects();
      j["morphisms"] = so.g.dom()->num_morphisms();
      rep.certificates.push_back(j);
      return rep;
    }
    if (action == "tau-lower-star") {
      auto fi = spec.functors.find(opts.arg("functor"));
      if (fi == spec.functors.end())
        throw ValidationError("UnresolvedName", "functor " + opts.arg("functor"));
      auto hc = cob::tau_lower_star(t, fi->second, opts.size_limit);
      rep.add("category of pairs computed", true);
      ordered_json j;
      j["objects"] = ordered_json::array();
      for (std::size_t i = 0; i < hc.objs.size(); ++i) {
        ordered_json o;
        o["name"] = hc.total->object_name(static_cast<int>(i));
        o["over"] = t.tau.cod()->object_name(hc.objs[i].x);
        o["filler"] = ordered_json::array();
        for (int x = 0; x < hc.fibre[hc.objs[i].x].first->num_objects(); ++x)
          o["filler"].push_back(
              t.tau.dom()->morphism_name(hc.objs[i].alpha.at(x)));
        j["objects"].push_back(o);
      }
      j["morphisms"] = static_cast<int>(hc.mors.size());
      rep.certificates.push_back(j);
      return rep;
    }
    // action == "check"
    std::vector<core::FinFunctor> fs, hs;
    for (const auto& n : split_list(opts.arg("probe-f"))) {
      auto fi = spec.functors.find(n);
      if (fi == spec.functors.end()) throw ValidationError("UnresolvedName", "functor " + n);
      fs.push_back(fi->second);
    }
    for (const auto& n : split_list(opts.arg("probe-h"))) {
      auto fi = spec.functors.find(n);
      if (fi == spec.functors.end()) throw ValidationError("UnresolvedName", "functor " + n);
      hs.push_back(fi->second);
    }
    if (fs.empty()) fs.push_back(core::identity_functor(t.tau.cod()));
    if (hs.empty()) hs.push_back(core::identity_functor(t.tau.dom()));
    auto r = cob::check_cob_adjunction(t, fs, hs, mb, me);
    rep.add("laws", r.laws.ok, r.laws.failures);
    rep.add("strict", r.cls.strict);
    rep.add("right_semi_lax", r.cls.right_semi_lax);
    rep.add("loose_F", r.cls.loose_f);
    rep.add("counit has a loose component", r.loose_counit_witness);
    rep.add("not tight_F", !r.cls.tight_f);
    rep.add("T after S = Id at probed pairs", r.hom_ts_identity);
    rep.add("mediator of the counit is the identity", r.mediator_of_counit_identity);
    return rep;
  }

  if (command == "preserve") {
    auto it = spec.raw_diagrams.find(opts.arg("diagram"));
    if (it == spec.raw_diagrams.end())
      throw ValidationError("UnresolvedName", "diagram " + opts.arg("diagram"));
    auto rc = realize_cocone(spec, it->second);
    Fin2Model base{rc.ambient.get(), nullptr};
    SliceModel<Fin2Model> sl{&base, rc.cocone.apex};
    auto h = slice::cocone_to_diagram(sl, rc.cocone);
    int universal_total = 0, preserved = 0, with_loose = 0;
    for (const auto& tobj : sl.objects())
      for (const auto& zeta :
           slice::enumerate_cocones(rc.cocone.shape, h.map, sl, tobj)) {
        if (!slice::decide_oplax_colimit(sl, zeta).universal) continue;
        ++universal_total;
        bool loose = false;
        for (const auto& l : zeta.leg)
          if (!sl.tight(l)) loose = true;
        if (loose) ++with_loose;
        auto img = slice::dom_cocone(sl, zeta);
        if (slice::decide_oplax_colimit(base, img).universal) ++preserved;
      }
    rep.add("all universal cocones preserved by dom",
            universal_total == preserved && universal_total > 0,
            {std::to_string(preserved) + "/" + std::to_string(universal_total) +
             " preserved, " + std::to_string(with_loose) + " with a loose component"});
    return rep;
  }

  throw ValidationError("UnknownCommand", command);
}

}  // namespace twoslice::cli

#pragma once

#include "twoslice/slice/bijection.hpp"
#include "twoslice/slice/oracle.hpp"

namespace twoslice::slice {

// The image of an upstairs cocone under the domain 2-functor.
template <class B>
OplaxCocone<B> dom_cocone(const SliceModel<B>& sl, const OplaxCocone<SliceModel<B>>& zeta) {
  const Fin2Category& sh = *zeta.shape.cat;
  OplaxCocone<B> out;
  out.shape = zeta.shape;
  out.diagram = compose_maps<Fin2Model, SliceModel<B>, B>(dom_map(sl), zeta.diagram);
  out.apex = sl.base->one_src(zeta.apex.g);
  out.leg.resize(sh.num_objects());
  out.str.resize(sh.num_one_cells());
  for (int s = 0; s < sh.num_objects(); ++s) out.leg[s] = zeta.leg[s].fhat;
  for (int i = 0; i < sh.num_one_cells(); ++i) out.str[i] = zeta.str[i].delta;
  return out;
}

template <class B>
struct DomLift {
  FDiagram<B> dbar;
  OplaxCocone<SliceModel<B>> theta_bar;
};

// Lifts (D, theta) through dom to the slice object q over the apex: legs are
// the chosen cartesian (identity-filled) triangles, structure cells the unique
// 2-cell lifts, and the lifted diagram has cells (D(u), q * theta_u).
template <class B>
DomLift<B> lift_cocone_dom(const SliceModel<B>& sl, const OplaxCocone<B>& theta,
                           const typename SliceModel<B>::Obj& q) {
  const B& base = *sl.base;
  const Fin2Category& sh = *theta.shape.cat;
  if (!base.eq_obj(base.one_src(q.g), theta.apex))
    throw core::ValidationError("NotLiftable", "object is not over the cocone apex");
  DomLift<B> out;
  auto t = std::make_shared<ShapeTables<SliceModel<B>>>();
  t->objs.resize(sh.num_objects());
  t->ones.resize(sh.num_one_cells());
  t->twos.resize(sh.num_two_cells());
  out.theta_bar.shape = theta.shape;
  out.theta_bar.apex = q;
  out.theta_bar.leg.resize(sh.num_objects());
  out.theta_bar.str.resize(sh.num_one_cells());
  for (int s = 0; s < sh.num_objects(); ++s) {
    auto composite = base.comp1(q.g, theta.leg[s]);
    t->objs[s] = {composite};
    out.theta_bar.leg[s] = {theta.leg[s], base.id2(composite), composite, q.g};
  }
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) {
        t->ones[sh.one_index(u)] =
            make_slice_one(sl, theta.diagram.on_one(u), base.lwhisk(q.g, theta.str_at(u)),
                           t->objs[a].g, t->objs[b].g);
        out.theta_bar.str[sh.one_index(u)] = {theta.str_at(u), out.theta_bar.leg[a],
                                              sl.comp1(out.theta_bar.leg[b],
                                                       t->ones[sh.one_index(u)])};
      }
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b))
        for (auto v : sh.one_cells(a, b))
          for (auto x : sh.two_cells(u, v))
            t->twos[sh.two_index(x)] =
                make_slice_two(sl, theta.diagram.on_two(x), t->ones[sh.one_index(u)],
                               t->ones[sh.one_index(v)]);
  out.dbar.shape = theta.shape;
  out.dbar.map = table_map(theta.shape, t);
  out.theta_bar.diagram = out.dbar.map;
  auto rep = validate_cocone(sl, out.theta_bar);
  if (!rep.ok) throw core::ValidationError("NotLiftable", rep.failures.front());
  return out;
}

// Generic finite-mode lift through any cloven two-set fibration on tabulated
// data: legs are the chosen cartesian lifts, structure cells the unique
// 2-cell lifts, and the lifted diagram's 1-cells the unique factorizations
// through the cartesian legs.
struct ClovenLift {
  TwoFunctorMap<Fin2Model, Fin2Model> dbar;
  OplaxCocone<Fin2Model> theta_bar;
};

inline ClovenLift lift_cocone_cloven(const groth::ClovenPair& fib,
                                     const OplaxCocone<Fin2Model>& theta, int s_obj) {
  const two::Fin2Category& sh = *theta.shape.cat;
  const two::Fin2Category& total = *fib.total_cat;
  Fin2Model total_model{fib.total_cat.get(), nullptr};
  if (fib.p.on_obj(s_obj) != theta.apex)
    throw core::ValidationError("NotLiftable", "object is not over the cocone apex");
  ClovenLift out;
  auto t = std::make_shared<ShapeTables<Fin2Model>>();
  t->objs.resize(sh.num_objects());
  t->ones.resize(sh.num_one_cells());
  t->twos.resize(sh.num_two_cells());
  out.theta_bar.shape = theta.shape;
  out.theta_bar.apex = s_obj;
  out.theta_bar.leg.resize(sh.num_objects());
  out.theta_bar.str.resize(sh.num_one_cells());
  for (int s = 0; s < sh.num_objects(); ++s) {
    out.theta_bar.leg[s] = groth::cartesian_lift(fib, theta.leg[s], s_obj);
    t->objs[s] = out.theta_bar.leg[s].a;
  }
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) {
        auto x = groth::lift_2cell_fixed_domain(fib, theta.str_at(u), out.theta_bar.leg[a]);
        out.theta_bar.str[sh.one_index(u)] = x;
        auto xi = total.two_tgt(x);
        // factor xi through the cartesian leg at b
        std::vector<two::OneCell> found;
        for (auto w : total.one_cells(t->objs[a], t->objs[b]))
          if (total.comp1(out.theta_bar.leg[b], w) == xi &&
              fib.p.on_one(w) == theta.diagram.on_one(u))
            found.push_back(w);
        if (found.size() != 1)
          throw core::ValidationError("NotLiftable", std::to_string(found.size()) +
                                                         " factorizations through a cartesian leg");
        t->ones[sh.one_index(u)] = found[0];
      }
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b))
        for (auto v : sh.one_cells(a, b))
          for (auto d : sh.two_cells(u, v)) {
            auto x = groth::lift_2cell_fixed_domain(fib, theta.diagram.on_two(d),
                                                    t->ones[sh.one_index(u)]);
            if (total.two_tgt(x) != t->ones[sh.one_index(v)])
              throw core::ValidationError("NotLiftable", "2-cell lift lands off the diagram");
            t->twos[sh.two_index(d)] = x;
          }
  out.dbar = table_map(theta.shape, t);
  out.theta_bar.diagram = out.dbar;
  auto rep = validate_cocone(total_model, out.theta_bar);
  if (!rep.ok) throw core::ValidationError("NotLiftable", rep.failures.front());
  return out;
}

template <class B>
typename B::Two invert_two_cell(const B& base, const typename B::Two& x) {
  auto f = base.two_src(x), g = base.two_tgt(x);
  for (const auto& inv : base.two_cells(g, f))
    if (base.eq2(base.vcomp(inv, x), base.id2(f)) && base.eq2(base.vcomp(x, inv), base.id2(g)))
      return inv;
  throw core::ValidationError("NotCartesian", "2-cell has no inverse");
}

// The mediator out of a cartesian cocone upstairs, built from the universal
// property of its image downstairs: dom-part from the 1-dimensional property,
// filling from the 2-dimensional one applied to the pasted modification.
template <class B>
typename SliceModel<B>::One dom_mediator_1(const SliceModel<B>& sl,
                                           const OplaxCocone<SliceModel<B>>& zeta,
                                           const UniversalCocone<B>& down,
                                           const OplaxCocone<SliceModel<B>>& sigma) {
  const B& base = *sl.base;
  const Fin2Category& sh = *zeta.shape.cat;
  for (const auto& l : zeta.leg)
    if (!sl.cartesian(l)) throw core::ValidationError("NotCartesian", "a cocone leg is not cartesian");
  if (!cocones_equal(base, dom_cocone(sl, zeta), down.cocone))
    throw core::ValidationError("NotUniversalBelow", "certified cocone is not the dom image");
  auto ghat = down.mediate1(dom_cocone(sl, sigma));
  const auto& tg = zeta.apex.g;
  const auto& gg = sigma.apex.g;
  // Xi : (t ∘ -) ∘ (dom ζ) ==> (g ∘ ghat ∘ -) ∘ (dom ζ)
  CoconeModification<B> xi;
  xi.comp.resize(sh.num_objects());
  for (int s = 0; s < sh.num_objects(); ++s)
    xi.comp[s] = base.vcomp(sigma.leg[s].gamma, invert_two_cell(base, zeta.leg[s].gamma));
  auto from = whisker_cocone(base, tg, down.cocone);
  auto to = whisker_cocone(base, base.comp1(gg, ghat), down.cocone);
  auto xrep = validate_modification(base, from, to, xi);
  if (!xrep.ok)
    throw core::ValidationError("NotUniversalBelow", "pasted family is not a modification: " +
                                                         xrep.failures.front());
  auto gamma = down.mediate2(xi, tg, base.comp1(gg, ghat));
  typename SliceModel<B>::One mediator{ghat, gamma, tg, gg};
  if (!cocones_equal(sl, whisker_cocone(sl, mediator, zeta), sigma))
    throw core::ValidationError("MediatorFactorizationFailed", "mediator does not factor the probe");
  return mediator;
}

template <class B>
typename SliceModel<B>::Two dom_mediator_2(const SliceModel<B>& sl,
                                           const OplaxCocone<SliceModel<B>>& zeta,
                                           const UniversalCocone<B>& down,
                                           const CoconeModification<SliceModel<B>>& Sigma,
                                           const typename SliceModel<B>::One& u1,
                                           const typename SliceModel<B>::One& u2) {
  const B& base = *sl.base;
  const Fin2Category& sh = *zeta.shape.cat;
  CoconeModification<B> sd;
  sd.comp.resize(sh.num_objects());
  for (int s = 0; s < sh.num_objects(); ++s) sd.comp[s] = Sigma.comp[s].delta;
  auto ghat = down.mediate2(sd, u1.fhat, u2.fhat);
  auto out = two::make_slice_two(sl, ghat, u1, u2);
  for (int s = 0; s < sh.num_objects(); ++s)
    if (!sl.eq2(sl.rwhisk(out, zeta.leg[s]), Sigma.comp[s]))
      throw core::ValidationError("MediatorFactorizationFailed",
                                  "2-cell mediator does not factor the modification");
  return out;
}

template <class B>
struct LiftedColimit {
  typename SliceModel<B>::Obj q;
  FDiagram<B> recovered;
  UniversalCocone<SliceModel<B>> theta_bar;
};

// Lifting of colimits along dom: the mediator of the cocone associated to the
// F-diagram picks the apex object, the lift of the universal cocone is again
// universal, and the lifted diagram is the one we started from.
template <class B>
LiftedColimit<B> lift_colimit(const SliceModel<B>& sl, const FDiagram<B>& h,
                              const UniversalCocone<B>& down) {
  auto lambda = diagram_to_cocone(sl, h);
  auto q1 = down.mediate1(lambda);
  const B& base = *sl.base;
  if (!cocones_equal(base, whisker_cocone(base, q1, down.cocone), lambda))
    throw core::ValidationError("MediatorFactorizationFailed", "apex mediator does not factor");
  LiftedColimit<B> out;
  out.q = {q1};
  auto lift = lift_cocone_dom(sl, down.cocone, out.q);
  out.recovered = lift.dbar;
  if (!fdiagrams_equal(sl, lift.dbar, h))
    throw core::ValidationError("NotLiftable", "recovered diagram differs from the input");
  if (!cocones_equal(base, dom_cocone(sl, lift.theta_bar), down.cocone))
    throw core::ValidationError("NotLiftable", "lifted cocone is not over the input cocone");
  out.theta_bar.cocone = lift.theta_bar;
  auto zeta = lift.theta_bar;
  const SliceModel<B>* slp = &sl;
  out.theta_bar.mediate1 = [slp, zeta, down](const OplaxCocone<SliceModel<B>>& probe) {
    return dom_mediator_1(*slp, zeta, down, probe);
  };
  out.theta_bar.mediate2 = [slp, zeta, down](const CoconeModification<SliceModel<B>>& mod,
                                             const typename SliceModel<B>::One& a,
                                             const typename SliceModel<B>::One& b) {
    return dom_mediator_2(*slp, zeta, down, mod, a, b);
  };
  return out;
}

struct TwoColimFibItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct TwoColimFibReport {
  bool ok = true;
  int lifts_checked = 0;
  int reflections_checked = 0;
  std::vector<TwoColimFibItem> items;
  void add(const std::string& n, bool p, const std::string& d = "") {
    items.push_back({n, p, d});
    if (!p) ok = false;
  }
};

// Finite-mode verification that dom is a 2-colim-fibration: every certified
// universal cocone downstairs lifts to a certified universal cocone upstairs
// at every object over the apex, and cartesian cocones upstairs with
// certified-universal image are themselves certified universal.
template <class B>
TwoColimFibReport check_2colim_fibration_dom(const SliceModel<B>& sl,
                                             const std::vector<OplaxCocone<B>>& suite) {
  TwoColimFibReport rep;
  const B& base = *sl.base;
  int entry = 0;
  for (const auto& theta : suite) {
    ++entry;
    auto cert = decide_oplax_colimit(base, theta);
    if (!cert.universal)
      throw core::ValidationError("NotUniversal",
                                  "suite entry " + std::to_string(entry) + ": " + cert.failure);
    // lifting direction, at every object over the apex
    for (const auto& q : sl.objects()) {
      if (!base.eq_obj(base.one_src(q.g), theta.apex)) continue;
      auto lift = lift_cocone_dom(sl, theta, q);
      auto up = decide_oplax_colimit(sl, lift.theta_bar);
      ++rep.lifts_checked;
      rep.add("lift[" + std::to_string(entry) + "]@" + sl.show_obj(q), up.universal, up.failure);
    }
    // reflection direction: every cartesian cocone over this diagram whose
    // dom-image is universal must be universal
    for (const auto& lambda : enumerate_cocones(theta.shape, theta.diagram, base, sl.m)) {
      auto h = cocone_to_diagram(sl, lambda);
      for (const auto& t : sl.objects())
        for (const auto& zeta : enumerate_cocones(theta.shape, h.map, sl, t)) {
          bool cartesian = true;
          for (const auto& l : zeta.leg)
            if (!sl.cartesian(l)) cartesian = false;
          if (!cartesian) continue;
          auto downimg = dom_cocone(sl, zeta);
          if (!decide_oplax_colimit(base, downimg).universal) continue;
          ++rep.reflections_checked;
          auto up = decide_oplax_colimit(sl, zeta);
          rep.add("reflect[" + std::to_string(entry) + "]@" + sl.show_obj(t), up.universal,
                  up.failure);
        }
    }
  }
  return rep;
}

}  // namespace twoslice::slice

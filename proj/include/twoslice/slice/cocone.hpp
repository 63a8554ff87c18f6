#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twoslice/groth/groth.hpp"
#include "twoslice/two/model.hpp"

namespace twoslice::slice {

using groth::GrothResult;
using two::Fin2Category;
using two::Fin2Model;
using two::OneCell;
using two::TwoCell;
using two::TwoFunctorMap;

struct LawReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // recorded observations that are not failures
  void fail(const std::string& w) {
    ok = false;
    failures.push_back(w);
  }
};

// A 2-functor map backed by explicit tables over a tabulated shape.
template <class M>
struct ShapeTables {
  std::vector<typename M::Obj> objs;
  std::vector<typename M::One> ones;  // by dense 1-cell index
  std::vector<typename M::Two> twos;  // by dense 2-cell index
};

template <class M>
TwoFunctorMap<Fin2Model, M> table_map(const Fin2Model& shape,
                                      std::shared_ptr<ShapeTables<M>> t) {
  const Fin2Category* cat = shape.cat;
  return {[t](const int& s) { return t->objs[s]; },
          [t, cat](const OneCell& u) { return t->ones[cat->one_index(u)]; },
          [t, cat](const TwoCell& x) { return t->twos[cat->two_index(x)]; }};
}

// An oplax normal cocone over a Grothendieck-construction shape: one leg per
// shape object and one structure 2-cell str[u] : leg[src u] => leg[tgt u] ∘
// D(u) per shape 1-cell, identity on the tight (cleavage) cells.
template <class M>
struct OplaxCocone {
  Fin2Model shape;  // total with the cleavage marking; views into a GrothResult
  TwoFunctorMap<Fin2Model, M> diagram;
  typename M::Obj apex;
  std::vector<typename M::One> leg;
  std::vector<typename M::Two> str;

  const typename M::Two& str_at(OneCell u) const { return str[shape.cat->one_index(u)]; }
};

template <class M>
bool cocones_equal(const M& m, const OplaxCocone<M>& a, const OplaxCocone<M>& b) {
  if (!m.eq_obj(a.apex, b.apex)) return false;
  if (a.leg.size() != b.leg.size() || a.str.size() != b.str.size()) return false;
  for (std::size_t i = 0; i < a.leg.size(); ++i)
    if (!m.eq1(a.leg[i], b.leg[i])) return false;
  for (std::size_t i = 0; i < a.str.size(); ++i)
    if (!m.eq2(a.str[i], b.str[i])) return false;
  return true;
}

// (gamma ∘ -) ∘ lambda : postcomposition of a cocone with a 1-cell out of its
// apex.
template <class M>
OplaxCocone<M> whisker_cocone(const M& m, const typename M::One& gamma,
                              const OplaxCocone<M>& c) {
  OplaxCocone<M> out{c.shape, c.diagram, m.one_tgt(gamma), {}, {}};
  out.leg.reserve(c.leg.size());
  out.str.reserve(c.str.size());
  for (const auto& l : c.leg) out.leg.push_back(m.comp1(gamma, l));
  for (const auto& s : c.str) out.str.push_back(m.lwhisk(gamma, s));
  return out;
}

// All four cocone laws: typing, unit, normality on tight cells, composition,
// and the 2-cell compatibility law.
template <class M>
LawReport validate_cocone(const M& m, const OplaxCocone<M>& c) {
  LawReport rep;
  const Fin2Category& sh = *c.shape.cat;
  if (static_cast<int>(c.leg.size()) != sh.num_objects() ||
      static_cast<int>(c.str.size()) != sh.num_one_cells()) {
    rep.fail("wrong table sizes");
    return rep;
  }
  for (int s = 0; s < sh.num_objects(); ++s) {
    if (!m.eq_obj(m.one_src(c.leg[s]), c.diagram.on_obj(s)) ||
        !m.eq_obj(m.one_tgt(c.leg[s]), c.apex))
      rep.fail("leg at " + sh.object_name(s) + " has wrong endpoints");
  }
  if (!rep.ok) return rep;
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) {
        const auto& cell = c.str_at(u);
        auto want_tgt = m.comp1(c.leg[b], c.diagram.on_one(u));
        if (!m.eq1(m.two_src(cell), c.leg[a]) || !m.eq1(m.two_tgt(cell), want_tgt))
          rep.fail("structure cell at " + sh.show1(u) + " has wrong endpoints");
      }
  if (!rep.ok) return rep;
  for (int a = 0; a < sh.num_objects(); ++a) {
    if (!m.eq2(c.str_at(sh.unit1(a)), m.id2(c.leg[a])))
      rep.fail("unit law fails at " + sh.object_name(a));
  }
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) {
        if (c.shape.tight(u) && !m.eq2(c.str_at(u), m.id2(c.leg[a])))
          rep.fail("normality fails at tight " + sh.show1(u));
        for (int d = 0; d < sh.num_objects(); ++d)
          for (auto v : sh.one_cells(b, d)) {
            auto lhs = c.str_at(sh.comp1(v, u));
            auto rhs = m.vcomp(m.rwhisk(c.str_at(v), c.diagram.on_one(u)), c.str_at(u));
            if (!m.eq2(lhs, rhs))
              rep.fail("composition law fails at (" + sh.show1(v) + "," + sh.show1(u) + ")");
          }
        for (auto v : sh.one_cells(a, b))
          for (auto delta : sh.two_cells(u, v)) {
            auto lhs = c.str_at(v);
            auto rhs = m.vcomp(m.lwhisk(c.leg[b], c.diagram.on_two(delta)), c.str_at(u));
            if (!m.eq2(lhs, rhs)) rep.fail("2-cell law fails at " + sh.show2(delta));
          }
      }
  return rep;
}

// A modification between two parallel oplax normal cocones.
template <class M>
struct CoconeModification {
  std::vector<typename M::Two> comp;  // per shape object: from.leg[s] => to.leg[s]
};

template <class M>
LawReport validate_modification(const M& m, const OplaxCocone<M>& from, const OplaxCocone<M>& to,
                                const CoconeModification<M>& mod) {
  LawReport rep;
  const Fin2Category& sh = *from.shape.cat;
  for (int s = 0; s < sh.num_objects(); ++s)
    if (!m.eq1(m.two_src(mod.comp[s]), from.leg[s]) || !m.eq1(m.two_tgt(mod.comp[s]), to.leg[s]))
      rep.fail("component at " + sh.object_name(s) + " has wrong endpoints");
  if (!rep.ok) return rep;
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) {
        auto lhs = m.vcomp(to.str_at(u), mod.comp[a]);
        auto rhs = m.vcomp(m.rwhisk(mod.comp[b], from.diagram.on_one(u)), from.str_at(u));
        if (!m.eq2(lhs, rhs)) rep.fail("modification law fails at " + sh.show1(u));
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Weighted 2-cocylinders: a strictly 2-natural family nu_A : W(A) ->
// hom(F(A), apex), given by explicit tables.

template <class M>
struct WeightedCocylinder {
  const groth::Marking* weight = nullptr;
  Fin2Model base;  // view of weight->base
  TwoFunctorMap<Fin2Model, M> diagram;  // F on the base
  typename M::Obj apex;
  std::vector<std::vector<typename M::One>> nu_obj;  // per base object, per W(A)-object
  std::vector<std::vector<typename M::Two>> nu_mor;  // per base object, per W(A)-morphism
};

template <class M>
LawReport validate_cocylinder(const M& m, const WeightedCocylinder<M>& nu) {
  LawReport rep;
  const Fin2Category& b = *nu.base.cat;
  const groth::Marking& w = *nu.weight;
  for (int a = 0; a < b.num_objects(); ++a) {
    const auto& wa = *w.at[a];
    for (int x = 0; x < wa.num_objects(); ++x) {
      if (!m.eq_obj(m.one_src(nu.nu_obj[a][x]), nu.diagram.on_obj(a)) ||
          !m.eq_obj(m.one_tgt(nu.nu_obj[a][x]), nu.apex))
        rep.fail("nu leg typing at " + b.object_name(a) + "/" + wa.object_name(x));
    }
    for (int mm = 0; mm < wa.num_morphisms(); ++mm) {
      if (!m.eq1(m.two_src(nu.nu_mor[a][mm]), nu.nu_obj[a][wa.src(mm)]) ||
          !m.eq1(m.two_tgt(nu.nu_mor[a][mm]), nu.nu_obj[a][wa.tgt(mm)]))
        rep.fail("nu 2-cell typing at " + wa.morphism_name(mm));
    }
    if (!rep.ok) return rep;
    for (int x = 0; x < wa.num_objects(); ++x)
      if (!m.eq2(nu.nu_mor[a][wa.identity(x)], m.id2(nu.nu_obj[a][x])))
        rep.fail("nu_A identity law at " + wa.object_name(x));
    for (int g = 0; g < wa.num_morphisms(); ++g)
      for (int f = 0; f < wa.num_morphisms(); ++f)
        if (wa.composable(g, f) &&
            !m.eq2(nu.nu_mor[a][wa.compose(g, f)], m.vcomp(nu.nu_mor[a][g], nu.nu_mor[a][f])))
          rep.fail("nu_A composition law at (" + wa.morphism_name(g) + "," + wa.morphism_name(f) + ")");
  }
  // strict 2-naturality in 1-cells of the base
  for (int a = 0; a < b.num_objects(); ++a)
    for (int c = 0; c < b.num_objects(); ++c)
      for (auto f : b.one_cells(a, c)) {
        const auto& wf = w.on_one(f);
        for (int xp = 0; xp < w.at[c]->num_objects(); ++xp)
          if (!m.eq1(nu.nu_obj[a][wf.on_obj(xp)],
                     m.comp1(nu.nu_obj[c][xp], nu.diagram.on_one(f))))
            rep.fail("1-cell naturality at " + b.show1(f) + "/" + w.at[c]->object_name(xp));
        for (int mp = 0; mp < w.at[c]->num_morphisms(); ++mp)
          if (!m.eq2(nu.nu_mor[a][wf.on_mor(mp)],
                     m.rwhisk(nu.nu_mor[c][mp], nu.diagram.on_one(f))))
            rep.fail("1-cell naturality (2-dim) at " + b.show1(f));
      }
  // strict 2-naturality in 2-cells of the base
  for (int a = 0; a < b.num_objects(); ++a)
    for (int c = 0; c < b.num_objects(); ++c)
      for (auto f : b.one_cells(a, c))
        for (auto g : b.one_cells(a, c))
          for (auto delta : b.two_cells(f, g)) {
            const auto& wd = w.on_two(delta);
            for (int xp = 0; xp < w.at[c]->num_objects(); ++xp)
              if (!m.eq2(nu.nu_mor[a][wd.at(xp)],
                         m.lwhisk(nu.nu_obj[c][xp], nu.diagram.on_two(delta))))
                rep.fail("2-cell naturality at " + b.show2(delta));
          }
  return rep;
}

// Reduction of a weighted cocylinder to an oplax normal cocone over the
// Grothendieck construction of the weight: leg (A,X) = nu_A(X) and the
// structure cell of (f, alpha) is nu_A(alpha).
template <class M>
OplaxCocone<M> weighted_to_oplax_normal(const M& m, const WeightedCocylinder<M>& nu,
                                        const GrothResult& g) {
  auto rep = validate_cocylinder(m, nu);
  if (!rep.ok) throw core::ValidationError("NotNatural", rep.failures.front());
  OplaxCocone<M> out;
  out.shape = g.shape_model();
  out.apex = nu.apex;
  const int n = g.total->num_objects();
  auto tables = std::make_shared<ShapeTables<M>>();
  tables->objs.resize(n);
  tables->ones.resize(g.total->num_one_cells());
  tables->twos.resize(g.total->num_two_cells());
  for (int i = 0; i < n; ++i) {
    auto [a, x] = g.obj_decode[i];
    (void)x;
    tables->objs[i] = nu.diagram.on_obj(a);
    out.leg.push_back(nu.nu_obj[a][g.obj_decode[i].second]);
  }
  out.str.resize(g.total->num_one_cells());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, x] = g.obj_decode[i];
      (void)x;
      const auto& ones = g.one_decode[i * n + j];
      for (std::size_t k = 0; k < ones.size(); ++k) {
        OneCell u{i, j, static_cast<int>(k)};
        auto [f, alpha] = ones[k];
        tables->ones[g.total->one_index(u)] =
            nu.diagram.on_one({a, g.obj_decode[j].first, f});
        out.str[g.total->one_index(u)] = nu.nu_mor[a][alpha];
      }
      const auto& twos = g.two_decode[i * n + j];
      for (std::size_t k = 0; k < twos.size(); ++k) {
        TwoCell x2{i, j, static_cast<int>(k)};
        tables->twos[g.total->two_index(x2)] =
            nu.diagram.on_two({a, g.obj_decode[j].first, twos[k].first});
      }
    }
  out.diagram = table_map(out.shape, tables);
  auto crep = validate_cocone(m, out);
  if (!crep.ok) throw core::ValidationError("NotNatural", crep.failures.front());
  return out;
}

}  // namespace twoslice::slice

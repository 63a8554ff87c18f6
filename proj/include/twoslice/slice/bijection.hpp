#pragma once

#include "twoslice/slice/cocone.hpp"

namespace twoslice::slice {

using two::SliceModel;

// A 2-diagram into a lax slice that sends the shape's tight (cleavage) cells
// to identity-filled triangles.
template <class B>
struct FDiagram {
  Fin2Model shape;
  TwoFunctorMap<Fin2Model, SliceModel<B>> map;
};

template <class B>
TwoFunctorMap<SliceModel<B>, B> dom_map(const SliceModel<B>& sl) {
  const B* base = sl.base;
  return {[base](const typename SliceModel<B>::Obj& o) { return base->one_src(o.g); },
          [](const typename SliceModel<B>::One& u) { return u.fhat; },
          [](const typename SliceModel<B>::Two& x) { return x.delta; }};
}

template <class M>
bool maps_equal(const Fin2Model& shape, const M& m, const TwoFunctorMap<Fin2Model, M>& f,
                const TwoFunctorMap<Fin2Model, M>& g) {
  const Fin2Category& sh = *shape.cat;
  for (int s = 0; s < sh.num_objects(); ++s)
    if (!m.eq_obj(f.on_obj(s), g.on_obj(s))) return false;
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b) {
      for (auto u : sh.one_cells(a, b))
        if (!m.eq1(f.on_one(u), g.on_one(u))) return false;
      for (auto u : sh.one_cells(a, b))
        for (auto v : sh.one_cells(a, b))
          for (auto x : sh.two_cells(u, v))
            if (!m.eq2(f.on_two(x), g.on_two(x))) return false;
    }
  return true;
}

template <class B>
LawReport validate_fdiagram(const SliceModel<B>& sl, const FDiagram<B>& fd) {
  LawReport rep;
  std::string w;
  if (!two::check_map_functorial(fd.shape, sl, fd.map, &w)) rep.fail("not 2-functorial: " + w);
  const Fin2Category& sh = *fd.shape.cat;
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b))
        if (fd.shape.tight(u) && !sl.tight(fd.map.on_one(u)))
          rep.fail("NotNormal: tight " + sh.show1(u) + " maps to a loose triangle");
  return rep;
}

// An F-diagram into the lax slice reorganized as an oplax normal cocone on M
// for the underlying diagram downstairs: legs are the slice objects, structure
// cells the triangle fillings.
template <class B>
OplaxCocone<B> diagram_to_cocone(const SliceModel<B>& sl, const FDiagram<B>& fd) {
  const Fin2Category& sh = *fd.shape.cat;
  OplaxCocone<B> out;
  out.shape = fd.shape;
  out.diagram = compose_maps<Fin2Model, SliceModel<B>, B>(dom_map(sl), fd.map);
  out.apex = sl.m;
  out.leg.resize(sh.num_objects());
  out.str.resize(sh.num_one_cells());
  for (int s = 0; s < sh.num_objects(); ++s) out.leg[s] = fd.map.on_obj(s).g;
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b)
      for (auto u : sh.one_cells(a, b)) out.str[sh.one_index(u)] = fd.map.on_one(u).gamma;
  return out;
}

// The inverse reorganization: a cocone on M becomes a diagram in the slice.
template <class B>
FDiagram<B> cocone_to_diagram(const SliceModel<B>& sl, const OplaxCocone<B>& lambda) {
  const Fin2Category& sh = *lambda.shape.cat;
  auto t = std::make_shared<ShapeTables<SliceModel<B>>>();
  t->objs.resize(sh.num_objects());
  t->ones.resize(sh.num_one_cells());
  t->twos.resize(sh.num_two_cells());
  for (int s = 0; s < sh.num_objects(); ++s) t->objs[s] = {lambda.leg[s]};
  for (int a = 0; a < sh.num_objects(); ++a)
    for (int b = 0; b < sh.num_objects(); ++b) {
      for (auto u : sh.one_cells(a, b))
        t->ones[sh.one_index(u)] = make_slice_one(sl, lambda.diagram.on_one(u),
                                                  lambda.str_at(u), lambda.leg[a], lambda.leg[b]);
      for (auto u : sh.one_cells(a, b))
        for (auto v : sh.one_cells(a, b))
          for (auto x : sh.two_cells(u, v))
            t->twos[sh.two_index(x)] =
                make_slice_two(sl, lambda.diagram.on_two(x), t->ones[sh.one_index(u)],
                               t->ones[sh.one_index(v)]);
    }
  FDiagram<B> fd{lambda.shape, table_map(lambda.shape, t)};
  auto rep = validate_fdiagram(sl, fd);
  if (!rep.ok) throw core::ValidationError("NotNormal", rep.failures.front());
  return fd;
}

template <class B>
bool fdiagrams_equal(const SliceModel<B>& sl, const FDiagram<B>& f, const FDiagram<B>& g) {
  return maps_equal(f.shape, sl, f.map, g.map);
}

}  // namespace twoslice::slice

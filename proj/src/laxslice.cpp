#include "twoslice/slice/laxslice.hpp"

#include "twoslice/groth/groth.hpp"

namespace twoslice::slice {

using core::ValidationError;
using two::OneCell;
using two::TwoCell;

LaxSliceResult lax_slice(const Cat2Ptr& ambient, int m) {
  LaxSliceResult out;
  out.ambient = ambient;
  out.m = m;
  Fin2Model base{ambient.get(), nullptr};
  SliceModel<Fin2Model> sl{&base, m};
  out.mat = two::materialize_two_category(sl, sl.objects(),
                                          ambient->name() + "//" + ambient->object_name(m));
  const int n = out.mat.cat->num_objects();
  std::vector<int> omap(n);
  std::vector<std::vector<int>> one_map(n * n), two_map(n * n);
  for (int i = 0; i < n; ++i) omap[i] = out.mat.obj_decode[i].g.a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (const auto& u : out.mat.one_decode[i * n + j])
        one_map[i * n + j].push_back(u.fhat.idx);
      for (const auto& x : out.mat.two_decode[i * n + j])
        two_map[i * n + j].push_back(x.delta.idx);
    }
  out.dom = two::build_2functor(out.mat.cat, ambient, omap, one_map, two_map);
  return out;
}

bool is_cartesian_morphism(const LaxSliceResult& ls, OneCell slice_cell) {
  Fin2Model base{ls.ambient.get(), nullptr};
  SliceModel<Fin2Model> sl{&base, ls.m};
  const auto& cell =
      ls.mat.one_decode[slice_cell.a * ls.mat.cat->num_objects() + slice_cell.b][slice_cell.idx];
  return sl.cartesian(cell);
}

RepresentableIsoReport check_representable_iso(const Cat2Ptr& ambient, int m) {
  RepresentableIsoReport rep;
  auto g = groth::groth_of_representable(ambient, m);
  auto ls = lax_slice(ambient, m);
  Fin2Model base{ambient.get(), nullptr};
  SliceModel<Fin2Model> sl{&base, m};
  const int n = g.total->num_objects();
  if (n != ls.mat.cat->num_objects() || g.total->num_one_cells() != ls.mat.cat->num_one_cells() ||
      g.total->num_two_cells() != ls.mat.cat->num_two_cells()) {
    rep.detail = "cell counts differ";
    return rep;
  }
  // object map: (A, X in hom(A,M)) -> the slice object X
  std::vector<int> omap(n, -1);
  for (int i = 0; i < n; ++i) {
    auto [a, x] = g.obj_decode[i];
    omap[i] = ls.mat.obj_index(sl, {OneCell{a, m, x}});
    if (omap[i] < 0) {
      rep.detail = "groth object " + g.total->object_name(i) + " has no slice partner";
      return rep;
    }
  }
  std::vector<std::vector<int>> one_map(n * n), two_map(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, x] = g.obj_decode[i];
      auto [b, xp] = g.obj_decode[j];
      for (const auto& [f, alpha] : g.one_decode[i * n + j]) {
        auto cell = two::make_slice_one(sl, OneCell{a, b, f}, TwoCell{a, m, alpha},
                                        OneCell{a, m, x}, OneCell{b, m, xp});
        one_map[i * n + j].push_back(ls.mat.one_lookup(sl, cell).idx);
      }
      for (std::size_t k = 0; k < g.two_decode[i * n + j].size(); ++k) {
        auto [d, alpha] = g.two_decode[i * n + j][k];
        // endpoints of the groth 2-cell give the slice 2-cell endpoints
        TwoCell gcell{i, j, static_cast<int>(k)};
        OneCell u = g.total->two_src(gcell), v = g.total->two_tgt(gcell);
        auto [fu, au] = g.one_decode[i * n + j][u.idx];
        auto [fv, av] = g.one_decode[i * n + j][v.idx];
        auto from = two::make_slice_one(sl, OneCell{a, b, fu}, TwoCell{a, m, au}, OneCell{a, m, x},
                                        OneCell{b, m, xp});
        auto to = two::make_slice_one(sl, OneCell{a, b, fv}, TwoCell{a, m, av}, OneCell{a, m, x},
                                      OneCell{b, m, xp});
        auto cell = two::make_slice_two(sl, TwoCell{a, b, d}, from, to);
        two_map[i * n + j].push_back(ls.mat.two_lookup(sl, cell).idx);
      }
    }
  two::TwoFunctor iso;
  try {
    iso = two::build_2functor(g.total, ls.mat.cat, omap, one_map, two_map);
  } catch (const ValidationError& e) {
    rep.detail = std::string("comparison is not a 2-functor: ") + e.what();
    return rep;
  }
  // bijectivity on cells
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) seen[omap[i]] = 1;
  for (char s : seen)
    if (!s) {
      rep.detail = "not bijective on objects";
      return rep;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<char> seen1(ls.mat.cat->hom(omap[i], omap[j]).num_objects(), 0);
      for (int v : one_map[i * n + j]) seen1[v] = 1;
      for (char s : seen1)
        if (!s) {
          rep.detail = "not bijective on 1-cells";
          return rep;
        }
      std::vector<char> seen2(ls.mat.cat->hom(omap[i], omap[j]).num_morphisms(), 0);
      for (int v : two_map[i * n + j]) seen2[v] = 1;
      for (char s : seen2)
        if (!s) {
          rep.detail = "not bijective on 2-cells";
          return rep;
        }
    }
  // tightness is preserved and reflected
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < g.one_decode[i * n + j].size(); ++k) {
        OneCell gc{i, j, static_cast<int>(k)};
        OneCell sc = iso.on_one(gc);
        if (g.marking.is_tight(gc) != ls.mat.marking.is_tight(sc)) {
          rep.detail = "tightness mismatch at " + g.total->show1(gc);
          return rep;
        }
      }
  // proj = dom under the isomorphism
  for (int i = 0; i < n; ++i)
    if (ls.dom.on_obj(iso.on_obj(i)) != g.proj.on_obj(i)) {
      rep.detail = "dom/proj mismatch on objects";
      return rep;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < g.one_decode[i * n + j].size(); ++k) {
        OneCell gc{i, j, static_cast<int>(k)};
        if (ls.dom.on_one(iso.on_one(gc)) != g.proj.on_one(gc)) {
          rep.detail = "dom/proj mismatch on 1-cells";
          return rep;
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < g.two_decode[i * n + j].size(); ++k) {
        TwoCell gc{i, j, static_cast<int>(k)};
        if (ls.dom.on_two(iso.on_two(gc)) != g.proj.on_two(gc)) {
          rep.detail = "dom/proj mismatch on 2-cells";
          return rep;
        }
      }
  rep.ok = true;
  rep.detail = std::to_string(n) + " objects, " + std::to_string(g.total->num_one_cells()) +
               " 1-cells, " + std::to_string(g.total->num_two_cells()) + " 2-cells";
  return rep;
}

}  // namespace twoslice::slice

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twoslice/core/constructions.hpp"
#include "twoslice/two/fin2cat.hpp"
#include "twoslice/two/homcat.hpp"

namespace twoslice::two {

// A 2-category presented operationally. The three concrete models below share
// this interface: tabulated finite 2-categories, desk-scale CAT, and lax
// slices over either. Generic machinery (cocones, oracles, adjunction laws)
// is written against it.
template <class M>
concept TwoCatModel = requires(const M& m, const typename M::Obj& a, const typename M::One& f,
                               const typename M::Two& x) {
  { m.one_src(f) } -> std::convertible_to<typename M::Obj>;
  { m.two_src(x) } -> std::convertible_to<typename M::One>;
  { m.id1(a) } -> std::convertible_to<typename M::One>;
  { m.id2(f) } -> std::convertible_to<typename M::Two>;
  { m.comp1(f, f) } -> std::convertible_to<typename M::One>;
  { m.vcomp(x, x) } -> std::convertible_to<typename M::Two>;
  { m.eq1(f, f) } -> std::convertible_to<bool>;
  { m.tight(f) } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Finite tabulated model

struct Fin2Model {
  using Obj = int;
  using One = OneCell;
  using Two = TwoCell;

  const Fin2Category* cat = nullptr;
  const FMarking* marking = nullptr;  // null: everything tight

  Obj one_src(One f) const { return f.a; }
  Obj one_tgt(One f) const { return f.b; }
  One two_src(Two x) const { return cat->two_src(x); }
  One two_tgt(Two x) const { return cat->two_tgt(x); }
  One id1(Obj a) const { return cat->unit1(a); }
  Two id2(One f) const { return cat->id2(f); }
  One comp1(One g, One f) const { return cat->comp1(g, f); }
  Two vcomp(Two y, Two x) const { return cat->vcomp(y, x); }
  Two hcomp(Two y, Two x) const { return cat->hcomp(y, x); }
  Two lwhisk(One g, Two x) const { return cat->lwhisk(g, x); }
  Two rwhisk(Two y, One f) const { return cat->rwhisk(y, f); }
  bool eq_obj(Obj a, Obj b) const { return a == b; }
  bool eq1(One f, One g) const { return f == g; }
  bool eq2(Two x, Two y) const { return x == y; }
  bool tight(One f) const { return marking ? marking->is_tight(f) : true; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out(cat->num_objects());
    for (int i = 0; i < cat->num_objects(); ++i) out[i] = i;
    return out;
  }
  std::vector<One> one_cells(Obj a, Obj b) const { return cat->one_cells(a, b); }
  std::vector<Two> two_cells(One f, One g) const { return cat->two_cells(f, g); }

  std::string show_obj(Obj a) const { return cat->object_name(a); }
  std::string show1(One f) const { return cat->show1(f); }
  std::string show2(Two x) const { return cat->show2(x); }
};

// ---------------------------------------------------------------------------
// Desk-scale CAT: objects are finite categories supplied as probes, 1-cells
// all functors, 2-cells all natural transformations. Everything is tight.

struct CatModel {
  using Obj = core::CatPtr;
  using One = core::FinFunctor;
  using Two = core::NatTransf;

  std::vector<Obj> probe_objects;
  std::size_t size_limit = kDefaultSizeLimit;

  Obj one_src(const One& f) const { return f.dom(); }
  Obj one_tgt(const One& f) const { return f.cod(); }
  One two_src(const Two& x) const { return x.dom(); }
  One two_tgt(const Two& x) const { return x.cod(); }
  One id1(const Obj& a) const { return core::identity_functor(a); }
  Two id2(const One& f) const { return core::identity_nat(f); }
  One comp1(const One& g, const One& f) const { return core::compose_functors(g, f); }
  Two vcomp(const Two& y, const Two& x) const { return core::vcomp_nat(y, x); }
  Two hcomp(const Two& y, const Two& x) const { return core::hcomp_nat(y, x); }
  Two lwhisk(const One& g, const Two& x) const { return core::lwhisk_nat(g, x); }
  Two rwhisk(const Two& y, const One& f) const { return core::rwhisk_nat(y, f); }
  bool eq_obj(const Obj& a, const Obj& b) const { return core::same_category(a, b); }
  bool eq1(const One& f, const One& g) const { return f == g; }
  bool eq2(const Two& x, const Two& y) const { return x == y; }
  bool tight(const One&) const { return true; }

  std::vector<Obj> objects() const { return probe_objects; }
  std::vector<One> one_cells(const Obj& a, const Obj& b) const {
    return enumerate_functors(a, b, size_limit);
  }
  std::vector<Two> two_cells(const One& f, const One& g) const { return enumerate_nats(f, g); }

  std::string show_obj(const Obj& a) const { return a->name(); }
  std::string show1(const One& f) const {
    std::string s = f.dom()->name() + "->" + f.cod()->name() + "[";
    for (int o = 0; o < f.dom()->num_objects(); ++o)
      s += f.cod()->object_name(f.on_obj(o)) + (o + 1 < f.dom()->num_objects() ? "," : "");
    return s + "]";
  }
  std::string show2(const Two& x) const {
    std::string s = "nat[";
    for (int o = 0; o < x.dom().dom()->num_objects(); ++o)
      s += x.dom().cod()->morphism_name(x.at(o)) + (o + 1 < x.dom().dom()->num_objects() ? "," : "");
    return s + "]";
  }
};

// ---------------------------------------------------------------------------
// Lax slice over an object M of a base model. Objects are 1-cells into M,
// 1-cells are triangles (fhat, gamma : g => g' ∘ fhat), 2-cells are base
// 2-cells delta : fhat => fhat' with gamma' = (g' * delta) ∘ gamma. Tight
// 1-cells are the triangles filled with an identity (the strict slice).

template <class B>
struct SliceModel {
  using BObj = typename B::Obj;
  using BOne = typename B::One;
  using BTwo = typename B::Two;

  struct Obj {
    BOne g;
    bool operator==(const Obj& o) const = default;
  };
  struct One {
    BOne fhat;
    BTwo gamma;  // src_g => tgt_g ∘ fhat
    BOne src_g, tgt_g;
    bool operator==(const One& o) const = default;
  };
  struct Two {
    BTwo delta;
    One from, to;
    bool operator==(const Two& o) const = default;
  };

  const B* base = nullptr;
  BObj m;

  Obj one_src(const One& u) const { return {u.src_g}; }
  Obj one_tgt(const One& u) const { return {u.tgt_g}; }
  One two_src(const Two& x) const { return x.from; }
  One two_tgt(const Two& x) const { return x.to; }
  One id1(const Obj& o) const {
    return {base->id1(base->one_src(o.g)), base->id2(o.g), o.g, o.g};
  }
  Two id2(const One& u) const { return {base->id2(u.fhat), u, u}; }
  One comp1(const One& v, const One& u) const {
    return {base->comp1(v.fhat, u.fhat),
            base->vcomp(base->rwhisk(v.gamma, u.fhat), u.gamma), u.src_g, v.tgt_g};
  }
  Two vcomp(const Two& y, const Two& x) const {
    return {base->vcomp(y.delta, x.delta), x.from, y.to};
  }
  Two hcomp(const Two& y, const Two& x) const {
    return {base->hcomp(y.delta, x.delta), comp1(y.from, x.from), comp1(y.to, x.to)};
  }
  Two lwhisk(const One& v, const Two& x) const {
    return {base->lwhisk(v.fhat, x.delta), comp1(v, x.from), comp1(v, x.to)};
  }
  Two rwhisk(const Two& y, const One& u) const {
    return {base->rwhisk(y.delta, u.fhat), comp1(y.from, u), comp1(y.to, u)};
  }
  bool eq_obj(const Obj& a, const Obj& b) const { return base->eq1(a.g, b.g); }
  bool eq1(const One& u, const One& v) const {
    return base->eq1(u.fhat, v.fhat) && base->eq2(u.gamma, v.gamma) &&
           base->eq1(u.src_g, v.src_g) && base->eq1(u.tgt_g, v.tgt_g);
  }
  bool eq2(const Two& x, const Two& y) const {
    return base->eq2(x.delta, y.delta) && eq1(x.from, y.from) && eq1(x.to, y.to);
  }
  bool tight(const One& u) const { return base->eq2(u.gamma, base->id2(u.src_g)); }

  // A triangle is cartesian for dom exactly when gamma is invertible.
  bool cartesian(const One& u) const {
    auto composite = base->comp1(u.tgt_g, u.fhat);
    for (const auto& inv : base->two_cells(composite, u.src_g))
      if (base->eq2(base->vcomp(inv, u.gamma), base->id2(u.src_g)) &&
          base->eq2(base->vcomp(u.gamma, inv), base->id2(composite)))
        return true;
    return false;
  }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (const auto& x : base->objects())
      for (const auto& g : base->one_cells(x, m)) out.push_back({g});
    return out;
  }
  std::vector<One> one_cells(const Obj& a, const Obj& b) const {
    std::vector<One> out;
    for (const auto& fhat : base->one_cells(base->one_src(a.g), base->one_src(b.g)))
      for (const auto& gamma : base->two_cells(a.g, base->comp1(b.g, fhat)))
        out.push_back({fhat, gamma, a.g, b.g});
    return out;
  }
  std::vector<Two> two_cells(const One& u, const One& v) const {
    std::vector<Two> out;
    if (!base->eq1(u.src_g, v.src_g) || !base->eq1(u.tgt_g, v.tgt_g)) return out;
    for (const auto& delta : base->two_cells(u.fhat, v.fhat))
      if (base->eq2(v.gamma, base->vcomp(base->lwhisk(u.tgt_g, delta), u.gamma)))
        out.push_back({delta, u, v});
    return out;
  }

  std::string show_obj(const Obj& o) const { return base->show1(o.g); }
  std::string show1(const One& u) const {
    return "(" + base->show1(u.fhat) + "; " + base->show2(u.gamma) + ")";
  }
  std::string show2(const Two& x) const { return base->show2(x.delta); }
};

// Checked constructor for slice 1-cells: verifies the triangle typing.
template <class B>
typename SliceModel<B>::One make_slice_one(const SliceModel<B>& s, const typename B::One& fhat,
                                           const typename B::Two& gamma, const typename B::One& src_g,
                                           const typename B::One& tgt_g) {
  const B& base = *s.base;
  if (!base.eq1(base.two_src(gamma), src_g) ||
      !base.eq1(base.two_tgt(gamma), base.comp1(tgt_g, fhat)))
    throw ValidationError("IllTypedTriangle", "triangle 2-cell has wrong endpoints");
  return {fhat, gamma, src_g, tgt_g};
}

// Checked constructor for slice 2-cells: verifies gamma' = (g' * delta) ∘ gamma.
template <class B>
typename SliceModel<B>::Two make_slice_two(const SliceModel<B>& s, const typename B::Two& delta,
                                           const typename SliceModel<B>::One& from,
                                           const typename SliceModel<B>::One& to) {
  const B& base = *s.base;
  if (!base.eq2(to.gamma, base.vcomp(base.lwhisk(from.tgt_g, delta), from.gamma)))
    throw ValidationError("IllTypedTriangle", "2-cell does not satisfy the triangle equation");
  return {delta, from, to};
}

// ---------------------------------------------------------------------------
// 2-functor between models, given extensionally.

template <class MA, class MB>
struct TwoFunctorMap {
  std::function<typename MB::Obj(const typename MA::Obj&)> on_obj;
  std::function<typename MB::One(const typename MA::One&)> on_one;
  std::function<typename MB::Two(const typename MA::Two&)> on_two;
};

template <class M>
TwoFunctorMap<M, M> identity_map() {
  return {[](const typename M::Obj& a) { return a; },
          [](const typename M::One& f) { return f; },
          [](const typename M::Two& x) { return x; }};
}

template <class MA, class MB, class MC>
TwoFunctorMap<MA, MC> compose_maps(const TwoFunctorMap<MB, MC>& g, const TwoFunctorMap<MA, MB>& f) {
  return {[g, f](const typename MA::Obj& a) { return g.on_obj(f.on_obj(a)); },
          [g, f](const typename MA::One& u) { return g.on_one(f.on_one(u)); },
          [g, f](const typename MA::Two& x) { return g.on_two(f.on_two(x)); }};
}

inline TwoFunctorMap<Fin2Model, Fin2Model> from_two_functor(const TwoFunctor& f) {
  return {[f](const int& a) { return f.on_obj(a); },
          [f](const OneCell& u) { return f.on_one(u); },
          [f](const TwoCell& x) { return f.on_two(x); }};
}

// Strict 2-functoriality of a map, checked on the full finite domain model.
template <class MB>
bool check_map_functorial(const Fin2Model& a, const MB& b, const TwoFunctorMap<Fin2Model, MB>& f,
                          std::string* witness = nullptr) {
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  for (int x : a.objects())
    if (!b.eq1(f.on_one(a.id1(x)), b.id1(f.on_obj(x)))) return fail("unit of " + a.show_obj(x));
  for (int x : a.objects())
    for (int y : a.objects())
      for (auto u : a.one_cells(x, y)) {
        if (!b.eq_obj(b.one_src(f.on_one(u)), f.on_obj(x)) ||
            !b.eq_obj(b.one_tgt(f.on_one(u)), f.on_obj(y)))
          return fail("endpoints of " + a.show1(u));
        if (!b.eq2(f.on_two(a.id2(u)), b.id2(f.on_one(u)))) return fail("id2 of " + a.show1(u));
        for (int z : a.objects())
          for (auto v : a.one_cells(y, z))
            if (!b.eq1(f.on_one(a.comp1(v, u)), b.comp1(f.on_one(v), f.on_one(u))))
              return fail("comp1 at (" + a.show1(v) + "," + a.show1(u) + ")");
      }
  for (int x : a.objects())
    for (int y : a.objects())
      for (auto u : a.one_cells(x, y))
        for (auto v : a.one_cells(x, y))
          for (auto d : a.two_cells(u, v)) {
            if (!b.eq1(b.two_src(f.on_two(d)), f.on_one(u)) ||
                !b.eq1(b.two_tgt(f.on_two(d)), f.on_one(v)))
              return fail("endpoints of " + a.show2(d));
            for (auto w : a.one_cells(x, y))
              for (auto e : a.two_cells(v, w))
                if (!b.eq2(f.on_two(a.vcomp(e, d)), b.vcomp(f.on_two(e), f.on_two(d))))
                  return fail("vcomp at (" + a.show2(e) + "," + a.show2(d) + ")");
            for (int z : a.objects())
              for (auto u2 : a.one_cells(y, z))
                for (auto v2 : a.one_cells(y, z))
                  for (auto d2 : a.two_cells(u2, v2))
                    if (!b.eq2(f.on_two(a.hcomp(d2, d)), b.hcomp(f.on_two(d2), f.on_two(d))))
                      return fail("hcomp at (" + a.show2(d2) + "," + a.show2(d) + ")");
          }
  return true;
}

// ---------------------------------------------------------------------------
// Materialization: tabulate an enumerable model as a Fin2Category, with decode
// tables back into the model.

template <class M>
struct Materialized {
  Cat2Ptr cat;
  FMarking marking;
  std::vector<typename M::Obj> obj_decode;
  std::vector<std::vector<typename M::One>> one_decode;  // per pair index
  std::vector<std::vector<typename M::Two>> two_decode;

  int obj_index(const M& m, const typename M::Obj& o) const {
    for (std::size_t i = 0; i < obj_decode.size(); ++i)
      if (m.eq_obj(obj_decode[i], o)) return static_cast<int>(i);
    return -1;
  }
  OneCell one_lookup(const M& m, const typename M::One& f) const {
    int a = obj_index(m, m.one_src(f)), b = obj_index(m, m.one_tgt(f));
    const auto& cells = one_decode[a * cat->num_objects() + b];
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (m.eq1(cells[i], f)) return {a, b, static_cast<int>(i)};
    throw ValidationError("UnresolvedName", "1-cell not found in materialization");
  }
  TwoCell two_lookup(const M& m, const typename M::Two& x) const {
    int a = obj_index(m, m.one_src(m.two_src(x))), b = obj_index(m, m.one_tgt(m.two_src(x)));
    const auto& cells = two_decode[a * cat->num_objects() + b];
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (m.eq2(cells[i], x)) return {a, b, static_cast<int>(i)};
    throw ValidationError("UnresolvedName", "2-cell not found in materialization");
  }
};

template <class M>
Materialized<M> materialize_two_category(const M& m, const std::vector<typename M::Obj>& objs,
                                         const std::string& name) {
  Materialized<M> out;
  out.obj_decode = objs;
  const int n = static_cast<int>(objs.size());
  Raw2Category raw;
  raw.name = name;
  for (int i = 0; i < n; ++i) raw.objects.push_back("o" + std::to_string(i));
  out.one_decode.resize(n * n);
  out.two_decode.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& ones = out.one_decode[a * n + b];
      auto& twos = out.two_decode[a * n + b];
      ones = m.one_cells(objs[a], objs[b]);
      core::RawCategory h;
      h.name = name + "(o" + std::to_string(a) + ",o" + std::to_string(b) + ")";
      for (std::size_t i = 0; i < ones.size(); ++i) h.objects.push_back("f" + std::to_string(i));
      for (std::size_t i = 0; i < ones.size(); ++i)
        for (std::size_t j = 0; j < ones.size(); ++j)
          for (const auto& x : m.two_cells(ones[i], ones[j])) {
            h.morphisms.push_back({"x" + std::to_string(twos.size()), "f" + std::to_string(i),
                                   "f" + std::to_string(j)});
            twos.push_back(x);
          }
      auto find_two = [&](const typename M::Two& x) {
        for (std::size_t i = 0; i < twos.size(); ++i)
          if (m.eq2(twos[i], x)) return static_cast<int>(i);
        return -1;
      };
      for (std::size_t i = 0; i < ones.size(); ++i)
        h.identities.push_back({"f" + std::to_string(i),
                                "x" + std::to_string(find_two(m.id2(ones[i])))});
      for (std::size_t y = 0; y < twos.size(); ++y)
        for (std::size_t x = 0; x < twos.size(); ++x)
          if (m.eq1(m.two_tgt(twos[x]), m.two_src(twos[y])))
            h.composites.push_back({"x" + std::to_string(y), "x" + std::to_string(x),
                                    "x" + std::to_string(find_two(m.vcomp(twos[y], twos[x])))});
      raw.homs.push_back(core::build_category_ptr(h));
    }
  for (int a = 0; a < n; ++a) {
    const auto& ones = out.one_decode[a * n + a];
    int u = -1;
    for (std::size_t i = 0; i < ones.size(); ++i)
      if (m.eq1(ones[i], m.id1(objs[a]))) u = static_cast<int>(i);
    if (u < 0) throw ValidationError("BadUnit", "identity 1-cell missing in materialization");
    raw.units.push_back("f" + std::to_string(u));
  }
  auto find_one = [&](int a, int b, const typename M::One& f) {
    const auto& ones = out.one_decode[a * n + b];
    for (std::size_t i = 0; i < ones.size(); ++i)
      if (m.eq1(ones[i], f)) return static_cast<int>(i);
    return -1;
  };
  auto find_two_in = [&](int a, int b, const typename M::Two& x) {
    const auto& twos = out.two_decode[a * n + b];
    for (std::size_t i = 0; i < twos.size(); ++i)
      if (m.eq2(twos[i], x)) return static_cast<int>(i);
    return -1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& fs = out.one_decode[a * n + b];
        const auto& gs = out.one_decode[b * n + c];
        for (std::size_t g = 0; g < gs.size(); ++g)
          for (std::size_t f = 0; f < fs.size(); ++f)
            raw.comp1.push_back({a, b, c, "f" + std::to_string(g), "f" + std::to_string(f),
                                 "f" + std::to_string(find_one(a, c, m.comp1(gs[g], fs[f])))});
        const auto& xs = out.two_decode[a * n + b];
        const auto& ys = out.two_decode[b * n + c];
        for (std::size_t y = 0; y < ys.size(); ++y)
          for (std::size_t x = 0; x < xs.size(); ++x)
            raw.comp2.push_back({a, b, c, "x" + std::to_string(y), "x" + std::to_string(x),
                                 "x" + std::to_string(find_two_in(a, c, m.hcomp(ys[y], xs[x])))});
      }
  out.cat = build_2category_ptr(raw);
  std::vector<OneCell> tight_cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t i = 0; i < out.one_decode[a * n + b].size(); ++i)
        if (m.tight(out.one_decode[a * n + b][i])) tight_cells.push_back({a, b, static_cast<int>(i)});
  out.marking = attach_marking(out.cat, tight_cells);
  return out;
}

}  // namespace twoslice::two

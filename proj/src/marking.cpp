#include "twoslice/groth/marking.hpp"

#include "twoslice/core/fincat.hpp"

namespace twoslice::groth {

using core::ValidationError;

void validate_marking(const Marking& w) {
  const auto& b = *w.base;
  const int n = b.num_objects();
  if (static_cast<int>(w.at.size()) != n)
    throw ValidationError("MarkingIllFormed", "object values missing");
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto& ones = w.on1[a * n + c];
      if (static_cast<int>(ones.size()) != b.hom(a, c).num_objects())
        throw ValidationError("MarkingIllFormed", "1-cell actions missing at (" +
                                                      b.object_name(a) + "," + b.object_name(c) + ")");
      for (int f = 0; f < static_cast<int>(ones.size()); ++f)
        if (!core::same_category(ones[f].dom(), w.at[c]) ||
            !core::same_category(ones[f].cod(), w.at[a]))
          throw ValidationError("MarkingIllFormed",
                                "W(" + b.show1({a, c, f}) + ") has wrong endpoints");
      const auto& twos = w.on2[a * n + c];
      if (static_cast<int>(twos.size()) != b.hom(a, c).num_morphisms())
        throw ValidationError("MarkingIllFormed", "2-cell actions missing");
      for (int x = 0; x < static_cast<int>(twos.size()); ++x) {
        OneCell f = b.two_src({a, c, x}), g = b.two_tgt({a, c, x});
        if (!(twos[x].dom() == w.on_one(f)) || !(twos[x].cod() == w.on_one(g)))
          throw ValidationError("MarkingIllFormed",
                                "W(" + b.show2({a, c, x}) + ") has wrong endpoints");
      }
    }
  // identities and composition, contravariantly on 1-cells
  for (int a = 0; a < n; ++a)
    if (!(w.on_one(b.unit1(a)) == core::identity_functor(w.at[a])))
      throw ValidationError("MarkingIllFormed", "W(unit of " + b.object_name(a) + ") != id");
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        for (auto g : b.one_cells(c, d))
          for (auto f : b.one_cells(a, c))
            if (!(w.on_one(b.comp1(g, f)) ==
                  core::compose_functors(w.on_one(f), w.on_one(g))))
              throw ValidationError("MarkingIllFormed", "W(g∘f) != W(f)∘W(g) at (" + b.show1(g) +
                                                            "," + b.show1(f) + ")");
  // identity 2-cells and vertical composition
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      for (auto f : b.one_cells(a, c))
        if (!(w.on_two(b.id2(f)) == core::identity_nat(w.on_one(f))))
          throw ValidationError("MarkingIllFormed", "W(id2 " + b.show1(f) + ") != id");
      for (auto f : b.one_cells(a, c))
        for (auto g : b.one_cells(a, c))
          for (auto x : b.two_cells(f, g))
            for (auto h : b.one_cells(a, c))
              for (auto y : b.two_cells(g, h))
                if (!(w.on_two(b.vcomp(y, x)) == core::vcomp_nat(w.on_two(y), w.on_two(x))))
                  throw ValidationError("MarkingIllFormed", "vertical functoriality at (" +
                                                                b.show2(y) + "," + b.show2(x) + ")");
    }
  // horizontal composition: W(delta' * delta) = W(delta) * W(delta')
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const auto& hab = b.hom(a, c);
        const auto& hbd = b.hom(c, d);
        for (int x = 0; x < hab.num_morphisms(); ++x)
          for (int y = 0; y < hbd.num_morphisms(); ++y) {
            TwoCell xc{a, c, x}, yc{c, d, y};
            if (!(w.on_two(b.hcomp(yc, xc)) == core::hcomp_nat(w.on_two(xc), w.on_two(yc))))
              throw ValidationError("MarkingIllFormed",
                                    "horizontal functoriality at (" + b.show2(yc) + "," +
                                        b.show2(xc) + ")");
          }
      }
}

Marking make_marking_on_promoted(const Cat2Ptr& base, std::vector<CatPtr> at,
                                 std::vector<std::vector<FinFunctor>> on1) {
  Marking w;
  w.base = base;
  w.at = std::move(at);
  w.on1 = std::move(on1);
  const int n = base->num_objects();
  w.on2.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto& h = base->hom(a, c);
      w.on2[a * n + c].reserve(h.num_morphisms());
      for (int x = 0; x < h.num_morphisms(); ++x) {
        // promoted bases have only identity 2-cells
        OneCell f = base->two_src({a, c, x});
        w.on2[a * n + c].push_back(core::identity_nat(w.on1[a * n + c][f.idx]));
      }
    }
  validate_marking(w);
  return w;
}

Marking representable_marking(const Cat2Ptr& e, int m) {
  Marking w;
  w.base = e;
  const int n = e->num_objects();
  for (int a = 0; a < n; ++a) w.at.push_back(e->hom_ptr(a, m));
  w.on1.resize(n * n);
  w.on2.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto& h = e->hom(a, c);
      for (int f = 0; f < h.num_objects(); ++f) {
        // precomposition (- ∘ f) : hom(c, M) -> hom(a, M)
        OneCell fc{a, c, f};
        std::vector<int> omap(e->hom(c, m).num_objects());
        std::vector<int> mmap(e->hom(c, m).num_morphisms());
        for (int x = 0; x < e->hom(c, m).num_objects(); ++x)
          omap[x] = e->comp1({c, m, x}, fc).idx;
        for (int x = 0; x < e->hom(c, m).num_morphisms(); ++x)
          mmap[x] = e->rwhisk({c, m, x}, fc).idx;
        w.on1[a * n + c].push_back(
            core::build_functor(e->hom_ptr(c, m), e->hom_ptr(a, m), omap, mmap));
      }
      for (int x = 0; x < h.num_morphisms(); ++x) {
        // whiskering (- * delta) : (- ∘ f) => (- ∘ g)
        TwoCell xc{a, c, x};
        OneCell f = e->two_src(xc), g = e->two_tgt(xc);
        std::vector<int> comp(e->hom(c, m).num_objects());
        for (int y = 0; y < e->hom(c, m).num_objects(); ++y)
          comp[y] = e->lwhisk({c, m, y}, xc).idx;
        w.on2[a * n + c].push_back(
            core::build_nat_transf(w.on1[a * n + c][f.idx], w.on1[a * n + c][g.idx], comp));
      }
    }
  validate_marking(w);
  return w;
}

}  // namespace twoslice::groth

#include "twoslice/groth/groth.hpp"

namespace twoslice::groth {

using core::ValidationError;
using two::Raw2Category;

int GrothResult::total_obj(int base_obj, int fibre_obj) const {
  for (std::size_t i = 0; i < obj_decode.size(); ++i)
    if (obj_decode[i].first == base_obj && obj_decode[i].second == fibre_obj)
      return static_cast<int>(i);
  return -1;
}

OneCell GrothResult::cleavage(OneCell base_f, int obj_over_cod) const {
  const int n = total->num_objects();
  auto [b, x] = obj_decode[obj_over_cod];
  (void)b;
  int alpha_id = w.at[base_f.a]->identity(w.on_one(base_f).on_obj(x));
  int src_obj = total_obj(base_f.a, w.on_one(base_f).on_obj(x));
  const auto& ones = one_decode[src_obj * n + obj_over_cod];
  for (std::size_t i = 0; i < ones.size(); ++i)
    if (ones[i].first == base_f.idx && ones[i].second == alpha_id)
      return {src_obj, obj_over_cod, static_cast<int>(i)};
  throw ValidationError("NotLiftable", "cleavage cell missing for " + w.base->show1(base_f));
}

GrothResult groth_construct(const Marking& w) {
  validate_marking(w);
  GrothResult g;
  g.w = w;
  const auto& base = *w.base;
  const int nb = base.num_objects();

  // objects (A, X)
  std::vector<std::string> obj_names;
  for (int a = 0; a < nb; ++a)
    for (int x = 0; x < w.at[a]->num_objects(); ++x) {
      g.obj_decode.push_back({a, x});
      obj_names.push_back("(" + base.object_name(a) + "," + w.at[a]->object_name(x) + ")");
    }
  const int n = static_cast<int>(g.obj_decode.size());

  Raw2Category raw;
  raw.name = "groth(" + base.name() + ")";
  raw.objects = obj_names;
  g.one_decode.resize(n * n);
  g.two_decode.resize(n * n);

  // hom((A,X),(B,X')): objects are pairs (f : A -> B, alpha : X -> W(f)(X')),
  // morphisms are base 2-cells delta : f => g with beta = W(delta)_{X'} ∘ alpha
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, x] = g.obj_decode[i];
      auto [b, xp] = g.obj_decode[j];
      core::RawCategory h;
      h.name = raw.name + "(" + obj_names[i] + "," + obj_names[j] + ")";
      auto& ones = g.one_decode[i * n + j];
      auto& twos = g.two_decode[i * n + j];
      const auto& wa = *w.at[a];
      for (int f = 0; f < base.hom(a, b).num_objects(); ++f) {
        const auto& wf = w.on1[a * nb + b][f];
        for (int alpha = 0; alpha < wa.num_morphisms(); ++alpha)
          if (wa.src(alpha) == x && wa.tgt(alpha) == wf.on_obj(xp)) {
            h.objects.push_back("(" + base.hom(a, b).object_name(f) + "," +
                                wa.morphism_name(alpha) + ")");
            ones.push_back({f, alpha});
          }
      }
      auto find_one = [&](int f, int alpha) {
        for (std::size_t k = 0; k < ones.size(); ++k)
          if (ones[k].first == f && ones[k].second == alpha) return static_cast<int>(k);
        return -1;
      };
      for (std::size_t src_cell = 0; src_cell < ones.size(); ++src_cell) {
        auto [f, alpha] = ones[src_cell];
        for (int d = 0; d < base.hom(a, b).num_morphisms(); ++d) {
          if (base.hom(a, b).src(d) != f) continue;
          int gcell = base.hom(a, b).tgt(d);
          int beta = wa.compose(w.on2[a * nb + b][d].at(xp), alpha);
          int tgt_cell = find_one(gcell, beta);
          if (tgt_cell < 0)
            throw ValidationError("MarkingIllFormed", "2-cell condition escapes the fibre");
          h.morphisms.push_back({"(" + base.hom(a, b).morphism_name(d) + "@" +
                                     wa.morphism_name(alpha) + ")",
                                 h.objects[src_cell], h.objects[tgt_cell]});
          twos.push_back({d, alpha});
        }
      }
      auto find_two = [&](int d, int alpha) {
        for (std::size_t k = 0; k < twos.size(); ++k)
          if (twos[k].first == d && twos[k].second == alpha) return static_cast<int>(k);
        return -1;
      };
      for (std::size_t k = 0; k < ones.size(); ++k) {
        auto [f, alpha] = ones[k];
        h.identities.push_back(
            {h.objects[k],
             h.morphisms[find_two(base.hom(a, b).identity(f), alpha)].name});
      }
      // vertical composition: (delta' ∘ delta) at the source alpha
      for (std::size_t y = 0; y < twos.size(); ++y)
        for (std::size_t z = 0; z < twos.size(); ++z) {
          auto [d1, alpha1] = twos[y];
          auto [d2, alpha2] = twos[z];
          // z after y: source 1-cell of z must be target of y
          int mid_f = base.hom(a, b).tgt(d1);
          int mid_alpha = wa.compose(w.on2[a * nb + b][d1].at(xp), alpha1);
          if (base.hom(a, b).src(d2) != mid_f || alpha2 != mid_alpha) continue;
          int comp_d = base.hom(a, b).compose(d2, d1);
          h.composites.push_back({h.morphisms[z].name, h.morphisms[y].name,
                                  h.morphisms[find_two(comp_d, alpha1)].name});
        }
      raw.homs.push_back(core::build_category_ptr(h));
    }

  for (int i = 0; i < n; ++i) {
    auto [a, x] = g.obj_decode[i];
    const auto& ones = g.one_decode[i * n + i];
    int unit = -1;
    for (std::size_t k = 0; k < ones.size(); ++k)
      if (ones[k].first == base.unit1(a).idx && ones[k].second == w.at[a]->identity(x))
        unit = static_cast<int>(k);
    raw.units.push_back(raw.homs[i * n + i]->object_name(unit));
  }

  // horizontal composition: (g, beta) ∘ (f, alpha) = (g∘f, W(f)(beta) ∘ alpha)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto [a, x] = g.obj_decode[i];
        auto [b, xp] = g.obj_decode[j];
        auto [c, xpp] = g.obj_decode[k];
        (void)x;
        (void)xpp;
        const auto& fs = g.one_decode[i * n + j];
        const auto& gs = g.one_decode[j * n + k];
        const auto& hij = *raw.homs[i * n + j];
        const auto& hjk = *raw.homs[j * n + k];
        const auto& hik = *raw.homs[i * n + k];
        auto comp_one = [&](std::pair<int, int> gc, std::pair<int, int> fc) -> std::pair<int, int> {
          OneCell fb{a, b, fc.first}, gb{b, c, gc.first};
          int comp_f = base.comp1(gb, fb).idx;
          const auto& wf = w.on1[a * nb + b][fc.first];
          int comp_alpha = w.at[a]->compose(wf.on_mor(gc.second), fc.second);
          return {comp_f, comp_alpha};
        };
        auto find_one_ik = [&](std::pair<int, int> cell) {
          const auto& ones = g.one_decode[i * n + k];
          for (std::size_t q = 0; q < ones.size(); ++q)
            if (ones[q] == cell) return static_cast<int>(q);
          return -1;
        };
        for (std::size_t gq = 0; gq < gs.size(); ++gq)
          for (std::size_t fq = 0; fq < fs.size(); ++fq)
            raw.comp1.push_back({i, j, k, hjk.object_name(static_cast<int>(gq)),
                                 hij.object_name(static_cast<int>(fq)),
                                 hik.object_name(find_one_ik(comp_one(gs[gq], fs[fq])))});
        // 2-cells compose horizontally as in the base, at the composite alpha
        const auto& xs = g.two_decode[i * n + j];
        const auto& ys = g.two_decode[j * n + k];
        auto find_two_ik = [&](std::pair<int, int> cell) {
          const auto& twos = g.two_decode[i * n + k];
          for (std::size_t q = 0; q < twos.size(); ++q)
            if (twos[q] == cell) return static_cast<int>(q);
          return -1;
        };
        for (std::size_t yq = 0; yq < ys.size(); ++yq)
          for (std::size_t xq = 0; xq < xs.size(); ++xq) {
            auto [d2, alpha2] = ys[yq];
            auto [d1, alpha1] = xs[xq];
            TwoCell d2c{b, c, d2}, d1c{a, b, d1};
            int comp_d = base.hcomp(d2c, d1c).idx;
            int src_alpha = comp_one({base.hom(b, c).src(d2), alpha2},
                                     {base.hom(a, b).src(d1), alpha1})
                                .second;
            raw.comp2.push_back({i, j, k, hjk.morphism_name(static_cast<int>(yq)),
                                 hij.morphism_name(static_cast<int>(xq)),
                                 hik.morphism_name(find_two_ik({comp_d, src_alpha}))});
          }
      }

  g.total = two::build_2category_ptr(raw);

  // projection to the base
  std::vector<int> omap(n);
  std::vector<std::vector<int>> one_map(n * n), two_map(n * n);
  for (int i = 0; i < n; ++i) omap[i] = g.obj_decode[i].first;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (auto& [f, alpha] : g.one_decode[i * n + j]) {
        (void)alpha;
        one_map[i * n + j].push_back(f);
      }
      for (auto& [d, alpha] : g.two_decode[i * n + j]) {
        (void)alpha;
        two_map[i * n + j].push_back(d);
      }
    }
  g.proj = two::build_2functor(g.total, w.base, omap, one_map, two_map);

  // tight = cleavage cells (alpha an identity)
  std::vector<OneCell> tight;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, x] = g.obj_decode[i];
      (void)x;
      const auto& ones = g.one_decode[i * n + j];
      for (std::size_t q = 0; q < ones.size(); ++q)
        if (w.at[a]->is_identity(ones[q].second)) tight.push_back({i, j, static_cast<int>(q)});
    }
  g.marking = two::attach_marking(g.total, tight);

  // splitness of the chosen cleavage
  for (int j = 0; j < n; ++j) {
    auto [b, xp] = g.obj_decode[j];
    for (int a = 0; a < nb; ++a)
      for (auto f : base.one_cells(a, b)) {
        OneCell lf = g.cleavage(f, j);
        if (g.proj.on_one(lf) != f)
          throw ValidationError("NotLiftable", "cleavage does not project correctly");
        for (int z = 0; z < nb; ++z)
          for (auto e : base.one_cells(z, a)) {
            OneCell le = g.cleavage(e, lf.a);
            OneCell lc = g.cleavage(base.comp1(f, e), j);
            if (g.total->comp1(lf, le) != lc)
              throw ValidationError("NotLiftable", "cleavage is not split at (" + base.show1(f) +
                                                       "," + base.show1(e) + ")");
          }
      }
    OneCell lid = g.cleavage(base.unit1(b), j);
    if (lid != g.total->unit1(j))
      throw ValidationError("NotLiftable", "cleavage of an identity is not the identity");
  }
  return g;
}

GrothResult groth_of_representable(const Cat2Ptr& e, int m) {
  return groth_construct(representable_marking(e, m));
}

ClovenPair cloven_of_groth(const GrothResult& g) {
  return {g.total, g.w.base, g.proj, [&g](OneCell f, int s) { return g.cleavage(f, s); }};
}

ClovenPair cloven_identity(const Cat2Ptr& c) {
  return {c, c, two::identity_2functor(c), [](OneCell f, int) { return f; }};
}

ClovenPair cloven_of_functor(const TwoFunctor& p, std::function<OneCell(OneCell, int)> lift) {
  return {p.dom(), p.cod(), p, std::move(lift)};
}

OneCell cartesian_lift(const ClovenPair& fib, OneCell e, int s) {
  if (fib.p.on_obj(s) != e.b)
    throw ValidationError("NotLiftable", "object is not over the codomain of the 1-cell");
  OneCell l = fib.lift(e, s);
  if (l.b != s || fib.p.on_one(l) != e)
    throw ValidationError("NotLiftable", "chosen lift is not over " + fib.base_cat->show1(e));
  // factorization property, by enumeration
  const auto& total = *fib.total_cat;
  const auto& base = *fib.base_cat;
  for (int z = 0; z < total.num_objects(); ++z)
    for (auto v : total.one_cells(z, s))
      for (auto wcell : base.one_cells(fib.p.on_obj(z), e.a)) {
        if (fib.p.on_one(v) != base.comp1(e, wcell)) continue;
        int count = 0;
        for (auto v2 : total.one_cells(z, l.a))
          if (total.comp1(l, v2) == v && fib.p.on_one(v2) == wcell) ++count;
        if (count != 1)
          throw ValidationError("NotLiftable", "lift of " + base.show1(e) + " is not cartesian: " +
                                                   std::to_string(count) + " factorizations of " +
                                                   total.show1(v));
      }
  return l;
}

TwoCell lift_2cell_fixed_domain(const ClovenPair& fib, TwoCell phi, OneCell u) {
  const auto& total = *fib.total_cat;
  const auto& base = *fib.base_cat;
  if (fib.p.on_one(u) != base.two_src(phi))
    throw ValidationError("NoLift", "1-cell is not over the domain of the 2-cell");
  std::vector<TwoCell> found;
  const auto& h = total.hom(u.a, u.b);
  for (int x = 0; x < h.num_morphisms(); ++x) {
    TwoCell xc{u.a, u.b, x};
    if (total.two_src(xc) == u && fib.p.on_two(xc) == phi) found.push_back(xc);
  }
  if (found.empty())
    throw ValidationError("NoLift", "no 2-cell over " + base.show2(phi) + " with domain " +
                                        total.show1(u));
  if (found.size() > 1)
    throw ValidationError("NonUniqueLift", std::to_string(found.size()) + " 2-cells over " +
                                               base.show2(phi) + " with domain " + total.show1(u) +
                                               ": " + total.show2(found[0]) + ", " +
                                               total.show2(found[1]));
  return found[0];
}

TwoSetFibrationReport check_two_set_fibration(const ClovenPair& fib) {
  TwoSetFibrationReport report;
  const auto& total = *fib.total_cat;
  const auto& base = *fib.base_cat;
  // cleavage exists, projects correctly, and is cartesian
  for (int s = 0; s < total.num_objects(); ++s)
    for (int a = 0; a < base.num_objects(); ++a)
      for (auto e : base.one_cells(a, fib.p.on_obj(s))) {
        try {
          cartesian_lift(fib, e, s);
          report.add("cartesian_lift(" + base.show1(e) + "->" + total.object_name(s) + ")", true);
        } catch (const ValidationError& err) {
          report.add("cartesian_lift(" + base.show1(e) + "->" + total.object_name(s) + ")", false,
                     err.witness);
        }
      }
  // splitness
  for (int s = 0; s < total.num_objects(); ++s) {
    OneCell lid = fib.lift(base.unit1(fib.p.on_obj(s)), s);
    bool id_ok = lid == total.unit1(s);
    report.add("split_identity(" + total.object_name(s) + ")", id_ok,
               id_ok ? "" : total.show1(lid));
    if (!id_ok) report.split = false;
    for (int a = 0; a < base.num_objects(); ++a)
      for (auto e2 : base.one_cells(a, fib.p.on_obj(s))) {
        OneCell l2 = fib.lift(e2, s);
        for (int z = 0; z < base.num_objects(); ++z)
          for (auto e1 : base.one_cells(z, a)) {
            OneCell l1 = fib.lift(e1, l2.a);
            OneCell lc = fib.lift(base.comp1(e2, e1), s);
            bool ok = total.comp1(l2, l1) == lc;
            if (!ok) {
              report.split = false;
              report.add("split_composite", false,
                         "(" + base.show1(e2) + "," + base.show1(e1) + ")");
            }
          }
      }
  }
  // unique lifting of 2-cells to a fixed domain 1-cell
  for (int a = 0; a < base.num_objects(); ++a)
    for (int b = 0; b < base.num_objects(); ++b) {
      const auto& h = base.hom(a, b);
      for (int ph = 0; ph < h.num_morphisms(); ++ph) {
        TwoCell phi{a, b, ph};
        OneCell e = base.two_src(phi);
        for (int i = 0; i < total.num_objects(); ++i)
          for (int j = 0; j < total.num_objects(); ++j)
            for (auto u : total.one_cells(i, j)) {
              if (fib.p.on_one(u) != e) continue;
              try {
                lift_2cell_fixed_domain(fib, phi, u);
              } catch (const ValidationError& err) {
                report.add("lift_2cell(" + base.show2(phi) + "@" + total.show1(u) + ")", false,
                           err.kind + ": " + err.witness);
              }
            }
      }
    }
  if (report.ok) report.add("two_set_fibration", true);
  return report;
}

}  // namespace twoslice::groth

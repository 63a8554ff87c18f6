#pragma once

#include <functional>
#include <optional>

#include "twoslice/slice/cocone.hpp"

namespace twoslice::slice {

// ---------------------------------------------------------------------------
// Enumeration of diagrams, cocones and modifications over a tabulated shape
// in an enumerable model. Complete at desk scale.

template <class M>
std::vector<TwoFunctorMap<Fin2Model, M>> enumerate_diagrams(const Fin2Model& shape, const M& m) {
  const Fin2Category& sh = *shape.cat;
  std::vector<TwoFunctorMap<Fin2Model, M>> out;
  auto objs = m.objects();
  const int n = sh.num_objects();
  std::vector<int> opick(n, 0);
  if (objs.empty() && n > 0) return out;
  while (true) {
    auto t = std::make_shared<ShapeTables<M>>();
    t->objs.resize(n);
    for (int i = 0; i < n; ++i) t->objs[i] = objs[opick[i]];
    // choose 1-cell images (units pinned), then validate composition
    std::vector<std::vector<typename M::One>> cand(sh.num_one_cells());
    bool feasible = true;
    for (int a = 0; a < n && feasible; ++a)
      for (int b = 0; b < n && feasible; ++b)
        for (auto u : sh.one_cells(a, b)) {
          if (u == sh.unit1(a))
            cand[sh.one_index(u)] = {m.id1(t->objs[a])};
          else
            cand[sh.one_index(u)] = m.one_cells(t->objs[a], t->objs[b]);
          if (cand[sh.one_index(u)].empty()) feasible = false;
        }
    if (feasible) {
      std::vector<int> pick(sh.num_one_cells(), 0);
      while (true) {
        t->ones.resize(sh.num_one_cells());
        for (int i = 0; i < sh.num_one_cells(); ++i) t->ones[i] = cand[i][pick[i]];
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
          for (int b = 0; b < n && ok; ++b)
            for (auto u : sh.one_cells(a, b)) {
              for (int d = 0; d < n && ok; ++d)
                for (auto v : sh.one_cells(b, d))
                  if (!m.eq1(t->ones[sh.one_index(sh.comp1(v, u))],
                             m.comp1(t->ones[sh.one_index(v)], t->ones[sh.one_index(u)]))) {
                    ok = false;
                    break;
                  }
              if (!ok) break;
            }
        if (ok) {
          // choose 2-cell images (identity 2-cells pinned) and validate
          std::vector<std::vector<typename M::Two>> cand2(sh.num_two_cells());
          bool feas2 = true;
          for (int a = 0; a < n && feas2; ++a)
            for (int b = 0; b < n && feas2; ++b)
              for (auto u : sh.one_cells(a, b))
                for (auto v : sh.one_cells(a, b))
                  for (auto x : sh.two_cells(u, v)) {
                    if (x == sh.id2(u))
                      cand2[sh.two_index(x)] = {m.id2(t->ones[sh.one_index(u)])};
                    else
                      cand2[sh.two_index(x)] =
                          m.two_cells(t->ones[sh.one_index(u)], t->ones[sh.one_index(v)]);
                    if (cand2[sh.two_index(x)].empty()) feas2 = false;
                  }
          if (feas2) {
            std::vector<int> pick2(sh.num_two_cells(), 0);
            while (true) {
              auto t2 = std::make_shared<ShapeTables<M>>(*t);
              t2->twos.resize(sh.num_two_cells());
              for (int i = 0; i < sh.num_two_cells(); ++i) t2->twos[i] = cand2[i][pick2[i]];
              bool ok2 = true;
              for (int a = 0; a < n && ok2; ++a)
                for (int b = 0; b < n && ok2; ++b) {
                  const auto& h = sh.hom(a, b);
                  for (int y = 0; y < h.num_morphisms() && ok2; ++y)
                    for (int x = 0; x < h.num_morphisms(); ++x) {
                      if (!h.composable(y, x)) continue;
                      TwoCell yc{a, b, y}, xc{a, b, x};
                      if (!m.eq2(t2->twos[sh.two_index(sh.vcomp(yc, xc))],
                                 m.vcomp(t2->twos[sh.two_index(yc)], t2->twos[sh.two_index(xc)]))) {
                        ok2 = false;
                        break;
                      }
                    }
                  for (int c = 0; c < n && ok2; ++c)
                    for (int y = 0; y < sh.hom(b, c).num_morphisms() && ok2; ++y)
                      for (int x = 0; x < h.num_morphisms(); ++x) {
                        TwoCell yc{b, c, y}, xc{a, b, x};
                        if (!m.eq2(
                                t2->twos[sh.two_index(sh.hcomp(yc, xc))],
                                m.hcomp(t2->twos[sh.two_index(yc)], t2->twos[sh.two_index(xc)]))) {
                          ok2 = false;
                          break;
                        }
                      }
                }
              if (ok2) out.push_back(table_map(shape, t2));
              int i = 0;
              while (i < sh.num_two_cells()) {
                if (++pick2[i] < static_cast<int>(cand2[i].size())) break;
                pick2[i] = 0;
                ++i;
              }
              if (i == sh.num_two_cells()) break;
              if (sh.num_two_cells() == 0) break;
            }
          }
        }
        int i = 0;
        while (i < sh.num_one_cells()) {
          if (++pick[i] < static_cast<int>(cand[i].size())) break;
          pick[i] = 0;
          ++i;
        }
        if (i == sh.num_one_cells()) break;
        if (sh.num_one_cells() == 0) break;
      }
    }
    int i = 0;
    while (i < n) {
      if (++opick[i] < static_cast<int>(objs.size())) break;
      opick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

// All valid oplax normal cocones for the diagram on the given apex. Structure
// cells are pinned to identities on tight cells; the rest are enumerated and
// filtered by the cocone laws.
template <class M>
std::vector<OplaxCocone<M>> enumerate_cocones(const Fin2Model& shape,
                                              const TwoFunctorMap<Fin2Model, M>& diagram,
                                              const M& m, const typename M::Obj& apex) {
  const Fin2Category& sh = *shape.cat;
  std::vector<OplaxCocone<M>> out;
  const int n = sh.num_objects();
  std::vector<std::vector<typename M::One>> legcand(n);
  for (int s = 0; s < n; ++s) {
    legcand[s] = m.one_cells(diagram.on_obj(s), apex);
    if (legcand[s].empty()) return out;
  }
  std::vector<int> lpick(n, 0);
  if (n == 0) return out;
  while (true) {
    OplaxCocone<M> c{shape, diagram, apex, {}, {}};
    c.leg.resize(n);
    for (int s = 0; s < n; ++s) c.leg[s] = legcand[s][lpick[s]];
    // candidates for structure cells
    std::vector<std::vector<typename M::Two>> strcand(sh.num_one_cells());
    bool feasible = true;
    for (int a = 0; a < n && feasible; ++a)
      for (int b = 0; b < n && feasible; ++b)
        for (auto u : sh.one_cells(a, b)) {
          auto tgt = m.comp1(c.leg[b], diagram.on_one(u));
          if (shape.tight(u)) {
            if (m.eq1(c.leg[a], tgt))
              strcand[sh.one_index(u)] = {m.id2(c.leg[a])};
            else
              feasible = false;
          } else {
            strcand[sh.one_index(u)] = m.two_cells(c.leg[a], tgt);
            if (strcand[sh.one_index(u)].empty()) feasible = false;
          }
        }
    if (feasible) {
      std::vector<int> spick(sh.num_one_cells(), 0);
      while (true) {
        c.str.resize(sh.num_one_cells());
        for (int i = 0; i < sh.num_one_cells(); ++i) c.str[i] = strcand[i][spick[i]];
        if (validate_cocone(m, c).ok) out.push_back(c);
        int i = 0;
        while (i < sh.num_one_cells()) {
          if (++spick[i] < static_cast<int>(strcand[i].size())) break;
          spick[i] = 0;
          ++i;
        }
        if (i == sh.num_one_cells()) break;
        if (sh.num_one_cells() == 0) break;
      }
    }
    int i = 0;
    while (i < n) {
      if (++lpick[i] < static_cast<int>(legcand[i].size())) break;
      lpick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

template <class M>
std::vector<CoconeModification<M>> enumerate_modifications(const M& m, const OplaxCocone<M>& from,
                                                           const OplaxCocone<M>& to) {
  const Fin2Category& sh = *from.shape.cat;
  std::vector<CoconeModification<M>> out;
  const int n = sh.num_objects();
  std::vector<std::vector<typename M::Two>> cand(n);
  for (int s = 0; s < n; ++s) {
    cand[s] = m.two_cells(from.leg[s], to.leg[s]);
    if (cand[s].empty()) return out;
  }
  std::vector<int> pick(n, 0);
  if (n == 0) return out;
  while (true) {
    CoconeModification<M> mod;
    mod.comp.resize(n);
    for (int s = 0; s < n; ++s) mod.comp[s] = cand[s][pick[s]];
    if (validate_modification(m, from, to, mod).ok) out.push_back(mod);
    int i = 0;
    while (i < n) {
      if (++pick[i] < static_cast<int>(cand[i].size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Universality: certificate plus operational mediators.

struct MediatorRow {
  std::string probe;
  std::string mediator;
};

struct UniversalityCertificate {
  bool universal = false;
  std::string failure;
  std::vector<MediatorRow> rows;
};

// A certified universal cocone together with its mediator procedures. The
// procedures assert their factorization equations and throw on violation.
template <class M>
struct UniversalCocone {
  OplaxCocone<M> cocone;
  std::function<typename M::One(const OplaxCocone<M>&)> mediate1;
  // mediating 2-cell for a modification between the cocones induced by two
  // mediators
  std::function<typename M::Two(const CoconeModification<M>&, const typename M::One&,
                                const typename M::One&)>
      mediate2;
};

// Complete enumeration oracle for finite ambients: every cocone over every
// object factors through exactly one 1-cell, and every modification between
// induced cocones through exactly one 2-cell.
template <class M>
UniversalityCertificate decide_oplax_colimit(const M& m, const OplaxCocone<M>& lambda) {
  UniversalityCertificate cert;
  auto vrep = validate_cocone(m, lambda);
  if (!vrep.ok) {
    cert.failure = "not a cocone: " + vrep.failures.front();
    return cert;
  }
  int qi = 0;
  for (const auto& q : m.objects()) {
    ++qi;
    auto probes = enumerate_cocones(lambda.shape, lambda.diagram, m, q);
    auto cands = m.one_cells(lambda.apex, q);
    int pi = 0;
    for (const auto& probe : probes) {
      ++pi;
      std::vector<typename M::One> mediators;
      for (const auto& g : cands)
        if (cocones_equal(m, whisker_cocone(m, g, lambda), probe)) mediators.push_back(g);
      if (mediators.size() != 1) {
        cert.failure = "cocone " + std::to_string(pi) + " over " + m.show_obj(q) + " has " +
                       std::to_string(mediators.size()) + " mediators";
        return cert;
      }
      cert.rows.push_back({m.show_obj(q) + "#" + std::to_string(pi), m.show1(mediators[0])});
    }
    // 2-dimensional universality on all pairs of induced cocones
    for (const auto& g1 : cands)
      for (const auto& g2 : cands) {
        auto c1 = whisker_cocone(m, g1, lambda);
        auto c2 = whisker_cocone(m, g2, lambda);
        for (const auto& mod : enumerate_modifications(m, c1, c2)) {
          int count = 0;
          for (const auto& gam : m.two_cells(g1, g2)) {
            bool match = true;
            for (std::size_t s = 0; s < mod.comp.size() && match; ++s)
              if (!m.eq2(mod.comp[s], m.rwhisk(gam, lambda.leg[s]))) match = false;
            if (match) ++count;
          }
          if (count != 1) {
            cert.failure = "a modification over " + m.show_obj(q) + " has " +
                           std::to_string(count) + " mediating 2-cells";
            return cert;
          }
        }
      }
  }
  cert.universal = true;
  return cert;
}

// Exhaustive uniqueness of a 1-cell mediator among all enumerable candidates;
// finite mode only.
template <class M>
bool mediator_unique(const M& m, const OplaxCocone<M>& lambda, const OplaxCocone<M>& probe,
                     const typename M::One& mediator) {
  int count = 0;
  bool seen = false;
  for (const auto& g : m.one_cells(lambda.apex, probe.apex))
    if (cocones_equal(m, whisker_cocone(m, g, lambda), probe)) {
      ++count;
      if (m.eq1(g, mediator)) seen = true;
    }
  return count == 1 && seen;
}

// Wraps an oracle-certified cocone with scan-based mediators.
template <class M>
UniversalCocone<M> oracle_universal(const M& m, const OplaxCocone<M>& lambda) {
  UniversalCocone<M> u;
  u.cocone = lambda;
  u.mediate1 = [&m, lambda](const OplaxCocone<M>& probe) -> typename M::One {
    std::vector<typename M::One> found;
    for (const auto& g : m.one_cells(lambda.apex, probe.apex))
      if (cocones_equal(m, whisker_cocone(m, g, lambda), probe)) found.push_back(g);
    if (found.size() != 1)
      throw core::ValidationError("NotUniversal", std::to_string(found.size()) +
                                                      " mediators for a probe cocone");
    return found[0];
  };
  u.mediate2 = [&m, lambda](const CoconeModification<M>& mod, const typename M::One& g1,
                            const typename M::One& g2) -> typename M::Two {
    std::vector<typename M::Two> found;
    for (const auto& gam : m.two_cells(g1, g2)) {
      bool match = true;
      for (std::size_t s = 0; s < mod.comp.size() && match; ++s)
        if (!m.eq2(mod.comp[s], m.rwhisk(gam, lambda.leg[s]))) match = false;
      if (match) found.push_back(gam);
    }
    if (found.size() != 1)
      throw core::ValidationError("NotUniversal", std::to_string(found.size()) +
                                                      " mediating 2-cells for a modification");
    return found[0];
  };
  return u;
}

}  // namespace twoslice::slice

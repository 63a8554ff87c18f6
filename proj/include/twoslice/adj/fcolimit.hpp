#pragma once

#include <set>

#include "twoslice/adj/laxadj.hpp"
#include "twoslice/slice/oracle.hpp"

namespace twoslice::adj {

using slice::CoconeModification;
using slice::OplaxCocone;
using slice::UniversalCocone;

// A weight valued in full embeddings: per base object, the tight objects of
// W(A) span a full subcategory of it, compatibly with the 1-cell actions.
struct FWeight {
  const groth::Marking* weight = nullptr;
  std::vector<std::set<int>> tau_objects;  // per base object
};

inline slice::LawReport validate_fweight(const FWeight& w) {
  slice::LawReport rep;
  const auto& base = *w.weight->base;
  if (w.tau_objects.size() != w.weight->at.size()) {
    rep.fail("tau object table sizes differ");
    return rep;
  }
  for (int a = 0; a < base.num_objects(); ++a)
    for (int b = 0; b < base.num_objects(); ++b)
      for (auto f : base.one_cells(a, b)) {
        const auto& wf = w.weight->on_one(f);
        for (int xp : w.tau_objects[b])
          if (!w.tau_objects[a].count(wf.on_obj(xp)))
            rep.fail("action of " + base.show1(f) + " does not preserve tight objects");
      }
  return rep;
}

struct FColimitReport {
  bool tau_components_tight = true;
  bool jointly_detect = true;
  bool lambda_components_tight = true;
  std::vector<std::string> witnesses;
  bool ok() const { return tau_components_tight && jointly_detect && lambda_components_tight; }
};

// The three tightness clauses of a tight strict/oplax F-colimit: (i) tight
// tau-components, (ii) joint detection of tightness over the probe objects,
// (iii) tight lambda-components.
template <class M>
FColimitReport check_tight_foplax_colimit(const M& m, const FWeight& w,
                                          const slice::WeightedCocylinder<M>& mu,
                                          const std::vector<typename M::Obj>& probe_objs) {
  FColimitReport rep;
  const auto& base = *w.weight->base;
  for (int a = 0; a < base.num_objects(); ++a)
    for (int x : w.tau_objects[a])
      if (!m.tight(mu.nu_obj[a][x])) {
        rep.tau_components_tight = false;
        rep.witnesses.push_back("tau component at " + base.object_name(a) + "/" +
                                w.weight->at[a]->object_name(x) + " is loose");
      }
  for (const auto& q_obj : probe_objs)
    for (const auto& q : m.one_cells(mu.apex, q_obj)) {
      bool all_tight = true;
      for (int a = 0; a < base.num_objects() && all_tight; ++a)
        for (int x : w.tau_objects[a])
          if (!m.tight(m.comp1(q, mu.nu_obj[a][x]))) all_tight = false;
      if (all_tight && !m.tight(q)) {
        rep.jointly_detect = false;
        rep.witnesses.push_back("joint detection fails at " + m.show1(q));
      }
    }
  for (int a = 0; a < base.num_objects(); ++a)
    for (std::size_t x = 0; x < mu.nu_obj[a].size(); ++x)
      if (!m.tight(mu.nu_obj[a][x])) {
        rep.lambda_components_tight = false;
        rep.witnesses.push_back("lambda component at " + base.object_name(a) + "/" +
                                w.weight->at[a]->object_name(x) + " is loose");
      }
  return rep;
}

template <class MA, class MB>
OplaxCocone<MB> map_cocone(const MB& mb, const TwoFunctorMap<MA, MB>& f,
                           const OplaxCocone<MA>& c) {
  OplaxCocone<MB> out;
  out.shape = c.shape;
  out.diagram = two::compose_maps<two::Fin2Model, MA, MB>(f, c.diagram);
  out.apex = f.on_obj(c.apex);
  out.leg.reserve(c.leg.size());
  out.str.reserve(c.str.size());
  for (const auto& l : c.leg) out.leg.push_back(f.on_one(l));
  for (const auto& s : c.str) out.str.push_back(f.on_two(s));
  (void)mb;
  return out;
}

struct PreservationReport {
  bool ok = true;
  int probes_checked = 0;
  int modifications_checked = 0;
  std::vector<std::string> witnesses;
  void fail(const std::string& w) {
    ok = false;
    witnesses.push_back(w);
  }
};

// Do the legs at the given shape objects jointly detect tightness of
// 1-cells out of the apex, over the probe objects?
template <class M>
bool legs_jointly_detect(const M& m, const OplaxCocone<M>& c, const std::vector<int>& tau_objs,
                         const std::vector<typename M::Obj>& probes) {
  for (const auto& qo : probes)
    for (const auto& q : m.one_cells(c.apex, qo)) {
      bool all_tight = true;
      for (int s : tau_objs)
        if (!m.tight(m.comp1(q, c.leg[s]))) {
          all_tight = false;
          break;
        }
      if (all_tight && !m.tight(q)) return false;
    }
  return true;
}

// For a tight F-adjunction, joint detection of tightness transfers along the
// left adjoint: if the tau-legs detect below, their images detect above.
template <class MS, class ME>
bool check_detection_preserved(const MS& ms, const ME& me, const LaxAdjunction<MS, ME>& adj,
                               const OplaxCocone<MS>& cocone, const std::vector<int>& tau_objs,
                               const std::vector<typename MS::Obj>& s_probes,
                               const std::vector<typename ME::Obj>& e_probes) {
  if (!legs_jointly_detect(ms, cocone, tau_objs, s_probes)) return true;  // nothing to transfer
  return legs_jointly_detect(me, map_cocone(me, adj.left, cocone), tau_objs, e_probes);
}

// The mediated preservation check: for every probe cocone on a probe apex,
// S-transport it below the adjunction, mediate through the given universal
// cocone, T-transport back, and verify the factorization exactly; uniqueness
// among all enumerable candidates. The 2-dimensional part runs on every
// modification between induced cocones.
template <class MS, class ME>
PreservationReport check_preservation_mediated(const MS& ms, const ME& me,
                                               const LaxAdjunction<MS, ME>& adj,
                                               const UniversalCocone<MS>& up,
                                               const std::vector<typename ME::Obj>& probe_apexes) {
  PreservationReport rep;
  const auto& mu = up.cocone;
  auto image = map_cocone(me, adj.left, mu);
  auto vimg = slice::validate_cocone(me, image);
  if (!vimg.ok) {
    rep.fail("image is not a cocone: " + vimg.failures.front());
    return rep;
  }
  const two::Fin2Category& sh = *mu.shape.cat;
  for (const auto& z : probe_apexes) {
    auto probes = slice::enumerate_cocones(image.shape, image.diagram, me, z);
    std::vector<typename ME::One> mediators;
    for (const auto& sigma : probes) {
      ++rep.probes_checked;
      // S-transport: legs U(sigma_s) ∘ eta_{H s}; structure cells pasted with
      // the unit's structure cells
      OplaxCocone<MS> s_sigma;
      s_sigma.shape = mu.shape;
      s_sigma.diagram = mu.diagram;
      s_sigma.apex = adj.right.on_obj(z);
      s_sigma.leg.resize(sh.num_objects());
      s_sigma.str.resize(sh.num_one_cells());
      for (int s = 0; s < sh.num_objects(); ++s)
        s_sigma.leg[s] =
            ms.comp1(adj.right.on_one(sigma.leg[s]), adj.unit.comp(mu.diagram.on_obj(s)));
      for (int a = 0; a < sh.num_objects(); ++a)
        for (int b = 0; b < sh.num_objects(); ++b)
          for (auto u : sh.one_cells(a, b)) {
            auto hu = mu.diagram.on_one(u);
            auto cell = ms.vcomp(
                ms.lwhisk(adj.right.on_one(sigma.leg[b]), adj.unit.str(hu)),
                ms.rwhisk(adj.right.on_two(sigma.str_at(u)), adj.unit.comp(mu.diagram.on_obj(a))));
            s_sigma.str[sh.one_index(u)] = cell;
          }
      auto vrep = slice::validate_cocone(ms, s_sigma);
      if (!vrep.ok) {
        rep.fail("transported probe is not a cocone: " + vrep.failures.front());
        continue;
      }
      typename MS::One gamma;
      try {
        gamma = up.mediate1(s_sigma);
      } catch (const core::ValidationError& e) {
        rep.fail(std::string("mediation below failed: ") + e.what());
        continue;
      }
      auto delta = me.comp1(adj.counit.comp(z), adj.left.on_one(gamma));
      if (!slice::cocones_equal(me, slice::whisker_cocone(me, delta, image), sigma)) {
        rep.fail("image mediator does not factor a probe at " + me.show_obj(z));
        continue;
      }
      if (!slice::mediator_unique(me, image, sigma, delta)) {
        rep.fail("image mediator is not unique at " + me.show_obj(z));
        continue;
      }
      mediators.push_back(delta);
    }
    // 2-dimensional universality on the induced cocones
    for (const auto& d1 : mediators)
      for (const auto& d2 : mediators) {
        auto c1 = slice::whisker_cocone(me, d1, image);
        auto c2 = slice::whisker_cocone(me, d2, image);
        for (const auto& mod : slice::enumerate_modifications(me, c1, c2)) {
          ++rep.modifications_checked;
          CoconeModification<MS> smod;
          smod.comp.resize(sh.num_objects());
          for (int s = 0; s < sh.num_objects(); ++s)
            smod.comp[s] =
                ms.rwhisk(adj.right.on_two(mod.comp[s]), adj.unit.comp(mu.diagram.on_obj(s)));
          typename MS::Two gam;
          try {
            gam = up.mediate2(smod, ms.comp1(adj.right.on_one(d1), adj.unit.comp(mu.apex)),
                              ms.comp1(adj.right.on_one(d2), adj.unit.comp(mu.apex)));
          } catch (const core::ValidationError& e) {
            rep.fail(std::string("2-cell mediation below failed: ") + e.what());
            continue;
          }
          auto delta2 = me.lwhisk(adj.counit.comp(z), adj.left.on_two(gam));
          bool factor = true;
          int count = 0;
          for (std::size_t s = 0; s < mod.comp.size() && factor; ++s)
            if (!me.eq2(mod.comp[s], me.rwhisk(delta2, image.leg[s]))) factor = false;
          for (const auto& cand : me.two_cells(d1, d2)) {
            bool match = true;
            for (std::size_t s = 0; s < mod.comp.size() && match; ++s)
              if (!me.eq2(mod.comp[s], me.rwhisk(cand, image.leg[s]))) match = false;
            if (match) ++count;
          }
          if (!factor) rep.fail("2-cell mediator does not factor a modification");
          if (count != 1) rep.fail("2-cell mediator is not unique");
        }
      }
  }
  return rep;
}

}  // namespace twoslice::adj

#include "twoslice/cob/adjunction.hpp"

namespace twoslice::cob {

using core::FinFunctor;
using core::ValidationError;

std::shared_ptr<HCategoryResult> CobAdjunction::lower(const FinFunctor& h) const {
  for (const auto& [key, val] : cache_)
    if (key == h) return val;
  cache_.emplace_back(h, std::make_shared<HCategoryResult>(tau_lower_star(cob_->tau(), h)));
  return cache_.back().second;
}

SliceCat::One CobAdjunction::counit_at(const FinFunctor& h) const {
  return cob_counit(*cob_, h, lower(h));
}

adj::CounitData<SliceCat, SliceCat> CobAdjunction::counit_data() const {
  adj::CounitData<SliceCat, SliceCat> data;
  const ChangeOfBase* cobp = cob_;
  const CobAdjunction* self = this;
  data.left = cob_->star_map();
  data.u0 = [self](const SliceCat::Obj& b) -> SliceCat::Obj { return {self->lower(b.g)->pr1}; };
  data.eps0 = [self](const SliceCat::Obj& b) { return self->counit_at(b.g); };
  data.bar = [self, cobp](const SliceCat::Obj& a, const SliceCat::One& h)
      -> std::pair<SliceCat::One, SliceCat::Two> {
    SliceCat sl_e{&cobp->model_e(), cobp->tau().tau.dom()};
    auto med = cob_mediator(*cobp, h.tgt_g, self->lower(h.tgt_g), a.g, h);
    return {med, sl_e.id2(h)};
  };
  return data;
}

LaxAdjunction<SliceCat, SliceCat> cob_bundle(const ChangeOfBase& cob, const CobAdjunction& storage,
                                             const AdjunctionProbes<SliceCat, SliceCat>& probes) {
  SliceCat sl_b{&cob.model_b(), cob.tau().tau.cod()};
  SliceCat sl_e{&cob.model_e(), cob.tau().tau.dom()};
  return adj::build_from_universal_counit(sl_b, sl_e, storage.counit_data(), probes);
}

CobAdjunctionReport check_cob_adjunction(const SplitOpfibration& t,
                                         const std::vector<FinFunctor>& f_probes,
                                         const std::vector<FinFunctor>& h_probes,
                                         const CatModel& model_b, const CatModel& model_e) {
  auto vrep = validate_split_opfibration(t);
  if (!vrep.ok)
    throw ValidationError("NotLiftable", "split opfibration invalid: " + vrep.items.front().witness);
  ChangeOfBase cob(t, &model_b, &model_e);
  CobAdjunction storage(&cob);
  SliceCat sl_b{&cob.model_b(), t.tau.cod()};
  SliceCat sl_e{&cob.model_e(), t.tau.dom()};

  AdjunctionProbes<SliceCat, SliceCat> probes;
  for (const auto& f : f_probes) probes.s_objs.push_back({f});
  for (const auto& h : h_probes) probes.e_objs.push_back({h});
  for (const auto& a : probes.s_objs)
    for (const auto& b : probes.s_objs)
      for (const auto& u : sl_b.one_cells(a, b)) {
        probes.s_ones.push_back(u);
        for (const auto& v : sl_b.one_cells(a, b))
          for (const auto& x : sl_b.two_cells(u, v)) probes.s_twos.push_back(x);
      }
  for (const auto& a : probes.e_objs)
    for (const auto& b : probes.e_objs)
      for (const auto& u : sl_e.one_cells(a, b)) {
        probes.e_ones.push_back(u);
        for (const auto& v : sl_e.one_cells(a, b))
          for (const auto& x : sl_e.two_cells(u, v)) probes.e_twos.push_back(x);
      }

  CobAdjunctionReport rep;
  auto adjunction = cob_bundle(cob, storage, probes);
  auto [laws, cls] = adj::validate_lax_adjunction(sl_b, sl_e, adjunction, probes);
  rep.laws = laws;
  rep.cls = cls;
  for (const auto& b : probes.e_objs)
    if (!sl_e.tight(adjunction.counit.comp(b))) rep.loose_counit_witness = true;
  for (const auto& a : probes.s_objs)
    for (const auto& b : probes.e_objs) {
      auto hom = adj::check_hom_adjunction(sl_b, sl_e, adjunction, a, b);
      if (!hom.report.ok || !hom.ts_identity || !hom.chi_identity) rep.hom_ts_identity = false;
    }
  // the mediator of the counit itself is the identity
  for (const auto& b : probes.e_objs) {
    auto hcat = storage.lower(b.g);
    auto eps = storage.counit_at(b.g);
    auto med = cob_mediator(cob, b.g, hcat, hcat->pr1, eps);
    if (!core::is_identity_functor(med.fhat)) rep.mediator_of_counit_identity = false;
  }
  if (!rep.loose_counit_witness)
    rep.notes.push_back("no loose counit component among the probes");
  return rep;
}

ExtensivityCheck check_extensivity(const ChangeOfBase& cob, const FinFunctor& g,
                                   const FinFunctor& g2) {
  ExtensivityCheck out;
  auto cp = core::binary_coproduct_category(g.dom(), g2.dom());
  auto copair = core::coproduct_copairing(cp, g, g2);
  const auto& lhs = cob.pullback_of(copair);
  const auto& pb1 = cob.pullback_of(g);
  const auto& pb2 = cob.pullback_of(g2);
  auto rhs = core::binary_coproduct_category(pb1.total, pb2.total);
  if (lhs.total->num_objects() != rhs.total->num_objects() ||
      lhs.total->num_morphisms() != rhs.total->num_morphisms()) {
    out.detail = "sizes differ";
    return out;
  }
  auto side_of_obj = [&](int o_plus, int& inner) {
    for (int x = 0; x < g.dom()->num_objects(); ++x)
      if (cp.inl.on_obj(x) == o_plus) {
        inner = x;
        return 0;
      }
    for (int y = 0; y < g2.dom()->num_objects(); ++y)
      if (cp.inr.on_obj(y) == o_plus) {
        inner = y;
        return 1;
      }
    return -1;
  };
  auto side_of_mor = [&](int m_plus, int& inner) {
    for (int x = 0; x < g.dom()->num_morphisms(); ++x)
      if (cp.inl.on_mor(x) == m_plus) {
        inner = x;
        return 0;
      }
    for (int y = 0; y < g2.dom()->num_morphisms(); ++y)
      if (cp.inr.on_mor(y) == m_plus) {
        inner = y;
        return 1;
      }
    return -1;
  };
  std::vector<int> omap(lhs.total->num_objects(), -1), mmap(lhs.total->num_morphisms(), -1);
  for (int o = 0; o < lhs.total->num_objects(); ++o) {
    int inner = -1;
    int side = side_of_obj(lhs.pr1.on_obj(o), inner);
    int e_obj = lhs.pr2.on_obj(o);
    const auto& pb = side == 0 ? pb1 : pb2;
    int found = -1;
    for (int p = 0; p < pb.total->num_objects(); ++p)
      if (pb.pr1.on_obj(p) == inner && pb.pr2.on_obj(p) == e_obj) found = p;
    if (found < 0) {
      out.detail = "no pullback partner for an object";
      return out;
    }
    omap[o] = side == 0 ? rhs.inl.on_obj(found) : rhs.inr.on_obj(found);
  }
  for (int m = 0; m < lhs.total->num_morphisms(); ++m) {
    int inner = -1;
    int side = side_of_mor(lhs.pr1.on_mor(m), inner);
    int e_mor = lhs.pr2.on_mor(m);
    const auto& pb = side == 0 ? pb1 : pb2;
    int found = -1;
    for (int p = 0; p < pb.total->num_morphisms(); ++p)
      if (pb.pr1.on_mor(p) == inner && pb.pr2.on_mor(p) == e_mor) found = p;
    if (found < 0) {
      out.detail = "no pullback partner for a morphism";
      return out;
    }
    mmap[m] = side == 0 ? rhs.inl.on_mor(found) : rhs.inr.on_mor(found);
  }
  core::FinFunctor iso;
  try {
    iso = core::build_functor(lhs.total, rhs.total, omap, mmap);
  } catch (const ValidationError& e) {
    out.detail = std::string("comparison not functorial: ") + e.what();
    return out;
  }
  std::vector<char> seen(rhs.total->num_objects(), 0), seenm(rhs.total->num_morphisms(), 0);
  for (int o : omap) seen[o] = 1;
  for (int m : mmap) seenm[m] = 1;
  for (char s : seen)
    if (!s) {
      out.detail = "not bijective on objects";
      return out;
    }
  for (char s : seenm)
    if (!s) {
      out.detail = "not bijective on morphisms";
      return out;
    }
  // projections to E agree: copair(tau* g, tau* g') ∘ iso = tau*(g + g')
  auto rhs_proj = core::coproduct_copairing(rhs, pb1.pr2, pb2.pr2);
  if (!(core::compose_functors(rhs_proj, iso) == lhs.pr2)) {
    out.detail = "projections to the total category disagree";
    return out;
  }
  out.ok = true;
  out.detail = "iso on " + std::to_string(lhs.total->num_objects()) + " objects";
  return out;
}

TauStarPreservationReport check_tau_star_preservation(
    const ChangeOfBase& cob, const CobAdjunction& storage,
    const slice::UniversalCocone<SliceCat>& up, const std::vector<SliceCat::Obj>& probe_apexes) {
  TauStarPreservationReport rep;
  SliceCat sl_b{&cob.model_b(), cob.tau().tau.cod()};
  SliceCat sl_e{&cob.model_e(), cob.tau().tau.dom()};
  for (const auto& l : up.cocone.leg)
    if (!sl_b.tight(l)) {
      rep.cocone_precondition = false;
      rep.notes.push_back("a cocone component is loose");
    }
  auto vrep = slice::validate_cocone(sl_b, up.cocone);
  if (!vrep.ok) {
    rep.cocone_precondition = false;
    rep.notes.push_back("input is not a cocone: " + vrep.failures.front());
    return rep;
  }
  // assemble the bundle with probes drawn from the cocone data and apexes
  AdjunctionProbes<SliceCat, SliceCat> probes;
  probes.s_objs.push_back(up.cocone.apex);
  for (const auto& l : up.cocone.leg) probes.s_objs.push_back(sl_b.one_src(l));
  probes.e_objs = {};
  for (const auto& q : probe_apexes) probes.e_objs.push_back(q);
  auto adjunction = cob_bundle(cob, storage, probes);
  std::vector<SliceCat::Obj> apexes;
  for (const auto& q : probe_apexes) apexes.push_back(q);
  rep.mediated = adj::check_preservation_mediated(sl_b, sl_e, adjunction, up, apexes);
  return rep;
}

}  // namespace twoslice::cob

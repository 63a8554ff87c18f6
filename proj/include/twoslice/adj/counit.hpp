#pragma once

#include "twoslice/adj/laxadj.hpp"

namespace twoslice::adj {

// Data for the universal-mapping-property construction of a right semi-lax
// right adjoint: a per-object counit with a chosen factorization bar(h) =
// (h-bar, lambda_h) through it.
template <class MS, class ME>
struct CounitData {
  TwoFunctorMap<MS, ME> left;  // F
  std::function<typename MS::Obj(const typename ME::Obj&)> u0;
  std::function<typename ME::One(const typename ME::Obj&)> eps0;  // F(U0 B) -> B
  std::function<std::pair<typename MS::One, typename ME::Two>(const typename MS::Obj&,
                                                              const typename ME::One&)>
      bar;  // (A, h : F A -> B) -> (h-bar : A -> U0 B, lambda_h : h => eps0 ∘ F(h-bar))
};

// The unique delta : from_one => g with (eps0(B) * F(delta)) ∘ from_lam = sigma,
// found by exhaustive scan over the enumerable 2-cells.
template <class MS, class ME>
typename MS::Two induce_through_counit(const MS& ms, const ME& me, const CounitData<MS, ME>& data,
                                       const typename ME::Obj& b, const typename MS::One& from_one,
                                       const typename ME::Two& from_lam,
                                       const typename MS::One& g, const typename ME::Two& sigma) {
  std::vector<typename MS::Two> found;
  for (const auto& d : ms.two_cells(from_one, g)) {
    auto pasted = me.vcomp(me.lwhisk(data.eps0(b), data.left.on_two(d)), from_lam);
    if (me.eq2(pasted, sigma)) found.push_back(d);
  }
  if (found.size() != 1)
    throw core::ValidationError("UniversalityFailure",
                                std::to_string(found.size()) + " induced 2-cells at " +
                                    me.show_obj(b));
  return found[0];
}

// Checks the universality clause and the two side assumptions on the probes,
// then assembles the full bundle. When every lambda_h is an identity the
// result is right semi-lax; the classification is re-derived by
// validate_lax_adjunction afterwards.
template <class MS, class ME>
LaxAdjunction<MS, ME> build_from_universal_counit(const MS& ms, const ME& me,
                                                  const CounitData<MS, ME>& data,
                                                  const AdjunctionProbes<MS, ME>& probes) {
  // universality of the counit on probe pairs
  for (const auto& a : probes.s_objs)
    for (const auto& b : probes.e_objs) {
      auto fa = data.left.on_obj(a);
      for (const auto& h : me.one_cells(fa, b)) {
        auto [hbar, lam] = data.bar(a, h);
        if (!ms.eq_obj(ms.one_src(hbar), a) || !ms.eq_obj(ms.one_tgt(hbar), data.u0(b)))
          throw core::ValidationError("UniversalityFailure", "bar 1-cell has wrong endpoints");
        auto want = me.comp1(data.eps0(b), data.left.on_one(hbar));
        if (!me.eq1(me.two_src(lam), h) || !me.eq1(me.two_tgt(lam), want))
          throw core::ValidationError("UniversalityFailure", "bar 2-cell has wrong endpoints");
        for (const auto& g : ms.one_cells(a, data.u0(b)))
          for (const auto& sigma :
               me.two_cells(h, me.comp1(data.eps0(b), data.left.on_one(g))))
            induce_through_counit(ms, me, data, b, hbar, lam, g, sigma);
      }
    }
  // side assumptions
  for (const auto& a : probes.s_objs) {
    auto fa = data.left.on_obj(a);
    auto [eta_a, s_a] = data.bar(a, me.id1(fa));
    for (const auto& b : probes.e_objs)
      for (const auto& h : me.one_cells(fa, b)) {
        auto [hbar, lam] = data.bar(a, h);
        auto eps_fa = data.eps0(fa);
        auto [he_bar, he_lam] = data.bar(data.u0(fa), me.comp1(h, eps_fa));
        if (!ms.eq1(hbar, ms.comp1(he_bar, eta_a)))
          throw core::ValidationError("AssumptionFailure",
                                      "bar(h) != bar(h ∘ eps) ∘ bar(id) at " + me.show1(h));
        auto pasted = me.vcomp(me.rwhisk(he_lam, data.left.on_one(eta_a)), me.lwhisk(h, s_a));
        if (!me.eq2(pasted, lam))
          throw core::ValidationError("AssumptionFailure",
                                      "lambda pasting equation fails at " + me.show1(h));
      }
  }
  for (const auto& b : probes.e_objs) {
    auto [ebar, elam] = data.bar(data.u0(b), data.eps0(b));
    if (!ms.eq1(ebar, ms.id1(data.u0(b))) || !me.eq2(elam, me.id2(data.eps0(b))))
      throw core::ValidationError("AssumptionFailure",
                                  "bar(eps) != id at " + me.show_obj(b));
  }

  LaxAdjunction<MS, ME> adj;
  adj.left = data.left;
  const MS* msp = &ms;
  const ME* mep = &me;
  auto d = data;
  adj.right.on_obj = [d](const typename ME::Obj& b) { return d.u0(b); };
  // U on 1-cells: bar applied at (U0 X, g ∘ eps0 X)
  adj.right.on_one = [d, mep](const typename ME::One& g) {
    auto x = mep->one_src(g);
    return d.bar(d.u0(x), mep->comp1(g, d.eps0(x))).first;
  };
  adj.right.on_two = [d, msp, mep](const typename ME::Two& mu) {
    auto g = mep->two_src(mu);
    auto gp = mep->two_tgt(mu);
    auto x = mep->one_src(g);
    auto y = mep->one_tgt(g);
    auto [ug, lam_g] = d.bar(d.u0(x), mep->comp1(g, d.eps0(x)));
    auto [ugp, lam_gp] = d.bar(d.u0(x), mep->comp1(gp, d.eps0(x)));
    auto sigma = mep->vcomp(lam_gp, mep->rwhisk(mu, d.eps0(x)));
    CounitData<MS, ME> dd = d;
    return induce_through_counit(*msp, *mep, dd, y, ug, lam_g, ugp, sigma);
  };
  adj.counit.comp = [d](const typename ME::Obj& b) { return d.eps0(b); };
  adj.counit.str = [d, mep](const typename ME::One& g) {
    auto x = mep->one_src(g);
    return d.bar(d.u0(x), mep->comp1(g, d.eps0(x))).second;
  };
  adj.unit.comp = [d, mep](const typename MS::Obj& a) {
    return d.bar(a, mep->id1(d.left.on_obj(a))).first;
  };
  adj.s = [d, mep](const typename MS::Obj& a) {
    return d.bar(a, mep->id1(d.left.on_obj(a))).second;
  };
  adj.unit.str = [d, msp, mep](const typename MS::One& f) {
    auto a = msp->one_src(f);
    auto ap = msp->one_tgt(f);
    auto fa = d.left.on_obj(a);
    auto fap = d.left.on_obj(ap);
    auto [eta_a, s_a] = d.bar(a, mep->id1(fa));
    auto [eta_ap, s_ap] = d.bar(ap, mep->id1(fap));
    auto ff = d.left.on_one(f);
    // source pair: (UF(f) ∘ eta_a, pasting of eps-structure and s_a)
    auto [uff, lam_ff] = d.bar(d.u0(fa), mep->comp1(ff, d.eps0(fa)));
    auto source_one = msp->comp1(uff, eta_a);
    auto source_lam =
        mep->vcomp(mep->rwhisk(lam_ff, d.left.on_one(eta_a)), mep->lwhisk(ff, s_a));
    auto target = msp->comp1(eta_ap, f);
    auto sigma = mep->rwhisk(s_ap, ff);
    return induce_through_counit(*msp, *mep, d, fap, source_one, source_lam, target, sigma);
  };
  adj.t = [d, msp, mep](const typename ME::Obj& b) {
    auto ub = d.u0(b);
    auto fub = d.left.on_obj(ub);
    auto eps_b = d.eps0(b);
    auto [eta_ub, s_ub] = d.bar(ub, mep->id1(fub));
    auto [ueps, lam_ueps] = d.bar(d.u0(fub), mep->comp1(eps_b, d.eps0(fub)));
    auto source_one = msp->comp1(ueps, eta_ub);
    auto source_lam =
        mep->vcomp(mep->rwhisk(lam_ueps, d.left.on_one(eta_ub)), mep->lwhisk(eps_b, s_ub));
    return induce_through_counit(*msp, *mep, d, b, source_one, source_lam, msp->id1(ub),
                                 mep->id2(eps_b));
  };
  return adj;
}

}  // namespace twoslice::adj

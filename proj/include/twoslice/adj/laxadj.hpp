#pragma once

#include <functional>

#include "twoslice/slice/cocone.hpp"

namespace twoslice::adj {

using slice::LawReport;
using two::TwoFunctorMap;

// A lax natural transformation between 2-functor maps P, Q : MA -> MB, given
// by components and structure cells alpha_f : Q(f) ∘ alpha_X => alpha_Y ∘ P(f).
template <class MA, class MB>
struct LaxTransf {
  std::function<typename MB::One(const typename MA::Obj&)> comp;
  std::function<typename MB::Two(const typename MA::One&)> str;
};

// The full lax adjunction bundle F -| U with unit, counit and the two
// triangle modifications s : Id_F => (eps F) ∘ (F eta) and
// t : (U eps) ∘ (eta U) => Id_U.
template <class MS, class ME>
struct LaxAdjunction {
  TwoFunctorMap<MS, ME> left;   // F
  TwoFunctorMap<ME, MS> right;  // U
  LaxTransf<MS, MS> unit;       // Id => U ∘ F
  LaxTransf<ME, ME> counit;     // F ∘ U => Id
  std::function<typename ME::Two(const typename MS::Obj&)> s;
  std::function<typename MS::Two(const typename ME::Obj&)> t;
};

struct AdjunctionClass {
  bool right_semi_lax = false;
  bool strict = false;
  bool loose_f = false;
  bool tight_f = false;
};

// Probe cells on both sides. In finite mode these are complete enumerations;
// in virtual mode the caller supplies them.
template <class MS, class ME>
struct AdjunctionProbes {
  std::vector<typename MS::Obj> s_objs;
  std::vector<typename MS::One> s_ones;
  std::vector<typename MS::Two> s_twos;
  std::vector<typename ME::Obj> e_objs;
  std::vector<typename ME::One> e_ones;
  std::vector<typename ME::Two> e_twos;
};

template <class M>
void full_probe_side(const M& m, std::vector<typename M::Obj>& objs,
                     std::vector<typename M::One>& ones, std::vector<typename M::Two>& twos) {
  objs = m.objects();
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : m.one_cells(a, b)) {
        ones.push_back(f);
        for (const auto& g : m.one_cells(a, b))
          for (const auto& x : m.two_cells(f, g)) twos.push_back(x);
      }
}

template <class MS, class ME>
AdjunctionProbes<MS, ME> full_probes(const MS& ms, const ME& me) {
  AdjunctionProbes<MS, ME> p;
  full_probe_side(ms, p.s_objs, p.s_ones, p.s_twos);
  full_probe_side(me, p.e_objs, p.e_ones, p.e_twos);
  return p;
}

namespace detail {

// functoriality of a 2-functor map on the probe cells
template <class MA, class MB>
void check_map_on_probes(const MA& ma, const MB& mb, const TwoFunctorMap<MA, MB>& f,
                         const std::vector<typename MA::Obj>& objs,
                         const std::vector<typename MA::One>& ones,
                         const std::vector<typename MA::Two>& twos, const std::string& tag,
                         LawReport& rep) {
  for (const auto& a : objs)
    if (!mb.eq1(f.on_one(ma.id1(a)), mb.id1(f.on_obj(a))))
      rep.fail(tag + ": unit of " + ma.show_obj(a));
  for (const auto& u : ones) {
    if (!mb.eq_obj(mb.one_src(f.on_one(u)), f.on_obj(ma.one_src(u))) ||
        !mb.eq_obj(mb.one_tgt(f.on_one(u)), f.on_obj(ma.one_tgt(u))))
      rep.fail(tag + ": endpoints of " + ma.show1(u));
    if (!mb.eq2(f.on_two(ma.id2(u)), mb.id2(f.on_one(u))))
      rep.fail(tag + ": id2 of " + ma.show1(u));
    for (const auto& v : ones)
      if (ma.eq_obj(ma.one_src(v), ma.one_tgt(u)) &&
          !mb.eq1(f.on_one(ma.comp1(v, u)), mb.comp1(f.on_one(v), f.on_one(u))))
        rep.fail(tag + ": comp1 at (" + ma.show1(v) + "," + ma.show1(u) + ")");
  }
  for (const auto& x : twos) {
    if (!mb.eq1(mb.two_src(f.on_two(x)), f.on_one(ma.two_src(x))) ||
        !mb.eq1(mb.two_tgt(f.on_two(x)), f.on_one(ma.two_tgt(x))))
      rep.fail(tag + ": endpoints of a 2-cell");
    for (const auto& y : twos)
      if (ma.eq1(ma.two_src(y), ma.two_tgt(x)) &&
          !mb.eq2(f.on_two(ma.vcomp(y, x)), mb.vcomp(f.on_two(y), f.on_two(x))))
        rep.fail(tag + ": vcomp");
    for (const auto& y : twos)
      if (ma.eq_obj(ma.one_src(ma.two_src(y)), ma.one_tgt(ma.two_src(x))) &&
          !mb.eq2(f.on_two(ma.hcomp(y, x)), mb.hcomp(f.on_two(y), f.on_two(x))))
        rep.fail(tag + ": hcomp");
  }
}

// lax naturality of alpha : P => Q on the probe cells
template <class MA, class MB>
void check_lax_transf(const MA& ma, const MB& mb, const TwoFunctorMap<MA, MB>& p,
                      const TwoFunctorMap<MA, MB>& q, const LaxTransf<MA, MB>& alpha,
                      const std::vector<typename MA::Obj>& objs,
                      const std::vector<typename MA::One>& ones,
                      const std::vector<typename MA::Two>& twos, const std::string& tag,
                      LawReport& rep) {
  for (const auto& a : objs) {
    auto c = alpha.comp(a);
    if (!mb.eq_obj(mb.one_src(c), p.on_obj(a)) || !mb.eq_obj(mb.one_tgt(c), q.on_obj(a)))
      rep.fail(tag + ": component at " + ma.show_obj(a) + " has wrong endpoints");
    if (!mb.eq2(alpha.str(ma.id1(a)), mb.id2(c))) rep.fail(tag + ": unit law at " + ma.show_obj(a));
  }
  for (const auto& f : ones) {
    auto x = ma.one_src(f);
    auto y = ma.one_tgt(f);
    auto cell = alpha.str(f);
    if (!mb.eq1(mb.two_src(cell), mb.comp1(q.on_one(f), alpha.comp(x))) ||
        !mb.eq1(mb.two_tgt(cell), mb.comp1(alpha.comp(y), p.on_one(f))))
      rep.fail(tag + ": structure cell at " + ma.show1(f) + " has wrong endpoints");
    for (const auto& g : ones) {
      if (!ma.eq_obj(ma.one_src(g), y)) continue;
      auto lhs = alpha.str(ma.comp1(g, f));
      auto rhs = mb.vcomp(mb.rwhisk(alpha.str(g), p.on_one(f)), mb.lwhisk(q.on_one(g), cell));
      if (!mb.eq2(lhs, rhs))
        rep.fail(tag + ": composition law at (" + ma.show1(g) + "," + ma.show1(f) + ")");
    }
  }
  for (const auto& d : twos) {
    auto f = ma.two_src(d);
    auto fp = ma.two_tgt(d);
    auto x = ma.one_src(f);
    auto y = ma.one_tgt(f);
    auto lhs = mb.vcomp(alpha.str(fp), mb.rwhisk(q.on_two(d), alpha.comp(x)));
    auto rhs = mb.vcomp(mb.lwhisk(alpha.comp(y), p.on_two(d)), alpha.str(f));
    if (!mb.eq2(lhs, rhs)) rep.fail(tag + ": 2-cell law");
  }
}

}  // namespace detail

// Checks every law of the bundle on the probes: functoriality of both sides,
// lax naturality of unit and counit, the modification laws for s and t, and
// both swallowtail composites. Returns the report and the derived class flags.
template <class MS, class ME>
std::pair<LawReport, AdjunctionClass> validate_lax_adjunction(
    const MS& ms, const ME& me, const LaxAdjunction<MS, ME>& adj,
    const AdjunctionProbes<MS, ME>& probes) {
  LawReport rep;
  auto uf = two::compose_maps<MS, ME, MS>(adj.right, adj.left);
  auto fu = two::compose_maps<ME, MS, ME>(adj.left, adj.right);
  auto ids = two::identity_map<MS>();
  auto ide = two::identity_map<ME>();
  detail::check_map_on_probes(ms, me, adj.left, probes.s_objs, probes.s_ones, probes.s_twos, "F",
                              rep);
  // when the right adjoint is only oplax functorial, the swallowtail laws
  // would need modified pastings; they are recorded as unchecked instead
  LawReport u_rep;
  detail::check_map_on_probes(me, ms, adj.right, probes.e_objs, probes.e_ones, probes.e_twos, "U",
                              u_rep);
  const bool u_strict = u_rep.ok;
  for (const auto& f : u_rep.failures) rep.fail(f);
  detail::check_lax_transf(ms, ms, ids, uf, adj.unit, probes.s_objs, probes.s_ones, probes.s_twos,
                           "eta", rep);
  detail::check_lax_transf(me, me, fu, ide, adj.counit, probes.e_objs, probes.e_ones,
                           probes.e_twos, "eps", rep);
  // s and t: typing and modification laws
  for (const auto& a : probes.s_objs) {
    auto fa = adj.left.on_obj(a);
    auto target = me.comp1(adj.counit.comp(fa), adj.left.on_one(adj.unit.comp(a)));
    auto cell = adj.s(a);
    if (!me.eq1(me.two_src(cell), me.id1(fa)) || !me.eq1(me.two_tgt(cell), target))
      rep.fail("s: typing at " + ms.show_obj(a));
  }
  for (const auto& b : probes.e_objs) {
    auto ub = adj.right.on_obj(b);
    auto source = ms.comp1(adj.right.on_one(adj.counit.comp(b)), adj.unit.comp(ub));
    auto cell = adj.t(b);
    if (!ms.eq1(ms.two_src(cell), source) || !ms.eq1(ms.two_tgt(cell), ms.id1(ub)))
      rep.fail("t: typing at " + me.show_obj(b));
  }
  if (!rep.ok) return {rep, {}};
  for (const auto& f : probes.s_ones) {
    auto x = ms.one_src(f);
    auto y = ms.one_tgt(f);
    // beta_f for beta = (eps F) ∘ (F eta)
    auto beta_f = me.vcomp(me.lwhisk(adj.counit.comp(adj.left.on_obj(y)),
                                     adj.left.on_two(adj.unit.str(f))),
                           me.rwhisk(adj.counit.str(adj.left.on_one(f)),
                                     adj.left.on_one(adj.unit.comp(x))));
    auto lhs = me.vcomp(beta_f, me.lwhisk(adj.left.on_one(f), adj.s(x)));
    auto rhs = me.rwhisk(adj.s(y), adj.left.on_one(f));
    if (!me.eq2(lhs, rhs)) rep.fail("s: modification law at " + ms.show1(f));
  }
  for (const auto& g : probes.e_ones) {
    auto x = me.one_src(g);
    auto y = me.one_tgt(g);
    // alpha_g for alpha = (U eps) ∘ (eta U)
    auto alpha_g = ms.vcomp(ms.lwhisk(adj.right.on_one(adj.counit.comp(y)),
                                      adj.unit.str(adj.right.on_one(g))),
                            ms.rwhisk(adj.right.on_two(adj.counit.str(g)),
                                      adj.unit.comp(adj.right.on_obj(x))));
    auto lhs = ms.lwhisk(adj.right.on_one(g), adj.t(x));
    auto rhs = ms.vcomp(ms.rwhisk(adj.t(y), adj.right.on_one(g)), alpha_g);
    if (!ms.eq2(lhs, rhs)) rep.fail("t: modification law at " + me.show1(g));
  }
  // swallowtails, only when the right adjoint is strictly 2-functorial
  if (!u_strict) {
    rep.notes.push_back("swallowtail laws unchecked: the right adjoint is not strict");
  } else {
    for (const auto& a : probes.s_objs) {
      auto eta_a = adj.unit.comp(a);
      auto fa = adj.left.on_obj(a);
      auto sw = ms.vcomp(
          ms.rwhisk(adj.t(fa), eta_a),
          ms.vcomp(ms.lwhisk(adj.right.on_one(adj.counit.comp(fa)), adj.unit.str(eta_a)),
                   ms.rwhisk(adj.right.on_two(adj.s(a)), eta_a)));
      if (!ms.eq2(sw, ms.id2(eta_a))) rep.fail("swallowtail(unit) at " + ms.show_obj(a));
    }
    for (const auto& b : probes.e_objs) {
      auto eps_b = adj.counit.comp(b);
      auto ub = adj.right.on_obj(b);
      auto sw = me.vcomp(
          me.lwhisk(eps_b, adj.left.on_two(adj.t(b))),
          me.vcomp(me.rwhisk(adj.counit.str(eps_b), adj.left.on_one(adj.unit.comp(ub))),
                   me.lwhisk(eps_b, adj.s(ub))));
      if (!me.eq2(sw, me.id2(eps_b))) rep.fail("swallowtail(counit) at " + me.show_obj(b));
    }
  }

  AdjunctionClass cls;
  cls.right_semi_lax = true;
  cls.strict = true;
  cls.loose_f = true;
  cls.tight_f = true;
  for (const auto& g : probes.e_ones) {
    auto comp = adj.counit.comp(me.one_src(g));
    if (!me.eq2(adj.counit.str(g), me.id2(me.comp1(g, comp)))) cls.right_semi_lax = false;
  }
  for (const auto& a : probes.s_objs)
    if (!me.eq2(adj.s(a), me.id2(me.id1(adj.left.on_obj(a))))) cls.right_semi_lax = false;
  cls.strict = cls.right_semi_lax;
  for (const auto& b : probes.e_objs)
    if (!ms.eq2(adj.t(b), ms.id2(ms.id1(adj.right.on_obj(b))))) cls.strict = false;
  // loose F-variant: F, U preserve tightness; unit/counit structure cells are
  // identities on tight 1-cells
  for (const auto& f : probes.s_ones)
    if (ms.tight(f) && !me.tight(adj.left.on_one(f))) cls.loose_f = false;
  for (const auto& g : probes.e_ones)
    if (me.tight(g) && !ms.tight(adj.right.on_one(g))) cls.loose_f = false;
  for (const auto& f : probes.s_ones)
    if (ms.tight(f) &&
        !ms.eq2(adj.unit.str(f), ms.id2(ms.comp1(adj.unit.comp(ms.one_tgt(f)), f))))
      cls.loose_f = false;
  for (const auto& g : probes.e_ones)
    if (me.tight(g) &&
        !me.eq2(adj.counit.str(g), me.id2(me.comp1(g, adj.counit.comp(me.one_src(g))))))
      cls.loose_f = false;
  cls.tight_f = cls.loose_f;
  for (const auto& a : probes.s_objs)
    if (!ms.tight(adj.unit.comp(a))) cls.tight_f = false;
  for (const auto& b : probes.e_objs)
    if (!me.tight(adj.counit.comp(b))) cls.tight_f = false;
  return {rep, cls};
}

// The hom-level adjunction at a pair (A, B): S = U(-) ∘ eta_A and
// T = eps_B ∘ F(-), with unit chi and counit xi from the structure cells.
template <class MS, class ME>
struct HomAdjunctionCheck {
  LawReport report;
  bool chi_identity = true;  // chi = id (right semi-lax consequence)
  bool ts_identity = true;   // T ∘ S = Id on objects and 2-cells
};

template <class MS, class ME>
typename MS::One hom_s(const MS& ms, const LaxAdjunction<MS, ME>& adj, const typename MS::Obj& a,
                       const typename ME::One& h) {
  return ms.comp1(adj.right.on_one(h), adj.unit.comp(a));
}

template <class MS, class ME>
typename ME::One hom_t(const ME& me, const LaxAdjunction<MS, ME>& adj, const typename ME::Obj& b,
                       const typename MS::One& k) {
  return me.comp1(adj.counit.comp(b), adj.left.on_one(k));
}

template <class MS, class ME>
typename ME::Two hom_chi(const ME& me, const LaxAdjunction<MS, ME>& adj, const typename MS::Obj& a,
                         const typename ME::One& h) {
  auto feta = adj.left.on_one(adj.unit.comp(a));
  return me.vcomp(me.rwhisk(adj.counit.str(h), feta), me.lwhisk(h, adj.s(a)));
}

template <class MS, class ME>
typename MS::Two hom_xi(const MS& ms, const LaxAdjunction<MS, ME>& adj, const typename ME::Obj& b,
                        const typename MS::One& k) {
  return ms.vcomp(ms.rwhisk(adj.t(b), k),
                  ms.lwhisk(adj.right.on_one(adj.counit.comp(b)), adj.unit.str(k)));
}

// Full check at an enumerable hom pair: functoriality of S and T, the triangle
// identities, and the right semi-lax consequences chi = id and T ∘ S = Id.
template <class MS, class ME>
HomAdjunctionCheck<MS, ME> check_hom_adjunction(const MS& ms, const ME& me,
                                                const LaxAdjunction<MS, ME>& adj,
                                                const typename MS::Obj& a,
                                                const typename ME::Obj& b) {
  HomAdjunctionCheck<MS, ME> out;
  auto& rep = out.report;
  auto fa = adj.left.on_obj(a);
  auto ub = adj.right.on_obj(b);
  auto ss = [&](const typename ME::One& h) { return hom_s(ms, adj, a, h); };
  auto tt = [&](const typename MS::One& k) { return hom_t(me, adj, b, k); };
  auto s2 = [&](const typename ME::Two& mu) {
    return ms.rwhisk(adj.right.on_two(mu), adj.unit.comp(a));
  };
  auto t2 = [&](const typename MS::Two& nu) {
    return me.lwhisk(adj.counit.comp(b), adj.left.on_two(nu));
  };
  auto xi = [&](const typename MS::One& k) {
    return ms.vcomp(ms.rwhisk(adj.t(b), k),
                    ms.lwhisk(adj.right.on_one(adj.counit.comp(b)), adj.unit.str(k)));
  };
  for (const auto& h : me.one_cells(fa, b)) {
    // chi_h : h => T(S(h))
    auto chi = hom_chi(me, adj, a, h);
    if (!me.eq1(me.two_src(chi), h) || !me.eq1(me.two_tgt(chi), tt(ss(h))))
      rep.fail("chi typing");
    if (!me.eq2(chi, me.id2(h))) out.chi_identity = false;
    if (!me.eq1(tt(ss(h)), h)) out.ts_identity = false;
    // triangle: xi_{S h} ∘ S(chi_h) = id
    auto tri = ms.vcomp(xi(ss(h)), s2(chi));
    if (!ms.eq2(tri, ms.id2(ss(h)))) rep.fail("triangle (S side)");
  }
  for (const auto& k : ms.one_cells(a, ub)) {
    auto xik = xi(k);
    if (!ms.eq1(ms.two_src(xik), ss(tt(k))) || !ms.eq1(ms.two_tgt(xik), k))
      rep.fail("xi typing");
    auto tri = me.vcomp(t2(xik), hom_chi(me, adj, a, tt(k)));
    if (!me.eq2(tri, me.id2(tt(k)))) rep.fail("triangle (T side)");
  }
  // functoriality of S and T on 2-cells, and T ∘ S = Id on 2-cells
  for (const auto& h1 : me.one_cells(fa, b))
    for (const auto& h2 : me.one_cells(fa, b))
      for (const auto& mu : me.two_cells(h1, h2)) {
        if (!ms.eq1(ms.two_src(s2(mu)), ss(h1)) || !ms.eq1(ms.two_tgt(s2(mu)), ss(h2)))
          rep.fail("S 2-cell typing");
        if (out.ts_identity && !me.eq2(t2(s2(mu)), mu)) out.ts_identity = false;
      }
  return out;
}

}  // namespace twoslice::adj

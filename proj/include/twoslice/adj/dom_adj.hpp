#pragma once

#include <map>

#include "twoslice/adj/counit.hpp"
#include "twoslice/slice/bijection.hpp"

namespace twoslice::adj {

using two::CatModel;
using two::Fin2Model;
using two::SliceModel;

// Chosen binary products in a model: the object with projections and the
// unique pairings of 1-cells and of 2-cells.
template <class B>
struct BinaryProducts {
  struct P {
    typename B::Obj obj;
    typename B::One pr1, pr2;
  };
  std::function<P(const typename B::Obj&, const typename B::Obj&)> product;
  std::function<typename B::One(const P&, const typename B::One&, const typename B::One&)> pair1;
  // the 2-cell pairing between given paired 1-cells
  std::function<typename B::Two(const P&, const typename B::One&, const typename B::One&,
                                const typename B::Two&, const typename B::Two&)>
      pair2;
};

// Canonical products of categories, memoized on content.
BinaryProducts<CatModel> cat_products();

// Product search by enumeration in a finite 2-category; throws MissingProducts
// when no candidate satisfies the two-dimensional universal property.
BinaryProducts<Fin2Model> fin2_products(const Fin2Model& base);

// dom -| M x - for the lax slice over m, built from the explicit formulas; the
// returned bundle classifies as strict + right semi-lax + tight F.
template <class B>
LaxAdjunction<SliceModel<B>, B> dom_product_adjunction(const SliceModel<B>& sl,
                                                       const BinaryProducts<B>& prods) {
  const B* base = sl.base;
  auto m = sl.m;
  LaxAdjunction<SliceModel<B>, B> adj;
  adj.left = slice::dom_map(sl);
  auto prod_at = [prods, m](const typename B::Obj& e) { return prods.product(m, e); };
  adj.right.on_obj = [prod_at](const typename B::Obj& e) ->
      typename SliceModel<B>::Obj { return {prod_at(e).pr1}; };
  adj.right.on_one = [base, prods, prod_at](const typename B::One& e) ->
      typename SliceModel<B>::One {
        auto ps = prod_at(base->one_src(e));
        auto pt = prod_at(base->one_tgt(e));
        auto fhat = prods.pair1(pt, ps.pr1, base->comp1(e, ps.pr2));
        return {fhat, base->id2(ps.pr1), ps.pr1, pt.pr1};
      };
  adj.right.on_two = [base, prods, prod_at, adj](const typename B::Two& beta) ->
      typename SliceModel<B>::Two {
        auto e1 = base->two_src(beta);
        auto e2 = base->two_tgt(beta);
        auto ps = prod_at(base->one_src(e1));
        auto pt = prod_at(base->one_tgt(e1));
        auto u1 = adj.right.on_one(e1);
        auto u2 = adj.right.on_one(e2);
        auto delta = prods.pair2(pt, u1.fhat, u2.fhat, base->id2(ps.pr1),
                                 base->rwhisk(beta, ps.pr2));
        return {delta, u1, u2};
      };
  adj.unit.comp = [base, prods, prod_at](const typename SliceModel<B>::Obj& t) ->
      typename SliceModel<B>::One {
        auto k = base->one_src(t.g);
        auto p = prod_at(k);
        auto fhat = prods.pair1(p, t.g, base->id1(k));
        return {fhat, base->id2(t.g), t.g, p.pr1};
      };
  const SliceModel<B>* slp = &sl;
  adj.unit.str = [base, prods, prod_at, adj, slp](const typename SliceModel<B>::One& u) ->
      typename SliceModel<B>::Two {
        auto pt = prod_at(base->one_src(u.tgt_g));
        auto from = slp->comp1(adj.right.on_one(adj.left.on_one(u)), adj.unit.comp({u.src_g}));
        auto to = slp->comp1(adj.unit.comp({u.tgt_g}), u);
        auto delta = prods.pair2(pt, from.fhat, to.fhat, u.gamma, base->id2(u.fhat));
        return {delta, from, to};
      };
  adj.counit.comp = [prod_at](const typename B::Obj& e) { return prod_at(e).pr2; };
  adj.counit.str = [base, prod_at](const typename B::One& e) {
    return base->id2(base->comp1(e, prod_at(base->one_src(e)).pr2));
  };
  adj.s = [base, slp, adj](const typename SliceModel<B>::Obj& t) {
    return base->id2(base->id1(base->one_src(t.g)));
  };
  adj.t = [base, slp, adj](const typename B::Obj& e) -> typename SliceModel<B>::Two {
    auto ue = adj.right.on_obj(e);
    auto composite = slp->comp1(adj.right.on_one(adj.counit.comp(e)), adj.unit.comp(ue));
    if (!slp->eq1(composite, slp->id1(ue)))
      throw core::ValidationError("MissingProducts",
                                  "chosen products do not make the triangle strict");
    return slp->id2(slp->id1(ue));
  };
  return adj;
}

}  // namespace twoslice::adj

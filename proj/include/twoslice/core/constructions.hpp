#pragma once

#include "twoslice/core/fincat.hpp"

namespace twoslice::core {

struct ProductResult {
  CatPtr total;
  FinFunctor pr1, pr2;
};

struct CoproductResult {
  CatPtr total;
  FinFunctor inl, inr;
};

struct PullbackResult {
  CatPtr total;
  FinFunctor pr1, pr2;  // to dom F, dom G
};

struct CommaResult {
  CatPtr total;
  FinFunctor d0, d1;    // projections to dom F, dom G
  NatTransf canonical;  // F∘d0 => G∘d1, component at (a,b,h) is h
};

struct SliceResult {
  CatPtr total;
  FinFunctor dom_functor;        // to the ambient
  std::vector<int> object_of;    // slice object index -> ambient morphism into M
};

ProductResult binary_product_category(const CatPtr& c, const CatPtr& d);
CoproductResult binary_coproduct_category(const CatPtr& c, const CatPtr& d);
PullbackResult pullback_category(const FinFunctor& f, const FinFunctor& g);
CommaResult comma_category(const FinFunctor& f, const FinFunctor& g);
SliceResult slice_category(const CatPtr& c, int m);

// Pairing into the canonical product: the unique u with pr1∘u = f, pr2∘u = g.
FinFunctor product_pairing(const ProductResult& p, const FinFunctor& f, const FinFunctor& g);
NatTransf product_pairing_nat(const ProductResult& p, const FinFunctor& u, const FinFunctor& v,
                              const NatTransf& a, const NatTransf& b);
// Copairing out of the coproduct.
FinFunctor coproduct_copairing(const CoproductResult& c, const FinFunctor& f, const FinFunctor& g);

// Verifies the 1-dimensional universal property of the product by enumeration:
// every (u, v) into the factors has exactly one pairing through it.
bool verify_product_universal(const ProductResult& p);

}  // namespace twoslice::core

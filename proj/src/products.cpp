#include <map>

#include "twoslice/adj/dom_adj.hpp"

namespace twoslice::adj {

using core::CatPtr;
using core::FinFunctor;
using core::NatTransf;
using core::ValidationError;

BinaryProducts<CatModel> cat_products() {
  using P = BinaryProducts<CatModel>::P;
  auto cache =
      std::make_shared<std::map<std::pair<std::size_t, std::size_t>, core::ProductResult>>();
  BinaryProducts<CatModel> out;
  out.product = [cache](const CatPtr& a, const CatPtr& b) -> P {
    auto key = std::make_pair(a->content_hash(), b->content_hash());
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, core::binary_product_category(a, b)).first;
    return {it->second.total, it->second.pr1, it->second.pr2};
  };
  out.pair1 = [](const P& p, const FinFunctor& f, const FinFunctor& g) {
    core::ProductResult pr{p.obj, p.pr1, p.pr2};
    return core::product_pairing(pr, f, g);
  };
  out.pair2 = [](const P& p, const FinFunctor& w1, const FinFunctor& w2, const NatTransf& a,
                 const NatTransf& b) {
    core::ProductResult pr{p.obj, p.pr1, p.pr2};
    return core::product_pairing_nat(pr, w1, w2, a, b);
  };
  return out;
}

namespace {

bool is_product_candidate(const Fin2Model& m, int pobj, two::OneCell pr1, two::OneCell pr2) {
  for (int x : m.objects()) {
    for (auto u : m.one_cells(x, pr1.b))
      for (auto v : m.one_cells(x, pr2.b)) {
        int count = 0;
        for (auto w : m.one_cells(x, pobj))
          if (m.eq1(m.comp1(pr1, w), u) && m.eq1(m.comp1(pr2, w), v)) ++count;
        if (count != 1) return false;
      }
    for (auto w : m.one_cells(x, pobj))
      for (auto wp : m.one_cells(x, pobj))
        for (auto mu : m.two_cells(m.comp1(pr1, w), m.comp1(pr1, wp)))
          for (auto nu : m.two_cells(m.comp1(pr2, w), m.comp1(pr2, wp))) {
            int count = 0;
            for (auto om : m.two_cells(w, wp))
              if (m.eq2(m.lwhisk(pr1, om), mu) && m.eq2(m.lwhisk(pr2, om), nu)) ++count;
            if (count != 1) return false;
          }
  }
  return true;
}

}  // namespace

BinaryProducts<Fin2Model> fin2_products(const Fin2Model& base) {
  using P = BinaryProducts<Fin2Model>::P;
  auto cache = std::make_shared<std::map<std::pair<int, int>, P>>();
  BinaryProducts<Fin2Model> out;
  Fin2Model m = base;
  out.product = [m, cache](const int& a, const int& b) -> P {
    auto it = cache->find({a, b});
    if (it != cache->end()) return it->second;
    for (int p : m.objects())
      for (auto pr1 : m.one_cells(p, a))
        for (auto pr2 : m.one_cells(p, b))
          if (is_product_candidate(m, p, pr1, pr2)) {
            P out_p{p, pr1, pr2};
            cache->emplace(std::make_pair(a, b), out_p);
            return out_p;
          }
    throw ValidationError("MissingProducts", "no binary product of " + m.show_obj(a) + " and " +
                                                 m.show_obj(b));
  };
  out.pair1 = [m](const P& p, const two::OneCell& u, const two::OneCell& v) {
    for (auto w : m.one_cells(u.a, p.obj))
      if (m.eq1(m.comp1(p.pr1, w), u) && m.eq1(m.comp1(p.pr2, w), v)) return w;
    throw ValidationError("MissingProducts", "no pairing for the given legs");
  };
  out.pair2 = [m](const P& p, const two::OneCell& w1, const two::OneCell& w2,
                  const two::TwoCell& mu, const two::TwoCell& nu) {
    for (auto om : m.two_cells(w1, w2))
      if (m.eq2(m.lwhisk(p.pr1, om), mu) && m.eq2(m.lwhisk(p.pr2, om), nu)) return om;
    throw ValidationError("MissingProducts", "no 2-cell pairing for the given cells");
  };
  return out;
}

}  // namespace twoslice::adj

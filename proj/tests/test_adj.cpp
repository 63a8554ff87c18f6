#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twoslice/adj/counit.hpp"
#include "twoslice/adj/dom_adj.hpp"
#include "twoslice/adj/fcolimit.hpp"
#include "twoslice/fixtures.hpp"
#include "twoslice/slice/groth_colimit.hpp"
#include "twoslice/slice/lift.hpp"

using namespace twoslice;
using namespace twoslice::adj;
using two::CatModel;
using two::Fin2Model;
using two::SliceModel;
namespace fx = twoslice::fixtures;

namespace {

template <class M>
LaxAdjunction<M, M> identity_adjunction(const M& m) {
  LaxAdjunction<M, M> adj;
  adj.left = two::identity_map<M>();
  adj.right = two::identity_map<M>();
  const M* mp = &m;
  adj.unit.comp = [mp](const typename M::Obj& a) { return mp->id1(a); };
  adj.unit.str = [mp](const typename M::One& f) { return mp->id2(f); };
  adj.counit.comp = [mp](const typename M::Obj& a) { return mp->id1(a); };
  adj.counit.str = [mp](const typename M::One& f) { return mp->id2(f); };
  adj.s = [mp](const typename M::Obj& a) { return mp->id2(mp->id1(a)); };
  adj.t = [mp](const typename M::Obj& a) { return mp->id2(mp->id1(a)); };
  return adj;
}

}  // namespace

TEST_CASE("identity adjunction is strict and tight") {
  Fin2Model m{fx::c2cat().get(), nullptr};
  auto adj = identity_adjunction(m);
  auto probes = full_probes(m, m);
  auto [rep, cls] = validate_lax_adjunction(m, m, adj, probes);
  for (const auto& f : rep.failures) INFO(f);
  CHECK(rep.ok);
  CHECK(cls.right_semi_lax);
  CHECK(cls.strict);
  CHECK(cls.loose_f);
  CHECK(cls.tight_f);
  for (const auto& a : m.objects())
    for (const auto& b : m.objects()) {
      auto hom = check_hom_adjunction(m, m, adj, a, b);
      CHECK(hom.report.ok);
      CHECK(hom.chi_identity);
      CHECK(hom.ts_identity);
    }
}

TEST_CASE("dom -| M x - on finite fixtures with products") {
  for (auto amb : {fx::one2(), fx::two2(), fx::tri2(), fx::sq2()}) {
    Fin2Model base{amb.get(), nullptr};
    auto prods = fin2_products(base);
    for (int m = 0; m < amb->num_objects(); ++m) {
      SliceModel<Fin2Model> sl{&base, m};
      auto adj = dom_product_adjunction(sl, prods);
      auto probes = full_probes(sl, base);
      auto [rep, cls] = validate_lax_adjunction(sl, base, adj, probes);
      for (const auto& f : rep.failures) INFO(amb->name(), "/", amb->object_name(m), ": ", f);
      CHECK(rep.ok);
      CHECK(cls.right_semi_lax);
      CHECK(cls.strict);
      CHECK(cls.tight_f);
      // hom-level checks at every probed pair
      for (const auto& t : probes.s_objs)
        for (const auto& e : probes.e_objs) {
          auto hom = check_hom_adjunction(sl, base, adj, t, e);
          CHECK(hom.report.ok);
          CHECK(hom.chi_identity);
          CHECK(hom.ts_identity);
        }
    }
  }
}

TEST_CASE("PAIR has no binary products") {
  Fin2Model base{fx::pair2().get(), nullptr};
  auto prods = fin2_products(base);
  int x = fx::pair2()->object_index("x"), y = fx::pair2()->object_index("y");
  CHECK_THROWS_WITH_AS(prods.product(x, y), doctest::Contains("MissingProducts"),
                       core::ValidationError);
}

TEST_CASE("dom -| M x - on desk-scale CAT probes") {
  CatModel cat;
  cat.probe_objects = {fx::one(), fx::two()};
  SliceModel<CatModel> sl{&cat, fx::two()};
  auto adj = dom_product_adjunction(sl, cat_products());
  auto probes = full_probes(sl, cat);
  auto [rep, cls] = validate_lax_adjunction(sl, cat, adj, probes);
  for (const auto& f : rep.failures) INFO(f);
  CHECK(rep.ok);
  CHECK(cls.right_semi_lax);
  CHECK(cls.strict);
  CHECK(cls.tight_f);
  // eta at t : ONE -> TWO is the tight triangle ((t, id), id)
  auto t0 = core::build_functor(fx::one(), fx::two(), {0}, {fx::two()->morphism_index("id0")});
  auto eta = adj.unit.comp({t0});
  CHECK(sl.tight(eta));
  CHECK(eta.fhat.cod()->num_objects() == 2);  // TWO x ONE
  for (const auto& t : probes.s_objs)
    for (const auto& e : probes.e_objs) {
      auto hom = check_hom_adjunction(sl, cat, adj, t, e);
      CHECK(hom.report.ok);
      CHECK(hom.chi_identity);
      CHECK(hom.ts_identity);
    }
}

TEST_CASE("build_from_universal_counit reproduces dom -| M x - bit-exactly") {
  Fin2Model base{fx::two2().get(), nullptr};
  auto prods = fin2_products(base);
  int m = fx::two2()->object_index("1");
  SliceModel<Fin2Model> sl{&base, m};
  auto direct = dom_product_adjunction(sl, prods);

  CounitData<SliceModel<Fin2Model>, Fin2Model> data;
  data.left = slice::dom_map(sl);
  const Fin2Model* bp = &base;
  const SliceModel<Fin2Model>* slp = &sl;
  data.u0 = [prods, m](const int& e) -> SliceModel<Fin2Model>::Obj {
    return {prods.product(m, e).pr1};
  };
  data.eps0 = [prods, m](const int& e) { return prods.product(m, e).pr2; };
  data.bar = [prods, m, bp, slp](const SliceModel<Fin2Model>::Obj& t, const two::OneCell& h)
      -> std::pair<SliceModel<Fin2Model>::One, two::TwoCell> {
    auto p = prods.product(m, h.b);
    auto fhat = prods.pair1(p, t.g, h);
    return {SliceModel<Fin2Model>::One{fhat, bp->id2(t.g), t.g, p.pr1}, bp->id2(h)};
  };
  auto probes = full_probes(sl, base);
  auto built = build_from_universal_counit(sl, base, data, probes);
  auto [rep, cls] = validate_lax_adjunction(sl, base, built, probes);
  for (const auto& f : rep.failures) INFO(f);
  CHECK(rep.ok);
  CHECK(cls.strict);
  CHECK(cls.right_semi_lax);
  CHECK(cls.tight_f);
  // bit-exact agreement on every probe cell
  for (const auto& e : probes.e_objs) CHECK(sl.eq_obj(built.right.on_obj(e), direct.right.on_obj(e)));
  for (const auto& g : probes.e_ones) CHECK(sl.eq1(built.right.on_one(g), direct.right.on_one(g)));
  for (const auto& x : probes.e_twos) CHECK(sl.eq2(built.right.on_two(x), direct.right.on_two(x)));
  for (const auto& a : probes.s_objs) CHECK(sl.eq1(built.unit.comp(a), direct.unit.comp(a)));
  for (const auto& f : probes.s_ones) CHECK(sl.eq2(built.unit.str(f), direct.unit.str(f)));
  for (const auto& e : probes.e_objs) CHECK(base.eq1(built.counit.comp(e), direct.counit.comp(e)));
  for (const auto& g : probes.e_ones) CHECK(base.eq2(built.counit.str(g), direct.counit.str(g)));
}

TEST_CASE("a bar violating the side assumptions is rejected") {
  // over the free-living isomorphism there are alternative universal
  // factorizations; choosing one breaks only the side equations
  CatModel cat;
  cat.probe_objects = {fx::one(), fx::iso()};
  SliceModel<CatModel> sl{&cat, fx::iso()};
  auto prods = cat_products();
  CounitData<SliceModel<CatModel>, CatModel> data;
  data.left = slice::dom_map(sl);
  const CatModel* cp = &cat;
  auto mcat = fx::iso();
  data.u0 = [prods, mcat](const core::CatPtr& e) -> SliceModel<CatModel>::Obj {
    return {prods.product(mcat, e).pr1};
  };
  data.eps0 = [prods, mcat](const core::CatPtr& e) { return prods.product(mcat, e).pr2; };
  auto pick = [&](int i) {
    return core::build_functor(fx::one(), fx::iso(), {i}, {fx::iso()->identity(i)});
  };
  auto pick0 = pick(0), pick1 = pick(1);
  data.bar = [prods, mcat, cp, pick0, pick1](const SliceModel<CatModel>::Obj& t,
                                             const core::FinFunctor& h)
      -> std::pair<SliceModel<CatModel>::One, core::NatTransf> {
    auto p = prods.product(mcat, h.cod());
    if (t.g == pick0 && h == pick0 && core::same_category(h.cod(), mcat)) {
      // factor through (1, 0) instead of (0, 0): still universal because the
      // triangle filler is invertible, but not the canonical choice
      auto fhat = prods.pair1(p, pick1, h);
      auto gamma = core::build_nat_transf(t.g, pick1, {fx::iso()->morphism_index("e")});
      return {SliceModel<CatModel>::One{fhat, gamma, t.g, p.pr1}, cp->id2(h)};
    }
    auto fhat = prods.pair1(p, t.g, h);
    return {SliceModel<CatModel>::One{fhat, cp->id2(t.g), t.g, p.pr1}, cp->id2(h)};
  };
  AdjunctionProbes<SliceModel<CatModel>, CatModel> probes;
  probes.s_objs = {{pick0}};
  probes.e_objs = {fx::iso()};
  CHECK_THROWS_WITH_AS(build_from_universal_counit(sl, cat, data, probes),
                       doctest::Contains("AssumptionFailure"), core::ValidationError);
}

TEST_CASE("tight F-colimit clauses") {
  CatModel cat;
  cat.probe_objects = {fx::one(), fx::two()};
  SliceModel<CatModel> sl{&cat, fx::two()};
  auto idtwo = core::identity_functor(fx::two());
  auto pick1 = core::build_functor(fx::one(), fx::two(), {1}, {fx::two()->identity(1)});

  // trivial weight: all clauses pass apart from joint detection, which fails
  // because the apex has a loose endomorphism whose composites with the tight
  // leg are tight
  auto wpt = groth::make_marking_on_promoted(fx::one2(), {fx::one()},
                                             {{core::identity_functor(fx::one())}});
  FWeight w;
  w.weight = &wpt;
  w.tau_objects = {{0}};
  CHECK(validate_fweight(w).ok);

  slice::WeightedCocylinder<SliceModel<CatModel>> mu;
  mu.weight = &wpt;
  mu.base = Fin2Model{fx::one2().get(), nullptr};
  auto t = std::make_shared<slice::ShapeTables<SliceModel<CatModel>>>();
  t->objs = {{pick1}};
  t->ones = {sl.id1({pick1})};
  t->twos = {sl.id2(sl.id1({pick1}))};
  mu.diagram = slice::table_map(mu.base, t);
  mu.apex = {idtwo};
  auto leg = two::make_slice_one(sl, pick1, cat.id2(pick1), pick1, idtwo);
  mu.nu_obj = {{leg}};
  mu.nu_mor = {{sl.id2(leg)}};
  REQUIRE(validate_cocylinder(sl, mu).ok);
  auto rep = check_tight_foplax_colimit(sl, w, mu, sl.objects());
  CHECK(rep.tau_components_tight);
  CHECK(rep.lambda_components_tight);
  CHECK_FALSE(rep.jointly_detect);
  bool witness_found = false;
  for (const auto& wit : rep.witnesses)
    if (wit.find("joint detection") != std::string::npos) witness_found = true;
  CHECK(witness_found);

  // weight TWO with tau = {0}: a loose component at the non-tau object fails
  // clause (iii) only
  auto wtwo = groth::make_marking_on_promoted(fx::one2(), {fx::two()},
                                              {{core::identity_functor(fx::two())}});
  FWeight w2;
  w2.weight = &wtwo;
  w2.tau_objects = {{fx::two()->object_index("0")}};
  CHECK(validate_fweight(w2).ok);

  auto const1 = core::build_functor(fx::two(), fx::two(), {1, 1},
                                    {fx::two()->identity(1), fx::two()->identity(1),
                                     fx::two()->identity(1)});
  std::vector<int> comp = {fx::two()->morphism_index("a"), fx::two()->identity(1)};
  auto gamma = core::build_nat_transf(idtwo, core::compose_functors(idtwo, const1), comp);
  auto loose_endo = two::make_slice_one(sl, const1, gamma, idtwo, idtwo);
  REQUIRE_FALSE(sl.tight(loose_endo));

  slice::WeightedCocylinder<SliceModel<CatModel>> mu2;
  mu2.weight = &wtwo;
  mu2.base = Fin2Model{fx::one2().get(), nullptr};
  auto t2 = std::make_shared<slice::ShapeTables<SliceModel<CatModel>>>();
  t2->objs = {{idtwo}};
  t2->ones = {sl.id1({idtwo})};
  t2->twos = {sl.id2(sl.id1({idtwo}))};
  mu2.diagram = slice::table_map(mu2.base, t2);
  mu2.apex = {idtwo};
  int i0 = fx::two()->object_index("0"), i1 = fx::two()->object_index("1");
  mu2.nu_obj.resize(1);
  mu2.nu_mor.resize(1);
  mu2.nu_obj[0].resize(2);
  mu2.nu_obj[0][i0] = sl.id1({idtwo});
  mu2.nu_obj[0][i1] = loose_endo;
  mu2.nu_mor[0].resize(fx::two()->num_morphisms());
  mu2.nu_mor[0][fx::two()->identity(i0)] = sl.id2(sl.id1({idtwo}));
  mu2.nu_mor[0][fx::two()->identity(i1)] = sl.id2(loose_endo);
  mu2.nu_mor[0][fx::two()->morphism_index("a")] =
      two::make_slice_two(sl, gamma, sl.id1({idtwo}), loose_endo);
  REQUIRE(validate_cocylinder(sl, mu2).ok);
  auto rep2 = check_tight_foplax_colimit(sl, w2, mu2, sl.objects());
  CHECK(rep2.tau_components_tight);
  CHECK(rep2.jointly_detect);
  CHECK_FALSE(rep2.lambda_components_tight);
}

TEST_CASE("identity adjunction preserves every universal cocone (mediated route)") {
  Fin2Model m{fx::two2().get(), nullptr};
  auto adj = identity_adjunction(m);
  auto shape = std::make_shared<groth::GrothResult>(slice::oplax_shape(fx::one()));
  // the identity cocone at an object
  auto t = std::make_shared<slice::ShapeTables<Fin2Model>>();
  t->objs = {0};
  t->ones = {m.id1(0)};
  t->twos = {m.id2(m.id1(0))};
  slice::OplaxCocone<Fin2Model> c;
  c.shape = shape->shape_model();
  c.diagram = slice::table_map(c.shape, t);
  c.apex = 0;
  c.leg = {m.id1(0)};
  c.str = {m.id2(m.id1(0))};
  REQUIRE(slice::decide_oplax_colimit(m, c).universal);
  auto up = slice::oracle_universal(m, c);
  auto rep = check_preservation_mediated(m, m, adj, up, m.objects());
  for (const auto& f : rep.witnesses) INFO(f);
  CHECK(rep.ok);
  CHECK(rep.probes_checked > 0);
}

TEST_CASE("identity counit data reproduces the identity adjunction") {
  Fin2Model m{fx::two2().get(), nullptr};
  CounitData<Fin2Model, Fin2Model> data;
  data.left = two::identity_map<Fin2Model>();
  const Fin2Model* mp = &m;
  data.u0 = [](const int& b) { return b; };
  data.eps0 = [mp](const int& b) { return mp->id1(b); };
  data.bar = [mp](const int&, const two::OneCell& h) {
    return std::make_pair(h, mp->id2(h));
  };
  auto probes = full_probes(m, m);
  auto built = build_from_universal_counit(m, m, data, probes);
  auto [rep, cls] = validate_lax_adjunction(m, m, built, probes);
  CHECK(rep.ok);
  CHECK(cls.strict);
  CHECK(cls.tight_f);
  auto direct = identity_adjunction(m);
  for (const auto& f : probes.s_ones) {
    CHECK(m.eq1(built.right.on_one(f), direct.right.on_one(f)));
    CHECK(m.eq2(built.unit.str(f), direct.unit.str(f)));
  }
}

TEST_CASE("tight F-adjunctions transfer joint detection of tightness") {
  // dom -| M x - over TWO at M = 1: the point cocone at the identity leg of
  // a slice object detects tightness above, hence below
  Fin2Model base{fx::two2().get(), nullptr};
  int m1 = fx::two2()->object_index("1");
  SliceModel<Fin2Model> sl{&base, m1};
  auto prods = fin2_products(base);
  auto adjunction = dom_product_adjunction(sl, prods);
  auto shape = std::make_shared<groth::GrothResult>(slice::oplax_shape(fx::one()));
  for (const auto& o : sl.objects()) {
    auto t = std::make_shared<slice::ShapeTables<SliceModel<Fin2Model>>>();
    t->objs = {o};
    t->ones = {sl.id1(o)};
    t->twos = {sl.id2(sl.id1(o))};
    slice::OplaxCocone<SliceModel<Fin2Model>> c;
    c.shape = shape->shape_model();
    c.diagram = slice::table_map(c.shape, t);
    c.apex = o;
    c.leg = {sl.id1(o)};
    c.str = {sl.id2(sl.id1(o))};
    REQUIRE(slice::validate_cocone(sl, c).ok);
    CHECK(check_detection_preserved(sl, base, adjunction, c, {0}, sl.objects(),
                                    base.objects()));
  }
}

TEST_CASE("finite-mode preservation wraps the oracle on the mapped cocone") {
  // dom over TWO at M = 1: map a universal point cocone and certify the image
  Fin2Model base{fx::two2().get(), nullptr};
  int m1 = fx::two2()->object_index("1");
  SliceModel<Fin2Model> sl{&base, m1};
  auto prods = fin2_products(base);
  auto adjunction = dom_product_adjunction(sl, prods);
  auto shape = std::make_shared<groth::GrothResult>(slice::oplax_shape(fx::one()));
  int cases = 0;
  for (const auto& o : sl.objects()) {
    auto t = std::make_shared<slice::ShapeTables<SliceModel<Fin2Model>>>();
    t->objs = {o};
    t->ones = {sl.id1(o)};
    t->twos = {sl.id2(sl.id1(o))};
    slice::OplaxCocone<SliceModel<Fin2Model>> c;
    c.shape = shape->shape_model();
    c.diagram = slice::table_map(c.shape, t);
    c.apex = o;
    c.leg = {sl.id1(o)};
    c.str = {sl.id2(sl.id1(o))};
    REQUIRE(slice::decide_oplax_colimit(sl, c).universal);
    auto image = map_cocone(base, adjunction.left, c);
    CHECK(slice::validate_cocone(base, image).ok);
    CHECK(slice::decide_oplax_colimit(base, image).universal);
    ++cases;
  }
  CHECK(cases > 0);
}

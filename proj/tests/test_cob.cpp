#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twoslice/cob/adjunction.hpp"
#include "twoslice/fixtures.hpp"
#include "twoslice/slice/groth_colimit.hpp"
#include "twoslice/slice/lift.hpp"

using namespace twoslice;
using namespace twoslice::cob;
using two::CatModel;
namespace fx = twoslice::fixtures;

namespace {

core::FinFunctor pick(const core::CatPtr& c, int i) {
  return core::build_functor(fx::one(), c, {i}, {c->identity(i)});
}

}  // namespace

TEST_CASE("split opfibration validation") {
  CHECK(validate_split_opfibration(fx::opf_identity()).ok);
  CHECK(validate_split_opfibration(fx::opf()).ok);
  CHECK(validate_split_opfibration(fx::opf_arrow()).ok);

  // choosing k' as the lift of a at e0 is not cocartesian: k does not factor
  auto broken = fx::opf();
  broken.kappa[broken.tau.dom()->object_index("e0")][fx::two()->morphism_index("a")] =
      broken.tau.dom()->morphism_index("kp");
  auto rep = validate_split_opfibration(broken);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("conduche factorization") {
  auto t = fx::opf();
  const auto& e = t.tau.dom();
  int k = e->morphism_index("k"), kp = e->morphism_index("kp"), v = e->morphism_index("v");
  int a = fx::two()->morphism_index("a"), id1 = fx::two()->identity(fx::two()->object_index("1"));
  auto [g1, g2] = conduche_factor(t, kp, a, id1);
  CHECK(g1 == k);
  CHECK(g2 == v);
  int id0 = fx::two()->identity(fx::two()->object_index("0"));
  auto [h1, h2] = conduche_factor(t, kp, id0, a);
  CHECK(e->is_identity(h1));
  CHECK(h2 == kp);
  for (auto [x1, x2] : all_factorizations(t, kp, a, id1)) CHECK(e->compose(x2, x1) == kp);
}

TEST_CASE("tau_lower_star over the identity is the base") {
  auto t = fx::opf_identity();
  auto h = core::build_functor(fx::one(), fx::two(), {0}, {fx::two()->identity(0)});
  auto hc = tau_lower_star(t, h);
  CHECK(hc.total->num_objects() == 1);  // only X = 0 admits a filler into 0
  auto hc2 = tau_lower_star(t, core::identity_functor(fx::two()));
  CHECK(hc2.total->num_objects() == 3);  // (0,0), (0,1 via a), (1,1)
}

TEST_CASE("tau_lower_star on the OPF fixture has a single object for H = e1") {
  auto t = fx::opf();
  auto h = pick(t.tau.dom(), t.tau.dom()->object_index("e1"));
  auto hc = tau_lower_star(t, h);
  REQUIRE(hc.total->num_objects() == 1);
  CHECK(hc.objs[0].x == fx::two()->object_index("0"));
  CHECK(hc.objs[0].alpha.at(0) == t.tau.dom()->morphism_index("k"));
}

TEST_CASE("the evaluation counit on the OPF fixture evaluates to k") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  auto h = pick(t.tau.dom(), t.tau.dom()->object_index("e1"));
  auto hcat = std::make_shared<HCategoryResult>(tau_lower_star(t, h));
  auto eps = cob_counit(cob, h, hcat);
  CHECK(eps.gamma.components().size() == 1);
  CHECK(eps.gamma.at(0) == t.tau.dom()->morphism_index("k"));
  SliceCat sl_e{&me, t.tau.dom()};
  CHECK_FALSE(sl_e.tight(eps));  // genuinely loose counit component
}

TEST_CASE("tau_star preserves tightness and computes the expected lifts") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  SliceCat sl_b{&mb, fx::two()};
  SliceCat sl_e{&me, t.tau.dom()};
  auto f = pick(fx::two(), 0);
  auto idcell = sl_b.id1({f});
  auto img = cob.star_one(idcell);
  CHECK(sl_e.tight(img));
  CHECK(core::is_identity_functor(img.fhat));
  auto g = pick(fx::two(), 1);
  auto a_nat = core::build_nat_transf(f, g, {fx::two()->morphism_index("a")});
  auto tri = two::make_slice_one(sl_b, core::identity_functor(fx::one()), a_nat, f, g);
  auto tri_img = cob.star_one(tri);
  CHECK(sl_e.eq_obj(sl_e.one_src(tri_img), cob.star_obj(f)));
  CHECK(sl_e.eq_obj(sl_e.one_tgt(tri_img), cob.star_obj(g)));
  CHECK(tri_img.gamma.at(0) == t.tau.dom()->morphism_index("k"));
}

TEST_CASE("tau_star along the identity is isomorphic to the identity") {
  CatModel mb{{fx::two(), fx::one()}};
  auto t = fx::opf_identity();
  ChangeOfBase cob(t, &mb, &mb);
  auto f = pick(fx::two(), 0);
  auto so = cob.star_obj(f);
  CHECK(so.g.dom()->num_objects() == f.dom()->num_objects());
  CHECK(so.g.dom()->num_morphisms() == f.dom()->num_morphisms());
}

TEST_CASE("check_cob_adjunction on the OPF fixture") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  std::vector<core::FinFunctor> fs = {pick(fx::two(), 0), pick(fx::two(), 1)};
  std::vector<core::FinFunctor> hs = {pick(t.tau.dom(), t.tau.dom()->object_index("e1")),
                                      pick(t.tau.dom(), t.tau.dom()->object_index("e0"))};
  auto rep = check_cob_adjunction(t, fs, hs, mb, me);
  for (const auto& w : rep.laws.failures) INFO(w);
  CHECK(rep.laws.ok);
  CHECK(rep.cls.strict);
  CHECK(rep.cls.right_semi_lax);
  CHECK(rep.cls.loose_f);
  CHECK_FALSE(rep.cls.tight_f);
  CHECK(rep.loose_counit_witness);
  CHECK(rep.hom_ts_identity);
  CHECK(rep.mediator_of_counit_identity);
  CHECK(rep.ok());
}

TEST_CASE("a broken cleavage fails before the adjunction is assembled") {
  CatModel mb{{fx::two()}};
  CatModel me{{fx::opf().tau.dom()}};
  auto broken = fx::opf();
  broken.kappa[broken.tau.dom()->object_index("e0")][fx::two()->morphism_index("a")] =
      broken.tau.dom()->morphism_index("kp");
  CHECK_THROWS_AS(check_cob_adjunction(broken, {pick(fx::two(), 0)},
                                       {pick(broken.tau.dom(), 0)}, mb, me),
                  core::ValidationError);
}

TEST_CASE("mediator 2-cells satisfy the whisker equation and are unique") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  SliceCat sl_b{&mb, fx::two()};
  SliceCat sl_e{&me, t.tau.dom()};
  auto h = pick(t.tau.dom(), t.tau.dom()->object_index("e1"));
  auto hcat = std::make_shared<HCategoryResult>(tau_lower_star(t, h));
  auto eps = cob_counit(cob, h, hcat);
  auto med = cob_mediator(cob, h, hcat, hcat->pr1, eps);
  CHECK(core::is_identity_functor(med.fhat));
  auto starmed = cob.star_one(med);
  auto lhs = sl_e.comp1(eps, starmed);
  CHECK(sl_e.eq1(lhs, eps));

  auto bigxi = sl_e.id2(eps);
  auto delta = cob_mediator_2cell(cob, h, hcat, hcat->pr1, eps, med, bigxi);
  CHECK(core::is_identity_nat(delta.delta));
  int count = 0;
  for (const auto& cand : sl_b.two_cells(med, med)) {
    auto whisked = sl_e.lwhisk(eps, cob.star_two(cand));
    if (sl_e.eq2(whisked, bigxi)) ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("extensivity of tau_star on coproducts") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  auto c1 = check_extensivity(cob, pick(fx::two(), 0), pick(fx::two(), 1));
  INFO(c1.detail);
  CHECK(c1.ok);
  auto c2 = check_extensivity(cob, core::identity_functor(fx::two()),
                              core::identity_functor(fx::two()));
  INFO(c2.detail);
  CHECK(c2.ok);
}

TEST_CASE("tau_star preserves a lifted coproduct colimit") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  CobAdjunction storage(&cob);
  SliceCat sl_b{&mb, fx::two()};
  auto cop = slice::coproduct_colimit(mb, fx::one(), fx::one());
  auto q0 = core::coproduct_copairing(cop.coproduct, pick(fx::two(), 0), pick(fx::two(), 1));
  auto lambda = slice::whisker_cocone(mb, q0, cop.cocone.cocone);
  auto hdiag = slice::cocone_to_diagram(sl_b, lambda);
  auto lifted = slice::lift_colimit(sl_b, hdiag, cop.cocone);
  for (const auto& l : lifted.theta_bar.cocone.leg) CHECK(sl_b.tight(l));
  std::vector<SliceCat::Obj> apexes = {{core::identity_functor(t.tau.dom())},
                                       {pick(t.tau.dom(), t.tau.dom()->object_index("e1p"))}};
  auto rep = check_tau_star_preservation(cob, storage, lifted.theta_bar, apexes);
  for (const auto& n : rep.mediated.witnesses) INFO(n);
  CHECK(rep.ok());
  CHECK(rep.mediated.probes_checked > 0);
}

TEST_CASE("preservation rejects a cocone that misses its precondition") {
  CatModel mb{{fx::two(), fx::one()}};
  CatModel me{{fx::opf().tau.dom(), fx::one()}};
  auto t = fx::opf();
  ChangeOfBase cob(t, &mb, &me);
  CobAdjunction storage(&cob);
  SliceCat sl_b{&mb, fx::two()};
  // a point cocone with a loose leg: valid, but not in the theorem's scope
  auto shape = std::make_shared<groth::GrothResult>(slice::oplax_shape(fx::one()));
  auto pick0 = core::build_functor(fx::one(), fx::two(), {0}, {fx::two()->identity(0)});
  auto pick1 = core::build_functor(fx::one(), fx::two(), {1}, {fx::two()->identity(1)});
  auto loose = two::make_slice_one(
      sl_b, core::identity_functor(fx::one()),
      core::build_nat_transf(pick0, pick1, {fx::two()->morphism_index("a")}), pick0, pick1);
  auto tbl = std::make_shared<slice::ShapeTables<SliceCat>>();
  tbl->objs = {{pick0}};
  tbl->ones = {sl_b.id1({pick0})};
  tbl->twos = {sl_b.id2(sl_b.id1({pick0}))};
  slice::UniversalCocone<SliceCat> up;
  up.cocone.shape = shape->shape_model();
  up.cocone.diagram = slice::table_map(up.cocone.shape, tbl);
  up.cocone.apex = {pick1};
  up.cocone.leg = {loose};
  up.cocone.str = {sl_b.id2(loose)};
  REQUIRE(slice::validate_cocone(sl_b, up.cocone).ok);
  auto rep = check_tau_star_preservation(cob, storage, up, {});
  CHECK_FALSE(rep.cocone_precondition);
  CHECK_FALSE(rep.ok());
}

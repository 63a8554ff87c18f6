#include "twoslice/fixtures.hpp"

namespace twoslice::fixtures {

using core::RawCategory;
using core::build_category_ptr;
using two::Raw2Category;

CatPtr one() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "ONE";
    r.objects = {"*"};
    r.morphisms = {{"id*", "*", "*"}};
    r.identities = {{"*", "id*"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr two() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "TWO";
    r.objects = {"0", "1"};
    r.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
    r.identities = {{"0", "id0"}, {"1", "id1"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr pair() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "PAIR";
    r.objects = {"x", "y"};
    r.morphisms = {{"idx", "x", "x"}, {"idy", "y", "y"}, {"u", "x", "y"}, {"v", "x", "y"}};
    r.identities = {{"x", "idx"}, {"y", "idy"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr tri() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "TRI";
    r.objects = {"0", "1", "2"};
    r.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
                   {"a", "0", "1"},  {"b", "1", "2"},  {"c", "0", "2"}};
    r.identities = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}};
    r.composites = {{"b", "a", "c"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr sq() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "SQ";
    r.objects = {"00", "01", "10", "11"};
    r.morphisms = {{"i00", "00", "00"}, {"i01", "01", "01"}, {"i10", "10", "10"},
                   {"i11", "11", "11"}, {"f", "00", "01"},   {"g", "00", "10"},
                   {"h", "01", "11"},   {"k", "10", "11"},   {"d", "00", "11"}};
    r.identities = {{"00", "i00"}, {"01", "i01"}, {"10", "i10"}, {"11", "i11"}};
    r.composites = {{"h", "f", "d"}, {"k", "g", "d"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr iso() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "ISO";
    r.objects = {"0", "1"};
    r.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"e", "0", "1"}, {"einv", "1", "0"}};
    r.identities = {{"0", "id0"}, {"1", "id1"}};
    r.composites = {{"einv", "e", "id0"}, {"e", "einv", "id1"}};
    return build_category_ptr(r);
  }();
  return c;
}

CatPtr empty() {
  static CatPtr c = [] {
    RawCategory r;
    r.name = "EMPTY";
    return build_category_ptr(r);
  }();
  return c;
}

Cat2Ptr one2() {
  static Cat2Ptr c = two::promote_category_ptr(one());
  return c;
}
Cat2Ptr two2() {
  static Cat2Ptr c = two::promote_category_ptr(two());
  return c;
}
Cat2Ptr pair2() {
  static Cat2Ptr c = two::promote_category_ptr(pair());
  return c;
}
Cat2Ptr tri2() {
  static Cat2Ptr c = two::promote_category_ptr(tri());
  return c;
}
Cat2Ptr sq2() {
  static Cat2Ptr c = two::promote_category_ptr(sq());
  return c;
}

namespace {

// hom(A,B) for the two 2-object fixtures: f, g with a 2-cell mu : f => g,
// invertible or not.
CatPtr interval_hom(bool invertible) {
  RawCategory r;
  r.name = invertible ? "ISO" : "INT";
  r.objects = {"f", "g"};
  r.morphisms = {{"id_f", "f", "f"}, {"id_g", "g", "g"}, {"mu", "f", "g"}};
  if (invertible) r.morphisms.push_back({"mu_inv", "g", "f"});
  r.identities = {{"f", "id_f"}, {"g", "id_g"}};
  if (invertible)
    r.composites = {{"mu_inv", "mu", "id_f"}, {"mu", "mu_inv", "id_g"}};
  return build_category_ptr(r);
}

CatPtr trivial_hom(const std::string& cell) {
  RawCategory r;
  r.name = "H" + cell;
  r.objects = {cell};
  r.morphisms = {{"id_" + cell, cell, cell}};
  r.identities = {{cell, "id_" + cell}};
  return build_category_ptr(r);
}

Cat2Ptr two_object_2cat(const std::string& name, bool invertible) {
  Raw2Category r;
  r.name = name;
  r.objects = {"A", "B"};
  r.homs = {trivial_hom("1A"), interval_hom(invertible), empty(), trivial_hom("1B")};
  r.units = {"1A", "1B"};
  // every composable pair involves a unit, so both tables are unit-filled
  return two::build_2category_ptr(r);
}

}  // namespace

Cat2Ptr c2cat() {
  static Cat2Ptr c = two_object_2cat("C2CAT", false);
  return c;
}

Cat2Ptr grpd2() {
  static Cat2Ptr c = two_object_2cat("GRPD2", true);
  return c;
}

Cat2Ptr grpd3() {
  static Cat2Ptr c = [] {
    // hom(A,B) is the codiscrete groupoid on three 1-cells
    RawCategory h;
    h.name = "CODISC3";
    h.objects = {"f", "g", "h"};
    for (const auto& x : h.objects)
      for (const auto& y : h.objects) h.morphisms.push_back({"m" + x + y, x, y});
    for (const auto& x : h.objects) h.identities.push_back({x, "m" + x + x});
    for (const auto& x : h.objects)
      for (const auto& y : h.objects)
        for (const auto& z : h.objects)
          if (x != y || y != z) h.composites.push_back({"m" + y + z, "m" + x + y, "m" + x + z});
    Raw2Category r;
    r.name = "GRPD3";
    r.objects = {"A", "B"};
    r.homs = {trivial_hom("1A"), build_category_ptr(h), empty(), trivial_hom("1B")};
    r.units = {"1A", "1B"};
    return two::build_2category_ptr(r);
  }();
  return c;
}

groth::Marking wfix() {
  auto base = two2();
  int o0 = base->object_index("0"), o1 = base->object_index("1");
  std::vector<CatPtr> at(2);
  at[o0] = one();
  at[o1] = two();
  std::vector<std::vector<core::FinFunctor>> on1(4);
  // W(id0), W(id1) are identities; W(a) : W(1) = TWO -> W(0) = ONE collapses
  on1[o0 * 2 + o0] = {core::identity_functor(one())};
  on1[o1 * 2 + o1] = {core::identity_functor(two())};
  on1[o0 * 2 + o1] = {core::build_functor(two(), one(), {0, 0}, {0, 0, 0})};
  on1[o1 * 2 + o0] = {};
  return groth::make_marking_on_promoted(base, at, on1);
}

cob::SplitOpfibration opf() {
  static CatPtr e = [] {
    RawCategory r;
    r.name = "OPFE";
    r.objects = {"e0", "e1", "e1p"};
    r.morphisms = {{"ide0", "e0", "e0"}, {"ide1", "e1", "e1"}, {"ide1p", "e1p", "e1p"},
                   {"k", "e0", "e1"},    {"kp", "e0", "e1p"},  {"v", "e1", "e1p"}};
    r.identities = {{"e0", "ide0"}, {"e1", "ide1"}, {"e1p", "ide1p"}};
    r.composites = {{"v", "k", "kp"}};
    return build_category_ptr(r);
  }();
  core::RawFunctor rf;
  rf.obj_map = {{"e0", "0"}, {"e1", "1"}, {"e1p", "1"}};
  rf.mor_map = {{"k", "a"}, {"kp", "a"}, {"v", "id1"}};
  auto tau = core::build_functor_by_names(e, two(), rf);
  return cob::make_split_opfibration(tau, {{{"e0", "a"}, "k"}});
}

cob::SplitOpfibration opf_identity() {
  auto tau = core::identity_functor(two());
  cob::SplitOpfibration t;
  t.tau = tau;
  t.kappa.assign(two()->num_objects(), std::vector<int>(two()->num_morphisms(), -1));
  for (int o = 0; o < two()->num_objects(); ++o)
    for (int f = 0; f < two()->num_morphisms(); ++f)
      if (two()->src(f) == o) t.kappa[o][f] = f;
  return t;
}

cob::SplitOpfibration opf_arrow() {
  return cob::free_opfibration(core::identity_functor(two())).opfib;
}

CatPtr catalog_category(const std::string& name) {
  if (name == "ONE") return one();
  if (name == "TWO") return two();
  if (name == "PAIR") return pair();
  if (name == "TRI") return tri();
  if (name == "SQ") return sq();
  if (name == "EMPTY") return empty();
  return nullptr;
}

Cat2Ptr catalog_2category(const std::string& name) {
  if (name == "ONE") return one2();
  if (name == "TWO") return two2();
  if (name == "PAIR") return pair2();
  if (name == "TRI") return tri2();
  if (name == "SQ") return sq2();
  if (name == "C2CAT") return c2cat();
  if (name == "GRPD2") return grpd2();
  return nullptr;
}

}  // namespace twoslice::fixtures

#include "twoslice/cob/opfib.hpp"

namespace twoslice::cob {

using core::ValidationError;

OpfibReport validate_split_opfibration(const SplitOpfibration& t) {
  OpfibReport rep;
  const auto& e = t.tau.dom();
  const auto& b = t.tau.cod();
  // typing and projection
  for (int obj = 0; obj < e->num_objects(); ++obj)
    for (int f = 0; f < b->num_morphisms(); ++f) {
      if (b->src(f) != t.tau.on_obj(obj)) {
        if (t.kappa[obj][f] != -1)
          rep.add("cleavage_typing", false,
                  "entry for non-applicable pair (" + e->object_name(obj) + "," +
                      b->morphism_name(f) + ")");
        continue;
      }
      int k = t.kappa[obj][f];
      if (k < 0) {
        rep.add("cleavage_typing", false,
                "missing lift of " + b->morphism_name(f) + " at " + e->object_name(obj));
        continue;
      }
      if (e->src(k) != obj || t.tau.on_mor(k) != f)
        rep.add("cleavage_typing", false,
                "lift " + e->morphism_name(k) + " is not over " + b->morphism_name(f));
    }
  if (!rep.ok) return rep;
  // cocartesian: every g from e over f' ∘ f factors uniquely through kappa[e][f]
  for (int obj = 0; obj < e->num_objects(); ++obj)
    for (int f = 0; f < b->num_morphisms(); ++f) {
      if (b->src(f) != t.tau.on_obj(obj)) continue;
      int k = t.kappa[obj][f];
      for (int g = 0; g < e->num_morphisms(); ++g) {
        if (e->src(g) != obj) continue;
        for (int fp = 0; fp < b->num_morphisms(); ++fp) {
          if (!b->composable(fp, f) || b->compose(fp, f) != t.tau.on_mor(g)) continue;
          int count = 0;
          for (int g2 = 0; g2 < e->num_morphisms(); ++g2)
            if (e->composable(g2, k) && e->compose(g2, k) == g && t.tau.on_mor(g2) == fp) ++count;
          if (count != 1)
            rep.add("cocartesian", false,
                    "(" + e->object_name(obj) + "," + b->morphism_name(f) + "," +
                        e->morphism_name(g) + ") has " + std::to_string(count) +
                        " factorizations over " + b->morphism_name(fp));
        }
      }
    }
  // splitness
  for (int obj = 0; obj < e->num_objects(); ++obj) {
    int idf = b->identity(t.tau.on_obj(obj));
    if (t.kappa[obj][idf] != e->identity(obj))
      rep.add("split_identity", false, e->object_name(obj));
    for (int f = 0; f < b->num_morphisms(); ++f) {
      if (b->src(f) != t.tau.on_obj(obj)) continue;
      for (int fp = 0; fp < b->num_morphisms(); ++fp) {
        if (!b->composable(fp, f)) continue;
        int lhs = t.kappa[obj][b->compose(fp, f)];
        int rhs = e->compose(t.kappa[t.act(f, obj)][fp], t.kappa[obj][f]);
        if (lhs != rhs)
          rep.add("split_composite", false,
                  "(" + e->object_name(obj) + "," + b->morphism_name(fp) + "," +
                      b->morphism_name(f) + ")");
      }
    }
  }
  if (rep.ok) rep.add("split_opfibration", true);
  return rep;
}

SplitOpfibration make_split_opfibration(
    const FinFunctor& tau,
    const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& entries) {
  const auto& e = tau.dom();
  const auto& b = tau.cod();
  SplitOpfibration t;
  t.tau = tau;
  t.kappa.assign(e->num_objects(), std::vector<int>(b->num_morphisms(), -1));
  for (int obj = 0; obj < e->num_objects(); ++obj)
    t.kappa[obj][b->identity(tau.on_obj(obj))] = e->identity(obj);
  for (const auto& [key, lift] : entries) {
    int obj = e->object_index(key.first);
    int f = b->morphism_index(key.second);
    int k = e->morphism_index(lift);
    if (obj < 0 || f < 0 || k < 0)
      throw ValidationError("UnresolvedName", "cleavage entry " + key.first + " / " + key.second);
    t.kappa[obj][f] = k;
  }
  return t;
}

std::pair<int, int> conduche_factor(const SplitOpfibration& t, int g, int f, int fp) {
  const auto& e = t.tau.dom();
  const auto& b = t.tau.cod();
  if (!b->composable(fp, f) || b->compose(fp, f) != t.tau.on_mor(g))
    throw ValidationError("IllTyped", "factorization request does not type");
  int g1 = t.kappa[e->src(g)][f];
  for (int g2 = 0; g2 < e->num_morphisms(); ++g2)
    if (e->composable(g2, g1) && e->compose(g2, g1) == g && t.tau.on_mor(g2) == fp)
      return {g1, g2};
  throw ValidationError("NotLiftable", "no factorization of " + e->morphism_name(g) +
                                           " over (" + b->morphism_name(fp) + "," +
                                           b->morphism_name(f) + ")");
}

std::vector<std::pair<int, int>> all_factorizations(const SplitOpfibration& t, int g, int f,
                                                    int fp) {
  std::vector<std::pair<int, int>> out;
  const auto& e = t.tau.dom();
  for (int g1 = 0; g1 < e->num_morphisms(); ++g1) {
    if (e->src(g1) != e->src(g) || t.tau.on_mor(g1) != f) continue;
    for (int g2 = 0; g2 < e->num_morphisms(); ++g2)
      if (e->composable(g2, g1) && e->compose(g2, g1) == g && t.tau.on_mor(g2) == fp)
        out.push_back({g1, g2});
  }
  return out;
}

namespace {

// Builds the functor ONE -> B selecting an object.
FinFunctor point_functor(const CatPtr& one_cat, const CatPtr& b, int x) {
  return core::FinFunctor(one_cat, b, {x}, {b->identity(x)});
}

// Builds the functor TWO -> B selecting a morphism.
FinFunctor arrow_functor(const CatPtr& two_cat, const CatPtr& b, int f) {
  int a0 = two_cat->object_index("0") >= 0 ? two_cat->object_index("0") : 0;
  int a1 = two_cat->object_index("1") >= 0 ? two_cat->object_index("1") : 1;
  std::vector<int> omap(2), mmap(3);
  omap[a0] = b->src(f);
  omap[a1] = b->tgt(f);
  mmap[two_cat->identity(a0)] = b->identity(b->src(f));
  mmap[two_cat->identity(a1)] = b->identity(b->tgt(f));
  for (int m = 0; m < two_cat->num_morphisms(); ++m)
    if (!two_cat->is_identity(m)) mmap[m] = f;
  return core::FinFunctor(two_cat, b, omap, mmap);
}

core::RawCategory one_raw() {
  core::RawCategory r;
  r.name = "ONE";
  r.objects = {"*"};
  r.morphisms = {{"id*", "*", "*"}};
  r.identities = {{"*", "id*"}};
  return r;
}

core::RawCategory two_raw() {
  core::RawCategory r;
  r.name = "TWO";
  r.objects = {"0", "1"};
  r.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
  r.identities = {{"0", "id0"}, {"1", "id1"}};
  return r;
}

}  // namespace

std::pair<CatPtr, FinFunctor> fibre_over(const FinFunctor& tau, int x) {
  static const CatPtr one_cat = core::build_category_ptr(one_raw());
  auto pb = core::pullback_category(point_functor(one_cat, tau.cod(), x), tau);
  return {pb.total, pb.pr2};
}

FibreData fibre_data(const SplitOpfibration& t, int f) {
  static const CatPtr two_cat = core::build_category_ptr(two_raw());
  const auto& b = t.tau.cod();
  FibreData out;
  auto [fx, ux] = fibre_over(t.tau, b->src(f));
  auto [fy, uy] = fibre_over(t.tau, b->tgt(f));
  out.fibre = fx;
  out.incl = ux;
  out.fibre_cod = fy;
  out.incl_cod = uy;
  auto pb = core::pullback_category(arrow_functor(two_cat, b, f), t.tau);
  out.fibre_mor = pb.total;
  out.incl_mor = pb.pr2;
  out.proj_arrow = pb.pr1;

  // endpoint embeddings via the pullback projections
  auto embed = [&](const CatPtr& fibre, const FinFunctor& incl, const std::string& end) {
    std::vector<int> omap(fibre->num_objects()), mmap(fibre->num_morphisms());
    for (int o = 0; o < fibre->num_objects(); ++o) {
      int found = -1;
      for (int p = 0; p < pb.total->num_objects(); ++p)
        if (two_cat->object_name(pb.pr1.on_obj(p)) == end &&
            pb.pr2.on_obj(p) == incl.on_obj(o))
          found = p;
      omap[o] = found;
    }
    for (int m = 0; m < fibre->num_morphisms(); ++m) {
      int found = -1;
      for (int p = 0; p < pb.total->num_morphisms(); ++p)
        if (two_cat->is_identity(pb.pr1.on_mor(p)) &&
            two_cat->object_name(two_cat->src(pb.pr1.on_mor(p))) == end &&
            pb.pr2.on_mor(p) == incl.on_mor(m))
          found = p;
      mmap[m] = found;
    }
    return core::build_functor(fibre, pb.total, omap, mmap);
  };
  out.end0 = embed(out.fibre, out.incl, "0");
  out.end1 = embed(out.fibre_cod, out.incl_cod, "1");
  return out;
}

FreeOpfibration free_opfibration(const FinFunctor& rho) {
  const auto& b = rho.cod();
  auto comma = core::comma_category(rho, core::identity_functor(b));
  FreeOpfibration out;
  out.rho = rho;
  out.comma = comma;
  SplitOpfibration t;
  t.tau = comma.d1;
  const auto& total = comma.total;
  t.kappa.assign(total->num_objects(), std::vector<int>(b->num_morphisms(), -1));
  // postcomposition cleavage: lift of f at (j, x, h) is (id_j, f)
  for (int o = 0; o < total->num_objects(); ++o)
    for (int f = 0; f < b->num_morphisms(); ++f) {
      if (b->src(f) != comma.d1.on_obj(o)) continue;
      for (int m = 0; m < total->num_morphisms(); ++m)
        if (total->src(m) == o && comma.d1.on_mor(m) == f &&
            rho.dom()->is_identity(comma.d0.on_mor(m))) {
          t.kappa[o][f] = m;
          break;
        }
    }
  auto rep = validate_split_opfibration(t);
  if (!rep.ok) throw ValidationError("NotLiftable", "free opfibration cleavage invalid");
  out.opfib = t;
  return out;
}

ReplacementCheck check_replacement(const FreeOpfibration& fo, const FinFunctor& probe) {
  ReplacementCheck out;
  auto comma = core::comma_category(fo.rho, probe);
  auto pb = core::pullback_category(probe, fo.opfib.tau);
  const auto& ct = comma.total;
  const auto& pt = pb.total;
  if (ct->num_objects() != pt->num_objects() || ct->num_morphisms() != pt->num_morphisms()) {
    out.detail = "sizes differ";
    return out;
  }
  // comma object (j, a, h) corresponds to the pullback object (a, (j, Fa, h))
  std::vector<int> omap(ct->num_objects(), -1), mmap(ct->num_morphisms(), -1);
  for (int o = 0; o < ct->num_objects(); ++o) {
    int j = comma.d0.on_obj(o), a = comma.d1.on_obj(o), h = comma.canonical.at(o);
    for (int p = 0; p < pt->num_objects(); ++p) {
      int arr = pb.pr2.on_obj(p);  // object of rho/B
      if (pb.pr1.on_obj(p) == a && fo.comma.d0.on_obj(arr) == j &&
          fo.comma.canonical.at(arr) == h) {
        omap[o] = p;
        break;
      }
    }
    if (omap[o] < 0) {
      out.detail = "object " + ct->object_name(o) + " has no pullback partner";
      return out;
    }
  }
  for (int m = 0; m < ct->num_morphisms(); ++m) {
    int u = comma.d0.on_mor(m), v = comma.d1.on_mor(m);
    for (int q = 0; q < pt->num_morphisms(); ++q) {
      if (pt->src(q) != omap[ct->src(m)] || pt->tgt(q) != omap[ct->tgt(m)]) continue;
      int arr = pb.pr2.on_mor(q);
      if (pb.pr1.on_mor(q) == v && fo.comma.d0.on_mor(arr) == u) {
        mmap[m] = q;
        break;
      }
    }
    if (mmap[m] < 0) {
      out.detail = "morphism " + ct->morphism_name(m) + " has no pullback partner";
      return out;
    }
  }
  core::FinFunctor iso;
  try {
    iso = core::build_functor(ct, pt, omap, mmap);
  } catch (const ValidationError& e) {
    out.detail = std::string("comparison map not functorial: ") + e.what();
    return out;
  }
  // bijectivity
  std::vector<char> seen_o(pt->num_objects(), 0), seen_m(pt->num_morphisms(), 0);
  for (int o : omap) seen_o[o] = 1;
  for (int m : mmap) seen_m[m] = 1;
  for (char s : seen_o)
    if (!s) {
      out.detail = "not surjective on objects";
      return out;
    }
  for (char s : seen_m)
    if (!s) {
      out.detail = "not surjective on morphisms";
      return out;
    }
  // compatibility with projections and the canonical 2-cell
  for (int o = 0; o < ct->num_objects(); ++o) {
    int p = omap[o];
    int arr = pb.pr2.on_obj(p);
    if (pb.pr1.on_obj(p) != comma.d1.on_obj(o) ||
        fo.comma.d0.on_obj(arr) != comma.d0.on_obj(o) ||
        fo.comma.canonical.at(arr) != comma.canonical.at(o)) {
      out.detail = "projection/2-cell compatibility fails at " + ct->object_name(o);
      return out;
    }
  }
  out.ok = true;
  out.detail = "iso with " + std::to_string(ct->num_objects()) + " objects";
  return out;
}

}  // namespace twoslice::cob

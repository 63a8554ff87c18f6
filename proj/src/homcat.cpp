#include "twoslice/two/homcat.hpp"

#include <string>

namespace twoslice::two {

using core::CatPtr;
using core::FinFunctor;
using core::NatTransf;
using core::ValidationError;

std::vector<FinFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b, std::size_t limit) {
  std::vector<FinFunctor> out;
  const int no = a->num_objects();
  const int nm = a->num_morphisms();
  std::vector<int> omap(no, 0), mmap(nm, -1);
  if (no == 0) {
    out.push_back(FinFunctor(a, b, {}, {}));
    return out;
  }
  // enumerate object assignments, then morphism assignments with a final
  // composition check; sizes stay desk-scale by construction
  std::vector<int> non_id;
  for (int m = 0; m < nm; ++m)
    if (!a->is_identity(m)) non_id.push_back(m);

  auto try_mors = [&](auto&& self, std::size_t k) -> void {
    if (k == non_id.size()) {
      for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f)
          if (a->composable(g, f) && mmap[a->compose(g, f)] != b->compose(mmap[g], mmap[f])) return;
      if (out.size() >= limit)
        throw ValidationError("SizeLimitExceeded",
                              "more than " + std::to_string(limit) + " functors " + a->name() +
                                  " -> " + b->name());
      out.push_back(FinFunctor(a, b, omap, mmap));
      return;
    }
    int m = non_id[k];
    for (int im = 0; im < b->num_morphisms(); ++im) {
      if (b->src(im) != omap[a->src(m)] || b->tgt(im) != omap[a->tgt(m)]) continue;
      mmap[m] = im;
      self(self, k + 1);
    }
    mmap[m] = -1;
  };
  auto try_objs = [&](auto&& self, int o) -> void {
    if (o == no) {
      for (int i = 0; i < no; ++i) mmap[a->identity(i)] = b->identity(omap[i]);
      try_mors(try_mors, 0);
      return;
    }
    for (int io = 0; io < b->num_objects(); ++io) {
      omap[o] = io;
      self(self, o + 1);
    }
  };
  try_objs(try_objs, 0);
  return out;
}

std::vector<NatTransf> enumerate_nats(const FinFunctor& f, const FinFunctor& g) {
  std::vector<NatTransf> out;
  const auto& a = f.dom();
  const auto& c = f.cod();
  const int no = a->num_objects();
  std::vector<std::vector<int>> choices(no);
  for (int o = 0; o < no; ++o) choices[o] = c->hom_set(f.on_obj(o), g.on_obj(o));
  for (int o = 0; o < no; ++o)
    if (choices[o].empty()) return out;
  std::vector<int> pick(no, 0), comp(no);
  if (no == 0) {
    out.push_back(NatTransf(f, g, {}));
    return out;
  }
  while (true) {
    for (int o = 0; o < no; ++o) comp[o] = choices[o][pick[o]];
    bool natural = true;
    for (int m = 0; m < a->num_morphisms() && natural; ++m)
      if (c->compose(comp[a->tgt(m)], f.on_mor(m)) != c->compose(g.on_mor(m), comp[a->src(m)]))
        natural = false;
    if (natural) out.push_back(NatTransf(f, g, comp));
    int i = 0;
    while (i < no) {
      if (++pick[i] < static_cast<int>(choices[i].size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == no) break;
  }
  return out;
}

int HomCategoryResult::index_of(const FinFunctor& f) const {
  for (std::size_t i = 0; i < functors.size(); ++i)
    if (functors[i] == f) return static_cast<int>(i);
  return -1;
}

int HomCategoryResult::index_of(const NatTransf& a) const {
  for (std::size_t i = 0; i < transformations.size(); ++i)
    if (transformations[i] == a) return static_cast<int>(i);
  return -1;
}

HomCategoryResult fincat_hom_category(const CatPtr& a, const CatPtr& b, std::size_t limit) {
  HomCategoryResult res;
  res.functors = enumerate_functors(a, b, limit);
  core::RawCategory raw;
  raw.name = "[" + a->name() + "," + b->name() + "]";
  for (std::size_t i = 0; i < res.functors.size(); ++i) raw.objects.push_back("F" + std::to_string(i));
  std::vector<std::vector<std::size_t>> nat_idx(res.functors.size() * res.functors.size());
  for (std::size_t i = 0; i < res.functors.size(); ++i)
    for (std::size_t j = 0; j < res.functors.size(); ++j)
      for (const auto& n : enumerate_nats(res.functors[i], res.functors[j])) {
        std::size_t id = res.transformations.size();
        res.transformations.push_back(n);
        nat_idx[i * res.functors.size() + j].push_back(id);
        raw.morphisms.push_back({"n" + std::to_string(id), "F" + std::to_string(i),
                                 "F" + std::to_string(j)});
      }
  for (std::size_t i = 0; i < res.functors.size(); ++i) {
    auto ident = core::identity_nat(res.functors[i]);
    int found = res.index_of(ident);
    raw.identities.push_back({"F" + std::to_string(i), "n" + std::to_string(found)});
  }
  for (std::size_t y = 0; y < res.transformations.size(); ++y)
    for (std::size_t x = 0; x < res.transformations.size(); ++x) {
      const auto& ny = res.transformations[y];
      const auto& nx = res.transformations[x];
      if (!(nx.cod() == ny.dom())) continue;
      int r = res.index_of(core::vcomp_nat(ny, nx));
      raw.composites.push_back({"n" + std::to_string(y), "n" + std::to_string(x),
                                "n" + std::to_string(r)});
    }
  res.hom = core::build_category_ptr(raw);
  return res;
}

}  // namespace twoslice::two

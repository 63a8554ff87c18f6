#include "twoslice/core/colimit1.hpp"

namespace twoslice::core {

bool is_cocone1(const Cocone1& c, std::string* witness) {
  const auto& a = c.diagram.dom();
  const auto& amb = c.diagram.cod();
  if (static_cast<int>(c.legs.size()) != a->num_objects()) {
    if (witness) *witness = "wrong number of legs";
    return false;
  }
  for (int o = 0; o < a->num_objects(); ++o) {
    int leg = c.legs[o];
    if (amb->src(leg) != c.diagram.on_obj(o) || amb->tgt(leg) != c.apex) {
      if (witness) *witness = "leg at " + a->object_name(o) + " has wrong endpoints";
      return false;
    }
  }
  for (int f = 0; f < a->num_morphisms(); ++f) {
    if (amb->compose(c.legs[a->tgt(f)], c.diagram.on_mor(f)) != c.legs[a->src(f)]) {
      if (witness) *witness = "legs do not commute over " + a->morphism_name(f);
      return false;
    }
  }
  return true;
}

std::vector<Cocone1> enumerate_cocones1(const FinFunctor& diagram, int apex) {
  const auto& a = diagram.dom();
  const auto& amb = diagram.cod();
  std::vector<std::vector<int>> choices(a->num_objects());
  for (int o = 0; o < a->num_objects(); ++o)
    choices[o] = amb->hom_set(diagram.on_obj(o), apex);
  std::vector<Cocone1> out;
  std::vector<int> pick(a->num_objects(), 0);
  if (a->num_objects() == 0) return out;
  for (const auto& ch : choices)
    if (ch.empty()) return out;
  while (true) {
    Cocone1 c{diagram, apex, {}};
    c.legs.resize(a->num_objects());
    for (int o = 0; o < a->num_objects(); ++o) c.legs[o] = choices[o][pick[o]];
    if (is_cocone1(c)) out.push_back(c);
    int i = 0;
    while (i < a->num_objects()) {
      if (++pick[i] < static_cast<int>(choices[i].size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == a->num_objects()) break;
  }
  return out;
}

Colimit1Certificate decide_colimit_dim1(const Cocone1& cocone) {
  Colimit1Certificate cert;
  std::string w;
  if (!is_cocone1(cocone, &w)) {
    cert.failure = "not a cocone: " + w;
    return cert;
  }
  const auto& amb = cocone.diagram.cod();
  for (int q = 0; q < amb->num_objects(); ++q) {
    for (const auto& probe : enumerate_cocones1(cocone.diagram, q)) {
      std::vector<int> mediators;
      for (int m : amb->hom_set(cocone.apex, q)) {
        bool ok = true;
        for (int o = 0; o < static_cast<int>(cocone.legs.size()) && ok; ++o)
          if (amb->compose(m, cocone.legs[o]) != probe.legs[o]) ok = false;
        if (ok) mediators.push_back(m);
      }
      if (mediators.size() != 1) {
        cert.failure = "cocone over " + amb->object_name(q) + " has " +
                       std::to_string(mediators.size()) + " mediators";
        return cert;
      }
      cert.mediators.push_back({q, probe.legs, mediators[0]});
    }
  }
  cert.universal = true;
  return cert;
}

DiscreteFibrationReport is_discrete_fibration(const FinFunctor& p) {
  const auto& total = p.dom();
  const auto& base = p.cod();
  for (int s = 0; s < total->num_objects(); ++s)
    for (int u = 0; u < base->num_morphisms(); ++u) {
      if (base->tgt(u) != p.on_obj(s)) continue;
      int count = 0;
      for (int v = 0; v < total->num_morphisms(); ++v)
        if (total->tgt(v) == s && p.on_mor(v) == u) ++count;
      if (count != 1)
        return {false, "morphism " + base->morphism_name(u) + " has " + std::to_string(count) +
                           " liftings to " + total->object_name(s)};
    }
  return {true, ""};
}

namespace {

// The unique lifting of u with the given codomain; precondition: p is a
// discrete fibration.
int unique_lift(const FinFunctor& p, int u, int cod_obj) {
  const auto& total = p.dom();
  for (int v = 0; v < total->num_morphisms(); ++v)
    if (total->tgt(v) == cod_obj && p.on_mor(v) == u) return v;
  return -1;
}

}  // namespace

ColimFibrationReport check_colim_fibration_dim1(const FinFunctor& p,
                                                const std::vector<Cocone1>& probes) {
  auto df = is_discrete_fibration(p);
  if (!df.ok) throw ValidationError("NotDiscreteFibration", df.witness);
  const auto& total = p.dom();

  ColimFibrationReport report;
  report.ok = true;
  int probe_id = 0;
  for (const auto& probe : probes) {
    ++probe_id;
    auto ground = decide_colimit_dim1(probe);
    if (!ground.universal)
      throw ValidationError("NotUniversal",
                            "probe " + std::to_string(probe_id) + ": " + ground.failure);
    const auto& shape = probe.diagram.dom();
    for (int s = 0; s < total->num_objects(); ++s) {
      if (p.on_obj(s) != probe.apex) continue;
      ColimFibrationProbeResult r;
      r.probe = "probe" + std::to_string(probe_id);
      r.object_over_apex = s;
      // Lift legs, then the diagram, by unique liftings.
      std::vector<int> lifted_legs(shape->num_objects());
      std::vector<int> lifted_obj(shape->num_objects());
      bool ok = true;
      for (int o = 0; o < shape->num_objects(); ++o) {
        int v = unique_lift(p, probe.legs[o], s);
        if (v < 0) {
          ok = false;
          break;
        }
        lifted_legs[o] = v;
        lifted_obj[o] = total->src(v);
      }
      if (!ok) {
        r.detail = "no lifting of a leg";
        report.ok = false;
        report.results.push_back(r);
        continue;
      }
      std::vector<int> lifted_mor(shape->num_morphisms(), -1);
      for (int f = 0; f < shape->num_morphisms(); ++f) {
        int v = unique_lift(p, probe.diagram.on_mor(f), lifted_obj[shape->tgt(f)]);
        if (v < 0 || total->src(v) != lifted_obj[shape->src(f)]) {
          ok = false;
          r.detail = "diagram lifting failed at " + shape->morphism_name(f);
          break;
        }
        lifted_mor[f] = v;
      }
      if (!ok) {
        report.ok = false;
        report.results.push_back(r);
        continue;
      }
      FinFunctor lifted = build_functor(shape, total, lifted_obj, lifted_mor);
      Cocone1 up{lifted, s, lifted_legs};
      r.lifted = true;
      auto cert = decide_colimit_dim1(up);
      r.universal = cert.universal;
      if (!cert.universal) {
        r.detail = cert.failure;
        report.ok = false;
      }
      report.results.push_back(r);
    }
  }
  return report;
}

}  // namespace twoslice::core

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoslice/core/fincat.hpp"

namespace twoslice::core {

// A cocone under a diagram D : A -> C with a chosen apex object of C.
struct Cocone1 {
  FinFunctor diagram;
  int apex = -1;
  std::vector<int> legs;  // per object of A, a morphism of C into apex
};

// legs commute with the diagram: leg(tgt f) ∘ D(f) = leg(src f)
bool is_cocone1(const Cocone1& c, std::string* witness = nullptr);

struct Colimit1Certificate {
  bool universal = false;
  std::string failure;  // witness when not universal
  // one row per (apex', probe cocone): the unique mediator, recorded by index
  struct Row {
    int probe_apex;
    std::vector<int> probe_legs;
    int mediator;
  };
  std::vector<Row> mediators;
};

// Complete decision procedure: enumerates every cocone under the diagram over
// every object of the (finite) ambient and demands a unique factoring morphism.
Colimit1Certificate decide_colimit_dim1(const Cocone1& cocone);

// Enumerates all cocones under `diagram` with the given apex.
std::vector<Cocone1> enumerate_cocones1(const FinFunctor& diagram, int apex);

struct DiscreteFibrationReport {
  bool ok = false;
  std::string witness;
};

// p is a discrete fibration when every (u : C -> p(S), S) has exactly one
// lifting with codomain S.
DiscreteFibrationReport is_discrete_fibration(const FinFunctor& p);

struct ColimFibrationProbeResult {
  std::string probe;
  int object_over_apex;  // object of the total category
  bool lifted = false;
  bool universal = false;
  std::string detail;
};

struct ColimFibrationReport {
  bool ok = false;
  std::vector<ColimFibrationProbeResult> results;
};

// For each supplied probe (a diagram in the base with a universal cocone) and
// each object over the apex, lifts the cocone through the discrete fibration
// and certifies the lift universal in the total category.
// Throws ValidationError("NotDiscreteFibration") when p is not one, and
// ValidationError("NotUniversal") when a probe cocone fails its own oracle.
ColimFibrationReport check_colim_fibration_dim1(const FinFunctor& p,
                                                const std::vector<Cocone1>& probes);

}  // namespace twoslice::core

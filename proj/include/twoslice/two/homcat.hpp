#pragma once

#include <cstddef>
#include <vector>

#include "twoslice/core/fincat.hpp"

namespace twoslice::two {

inline constexpr std::size_t kDefaultSizeLimit = 10000;

// All functors A -> B in a deterministic order. Throws SizeLimitExceeded when
// more than `limit` functors exist.
std::vector<core::FinFunctor> enumerate_functors(const core::CatPtr& a, const core::CatPtr& b,
                                                 std::size_t limit = kDefaultSizeLimit);

// All natural transformations F => G for parallel F, G.
std::vector<core::NatTransf> enumerate_nats(const core::FinFunctor& f, const core::FinFunctor& g);

struct HomCategoryResult {
  core::CatPtr hom;                           // objects: functors; morphisms: transformations
  std::vector<core::FinFunctor> functors;     // decode: object index -> functor
  std::vector<core::NatTransf> transformations;  // decode: morphism index -> transformation
  int index_of(const core::FinFunctor& f) const;
  int index_of(const core::NatTransf& a) const;
};

// The category of all functors A -> B and all natural transformations, with
// vertical composition. Desk-scale hom of CAT.
HomCategoryResult fincat_hom_category(const core::CatPtr& a, const core::CatPtr& b,
                                      std::size_t limit = kDefaultSizeLimit);

}  // namespace twoslice::two

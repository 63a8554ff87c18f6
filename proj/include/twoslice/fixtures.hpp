#pragma once

#include "twoslice/cob/opfib.hpp"
#include "twoslice/groth/marking.hpp"
#include "twoslice/two/fin2cat.hpp"

namespace twoslice::fixtures {

using core::CatPtr;
using two::Cat2Ptr;

// Shared catalog. All values are immutable and cached.
CatPtr one();    // terminal category
CatPtr two();    // 0 -> 1 via a
CatPtr pair();   // parallel u, v : x -> y
CatPtr tri();    // free commutative triangle 0 -> 1 -> 2
CatPtr sq();     // commutative square
CatPtr iso();    // free-living isomorphism 0 ~= 1
CatPtr empty();  // no objects

Cat2Ptr one2();     // terminal 2-category
Cat2Ptr two2();     // TWO promoted
Cat2Ptr pair2();    // PAIR promoted
Cat2Ptr tri2();     // TRI promoted
Cat2Ptr sq2();      // SQ promoted
Cat2Ptr c2cat();    // objects A, B; hom(A,B) = (f => g), one non-invertible 2-cell
Cat2Ptr grpd2();    // objects A, B; hom(A,B) = free-living invertible 2-cell
Cat2Ptr grpd3();    // objects A, B; hom(A,B) = codiscrete groupoid on three 1-cells

// W on TWO with W(1) = TWO, W(0) = ONE, W(a) = collapse
groth::Marking wfix();

// Split opfibration fixtures over TWO (and friends)
cob::SplitOpfibration opf();             // e0; e1, e1'; k, k' = v∘k, v over TWO
cob::SplitOpfibration opf_identity();    // identity of TWO
cob::SplitOpfibration opf_arrow();       // codomain projection of the arrow category of TWO

// Resolves a catalog category by name (ONE, TWO, PAIR, TRI, SQ); null if unknown.
CatPtr catalog_category(const std::string& name);
Cat2Ptr catalog_2category(const std::string& name);

}  // namespace twoslice::fixtures

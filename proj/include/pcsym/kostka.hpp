// Kostka numbers.
//
// kostka(shape, content) counts semistandard Young tableaux of the given
// shape whose entry multiset is the content partition (entry v appears
// content[v-1] times).  Computed by peeling the cells holding the largest
// entry, which always form a horizontal strip, and recursing; this is the
// route the library uses to expand Schur functions into monomials.

#pragma once

#include "pcsym/partitions.hpp"
#include "pcsym/rational.hpp"

namespace pcsym {

// Throws if |shape| != |content|.  kostka(shape, shape) == 1.
Int kostka(const Partition& shape, const Partition& content);

}  // namespace pcsym

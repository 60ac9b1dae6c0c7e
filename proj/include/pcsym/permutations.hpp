// Permutations of [n] and two small counting sequences used in the
// Schur-basis closed forms for paths and cycles.
//
//   u_sequence(r) counts permutations w of [r+1] with no index s such
//   that w[s+1] = w[s] + 1 (no "successive pair"); u = 1, 1, 3, 11, ...
//
//   v_sequence(r) counts derangements of [r] (no fixed point), with
//   v_0 = 1 for the empty permutation; v = 1, 0, 1, 2, 9, 44, ...
//
// Both satisfy binomial identities against k! and (k-1)! which the
// verification suite checks directly.

#pragma once

#include <vector>

#include "pcsym/rational.hpp"

namespace pcsym {

struct Permutation {
    std::vector<int> word;  // one-line notation, a rearrangement of 1..n

    int size() const { return static_cast<int>(word.size()); }
    // Position of value v (1-indexed); the inverse permutation evaluated at v.
    int position_of(int v) const;
};

// All n! permutations of [n] in lexicographic order of their words.
std::vector<Permutation> all_permutations(int n);

Int u_sequence(int r);  // no w[s+1] = w[s]+1, permutations of [r+1]
Int v_sequence(int r);  // derangements of [r]; v_sequence(0) == 1

}  // namespace pcsym

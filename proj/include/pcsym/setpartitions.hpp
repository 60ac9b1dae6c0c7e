// Set partitions and the partition lattice.
//
// A SetPartition divides [n] into disjoint nonempty blocks.  The stored
// form is canonical: elements ascending within each block, blocks sorted
// by their minimum element.  The refinement order makes all partitions
// of [n] a lattice; its Moebius function on an interval [pi, sigma]
// factors over the blocks of sigma as prod (-1)^{b-1} (b-1)! where b
// counts the pi-blocks merged into that sigma-block.  We use the product
// formula for all queries and validate it once against the recursive
// definition in the test suite.  A generic recursive Moebius routine is
// also provided for explicit small lattices (such as the bond lattice of
// a graph) where no product formula applies.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcsym/partitions.hpp"
#include "pcsym/rational.hpp"

namespace pcsym {

struct SetPartition {
    int n = 0;                            // ground set is [n]
    std::vector<std::vector<int>> blocks; // canonical form, see header comment

    SetPartition() = default;
    // Canonicalizes and validates that the blocks partition [n].
    SetPartition(int ground_size, std::vector<std::vector<int>> bs);

    // Builds from a restricted-growth string: rgs[i] is the block id of
    // element i+1, ids appearing in first-use order.
    static SetPartition from_rgs(const std::vector<int>& rgs);

    int length() const { return static_cast<int>(blocks.size()); }
    Partition type() const;               // block sizes as a partition

    // block_of(v) = index into blocks for element v in 1..n.
    int block_of(int v) const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

    std::string str() const;              // "{1,3|2}"
};

// The finest partition (all singletons) and coarsest (one block) of [n].
SetPartition bottom_partition(int n);
SetPartition top_partition(int n);

// All partitions of [n], each exactly once, in restricted-growth-string
// order (which puts the all-singletons partition first).
std::vector<SetPartition> set_partitions(int n);

// True iff every block of pi is contained in some block of sigma.
// Throws on ground-size mismatch.
bool refines(const SetPartition& pi, const SetPartition& sigma);

// Moebius function mu(pi, sigma) of the partition lattice; throws if the
// pair is not comparable (pi must refine sigma).
Int mobius_interval(const SetPartition& pi, const SetPartition& sigma);

// prod over blocks B of sigma of (number of pi-blocks inside B)!.
Int lambda_factorial(const SetPartition& pi, const SetPartition& sigma);

// Partition whose parts count the pi-blocks inside each sigma-block
// (the "type" of the interval [pi, sigma]).
Partition interval_type(const SetPartition& pi, const SetPartition& sigma);

// Finest common coarsening (transitive closure of the union relation).
SetPartition lattice_join(const SetPartition& pi, const SetPartition& sigma);

// Parses "{1,3|2}"; "{}" denotes the empty partition of [0].
SetPartition parse_set_partition(const std::string& text);

// Generic Moebius values for an explicit poset of set partitions ordered
// by refinement (used for bond lattices, whose intervals do not factor
// the way full partition-lattice intervals do).  Returns a dense matrix
// M with M[i][j] = mu(elems[i], elems[j]) when elems[i] <= elems[j] and
// 0 otherwise, computed by the defining recursion.
std::vector<std::vector<Int>> mobius_matrix(const std::vector<SetPartition>& elems);

}  // namespace pcsym

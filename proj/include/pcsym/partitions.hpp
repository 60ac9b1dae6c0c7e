// Integer partitions.
//
// A Partition is a weakly decreasing list of positive parts; the empty
// list is the unique partition of 0.  Throughout the library partitions
// are enumerated and printed in reverse-lexicographic order within each
// weight ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]), and term maps keyed by
// partitions sort by (weight, then reverse-lex) so that all output is
// reproducible byte for byte.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcsym/rational.hpp"

namespace pcsym {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all >= 1

    Partition() = default;
    explicit Partition(std::vector<int> p);  // sorts descending, validates

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts <=> b.parts;
    }

    std::string str() const;  // "[3,1,1]"; "[]" for the empty partition
};

// Sort key used by every partition-keyed map: weight ascending, then
// reverse-lexicographic (lexicographically larger part list first).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts > b.parts;
    }
};

template <typename V>
using PartitionMap = std::map<Partition, V, PartitionOrder>;

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> integer_partitions(int n);

// Product of factorials of part multiplicities (r_lambda!).
Int r_factorial(const Partition& lam);

// (-1)^{|lam| - l(lam)}.
int sgn_partition(const Partition& lam);

// Conjugate (transpose) partition.
Partition conjugate(const Partition& lam);

// Multiset union of parts (the index of a product of power sums).
Partition union_parts(const Partition& a, const Partition& b);

// Partition of d formed by the subword lengths of 1 2 ... d after
// breaking after each element of S (a subset of [d-1] given as a
// bitmask whose bit i-1 represents the element i).  Throws if the mask
// has bits outside [d-1].
Partition subset_type(std::uint32_t s_mask, int d);

// Inverse image sizes: all subsets of [d-1] as bitmasks, 0 .. 2^{d-1}-1.
// (Helper for iterating quasi-symmetric supports.)
inline std::uint32_t full_mask(int d) {
    return d <= 1 ? 0u : ((1u << (d - 1)) - 1u);
}

// Parses "[3,1,1]" (whitespace tolerated, "[]" is empty).
Partition parse_partition(const std::string& text);

}  // namespace pcsym

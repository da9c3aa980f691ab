#pragma once

#include <vector>

#include "ordext/orders.hpp"
#include "ordext/partition.hpp"

// Brute-force ground truth. Everything here is built from relation_core
// primitives only and never calls into the extension engine, so the two
// sides of every theorem-level contract stay independent.
namespace ordext::oracle {

inline constexpr int kWeakOrderCap = 6;
inline constexpr int kPartialOrderCap = 5;

/// Disjoint nonempty blocks covering the universe, lowest rank first.
struct OrderedPartition {
    std::vector<std::vector<int>> ranked_blocks;
    TotalPreorder to_total_preorder(UniversePtr u) const;
};

/// All weak orders on u as ordered set partitions; count is the ordered Bell
/// number of u's size. Deterministic: the leading block runs over nonempty
/// subsets of the remaining elements in ascending bitmask order, members
/// sorted within each block.
std::vector<TotalPreorder> enumerate_total_preorders(const UniversePtr& u,
                                                     int cap = kWeakOrderCap);

/// All partial orders on u, by assigning none / i<j / j<i to every unordered
/// pair and keeping the transitive outcomes.
std::vector<PartialOrder> enumerate_partial_orders(const UniversePtr& u,
                                                   int cap = kPartialOrderCap);

/// Members of `all` whose strict part contains p's and whose symmetric part
/// equals s's relation.
std::vector<TotalPreorder> filter_s_extensions(const PartialOrder& p, const Partition& s,
                                               const std::vector<TotalPreorder>& all);

/// Pairwise intersection; throws PreconditionError on an empty list.
Relation oracle_intersection(const std::vector<TotalPreorder>& extensions);

}  // namespace ordext::oracle

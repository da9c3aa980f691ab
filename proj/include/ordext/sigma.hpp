#pragma once

#include <vector>

#include "ordext/orders.hpp"

namespace ordext {

/// Sigma(p): equivalences S with S.P.S irreflexive (equivalently S inside the
/// indifference of p). SigmaStar(p): equivalences S with S.P.S acyclic
/// (equivalently, an extension with symmetric part S exists).
enum class Collection { Sigma, SigmaStar };

struct SigmaMembership {
    bool in_sigma = false;
    bool in_sigma_star = false;
    bool maximal_in_sigma = false;       // false when not a member
    bool maximal_in_sigma_star = false;  // false when not a member
};

inline constexpr int kPartitionCap = 6;

/// All set partitions of u in restricted-growth-string lexicographic order;
/// count is the Bell number of u's size.
std::vector<Partition> enumerate_partitions(const UniversePtr& u, int cap = kPartitionCap);

/// The composition S.P.S of s's relation around the strict part of `preorder`;
/// the object every membership, existence and uniqueness criterion inspects.
Relation sandwich_composition(const Relation& preorder, const Partition& s);

bool in_sigma(const Relation& preorder, const Partition& s);
bool in_sigma_star(const Relation& preorder, const Partition& s);
inline bool in_sigma(const PartialOrder& p, const Partition& s) { return in_sigma(p.rel(), s); }
inline bool in_sigma_star(const PartialOrder& p, const Partition& s) {
    return in_sigma_star(p.rel(), s);
}

/// True iff no strictly coarser partition belongs to the collection. Membership
/// in both collections is downward-closed, so testing the one-merge coarsenings
/// suffices; merges are tried on the blocks with smallest leading members
/// first. Throws PreconditionError when s itself is not a member.
bool is_maximal_in(const PartialOrder& p, const Partition& s, Collection which);

SigmaMembership sigma_membership(const PartialOrder& p, const Partition& s);

}  // namespace ordext

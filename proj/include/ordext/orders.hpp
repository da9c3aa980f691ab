#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordext/partition.hpp"
#include "ordext/relation.hpp"

namespace ordext {

/// Reflexive, transitive, antisymmetric relation.
class PartialOrder {
public:
    explicit PartialOrder(Relation rel);  // throws ValidationError naming the failed axiom
    const Relation& rel() const noexcept { return rel_; }
    const UniversePtr& universe() const noexcept { return rel_.universe(); }
    int size() const noexcept { return rel_.size(); }
    bool operator==(const PartialOrder& other) const { return rel_ == other.rel_; }

private:
    Relation rel_;
};

/// Reflexive, transitive, total relation, kept together with its canonical
/// form: the list of indifference blocks ordered lowest rank first.
class TotalPreorder {
public:
    explicit TotalPreorder(Relation rel);
    TotalPreorder(UniversePtr u, std::vector<std::vector<int>> ranked_blocks);

    const Relation& rel() const noexcept { return rel_; }
    const UniversePtr& universe() const noexcept { return rel_.universe(); }
    int size() const noexcept { return rel_.size(); }
    const std::vector<std::vector<int>>& ranked_blocks() const noexcept { return blocks_; }
    int rank_of(int i) const { return rank_.at(static_cast<std::size_t>(i)); }

    bool operator==(const TotalPreorder& other) const { return rel_ == other.rel_; }
    std::string render_blocks(std::string_view sep = " < ") const;

private:
    void derive_blocks();
    Relation rel_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> rank_;
};

/// Pairs comparable in neither strict direction; reflexive and symmetric.
/// Throws ValidationError when the argument is not a preorder.
Relation indifference(const Relation& preorder);

/// Pairs with identical indifference neighborhoods; an equivalence relation
/// contained in indifference(preorder).
Relation equipotency(const Relation& preorder);

/// Collapse a preorder whose symmetric part equals s onto s's blocks. The
/// result lives on a fresh quotient universe labeled by block representatives
/// and is a partial order. Throws PreconditionError (with a witness pair)
/// when the symmetric part differs from s.
Relation quotient(const Relation& preorder, const Partition& s);

}  // namespace ordext

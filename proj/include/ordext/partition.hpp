#pragma once

#include <string>
#include <vector>

#include "ordext/relation.hpp"

namespace ordext {

/// Block structure of an equivalence relation. Canonical form: members sorted
/// within each block, blocks sorted by smallest member; the block list
/// determines equality.
class Partition {
public:
    Partition(UniversePtr u, std::vector<std::vector<int>> blocks);
    static Partition discrete(UniversePtr u);
    static Partition single_block(UniversePtr u);
    static Partition from_relation(const Relation& equivalence);

    const UniversePtr& universe() const noexcept { return u_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    int block_of(int i) const { return block_of_.at(static_cast<std::size_t>(i)); }

    Relation to_relation() const;
    Partition merge_blocks(int bi, int bj) const;
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition& other) const;
    bool operator!=(const Partition& other) const { return !(*this == other); }

    std::string render() const;  // "{a c} {b}"

private:
    UniversePtr u_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

}  // namespace ordext

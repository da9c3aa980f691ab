#include "ordext/partition.hpp"

#include <algorithm>

namespace ordext {

Partition::Partition(UniversePtr u, std::vector<std::vector<int>> blocks)
    : u_(std::move(u)), blocks_(std::move(blocks)) {
    const int n = u_->size();
    block_of_.assign(static_cast<std::size_t>(n), -1);
    for (auto& block : blocks_) {
        if (block.empty()) {
            throw ValidationError("partition blocks must be nonempty");
        }
        std::sort(block.begin(), block.end());
        for (int i : block) {
            if (i < 0 || i >= n) {
                throw ValidationError("partition block index out of range");
            }
            if (block_of_[static_cast<std::size_t>(i)] != -1) {
                throw ValidationError("element '" + u_->label(i) + "' appears in two blocks");
            }
            block_of_[static_cast<std::size_t>(i)] = 0;  // provisional; fixed below
        }
    }
    for (int i = 0; i < n; ++i) {
        if (block_of_[static_cast<std::size_t>(i)] == -1) {
            throw ValidationError("element '" + u_->label(i) + "' missing from partition");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int b = 0; b < block_count(); ++b) {
        for (int i : blocks_[static_cast<std::size_t>(b)]) {
            block_of_[static_cast<std::size_t>(i)] = b;
        }
    }
}

Partition Partition::discrete(UniversePtr u) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(u->size()));
    for (int i = 0; i < u->size(); ++i) {
        blocks.push_back({i});
    }
    return Partition(std::move(u), std::move(blocks));
}

Partition Partition::single_block(UniversePtr u) {
    std::vector<int> all(static_cast<std::size_t>(u->size()));
    for (int i = 0; i < u->size(); ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    return Partition(std::move(u), {std::move(all)});
}

Partition Partition::from_relation(const Relation& equivalence) {
    if (!is_equivalence(equivalence)) {
        throw ValidationError("relation is not an equivalence");
    }
    const int n = equivalence.size();
    std::vector<std::vector<int>> blocks;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (placed[static_cast<std::size_t>(i)]) {
            continue;
        }
        std::vector<int> block;
        for (int j = i; j < n; ++j) {
            if (equivalence.contains(i, j)) {
                block.push_back(j);
                placed[static_cast<std::size_t>(j)] = true;
            }
        }
        blocks.push_back(std::move(block));
    }
    return Partition(equivalence.universe(), std::move(blocks));
}

Relation Partition::to_relation() const {
    Relation r = Relation::empty(u_);
    for (const auto& block : blocks_) {
        for (int i : block) {
            for (int j : block) {
                r.add(i, j);
            }
        }
    }
    return r;
}

Partition Partition::merge_blocks(int bi, int bj) const {
    if (bi == bj || bi < 0 || bj < 0 || bi >= block_count() || bj >= block_count()) {
        throw PreconditionError("merge_blocks requires two distinct block indexes");
    }
    std::vector<std::vector<int>> next;
    std::vector<int> merged = blocks_[static_cast<std::size_t>(bi)];
    const auto& other = blocks_[static_cast<std::size_t>(bj)];
    merged.insert(merged.end(), other.begin(), other.end());
    next.push_back(std::move(merged));
    for (int b = 0; b < block_count(); ++b) {
        if (b != bi && b != bj) {
            next.push_back(blocks_[static_cast<std::size_t>(b)]);
        }
    }
    return Partition(u_, std::move(next));
}

bool Partition::refines(const Partition& coarser) const {
    if (!same_universe(u_, coarser.u_)) {
        throw UniverseMismatchError("partitions live on different universes");
    }
    for (const auto& block : blocks_) {
        const int target = coarser.block_of(block.front());
        for (int i : block) {
            if (coarser.block_of(i) != target) {
                return false;
            }
        }
    }
    return true;
}

bool Partition::operator==(const Partition& other) const {
    return same_universe(u_, other.u_) && blocks_ == other.blocks_;
}

std::string Partition::render() const {
    std::string out;
    for (const auto& block : blocks_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += '{';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k > 0) {
                out += ' ';
            }
            out += u_->label(block[k]);
        }
        out += '}';
    }
    return out;
}

}  // namespace ordext

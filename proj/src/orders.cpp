#include "ordext/orders.hpp"

#include <algorithm>

namespace ordext {

namespace {

void require_preorder(const Relation& g, const char* who) {
    if (!is_reflexive(g)) {
        throw ValidationError(std::string(who) + ": relation is not reflexive");
    }
    if (!is_transitive(g)) {
        throw ValidationError(std::string(who) + ": relation is not transitive");
    }
}

}  // namespace

PartialOrder::PartialOrder(Relation rel) : rel_(std::move(rel)) {
    require_preorder(rel_, "partial order");
    if (!is_antisymmetric(rel_)) {
        throw ValidationError("partial order: relation is not antisymmetric");
    }
}

TotalPreorder::TotalPreorder(Relation rel) : rel_(std::move(rel)) {
    require_preorder(rel_, "total preorder");
    if (!is_total(rel_)) {
        throw ValidationError("total preorder: relation is not total");
    }
    derive_blocks();
}

TotalPreorder::TotalPreorder(UniversePtr u, std::vector<std::vector<int>> ranked_blocks)
    : rel_(Relation::empty(u)) {
    const int n = u->size();
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < ranked_blocks.size(); ++b) {
        auto& block = ranked_blocks[b];
        if (block.empty()) {
            throw ValidationError("total preorder: ranked blocks must be nonempty");
        }
        std::sort(block.begin(), block.end());
        for (int i : block) {
            if (i < 0 || i >= n) {
                throw ValidationError("total preorder: block index out of range");
            }
            if (rank_[static_cast<std::size_t>(i)] != -1) {
                throw ValidationError("total preorder: element in two ranked blocks");
            }
            rank_[static_cast<std::size_t>(i)] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (rank_[static_cast<std::size_t>(i)] == -1) {
            throw ValidationError("total preorder: element missing from ranked blocks");
        }
    }
    blocks_ = std::move(ranked_blocks);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rank_[static_cast<std::size_t>(i)] <= rank_[static_cast<std::size_t>(j)]) {
                rel_.add(i, j);
            }
        }
    }
}

void TotalPreorder::derive_blocks() {
    const Relation sym = symmetric_part(rel_);
    Partition classes = Partition::from_relation(sym);
    std::vector<std::vector<int>> blocks = classes.blocks();
    // Classes of a total preorder are linearly ordered by the relation on
    // any representatives.
    std::sort(blocks.begin(), blocks.end(), [this](const auto& a, const auto& b) {
        return rel_.contains(a.front(), b.front()) && !rel_.contains(b.front(), a.front());
    });
    blocks_ = std::move(blocks);
    rank_.assign(static_cast<std::size_t>(rel_.size()), -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int i : blocks_[b]) {
            rank_[static_cast<std::size_t>(i)] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < rel_.size(); ++i) {
        for (int j = 0; j < rel_.size(); ++j) {
            const bool by_rank =
                rank_[static_cast<std::size_t>(i)] <= rank_[static_cast<std::size_t>(j)];
            if (by_rank != rel_.contains(i, j)) {
                throw ValidationError("total preorder: ranked blocks do not reconstruct it");
            }
        }
    }
}

std::string TotalPreorder::render_blocks(std::string_view sep) const {
    std::string out;
    for (const auto& block : blocks_) {
        if (!out.empty()) {
            out += sep;
        }
        out += '{';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k > 0) {
                out += ' ';
            }
            out += universe()->label(block[k]);
        }
        out += '}';
    }
    return out;
}

Relation indifference(const Relation& preorder) {
    require_preorder(preorder, "indifference");
    const Relation strict = asymmetric_part(preorder);
    return complement(union_of(strict, converse(strict)));
}

Relation equipotency(const Relation& preorder) {
    const Relation indiff = indifference(preorder);
    Relation r = Relation::empty(preorder.universe());
    const int n = preorder.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto ri = indiff.row(i);
            auto rj = indiff.row(j);
            if (std::equal(ri.begin(), ri.end(), rj.begin())) {
                r.add(i, j);
            }
        }
    }
    return r;
}

Relation quotient(const Relation& preorder, const Partition& s) {
    require_preorder(preorder, "quotient");
    if (!same_universe(preorder.universe(), s.universe())) {
        throw UniverseMismatchError("quotient: preorder and partition universes differ");
    }
    const Relation sym = symmetric_part(preorder);
    const Relation expected = s.to_relation();
    if (sym != expected) {
        for (int i = 0; i < preorder.size(); ++i) {
            for (int j = 0; j < preorder.size(); ++j) {
                if (sym.contains(i, j) != expected.contains(i, j)) {
                    throw PreconditionError(
                        "quotient: symmetric part differs from the partition at (" +
                        preorder.universe()->label(i) + "," + preorder.universe()->label(j) + ")");
                }
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(s.block_count()));
    for (const auto& block : s.blocks()) {
        labels.push_back("[" + s.universe()->label(block.front()) + "]");
    }
    Relation out = Relation::empty(make_universe(std::move(labels)));
    for (int bi = 0; bi < s.block_count(); ++bi) {
        for (int bj = 0; bj < s.block_count(); ++bj) {
            const int ri = s.blocks()[static_cast<std::size_t>(bi)].front();
            const int rj = s.blocks()[static_cast<std::size_t>(bj)].front();
            if (preorder.contains(ri, rj)) {
                out.add(bi, bj);
            }
        }
    }
    return out;
}

}  // namespace ordext

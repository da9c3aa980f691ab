#include "ordext/oracle.hpp"

#include <string>

namespace ordext::oracle {

TotalPreorder OrderedPartition::to_total_preorder(UniversePtr u) const {
    return TotalPreorder(std::move(u), ranked_blocks);
}

std::vector<TotalPreorder> enumerate_total_preorders(const UniversePtr& u, int cap) {
    const int n = u->size();
    if (n > cap) {
        throw CapacityError("weak-order enumeration capped at n <= " + std::to_string(cap));
    }
    std::vector<TotalPreorder> out;
    std::vector<std::vector<int>> blocks;
    const auto recurse = [&](auto&& self, std::uint32_t remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(u, blocks);
            return;
        }
        // Nonempty subsets of `remaining` in ascending bitmask order.
        for (std::uint32_t sub = (0u - remaining) & remaining; sub != 0;
             sub = (sub - remaining) & remaining) {
            std::vector<int> block;
            for (std::uint32_t bits = sub; bits != 0; bits &= bits - 1) {
                block.push_back(__builtin_ctz(bits));
            }
            blocks.push_back(std::move(block));
            self(self, remaining & ~sub);
            blocks.pop_back();
        }
    };
    recurse(recurse, (std::uint32_t{1} << n) - 1);
    return out;
}

std::vector<PartialOrder> enumerate_partial_orders(const UniversePtr& u, int cap) {
    const int n = u->size();
    if (n > cap) {
        throw CapacityError("partial-order enumeration capped at n <= " + std::to_string(cap));
    }
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        total *= 3;
    }
    std::vector<PartialOrder> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        Relation rel = Relation::identity(u);
        std::uint64_t c = code;
        for (const auto& [i, j] : slots) {
            switch (c % 3) {
                case 1: rel.add(i, j); break;
                case 2: rel.add(j, i); break;
                default: break;
            }
            c /= 3;
        }
        if (is_transitive(rel)) {
            out.emplace_back(std::move(rel));
        }
    }
    return out;
}

std::vector<TotalPreorder> filter_s_extensions(const PartialOrder& p, const Partition& s,
                                               const std::vector<TotalPreorder>& all) {
    const Relation strict = asymmetric_part(p.rel());
    const Relation equiv = s.to_relation();
    std::vector<TotalPreorder> out;
    for (const TotalPreorder& t : all) {
        if (strict.subset_of(asymmetric_part(t.rel())) && symmetric_part(t.rel()) == equiv) {
            out.push_back(t);
        }
    }
    return out;
}

Relation oracle_intersection(const std::vector<TotalPreorder>& extensions) {
    if (extensions.empty()) {
        throw PreconditionError("no extensions; intersection undefined");
    }
    Relation acc = extensions.front().rel();
    for (std::size_t k = 1; k < extensions.size(); ++k) {
        acc = intersect(acc, extensions[k].rel());
    }
    return acc;
}

}  // namespace ordext::oracle

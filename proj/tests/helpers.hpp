#pragma once

// Test-side ground truth: naive, definition-shaped implementations that stay
// independent of the word-parallel code paths they check.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordext/orders.hpp"
#include "ordext/partition.hpp"
#include "ordext/relation.hpp"

namespace ordext::testing {

inline Relation rel_of(const UniversePtr& u,
                       const std::vector<std::pair<std::string, std::string>>& label_pairs,
                       bool with_identity = false) {
    Relation r = with_identity ? Relation::identity(u) : Relation::empty(u);
    for (const auto& [a, b] : label_pairs) {
        r.add(*u->index_of(a), *u->index_of(b));
    }
    return r;
}

inline Partition part_of(const UniversePtr& u,
                         const std::vector<std::vector<std::string>>& label_blocks) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : label_blocks) {
        std::vector<int> ids;
        for (const auto& l : block) {
            ids.push_back(*u->index_of(l));
        }
        blocks.push_back(std::move(ids));
    }
    return Partition(u, std::move(blocks));
}

inline Relation naive_compose(const Relation& g, const Relation& h) {
    Relation out = Relation::empty(g.universe());
    const int n = g.size();
    for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) {
            for (int y = 0; y < n; ++y) {
                if (g.contains(x, y) && h.contains(y, z)) {
                    out.add(x, z);
                }
            }
        }
    }
    return out;
}

inline Relation naive_transitive_hull(const Relation& g) {
    Relation r = g;
    const int n = g.size();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                for (int z = 0; z < n; ++z) {
                    if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z)) {
                        r.add(x, z);
                        grew = true;
                    }
                }
            }
        }
    }
    return r;
}

inline bool naive_has_cycle(const Relation& g) {
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    const auto dfs = [&](auto&& self, int v) -> bool {
        color[static_cast<std::size_t>(v)] = 1;
        for (int w = 0; w < n; ++w) {
            if (!g.contains(v, w)) {
                continue;
            }
            if (color[static_cast<std::size_t>(w)] == 1) {
                return true;
            }
            if (color[static_cast<std::size_t>(w)] == 0 && self(self, w)) {
                return true;
            }
        }
        color[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) {
            return true;
        }
    }
    return false;
}

inline bool naive_is_transitive(const Relation& g) {
    const int n = g.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (g.contains(x, y) && g.contains(y, z) && !g.contains(x, z)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Every relation on n elements, encoded by a bitmask over the n*n cells.
/// Intended for n <= 3 (512 relations).
inline std::vector<Relation> all_relations(const UniversePtr& u) {
    const int n = u->size();
    const unsigned cells = static_cast<unsigned>(n * n);
    std::vector<Relation> out;
    for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
        Relation r = Relation::empty(u);
        for (unsigned c = 0; c < cells; ++c) {
            if (mask & (1ul << c)) {
                r.add(static_cast<int>(c) / n, static_cast<int>(c) % n);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline Relation random_relation(std::mt19937& rng, const UniversePtr& u, int denominator = 3) {
    Relation r = Relation::empty(u);
    std::uniform_int_distribution<int> dice(0, denominator - 1);
    for (int i = 0; i < u->size(); ++i) {
        for (int j = 0; j < u->size(); ++j) {
            if (dice(rng) == 0) {
                r.add(i, j);
            }
        }
    }
    return r;
}

inline Relation random_preorder(std::mt19937& rng, const UniversePtr& u) {
    return transitive_hull(union_of(Relation::identity(u), random_relation(rng, u, 4)));
}

/// Random partial order: random strict pairs consistent with a random
/// permutation, then closed; antisymmetry is structural.
inline PartialOrder random_partial_order(std::mt19937& rng, const UniversePtr& u) {
    const int n = u->size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    Relation r = Relation::identity(u);
    std::uniform_int_distribution<int> dice(0, 2);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (dice(rng) == 0) {
                r.add(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            }
        }
    }
    return PartialOrder(transitive_hull(r));
}

inline Partition random_partition(std::mt19937& rng, const UniversePtr& u) {
    const int n = u->size();
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(blocks.size()));
        const int b = pick(rng);
        if (b == static_cast<int>(blocks.size())) {
            blocks.push_back({i});
        } else {
            blocks[static_cast<std::size_t>(b)].push_back(i);
        }
    }
    return Partition(u, std::move(blocks));
}

}  // namespace ordext::testing

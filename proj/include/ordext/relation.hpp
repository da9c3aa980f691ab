#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordext/universe.hpp"

namespace ordext {

/// Binary relation on a Universe, stored as one machine-word bit row per
/// element so that composition and closure are word-parallel sweeps.
/// Operations never mutate their inputs; values are safe to share.
class Relation {
public:
    static Relation empty(UniversePtr u);
    static Relation identity(UniversePtr u);  // the equality relation E
    static Relation full(UniversePtr u);
    static Relation from_pairs(UniversePtr u, const std::vector<std::pair<int, int>>& pairs);

    const UniversePtr& universe() const noexcept { return u_; }
    int size() const noexcept { return n_; }

    bool contains(int i, int j) const {
        return (word(i, j >> 6) >> (j & 63)) & std::uint64_t{1};
    }
    void add(int i, int j) { mutable_word(i, j >> 6) |= std::uint64_t{1} << (j & 63); }
    void remove(int i, int j) { mutable_word(i, j >> 6) &= ~(std::uint64_t{1} << (j & 63)); }

    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }
    void row_or(int i, std::span<const std::uint64_t> src);

    std::size_t pair_count() const;
    std::vector<std::pair<int, int>> pairs() const;  // row-major order

    bool subset_of(const Relation& other) const;
    bool operator==(const Relation& other) const;
    bool operator!=(const Relation& other) const { return !(*this == other); }

private:
    Relation(UniversePtr u, bool fill);
    std::uint64_t word(int i, int w) const {
        return bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(w)];
    }
    std::uint64_t& mutable_word(int i, int w) {
        return bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(w)];
    }
    std::uint64_t tail_mask() const;

    UniversePtr u_;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

void require_same_universe(const Relation& a, const Relation& b);

/// Composition applies its first argument first:
/// (x,z) is related iff some y has (x,y) in g and (y,z) in h.
Relation compose(const Relation& g, const Relation& h);
Relation union_of(const Relation& g, const Relation& h);
Relation intersect(const Relation& g, const Relation& h);
Relation difference(const Relation& g, const Relation& h);
Relation converse(const Relation& g);
Relation complement(const Relation& g);

Relation asymmetric_part(const Relation& g);  // pairs whose reverse is absent
Relation symmetric_part(const Relation& g);   // pairs whose reverse is present
Relation transitive_hull(const Relation& g);  // smallest transitive superset

bool is_reflexive(const Relation& g);
bool is_irreflexive(const Relation& g);
bool is_symmetric(const Relation& g);
bool is_antisymmetric(const Relation& g);
bool is_asymmetric(const Relation& g);
bool is_transitive(const Relation& g);
bool is_total(const Relation& g);
bool is_acyclic(const Relation& g);  // no directed cycle; a self loop is a cycle
bool is_negatively_transitive(const Relation& g);
bool is_preorder(const Relation& g);
bool is_partial_order(const Relation& g);
bool is_equivalence(const Relation& g);

/// Shortest directed cycle x1..xm: every (x_i, x_{i+1}) and (x_m, x_1) is in g.
/// Precondition: g has a cycle (is_acyclic(g) is false).
std::vector<int> shortest_cycle(const Relation& g);
bool certificate_is_cycle(const Relation& g, const std::vector<int>& cycle);

/// Canonical text form: "reflexive: <bool>; pairs: (a,b) (c,b)".
/// Off-diagonal pairs in row-major order; diagonal pairs appear only when the
/// relation is not reflexive. An empty list renders as "-".
std::string render(const Relation& g);
std::string render_pairs(const Relation& g);

}  // namespace ordext

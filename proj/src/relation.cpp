#include "ordext/relation.hpp"

#include <algorithm>
#include <deque>

namespace ordext {

Relation::Relation(UniversePtr u, bool fill) : u_(std::move(u)) {
    n_ = u_->size();
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    if (fill) {
        const std::uint64_t tail = tail_mask();
        for (int i = 0; i < n_; ++i) {
            for (int w = 0; w < words_; ++w) {
                mutable_word(i, w) = (w + 1 == words_) ? tail : ~std::uint64_t{0};
            }
        }
    }
}

std::uint64_t Relation::tail_mask() const {
    const int rem = n_ & 63;
    return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

Relation Relation::empty(UniversePtr u) { return Relation(std::move(u), false); }

Relation Relation::full(UniversePtr u) { return Relation(std::move(u), true); }

Relation Relation::identity(UniversePtr u) {
    Relation r(std::move(u), false);
    for (int i = 0; i < r.n_; ++i) {
        r.add(i, i);
    }
    return r;
}

Relation Relation::from_pairs(UniversePtr u, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(std::move(u), false);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= r.n_ || j < 0 || j >= r.n_) {
            throw ValidationError("pair index out of range");
        }
        r.add(i, j);
    }
    return r;
}

void Relation::row_or(int i, std::span<const std::uint64_t> src) {
    std::uint64_t* dst = bits_.data() + static_cast<std::size_t>(i) * words_;
    for (int w = 0; w < words_; ++w) {
        dst[w] |= src[static_cast<std::size_t>(w)];
    }
}

std::size_t Relation::pair_count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) {
        c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (contains(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

bool Relation::subset_of(const Relation& other) const {
    require_same_universe(*this, other);
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] & ~other.bits_[k]) {
            return false;
        }
    }
    return true;
}

bool Relation::operator==(const Relation& other) const {
    return same_universe(u_, other.u_) && bits_ == other.bits_;
}

void require_same_universe(const Relation& a, const Relation& b) {
    if (!same_universe(a.universe(), b.universe())) {
        throw UniverseMismatchError("relations live on different universes");
    }
}

Relation compose(const Relation& g, const Relation& h) {
    require_same_universe(g, h);
    Relation out = Relation::empty(g.universe());
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        auto gi = g.row(i);
        for (std::size_t w = 0; w < gi.size(); ++w) {
            std::uint64_t word = gi[w];
            while (word) {
                const int j = static_cast<int>(w * 64) + __builtin_ctzll(word);
                word &= word - 1;
                out.row_or(i, h.row(j));
            }
        }
    }
    return out;
}

namespace {

template <typename F>
Relation zip(const Relation& g, const Relation& h, F f) {
    require_same_universe(g, h);
    Relation out = Relation::empty(g.universe());
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        auto gi = g.row(i);
        auto hi = h.row(i);
        std::vector<std::uint64_t> tmp(gi.size());
        for (std::size_t w = 0; w < gi.size(); ++w) {
            tmp[w] = f(gi[w], hi[w]);
        }
        out.row_or(i, tmp);
    }
    return out;
}

}  // namespace

Relation union_of(const Relation& g, const Relation& h) {
    return zip(g, h, [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

Relation intersect(const Relation& g, const Relation& h) {
    return zip(g, h, [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

Relation difference(const Relation& g, const Relation& h) {
    return zip(g, h, [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
}

Relation converse(const Relation& g) {
    Relation out = Relation::empty(g.universe());
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.contains(i, j)) {
                out.add(j, i);
            }
        }
    }
    return out;
}

Relation complement(const Relation& g) {
    Relation out = Relation::full(g.universe());
    return difference(out, g);
}

Relation asymmetric_part(const Relation& g) { return difference(g, converse(g)); }

Relation symmetric_part(const Relation& g) { return intersect(g, converse(g)); }

Relation transitive_hull(const Relation& g) {
    Relation r = g;
    const int n = r.size();
    for (int k = 0; k < n; ++k) {
        // row(k) may alias the destination when i == k; OR-ing a row into
        // itself is a no-op, so the sweep stays correct.
        for (int i = 0; i < n; ++i) {
            if (r.contains(i, k)) {
                r.row_or(i, r.row(k));
            }
        }
    }
    return r;
}

bool is_reflexive(const Relation& g) {
    for (int i = 0; i < g.size(); ++i) {
        if (!g.contains(i, i)) {
            return false;
        }
    }
    return true;
}

bool is_irreflexive(const Relation& g) {
    for (int i = 0; i < g.size(); ++i) {
        if (g.contains(i, i)) {
            return false;
        }
    }
    return true;
}

bool is_symmetric(const Relation& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.contains(i, j) != g.contains(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_antisymmetric(const Relation& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.contains(i, j) && g.contains(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_asymmetric(const Relation& g) { return is_irreflexive(g) && is_antisymmetric(g); }

bool is_transitive(const Relation& g) {
    const int n = g.size();
    const std::size_t words = g.row(0).size();
    std::vector<std::uint64_t> reach(words);
    for (int i = 0; i < n; ++i) {
        std::fill(reach.begin(), reach.end(), 0);
        auto gi = g.row(i);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = gi[w];
            while (word) {
                const int j = static_cast<int>(w * 64) + __builtin_ctzll(word);
                word &= word - 1;
                auto gj = g.row(j);
                for (std::size_t v = 0; v < words; ++v) {
                    reach[v] |= gj[v];
                }
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            if (reach[w] & ~gi[w]) {
                return false;
            }
        }
    }
    return true;
}

bool is_total(const Relation& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!g.contains(i, j) && !g.contains(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_acyclic(const Relation& g) { return is_irreflexive(transitive_hull(g)); }

bool is_negatively_transitive(const Relation& g) { return is_transitive(complement(g)); }

bool is_preorder(const Relation& g) { return is_reflexive(g) && is_transitive(g); }

bool is_partial_order(const Relation& g) { return is_preorder(g) && is_antisymmetric(g); }

bool is_equivalence(const Relation& g) { return is_preorder(g) && is_symmetric(g); }

std::vector<int> shortest_cycle(const Relation& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        if (g.contains(i, i)) {
            return {i};
        }
    }
    std::vector<int> best;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (g.contains(u, v) && dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            if (u == s || dist[static_cast<std::size_t>(u)] < 0 || !g.contains(u, s)) {
                continue;
            }
            const std::size_t len = static_cast<std::size_t>(dist[static_cast<std::size_t>(u)]) + 1;
            if (!best.empty() && len >= best.size()) {
                continue;
            }
            std::vector<int> path;
            for (int v = u; v != -1; v = parent[static_cast<std::size_t>(v)]) {
                path.push_back(v);
            }
            std::reverse(path.begin(), path.end());  // s .. u
            best = std::move(path);
        }
    }
    return best;
}

bool certificate_is_cycle(const Relation& g, const std::vector<int>& cycle) {
    if (cycle.empty()) {
        return false;
    }
    const std::size_t m = cycle.size();
    for (std::size_t k = 0; k < m; ++k) {
        const int from = cycle[k];
        const int to = cycle[(k + 1) % m];
        if (from < 0 || from >= g.size() || to < 0 || to >= g.size() || !g.contains(from, to)) {
            return false;
        }
    }
    return true;
}

std::string render_pairs(const Relation& g) {
    const bool refl = is_reflexive(g);
    std::string out;
    for (const auto& [i, j] : g.pairs()) {
        if (i == j && refl) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += '(' + g.universe()->label(i) + ',' + g.universe()->label(j) + ')';
    }
    return out;
}

std::string render(const Relation& g) {
    std::string pairs = render_pairs(g);
    std::string out = "reflexive: ";
    out += is_reflexive(g) ? "true" : "false";
    out += "; pairs: ";
    out += pairs.empty() ? "-" : pairs;
    return out;
}

}  // namespace ordext

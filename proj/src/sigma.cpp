#include "ordext/sigma.hpp"

#include <algorithm>

namespace ordext {

std::vector<Partition> enumerate_partitions(const UniversePtr& u, int cap) {
    const int n = u->size();
    if (n > cap) {
        throw CapacityError("partition enumeration capped at n <= " + std::to_string(cap));
    }
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<int> maxes(static_cast<std::size_t>(n), 0);  // maxes[i] = max(rgs[0..i])
    while (true) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(
            *std::max_element(rgs.begin(), rgs.end()) + 1));
        for (int i = 0; i < n; ++i) {
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
        }
        out.emplace_back(u, std::move(blocks));
        // Lexicographic successor of the restricted growth string.
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxes[static_cast<std::size_t>(i - 1)]) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++rgs[static_cast<std::size_t>(i)];
        maxes[static_cast<std::size_t>(i)] =
            std::max(maxes[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxes[static_cast<std::size_t>(j)] = maxes[static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

Relation sandwich_composition(const Relation& preorder, const Partition& s) {
    const Relation strict = asymmetric_part(preorder);
    const Relation equiv = s.to_relation();
    return compose(compose(equiv, strict), equiv);
}

bool in_sigma(const Relation& preorder, const Partition& s) {
    return is_irreflexive(sandwich_composition(preorder, s));
}

bool in_sigma_star(const Relation& preorder, const Partition& s) {
    return is_acyclic(sandwich_composition(preorder, s));
}

bool is_maximal_in(const PartialOrder& p, const Partition& s, Collection which) {
    const auto member = [&](const Partition& cand) {
        return which == Collection::Sigma ? in_sigma(p.rel(), cand) : in_sigma_star(p.rel(), cand);
    };
    if (!member(s)) {
        throw PreconditionError("is_maximal_in: partition is not a member of the collection");
    }
    for (int bi = 0; bi < s.block_count(); ++bi) {
        for (int bj = bi + 1; bj < s.block_count(); ++bj) {
            if (member(s.merge_blocks(bi, bj))) {
                return false;
            }
        }
    }
    return true;
}

SigmaMembership sigma_membership(const PartialOrder& p, const Partition& s) {
    SigmaMembership m;
    m.in_sigma = in_sigma(p.rel(), s);
    m.in_sigma_star = in_sigma_star(p.rel(), s);
    if (m.in_sigma) {
        m.maximal_in_sigma = is_maximal_in(p, s, Collection::Sigma);
    }
    if (m.in_sigma_star) {
        m.maximal_in_sigma_star = is_maximal_in(p, s, Collection::SigmaStar);
    }
    return m;
}

}  // namespace ordext

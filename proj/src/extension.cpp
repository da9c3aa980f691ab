#include "ordext/extension.hpp"

#include <algorithm>
#include <cassert>

namespace ordext {

namespace {

std::string pair_text(const UniversePtr& u, std::pair<int, int> ab) {
    return "(" + u->label(ab.first) + "," + u->label(ab.second) + ")";
}

std::string cycle_text(const UniversePtr& u, const std::vector<int>& cycle) {
    std::string out;
    for (int i : cycle) {
        if (!out.empty()) {
            out += " -> ";
        }
        out += u->label(i);
    }
    if (!cycle.empty()) {
        out += " -> " + u->label(cycle.front());
    }
    return out;
}

// First incomparable ordered pair in row-major index order, or nullopt.
std::optional<std::pair<int, int>> first_incomparable(const Relation& rel) {
    const int n = rel.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && !rel.contains(i, j) && !rel.contains(j, i)) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

void require_universe_pair(const Relation& rel, std::optional<std::pair<int, int>> forced) {
    if (!forced) {
        return;
    }
    const auto [a, b] = *forced;
    if (a < 0 || a >= rel.size() || b < 0 || b >= rel.size()) {
        throw PreconditionError("forced pair index out of range");
    }
}

}  // namespace

Relation szpilrajn_extend(const PartialOrder& p, std::optional<std::pair<int, int>> forced) {
    Relation rel = p.rel();
    require_universe_pair(rel, forced);
    if (forced) {
        const auto [a, b] = *forced;
        if (rel.contains(a, b) || rel.contains(b, a)) {
            throw PreconditionError("forced pair " + pair_text(rel.universe(), *forced) +
                                    " is already comparable");
        }
        rel.add(a, b);
        rel = transitive_hull(rel);
    }
    // Joining two incomparable elements and closing keeps antisymmetry, so
    // each step stays a partial order and strictly shrinks the incomparable
    // set.
    while (auto gap = first_incomparable(rel)) {
        rel.add(gap->first, gap->second);
        rel = transitive_hull(rel);
    }
    assert(is_partial_order(rel) && is_total(rel));
    return rel;
}

std::vector<Relation> enumerate_perfect_extensions(const PartialOrder& p, int cap) {
    const int n = p.size();
    if (n > cap) {
        throw CapacityError("perfect-extension enumeration capped at n <= " + std::to_string(cap));
    }
    const Relation strict = asymmetric_part(p.rel());
    std::vector<std::uint32_t> preds(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (strict.contains(i, j)) {
                preds[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
            }
        }
    }
    std::vector<Relation> out;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::uint32_t used = 0;
    const auto emit = [&] {
        Relation chain = Relation::empty(p.universe());
        for (int r = 0; r < n; ++r) {
            for (int s = r; s < n; ++s) {
                chain.add(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(s)]);
            }
        }
        out.push_back(std::move(chain));
    };
    const auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(order.size()) == n) {
            emit();
            return;
        }
        for (int i = 0; i < n; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if ((used & bit) || (preds[static_cast<std::size_t>(i)] & ~used)) {
                continue;
            }
            used |= bit;
            order.push_back(i);
            self(self);
            order.pop_back();
            used &= ~bit;
        }
    };
    recurse(recurse);
    return out;
}

Relation dushnik_miller_intersection(const PartialOrder& p, int cap) {
    const std::vector<Relation> extensions = enumerate_perfect_extensions(p, cap);
    Relation acc = extensions.front();
    for (std::size_t k = 1; k < extensions.size(); ++k) {
        acc = intersect(acc, extensions[k]);
    }
    return acc;
}

bool absorption_condition(const Relation& preorder, const Partition& s) {
    const Relation strict = asymmetric_part(preorder);
    const Relation equiv = s.to_relation();
    return compose(strict, equiv) == strict && compose(equiv, strict) == strict;
}

bool within_equipotency(const Relation& preorder, const Partition& s) {
    return s.to_relation().subset_of(equipotency(preorder));
}

ExtensionReport s_extension_exists(const PartialOrder& p, const Partition& s) {
    const Relation comp = sandwich_composition(p.rel(), s);
    ExtensionReport report;
    report.exists = is_acyclic(comp);
    if (!report.exists) {
        report.certificate = shortest_cycle(comp);
    }
    return report;
}

TotalPreorder s_extend(const PartialOrder& p, const Partition& s,
                       std::optional<std::pair<int, int>> forced) {
    require_universe_pair(p.rel(), forced);
    const Relation comp = sandwich_composition(p.rel(), s);
    if (!is_acyclic(comp)) {
        const std::vector<int> cycle = shortest_cycle(comp);
        throw NoExtensionError("no extension with the prescribed symmetric part: S.P.S has cycle " +
                                   cycle_text(p.universe(), cycle),
                               cycle);
    }
    const Relation equiv = s.to_relation();
    const Relation hull = transitive_hull(comp);
    const Relation closed = union_of(Relation::identity(p.universe()), hull);
    if (forced) {
        const Relation reach = union_of(closed, equiv);
        const auto [a, b] = *forced;
        if (reach.contains(a, b) || reach.contains(b, a)) {
            throw PreconditionError("forced pair " + pair_text(p.universe(), *forced) +
                                    " is already comparable in the closed order");
        }
    }
    // The hull absorbs the equivalence on both sides, which makes the union
    // below a preorder with symmetric part exactly S.
    if (compose(hull, equiv) != hull || compose(equiv, hull) != hull) {
        throw Error("internal: transitive hull does not absorb the equivalence");
    }
    const Relation closed_preorder = union_of(closed, equiv);
    const Relation collapsed = quotient(closed_preorder, s);
    const PartialOrder quotient_order{collapsed};
    std::optional<std::pair<int, int>> lifted;
    if (forced) {
        lifted = std::make_pair(s.block_of(forced->first), s.block_of(forced->second));
    }
    const Relation perfect = szpilrajn_extend(quotient_order, lifted);
    // Pull block ranks back to elements.
    const TotalPreorder on_blocks{perfect};
    std::vector<std::vector<int>> ranked(on_blocks.ranked_blocks().size());
    for (int i = 0; i < p.size(); ++i) {
        ranked[static_cast<std::size_t>(on_blocks.rank_of(s.block_of(i)))].push_back(i);
    }
    return TotalPreorder(p.universe(), std::move(ranked));
}

Relation intersection_of_s_extensions(const PartialOrder& p, const Partition& s) {
    const Relation comp = sandwich_composition(p.rel(), s);
    if (!is_acyclic(comp)) {
        const std::vector<int> cycle = shortest_cycle(comp);
        throw NoExtensionError("no extension with the prescribed symmetric part: S.P.S has cycle " +
                                   cycle_text(p.universe(), cycle),
                               cycle);
    }
    return union_of(s.to_relation(), transitive_hull(comp));
}

UniquenessReport is_unique_extension(const PartialOrder& p, const Partition& s) {
    UniquenessReport report;
    report.in_sigma_star = in_sigma_star(p.rel(), s);
    if (!report.in_sigma_star) {
        report.diagnosis = "not in sigma-star: no extension exists";
        return report;
    }
    report.maximal_in_sigma_star = is_maximal_in(p, s, Collection::SigmaStar);
    report.hull_negatively_transitive =
        is_negatively_transitive(transitive_hull(sandwich_composition(p.rel(), s)));
    report.unique = report.maximal_in_sigma_star && report.hull_negatively_transitive;
    if (report.unique) {
        report.diagnosis = "unique";
    } else {
        std::string why;
        if (!report.maximal_in_sigma_star) {
            why = "not maximal in sigma-star";
        }
        if (!report.hull_negatively_transitive) {
            if (!why.empty()) {
                why += "; ";
            }
            why += "hull of S.P.S not negatively transitive";
        }
        report.diagnosis = why;
    }
    return report;
}

std::optional<TotalPreorder> closed_form_unique_extension(const PartialOrder& p,
                                                          const Partition& s) {
    if (!in_sigma_star(p.rel(), s)) {
        return std::nullopt;
    }
    if (!is_maximal_in(p, s, Collection::Sigma)) {
        return std::nullopt;
    }
    const Relation comp = sandwich_composition(p.rel(), s);
    return TotalPreorder(union_of(s.to_relation(), comp));
}

}  // namespace ordext

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordext/orders.hpp"
#include "ordext/sigma.hpp"

namespace ordext {

struct ExtensionReport {
    bool exists = false;
    std::optional<TotalPreorder> witness;
    std::optional<Relation> intersection;
    std::optional<bool> unique;
    /// Cycle x1..xm in S.P.S witnessing nonexistence; every consecutive pair
    /// and the wrap-around pair are members of the composition.
    std::optional<std::vector<int>> certificate;
};

struct UniquenessReport {
    bool unique = false;
    bool in_sigma_star = false;
    bool maximal_in_sigma_star = false;
    bool hull_negatively_transitive = false;
    std::string diagnosis;  // "unique" or the failing clauses
};

inline constexpr int kLinearExtensionCap = 8;

/// Perfect (total, antisymmetric) extension of p. When a forced pair (a,b) of
/// incomparable elements is given the result contains it. Incomparable pairs
/// are absorbed in lexicographic index order, so output is deterministic.
Relation szpilrajn_extend(const PartialOrder& p,
                          std::optional<std::pair<int, int>> forced = std::nullopt);

/// All linear extensions of p via backtracking over topological orders, in
/// lexicographic order of the underlying permutations.
std::vector<Relation> enumerate_perfect_extensions(const PartialOrder& p,
                                                   int cap = kLinearExtensionCap);

/// Intersection of all perfect extensions; equals p itself.
Relation dushnik_miller_intersection(const PartialOrder& p, int cap = kLinearExtensionCap);

/// compose(P,S) == P and compose(S,P) == P for P the strict part of `preorder`.
bool absorption_condition(const Relation& preorder, const Partition& s);

/// s's relation lies within equipotency(preorder). For preorders this is
/// equivalent to absorption_condition. Throws ValidationError when the
/// argument is not a preorder.
bool within_equipotency(const Relation& preorder, const Partition& s);

/// Existence verdict: an extension with symmetric part s exists iff S.P.S is
/// acyclic. On nonexistence the report carries a shortest witness cycle.
ExtensionReport s_extension_exists(const PartialOrder& p, const Partition& s);

/// A total preorder whose strict part contains p's and whose symmetric part
/// equals s. A forced pair must be incomparable in the closed order
/// E + TH(S.P.S) extended by S. Throws NoExtensionError (with certificate)
/// or PreconditionError.
TotalPreorder s_extend(const PartialOrder& p, const Partition& s,
                       std::optional<std::pair<int, int>> forced = std::nullopt);

/// Closed form S + TH(S.P.S) of the intersection of all extensions with
/// symmetric part s. Throws NoExtensionError when none exists.
Relation intersection_of_s_extensions(const PartialOrder& p, const Partition& s);

/// Uniqueness holds iff s is maximal in SigmaStar and TH(S.P.S) is negatively
/// transitive; the report says which clause failed.
UniquenessReport is_unique_extension(const PartialOrder& p, const Partition& s);

/// When s is in SigmaStar and maximal in Sigma, S + S.P.S is itself the unique
/// extension and is returned without any search; absent otherwise.
std::optional<TotalPreorder> closed_form_unique_extension(const PartialOrder& p,
                                                          const Partition& s);

}  // namespace ordext

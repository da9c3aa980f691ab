#include "ordext/sweep.hpp"

#include <string>

#include "ordext/extension.hpp"
#include "ordext/oracle.hpp"
#include "ordext/problem_file.hpp"

namespace ordext {

namespace {

constexpr std::size_t kMaxReproducers = 8;

std::string reproducer(const PartialOrder& p, const Partition* s) {
    ProblemFile pf{p.universe(), p,
                   s ? std::optional<Partition>(*s) : std::nullopt, std::nullopt};
    return serialize_problem(pf);
}

struct Recorder {
    SweepReport& report;
    const PartialOrder& p;
    const Partition* s = nullptr;
    std::size_t* level_failures = nullptr;

    void check(bool ok, const char* invariant) {
        if (ok) {
            return;
        }
        ++report.total_failures;
        ++report.failures_by_invariant[invariant];
        if (level_failures) {
            ++*level_failures;
        }
        if (report.reproducers.size() < kMaxReproducers) {
            report.reproducers.push_back({invariant, reproducer(p, s)});
        }
    }
};

bool is_valid_s_extension(const PartialOrder& p, const Partition& s, const TotalPreorder& t) {
    return asymmetric_part(p.rel()).subset_of(asymmetric_part(t.rel())) &&
           symmetric_part(t.rel()) == s.to_relation();
}

}  // namespace

SweepReport run_theorem_sweep(int max_n) {
    if (max_n > kTheoremSweepCap) {
        throw CapacityError("theorem sweep capped at n <= " + std::to_string(kTheoremSweepCap));
    }
    SweepReport report;
    for (int n = 1; n <= max_n; ++n) {
        const UniversePtr u = letters(n);
        const auto posets = oracle::enumerate_partial_orders(u);
        const auto partitions = enumerate_partitions(u);
        const auto all_weak_orders = oracle::enumerate_total_preorders(u);

        SweepLevelStats level;
        level.n = n;
        level.partial_orders = posets.size();
        level.partitions = partitions.size();

        for (const PartialOrder& p : posets) {
            const Relation indiff = indifference(p.rel());

            // Membership in both collections is downward-closed under
            // refinement; the discrete partition always admits an extension.
            for (const Partition& fine : partitions) {
                Recorder rec{report, p, &fine, &level.failures};
                for (const Partition& coarse : partitions) {
                    if (!fine.refines(coarse)) {
                        continue;
                    }
                    rec.check(!in_sigma(p, coarse) || in_sigma(p, fine),
                              "membership_downward_closed");
                    rec.check(!in_sigma_star(p, coarse) || in_sigma_star(p, fine),
                              "membership_downward_closed");
                }
            }
            {
                Recorder rec{report, p, nullptr, &level.failures};
                rec.check(in_sigma_star(p, Partition::discrete(u)), "discrete_always_member");
            }

            for (const Partition& s : partitions) {
                ++level.cases;
                Recorder rec{report, p, &s, &level.failures};
                const Relation equiv = s.to_relation();

                const auto extensions = oracle::filter_s_extensions(p, s, all_weak_orders);
                const ExtensionReport existence = s_extension_exists(p, s);

                rec.check(existence.exists == !extensions.empty(), "existence_matches_oracle");
                rec.check(extensions.empty() || equiv.subset_of(indiff),
                          "indifference_necessity");
                rec.check(in_sigma(p, s) == equiv.subset_of(indiff), "sigma_iff_indifference");
                rec.check(within_equipotency(p.rel(), s) == absorption_condition(p.rel(), s),
                          "absorption_iff_equipotency");
                rec.check(!in_sigma_star(p, s) || in_sigma(p, s), "sigma_star_within_sigma");
                if (!existence.exists) {
                    rec.check(existence.certificate &&
                                  certificate_is_cycle(sandwich_composition(p.rel(), s),
                                                       *existence.certificate),
                              "certificate_replays");
                }

                if (in_sigma(p, s)) {
                    bool coarser_member = false;
                    for (const Partition& other : partitions) {
                        if (other != s && s.refines(other) && in_sigma(p, other)) {
                            coarser_member = true;
                        }
                    }
                    rec.check(is_maximal_in(p, s, Collection::Sigma) == !coarser_member,
                              "maximality_merge_shortcut");
                }
                if (in_sigma_star(p, s)) {
                    bool coarser_member = false;
                    for (const Partition& other : partitions) {
                        if (other != s && s.refines(other) && in_sigma_star(p, other)) {
                            coarser_member = true;
                        }
                    }
                    rec.check(is_maximal_in(p, s, Collection::SigmaStar) == !coarser_member,
                              "maximality_merge_shortcut");
                }

                if (existence.exists) {
                    const Relation enumerated = oracle::oracle_intersection(extensions);
                    const Relation formula = intersection_of_s_extensions(p, s);
                    const Relation hull = transitive_hull(sandwich_composition(p.rel(), s));
                    rec.check(formula == enumerated, "intersection_formula_matches_oracle");
                    rec.check(symmetric_part(formula) == equiv, "intersection_symmetric_part");
                    rec.check(asymmetric_part(formula) == hull, "intersection_asymmetric_part");
                    if (absorption_condition(p.rel(), s)) {
                        rec.check(enumerated == union_of(p.rel(), equiv),
                                  "absorption_intersection_is_order_union");
                    }
                    const TotalPreorder witness = s_extend(p, s);
                    rec.check(is_valid_s_extension(p, s, witness), "witness_is_valid_extension");
                    bool found = false;
                    for (const TotalPreorder& t : extensions) {
                        found = found || t == witness;
                    }
                    rec.check(found, "witness_is_valid_extension");
                    // Any pair left incomparable by the closure and the
                    // equivalence can be forced into a witness.
                    const Relation closed = union_of(
                        union_of(Relation::identity(p.universe()), hull), equiv);
                    for (int a = 0; a < n; ++a) {
                        for (int b = 0; b < n; ++b) {
                            if (closed.contains(a, b) || closed.contains(b, a)) {
                                continue;
                            }
                            const TotalPreorder chosen = s_extend(p, s, std::make_pair(a, b));
                            rec.check(is_valid_s_extension(p, s, chosen) &&
                                          chosen.rel().contains(a, b) &&
                                          !chosen.rel().contains(b, a),
                                      "forced_witness_valid");
                        }
                    }
                }

                const UniquenessReport unique = is_unique_extension(p, s);
                const auto closed_form = closed_form_unique_extension(p, s);
                rec.check(unique.unique == (extensions.size() == 1),
                          "uniqueness_matches_oracle");
                // The closed form is present exactly when S + S.P.S itself is
                // the unique extension; a unique extension can still exist
                // whose strict part is the hull proper.
                const Relation comp = sandwich_composition(p.rel(), s);
                const bool closed_is_the_extension =
                    extensions.size() == 1 &&
                    union_of(equiv, comp) == extensions.front().rel();
                rec.check(closed_form.has_value() == closed_is_the_extension,
                          "closed_form_characterization");
                if (closed_form) {
                    rec.check(*closed_form == extensions.front(), "closed_form_contract");
                    rec.check(is_transitive(comp), "closed_form_contract");
                    bool trichotomy = true;
                    for (int x = 0; x < n; ++x) {
                        for (int y = 0; y < n; ++y) {
                            const int hits = (equiv.contains(x, y) ? 1 : 0) +
                                             (comp.contains(x, y) ? 1 : 0) +
                                             (comp.contains(y, x) ? 1 : 0);
                            trichotomy = trichotomy && hits == 1;
                        }
                    }
                    rec.check(trichotomy, "closed_form_contract");
                }
            }
        }
        report.total_cases += level.cases;
        report.levels.push_back(level);
    }
    return report;
}

SuiteReport run_szpilrajn_suite(int max_n) {
    if (max_n > kSuiteCap) {
        throw CapacityError("suite capped at n <= " + std::to_string(kSuiteCap));
    }
    SuiteReport report;
    for (int n = 1; n <= max_n; ++n) {
        const UniversePtr u = letters(n);
        for (const PartialOrder& p : oracle::enumerate_partial_orders(u)) {
            ++report.orders;
            const auto record = [&](bool ok) {
                ++report.cases;
                if (!ok) {
                    ++report.failures;
                    if (report.reproducers.size() < kMaxReproducers) {
                        report.reproducers.push_back(
                            {"szpilrajn_extension", reproducer(p, nullptr)});
                    }
                }
            };
            const Relation plain = szpilrajn_extend(p);
            record(is_partial_order(plain) && is_total(plain) && p.rel().subset_of(plain));
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (a == b || p.rel().contains(a, b) || p.rel().contains(b, a)) {
                        continue;
                    }
                    const Relation ext = szpilrajn_extend(p, std::make_pair(a, b));
                    record(is_partial_order(ext) && is_total(ext) && p.rel().subset_of(ext) &&
                           ext.contains(a, b));
                }
            }
        }
    }
    return report;
}

SuiteReport run_perfect_intersection_suite(int max_n) {
    if (max_n > kSuiteCap) {
        throw CapacityError("suite capped at n <= " + std::to_string(kSuiteCap));
    }
    SuiteReport report;
    for (int n = 1; n <= max_n; ++n) {
        const UniversePtr u = letters(n);
        for (const PartialOrder& p : oracle::enumerate_partial_orders(u)) {
            ++report.orders;
            ++report.cases;
            if (dushnik_miller_intersection(p) != p.rel()) {
                ++report.failures;
                if (report.reproducers.size() < kMaxReproducers) {
                    report.reproducers.push_back(
                        {"perfect_intersection_identity", reproducer(p, nullptr)});
                }
            }
        }
    }
    return report;
}

}  // namespace ordext

#include "ordext/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "ordext/extension.hpp"
#include "ordext/oracle.hpp"
#include "ordext/problem_file.hpp"
#include "ordext/sweep.hpp"

namespace ordext::cli {

namespace {

class Emitter {
public:
    Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void kv(std::string_view key, std::string_view value) {
        out_ << key << (format_ == Format::Machine ? "=" : ": ") << value << '\n';
    }
    void kv(std::string_view key, const std::string& value) {
        kv(key, std::string_view(value));
    }
    void kv(std::string_view key, const char* value) { kv(key, std::string_view(value)); }
    void kv(std::string_view key, bool value) { kv(key, value ? "true" : "false"); }
    void kv(std::string_view key, std::size_t value) { kv(key, std::to_string(value)); }
    bool machine() const { return format_ == Format::Machine; }

private:
    std::ostream& out_;
    Format format_;
};

std::string join_labels(const UniversePtr& u, const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (int i : xs) {
        if (!out.empty()) {
            out += sep;
        }
        out += u->label(i);
    }
    return out;
}

void emit_certificate(Emitter& em, const UniversePtr& u, const std::vector<int>& cycle) {
    if (em.machine()) {
        em.kv("certificate", join_labels(u, cycle, ","));
    } else {
        std::string text = join_labels(u, cycle, " -> ");
        text += " -> " + u->label(cycle.front());
        em.kv("certificate", text);
    }
}

void emit_relation(Emitter& em, std::string_view key_prefix, const Relation& rel) {
    em.kv(std::string(key_prefix) + "_reflexive", is_reflexive(rel));
    em.kv(std::string(key_prefix) + "_pairs", render_pairs(rel));
}

Partition partition_or_discrete(const ProblemFile& pf) {
    return pf.partition ? *pf.partition : Partition::discrete(pf.universe);
}

// Maps the error taxonomy onto the exit-code contract shared by every
// subcommand.
int guarded(const Options& opts, std::ostream& out, std::ostream& err,
            const std::function<int(Emitter&)>& body) {
    Emitter em(out, opts.format);
    // Humans read stderr; machine consumers get a stdout record as well.
    try {
        return body(em);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        if (em.machine()) {
            em.kv("error", e.what());
        }
        return kExitCapacity;
    } catch (const NoExtensionError& e) {
        err << "error: " << e.what() << '\n';
        em.kv("exists", false);
        if (em.machine()) {
            em.kv("error", e.what());
        }
        return kExitDomainNegative;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        if (em.machine()) {
            em.kv("reason", e.what());
        }
        return kExitDomainNegative;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        if (em.machine()) {
            em.kv("error", e.what());
        }
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (em.machine()) {
            em.kv("error", e.what());
        }
        return kExitInputError;
    }
}

}  // namespace

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(opts, out, err, [&](Emitter& em) {
        const ProblemFile pf = load_problem(opts.file);
        if (!pf.partition) {
            throw ValidationError("check requires a partition line");
        }
        const SigmaMembership memb = sigma_membership(pf.order, *pf.partition);
        const ExtensionReport report = s_extension_exists(pf.order, *pf.partition);
        em.kv("in_sigma", memb.in_sigma);
        em.kv("in_sigma_star", memb.in_sigma_star);
        em.kv("maximal_in_sigma", memb.maximal_in_sigma);
        em.kv("maximal_in_sigma_star", memb.maximal_in_sigma_star);
        em.kv("exists", report.exists);
        if (!report.exists) {
            emit_certificate(em, pf.universe, *report.certificate);
            return kExitDomainNegative;
        }
        return kExitOk;
    });
}

int cmd_extend(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(opts, out, err, [&](Emitter& em) {
        const ProblemFile pf = load_problem(opts.file);
        const Partition part = partition_or_discrete(pf);
        const TotalPreorder witness = s_extend(pf.order, part, pf.forced);
        em.kv("exists", true);
        em.kv("blocks", witness.render_blocks(em.machine() ? " " : " < "));
        if (opts.show_intersection) {
            emit_relation(em, "intersection", intersection_of_s_extensions(pf.order, part));
        }
        return kExitOk;
    });
}

int cmd_enumerate(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(opts, out, err, [&](Emitter& em) {
        const ProblemFile pf = load_problem(opts.file);
        std::vector<TotalPreorder> extensions;
        if (pf.partition) {
            em.kv("mode", "s_extensions");
            const auto all = oracle::enumerate_total_preorders(pf.universe);
            extensions = oracle::filter_s_extensions(pf.order, *pf.partition, all);
            if (extensions.empty()) {
                const ExtensionReport report = s_extension_exists(pf.order, *pf.partition);
                em.kv("count", std::size_t{0});
                em.kv("exists", false);
                emit_certificate(em, pf.universe, *report.certificate);
                return kExitDomainNegative;
            }
        } else {
            em.kv("mode", "perfect_extensions");
            for (Relation& chain : enumerate_perfect_extensions(pf.order)) {
                extensions.emplace_back(std::move(chain));
            }
        }
        em.kv("count", extensions.size());
        for (const TotalPreorder& t : extensions) {
            em.kv("extension", t.render_blocks(em.machine() ? " " : " < "));
        }
        return kExitOk;
    });
}

int cmd_intersect(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(opts, out, err, [&](Emitter& em) {
        const ProblemFile pf = load_problem(opts.file);
        const Partition part = partition_or_discrete(pf);
        const Relation formula = intersection_of_s_extensions(pf.order, part);
        const auto all = oracle::enumerate_total_preorders(pf.universe);
        const auto extensions = oracle::filter_s_extensions(pf.order, part, all);
        const Relation enumerated = oracle::oracle_intersection(extensions);
        emit_relation(em, "intersection", enumerated);
        emit_relation(em, "formula", formula);
        const bool match = enumerated == formula;
        em.kv("formula_match", match ? "PASS" : "FAIL");
        return match ? kExitOk : kExitDomainNegative;
    });
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(opts, out, err, [&](Emitter& em) {
        if (opts.max_n > kSuiteCap) {
            throw CapacityError("verify caps at --max-n " + std::to_string(kSuiteCap) +
                                " (pair sweep at " + std::to_string(kTheoremSweepCap) + ")");
        }
        const int suite_n = opts.max_n;
        const int sweep_n = std::min(opts.max_n, kTheoremSweepCap);

        const SweepReport sweep = run_theorem_sweep(sweep_n);
        for (const SweepLevelStats& level : sweep.levels) {
            em.kv("sweep_n", std::to_string(level.n));
            em.kv("partial_orders", level.partial_orders);
            em.kv("partitions", level.partitions);
            em.kv("cases", level.cases);
            em.kv("failures", level.failures);
        }
        const SuiteReport szp = run_szpilrajn_suite(suite_n);
        em.kv("suite", "szpilrajn_extension");
        em.kv("suite_cases", szp.cases);
        em.kv("suite_failures", szp.failures);
        const SuiteReport dm = run_perfect_intersection_suite(suite_n);
        em.kv("suite", "perfect_intersection_identity");
        em.kv("suite_cases", dm.cases);
        em.kv("suite_failures", dm.failures);

        const std::size_t failures = sweep.total_failures + szp.failures + dm.failures;
        em.kv("total_cases", sweep.total_cases + szp.cases + dm.cases);
        em.kv("result", failures == 0 ? "PASS" : "FAIL");
        if (failures > 0) {
            std::vector<SweepFailure> all = sweep.reproducers;
            all.insert(all.end(), szp.reproducers.begin(), szp.reproducers.end());
            all.insert(all.end(), dm.reproducers.begin(), dm.reproducers.end());
            const std::string path = "ordext-counterexample.txt";
            std::ofstream repro(path);
            repro << "# invariant: " << all.front().invariant << '\n' << all.front().problem;
            em.kv("counterexample", path);
            err << "error: " << failures << " invariant failures; first reproducer in " << path
                << '\n';
            return kExitDomainNegative;
        }
        return kExitOk;
    });
}

}  // namespace ordext::cli

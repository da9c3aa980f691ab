// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected counts are derived from independent arithmetic
// (binomial recurrence, Bell triangle) before the enumerators are trusted.

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ordext/commands.hpp"
#include "ordext/extension.hpp"
#include "ordext/oracle.hpp"
#include "ordext/problem_file.hpp"
#include "ordext/sweep.hpp"

using namespace ordext;
using namespace ordext::testing;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<unsigned long long> ordered_bell_by_recurrence(int up_to) {
    std::vector<std::vector<unsigned long long>> choose(
        static_cast<std::size_t>(up_to + 1),
        std::vector<unsigned long long>(static_cast<std::size_t>(up_to + 1), 0));
    for (int n = 0; n <= up_to; ++n) {
        choose[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : 0);
        }
    }
    std::vector<unsigned long long> a(static_cast<std::size_t>(up_to + 1), 0);
    a[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        for (int k = 1; k <= n; ++k) {
            a[n] += choose[n][k] * a[n - k];
        }
    }
    return a;
}

std::vector<unsigned long long> bell_by_triangle(int up_to) {
    std::vector<unsigned long long> bells{1};
    std::vector<unsigned long long> row{1};
    for (int n = 2; n <= up_to; ++n) {
        std::vector<unsigned long long> next{row.back()};
        for (std::size_t k = 0; k < row.size(); ++k) {
            next.push_back(next.back() + row[k]);
        }
        row = std::move(next);
        bells.push_back(row.back());
    }
    return bells;
}

std::multimap<std::string, std::string> run_check_machine(const std::string& path, int& code) {
    cli::Options opts;
    opts.file = path;
    opts.format = cli::Format::Machine;
    std::ostringstream out;
    std::ostringstream err;
    code = cli::cmd_check(opts, out, err);
    std::multimap<std::string, std::string> records;
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) {
            records.emplace(line.substr(0, eq), line.substr(eq + 1));
        }
    }
    return records;
}

std::string value_of(const std::multimap<std::string, std::string>& records,
                     const std::string& key) {
    const auto it = records.find(key);
    return it == records.end() ? std::string("<missing>") : it->second;
}

void criterion_1_szpilrajn() {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport suite = run_szpilrajn_suite(5);
    const double elapsed = seconds_since(start);
    const bool pass = suite.failures == 0 && suite.orders == 1 + 3 + 19 + 219 + 4231 &&
                      elapsed < 30.0;
    std::ostringstream detail;
    detail << suite.orders << " orders, " << suite.cases << " cases, " << suite.failures
           << " failures, " << elapsed << "s < 30s";
    report(1, "szpilrajn extensions contain the order and the forced pair, n <= 5",
           pass, detail.str());
}

void criterion_2_perfect_intersection() {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport suite = run_perfect_intersection_suite(5);
    const double elapsed = seconds_since(start);
    const bool pass = suite.failures == 0 && suite.cases == 1 + 3 + 19 + 219 + 4231 &&
                      elapsed < 60.0;
    std::ostringstream detail;
    detail << suite.cases << " orders intersected exactly, " << suite.failures << " failures, "
           << elapsed << "s < 60s";
    report(2, "every order equals the intersection of its perfect extensions, n <= 5",
           pass, detail.str());
}

std::size_t invariant_failures(const SweepReport& sweep, const std::vector<std::string>& keys) {
    std::size_t total = 0;
    for (const std::string& key : keys) {
        const auto it = sweep.failures_by_invariant.find(key);
        if (it != sweep.failures_by_invariant.end()) {
            total += it->second;
        }
    }
    return total;
}

void criteria_3_to_6(const SweepReport& sweep, double sweep_elapsed) {
    const SweepLevelStats* level4 = nullptr;
    for (const SweepLevelStats& level : sweep.levels) {
        if (level.n == 4) {
            level4 = &level;
        }
    }
    const bool counts_ok = level4 != nullptr && level4->partial_orders == 219 &&
                           level4->partitions == 15 && level4->cases == 3285;

    {
        const std::size_t bad = invariant_failures(sweep, {"existence_matches_oracle"});
        std::ostringstream detail;
        detail << (level4 ? level4->cases : 0) << " pairs at n=4 (219 x 15), " << bad
               << " discrepancies, sweep " << sweep_elapsed << "s < 60s";
        report(3, "existence verdict agrees with the oracle filter on every pair",
               counts_ok && bad == 0 && sweep_elapsed < 60.0, detail.str());
    }
    {
        const std::size_t bad = invariant_failures(
            sweep, {"intersection_formula_matches_oracle", "intersection_symmetric_part",
                    "intersection_asymmetric_part"});
        std::ostringstream detail;
        detail << "closed formula vs enumerated intersection plus both parts, " << bad
               << " failures";
        report(4, "intersection formula is exact wherever extensions exist, n <= 4",
               counts_ok && bad == 0, detail.str());
    }
    {
        // Literal three-way assertion: uniqueness analysis == closed-form
        // presence == (oracle count == 1). The first equivalence is a
        // theorem; the second is a conjecture this suite tests empirically,
        // and it is false: with two disjoint strict pairs the closed form
        // S + S.P.S can be absent (S not maximal in Sigma) although exactly
        // one extension exists. The criterion is kept as stated and reports
        // the discrepancy instead of papering over it.
        std::size_t analysis_vs_count = 0;
        std::size_t closed_vs_count = 0;
        std::string example;
        for (int n = 1; n <= 4; ++n) {
            const UniversePtr u = letters(n);
            const auto weak_orders = oracle::enumerate_total_preorders(u);
            for (const PartialOrder& p : oracle::enumerate_partial_orders(u)) {
                for (const Partition& s : enumerate_partitions(u)) {
                    const bool count1 =
                        oracle::filter_s_extensions(p, s, weak_orders).size() == 1;
                    if (is_unique_extension(p, s).unique != count1) {
                        ++analysis_vs_count;
                    }
                    if (closed_form_unique_extension(p, s).has_value() != count1) {
                        ++closed_vs_count;
                        if (example.empty()) {
                            example = "order {" + render_pairs(asymmetric_part(p.rel())) +
                                      "} with partition " + s.render();
                        }
                    }
                }
            }
        }
        std::ostringstream detail;
        detail << "analysis-vs-count " << analysis_vs_count << ", closed-form-vs-count "
               << closed_vs_count << " disagreements";
        if (!example.empty()) {
            detail << "; first: " << example;
        }
        report(5, "uniqueness analysis, closed form and oracle count agree three ways, n <= 4",
               counts_ok && analysis_vs_count == 0 && closed_vs_count == 0, detail.str());
    }
    {
        const std::size_t sweep_bad =
            invariant_failures(sweep, {"sigma_iff_indifference", "absorption_iff_equipotency"});
        std::size_t random_bad = 0;
        std::mt19937 rng(0xC0FFEE);
        const UniversePtr u6 = letters(6);
        for (int trial = 0; trial < 10000; ++trial) {
            const Relation pre = random_preorder(rng, u6);
            const Partition s = random_partition(rng, u6);
            if (within_equipotency(pre, s) != absorption_condition(pre, s)) {
                ++random_bad;
            }
            if (in_sigma(pre, s) != s.to_relation().subset_of(indifference(pre))) {
                ++random_bad;
            }
        }
        std::ostringstream detail;
        detail << "exhaustive n <= 4 plus 10000 random preorder/partition pairs at n=6, "
               << (sweep_bad + random_bad) << " discrepancies";
        report(6, "equipotency and indifference characterizations hold",
               counts_ok && sweep_bad == 0 && random_bad == 0, detail.str());
    }
}

void criterion_7_counts() {
    const auto fubini = ordered_bell_by_recurrence(5);
    const auto bells = bell_by_triangle(5);
    const unsigned long long expected_weak[] = {1, 3, 13, 75, 541};
    const unsigned long long expected_bell[] = {1, 2, 5, 15, 52};
    bool pass = true;
    for (int n = 1; n <= 5; ++n) {
        pass = pass && fubini[static_cast<std::size_t>(n)] == expected_weak[n - 1];
        pass = pass && bells[static_cast<std::size_t>(n - 1)] == expected_bell[n - 1];
        pass = pass &&
               oracle::enumerate_total_preorders(letters(n)).size() == expected_weak[n - 1];
        pass = pass && enumerate_partitions(letters(n)).size() == expected_bell[n - 1];
    }
    report(7, "enumerator counts equal the ordered-Bell and Bell sequences", pass,
           "weak orders 1,3,13,75,541; partitions 1,2,5,15,52 for n = 1..5");
}

void criterion_8_fixtures() {
    const std::string dir = ORDEXT_FIXTURE_DIR;
    bool pass = true;
    std::ostringstream detail;

    {
        const std::string path = dir + "/sigma_not_star.txt";
        int code = 0;
        const auto records = run_check_machine(path, code);
        const ProblemFile pf = load_problem(path);
        const Relation comp = sandwich_composition(pf.order.rel(), *pf.partition);
        std::vector<int> cycle;
        std::istringstream certificate(value_of(records, "certificate"));
        std::string label;
        while (std::getline(certificate, label, ',')) {
            if (const auto idx = pf.universe->index_of(label)) {
                cycle.push_back(*idx);
            }
        }
        const bool good = code == cli::kExitDomainNegative &&
                          value_of(records, "in_sigma") == "true" &&
                          value_of(records, "in_sigma_star") == "false" &&
                          value_of(records, "exists") == "false" && cycle.size() == 2 &&
                          certificate_is_cycle(comp, cycle);
        pass = pass && good;
        detail << "sigma-minus-sigma-star fixture " << (good ? "ok" : "FAILED");
    }
    {
        const std::string path = dir + "/nonunique.txt";
        int code = 0;
        const auto records = run_check_machine(path, code);
        const ProblemFile pf = load_problem(path);
        const auto all = oracle::enumerate_total_preorders(pf.universe);
        const std::size_t count =
            oracle::filter_s_extensions(pf.order, *pf.partition, all).size();
        const bool good = code == cli::kExitOk && value_of(records, "exists") == "true" &&
                          value_of(records, "maximal_in_sigma_star") == "false" &&
                          !is_unique_extension(pf.order, *pf.partition).unique && count == 2;
        pass = pass && good;
        detail << "; existing-but-nonunique fixture " << (good ? "ok" : "FAILED");
    }
    report(8, "stored separation fixtures reproduce their verdicts and certificates", pass,
           detail.str());
}

}  // namespace

int main() {
    criterion_1_szpilrajn();
    criterion_2_perfect_intersection();

    const auto sweep_start = std::chrono::steady_clock::now();
    const SweepReport sweep = run_theorem_sweep(4);
    const double sweep_elapsed = seconds_since(sweep_start);
    criteria_3_to_6(sweep, sweep_elapsed);

    criterion_7_counts();
    criterion_8_fixtures();

    if (g_failures == 0) {
        std::printf("all 8 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}

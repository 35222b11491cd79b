// Acceptance gate. Each criterion prints exactly one verdict line
// "criterion NN <title> PASS|FAIL"; indented lines above it carry the
// measured numbers. Exit status is the number of failed criteria.
//
// Usage: acceptance [N ...]   runs the listed criteria (default: all).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ppsm2m/core.hpp"
#include "ppsm2m/decomposition.hpp"
#include "ppsm2m/engine.hpp"
#include "ppsm2m/metrics.hpp"
#include "ppsm2m/pps.hpp"
#include "ppsm2m/problems.hpp"
#include "ppsm2m/ranking.hpp"
#include "ppsm2m/record_io.hpp"
#include "ppsm2m/stats.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace ppsm2m;
namespace ts = ppsm2m::testsupport;

namespace {

constexpr std::uint64_t kSeed = 20260815;

Comparison pure_dominance(const Individual& a, const Individual& b) {
    if (dominates(a.f, b.f)) return Comparison::FirstBetter;
    if (dominates(b.f, a.f)) return Comparison::SecondBetter;
    return Comparison::Incomparable;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

/// IGD of a record's reported front; empty fronts count as infinitely bad.
double record_igd(const RunRecord& rec, const std::vector<Vec>& reference) {
    if (rec.final_front.empty()) return std::numeric_limits<double>::infinity();
    std::vector<Vec> attained;
    attained.reserve(rec.final_front.size());
    for (const Individual& ind : rec.final_front) attained.push_back(ind.f);
    return igd(attained, reference);
}

// --- criterion 1: sorting against the repeated-peeling oracle --------

bool criterion_sort_oracle() {
    std::mt19937_64 rng(kSeed);
    std::size_t mismatches = 0;
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Individual> pop = ts::random_population(rng, 200, m, 0.3);
            std::vector<Individual> work = pop;
            FrontPartition parts = nondominated_sort(std::span<Individual>(work), pure_dominance);
            auto expect = ts::peel_sort(pop, pure_dominance);
            std::vector<std::vector<std::size_t>> got = parts.fronts;
            for (auto& f : got) std::sort(f.begin(), f.end());
            for (auto& f : expect) std::sort(f.begin(), f.end());
            if (got != expect) ++mismatches;
        }
    }
    std::printf("  100 populations of 200 points, %zu front mismatches\n", mismatches);
    return mismatches == 0;
}

// --- criterion 2: allocation against the argmin oracle ---------------

bool criterion_allocation_oracle() {
    std::mt19937_64 rng(kSeed);
    std::size_t mismatches = 0;
    const std::size_t shapes[2][2] = {{2, 10}, {3, 15}};
    for (const auto& shape : shapes) {
        const std::size_t m = shape[0];
        const std::size_t K = shape[1];
        DirectionSet dirs = uniform_directions(m, K);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<Individual> pop = ts::random_population(rng, 300, m, 0.2);
            NormalizationState norm;
            norm.reset(m);
            norm.update(std::span<const Individual>(pop));
            SubpopulationSet sub = allocate_subpops(pop, dirs, norm);
            std::vector<std::size_t> expect = ts::brute_force_allocation(pop, dirs, norm.fbar);

            bool ok = sub.total() == pop.size() && sub.buckets.size() == K;
            std::vector<std::vector<Vec>> got(K);
            std::vector<std::vector<Vec>> want(K);
            for (std::size_t b = 0; ok && b < K; ++b)
                for (const Individual& ind : sub.buckets[b]) got[b].push_back(ind.f);
            for (std::size_t i = 0; ok && i < pop.size(); ++i) want[expect[i]].push_back(pop[i].f);
            for (std::size_t b = 0; ok && b < K; ++b) {
                std::sort(got[b].begin(), got[b].end());
                std::sort(want[b].begin(), want[b].end());
                ok = got[b] == want[b];
            }
            if (!ok) ++mismatches;
        }
    }
    std::printf("  200 populations of 300 points, %zu bucket mismatches\n", mismatches);
    return mismatches == 0;
}

// --- criterion 3: metric oracles --------------------------------------

bool criterion_metric_oracles() {
    std::mt19937_64 rng(kSeed);
    bool ok = true;

    std::size_t igd_mismatches = 0;
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t m = rep % 2 ? 3 : 2;
        std::vector<Vec> attained;
        std::vector<Vec> reference;
        for (int i = 0; i < 300; ++i) attained.push_back(ts::random_vec(rng, m, 0.0, 5.0));
        for (int i = 0; i < 200; ++i) reference.push_back(ts::random_vec(rng, m, 0.0, 5.0));
        if (igd(attained, reference) != ts::igd_double_loop(attained, reference)) ++igd_mismatches;
    }
    std::printf("  igd: 50 random instances, %zu mismatches\n", igd_mismatches);
    ok = ok && igd_mismatches == 0;

    // Two-objective staircase areas worked out by hand, strip by strip.
    const Vec ref2{1.2, 1.2};
    struct HandCase {
        std::vector<Vec> pts;
        double expected;
    };
    const HandCase cases[] = {
        {{}, 0.0},
        {{{0.5, 0.5}}, (1.2 - 0.5) * (1.2 - 0.5)},
        {{{0.5, 0.5}, {0.6, 0.6}}, (1.2 - 0.5) * (1.2 - 0.5)},
        {{{0.5, 1.2}, {1.3, 0.1}}, 0.0},
        {{{0.3, 0.8}, {0.5, 0.5}}, (1.2 - 0.3) * (1.2 - 0.8) + (1.2 - 0.5) * (0.8 - 0.5)},
        {{{0.1, 1.0}, {0.4, 0.7}, {0.9, 0.2}},
         (1.2 - 0.1) * (1.2 - 1.0) + (1.2 - 0.4) * (1.0 - 0.7) + (1.2 - 0.9) * (0.7 - 0.2)},
    };
    std::size_t hv2_mismatches = 0;
    for (const HandCase& c : cases)
        if (hv(c.pts, ref2) != c.expected) ++hv2_mismatches;
    std::printf("  hv 2d: %zu hand cases, %zu mismatches\n", std::size(cases), hv2_mismatches);
    ok = ok && hv2_mismatches == 0;

    const Vec ref3{1.2, 1.2, 1.2};
    double worst_rel = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<Vec> pts;
        for (int i = 0; i < 50; ++i) pts.push_back(ts::random_vec(rng, 3, 0.0, 1.0));
        double exact = hv(pts, ref3);
        double sampled = ts::monte_carlo_hv(pts, ref3, 10'000'000, kSeed + rep);
        worst_rel = std::max(worst_rel, std::fabs(exact - sampled) / exact);
    }
    std::printf("  hv 3d: worst deviation from 1e7-sample estimate %.4f%%\n", 100.0 * worst_rel);
    return ok && worst_rel <= 0.01;
}

// --- criterion 4: epsilon schedule branches ---------------------------

bool criterion_epsilon_schedule() {
    constexpr double kTol = 1e-12;
    const double eps0 = 2.0;
    double worst = 0.0;

    // Low feasibility throughout: geometric decay by 0.9 per step.
    {
        EpsilonSchedule sched;
        sched.eps0 = eps0;
        sched.current = eps0;
        double expect = eps0;
        for (std::size_t k = 1; k < 800; ++k) {
            expect *= 1.0 - 0.1;
            worst = std::max(worst, std::fabs(update_epsilon_level(sched, k, 0.5) - expect));
        }
    }
    // High feasibility throughout: polynomial descent to zero at k = 800.
    {
        EpsilonSchedule sched;
        sched.eps0 = eps0;
        sched.current = eps0;
        for (std::size_t k = 1; k < 800; ++k) {
            double expect = eps0 * std::pow(1.0 - static_cast<double>(k) / 800.0, 2.0);
            worst = std::max(worst, std::fabs(update_epsilon_level(sched, k, 0.99) - expect));
        }
    }
    // Past the cutoff the level is exactly zero, whatever rf does.
    bool zero_ok = true;
    {
        EpsilonSchedule sched;
        sched.eps0 = eps0;
        sched.current = eps0;
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t k = 800; k <= 1000; ++k)
            zero_ok = zero_ok && update_epsilon_level(sched, k, unit(rng)) == 0.0;
    }
    // Mixed rf sequence against an independently tracked recurrence.
    {
        EpsilonSchedule sched;
        sched.eps0 = eps0;
        sched.current = eps0;
        std::mt19937_64 rng(kSeed + 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double expect = eps0;
        for (std::size_t k = 1; k <= 1000; ++k) {
            double rf = unit(rng);
            if (k >= 800)
                expect = 0.0;
            else if (rf < 0.95)
                expect = (1.0 - 0.1) * expect;
            else
                expect = eps0 * std::pow(1.0 - static_cast<double>(k) / 800.0, 2.0);
            worst = std::max(worst, std::fabs(update_epsilon_level(sched, k, rf) - expect));
        }
    }
    std::printf("  worst branch deviation %.3e, hard zero past cutoff: %s\n", worst,
                zero_ok ? "yes" : "no");
    return worst <= kTol && zero_ok;
}

// --- criterion 5: push-to-pull switch on the unconstrained problem ----

bool criterion_switch_behavior() {
    const Problem& problem = find_problem("SPEC-CMOP0");
    std::size_t passed = 0;
    std::string gens;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.problem = "SPEC-CMOP0";
        rc.algorithm = Algorithm::PpsM2m;
        rc.seed = seed;
        RunRecord rec = run_algorithm(rc, problem);

        std::size_t push_to_pull = 0;
        std::size_t pull_to_push = 0;
        std::size_t first_pull = kNoSwitch;
        for (std::size_t i = 1; i < rec.trace.size(); ++i) {
            if (rec.trace[i - 1].push_stage && !rec.trace[i].push_stage) {
                ++push_to_pull;
                if (first_pull == kNoSwitch) first_pull = rec.trace[i].gen;
            }
            if (!rec.trace[i - 1].push_stage && rec.trace[i].push_stage) ++pull_to_push;
        }
        bool ok = rec.switch_generation != kNoSwitch && push_to_pull == 1 && pull_to_push == 0 &&
                  rec.switch_generation == first_pull &&
                  rec.switch_generation <= rc.max_generations;
        // The recorded rate at the switch must have met the trigger.
        for (const TraceRow& row : rec.trace)
            if (row.gen == rec.switch_generation) ok = ok && row.change_rate <= 1e-3;
        if (ok) ++passed;
        gens += (seed > 1 ? " " : "") +
                (rec.switch_generation == kNoSwitch ? std::string("never")
                                                    : std::to_string(rec.switch_generation));
    }
    std::printf("  switch generations per seed: %s\n", gens.c_str());
    std::printf("  %zu/10 seeds switched exactly once\n", passed);
    return passed == 10;
}

// --- criterion 6: synthetic end-to-end convergence --------------------

bool criterion_synthetic_end_to_end() {
    const Problem& problem = find_problem("SPEC-CMOP1");
    const std::vector<Vec> reference = pf_reference_set(problem, 2000).points;
    const double gap_half_width = std::sqrt(0.02);

    std::size_t igd_passed = 0;
    std::size_t gap_violations = 0;
    double worst_igd = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.problem = "SPEC-CMOP1";
        rc.algorithm = Algorithm::PpsM2m;
        rc.seed = seed;
        rc.population = 100;
        rc.subregions = 10;
        rc.max_generations = 500;
        RunRecord rec = run_algorithm(rc, problem);
        double value = record_igd(rec, reference);
        worst_igd = std::max(worst_igd, value);
        if (value > 5e-3) continue;
        ++igd_passed;
        for (const Individual& ind : rec.final_front)
            if (std::fabs(ind.f[0] - 0.5) < gap_half_width - 1e-9) ++gap_violations;
    }
    std::printf("  igd <= 5e-3 on %zu/10 seeds (worst %.3e)\n", igd_passed, worst_igd);
    std::printf("  solutions inside the excluded band: %zu\n", gap_violations);
    return igd_passed >= 9 && gap_violations == 0;
}

// --- criterion 7: full-scale benchmark ordering ------------------------

bool criterion_full_scale_benchmark() {
    // Reference mean IGD values the push-pull runs must stay within 5x
    // of, one per rotated-ellipse problem.
    const std::pair<const char*, double> targets[] = {
        {"LIR-CMOP5", 8.343e-3},
        {"LIR-CMOP6", 9.631e-3},
        {"LIR-CMOP7", 9.335e-3},
        {"LIR-CMOP8", 9.351e-3},
    };
    bool ok = true;
    for (const auto& [name, target] : targets) {
        const Problem& problem = find_problem(name);
        const std::vector<Vec> reference = pf_reference_set(problem, 2000).points;
        std::vector<double> pps_igd, nsga_igd, m2m_igd;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            RunConfig rc;
            rc.problem = name;
            rc.seed = seed;
            rc.algorithm = Algorithm::PpsM2m;
            pps_igd.push_back(record_igd(run_algorithm(rc, problem), reference));
            rc.algorithm = Algorithm::Nsga2Cdp;
            nsga_igd.push_back(record_igd(run_algorithm(rc, problem), reference));
            rc.algorithm = Algorithm::M2mCdp;
            m2m_igd.push_back(record_igd(run_algorithm(rc, problem), reference));
        }
        double pps_mean = mean(pps_igd);
        double nsga_med = median(nsga_igd);
        double m2m_med = median(m2m_igd);
        bool row_ok = pps_mean <= 5.0 * target && pps_mean < nsga_med && pps_mean < m2m_med;
        std::printf("  %s: push-pull mean %.3e (bound %.3e), medians nsga %.3e m2m %.3e%s\n", name,
                    pps_mean, 5.0 * target, nsga_med, m2m_med, row_ok ? "" : "  <-- out of band");
        std::fflush(stdout);
        ok = ok && row_ok;
    }

    // The plain dominance baseline must land in the expected error band
    // on the narrow-ribbon problem: bad, but not arbitrarily so.
    {
        const Problem& problem = find_problem("LIR-CMOP2");
        const std::vector<Vec> reference = pf_reference_set(problem, 2000).points;
        std::vector<double> igds;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            RunConfig rc;
            rc.problem = "LIR-CMOP2";
            rc.algorithm = Algorithm::Nsga2Cdp;
            rc.seed = seed;
            igds.push_back(record_igd(run_algorithm(rc, problem), reference));
        }
        double value = mean(igds);
        bool band_ok = value >= 3.03e-1 / 5.0 && value <= 3.03e-1 * 5.0;
        std::printf("  LIR-CMOP2: nsga mean %.3e, band [%.3e, %.3e]%s\n", value, 3.03e-1 / 5.0,
                    3.03e-1 * 5.0, band_ok ? "" : "  <-- out of band");
        ok = ok && band_ok;
    }
    return ok;
}

// --- criterion 8: rank and p-value reproduction ------------------------

bool criterion_statistics_reproduction() {
    // Mean metric tables of the seven-algorithm comparison across the
    // fourteen benchmark problems; columns in a fixed algorithm order.
    const double igd_table[14][7] = {
        {2.341e-2, 3.106e-2, 5.74e-2, 1.11e-1, 1.81e-2, 1.26e-1, 3.23e-1},
        {1.604e-2, 2.742e-2, 5.39e-2, 1.43e-1, 9.63e-3, 1.40e-1, 3.03e-1},
        {3.330e-2, 4.383e-2, 8.81e-2, 2.61e-1, 1.78e-1, 2.80e-1, 4.08e-1},
        {3.738e-2, 4.187e-2, 6.51e-2, 2.53e-1, 1.95e-1, 2.59e-1, 3.85e-1},
        {8.343e-3, 2.941e-1, 1.15, 1.05, 1.04, 1.10, 5.53e-1},
        {9.631e-3, 5.356e-1, 1.27, 1.09, 9.43e-1, 1.31, 5.74e-1},
        {9.335e-3, 5.237e-1, 1.51, 1.46, 1.08, 1.56, 2.38e-1},
        {9.351e-3, 7.924e-1, 1.62, 1.38, 1.01, 1.58, 6.02e-1},
        {2.886e-1, 4.599e-1, 4.90e-1, 4.81e-1, 4.85e-1, 4.81e-1, 6.44e-1},
        {1.894e-2, 2.291e-1, 2.13e-1, 2.16e-1, 1.92e-1, 2.13e-1, 5.97e-1},
        {1.194e-2, 4.400e-1, 3.47e-1, 3.42e-1, 3.16e-1, 3.81e-1, 4.87e-1},
        {8.071e-2, 1.488e-1, 2.52e-1, 2.69e-1, 2.06e-1, 2.50, 5.80e-1},
        {1.858e-1, 9.751e-1, 1.20, 1.21, 8.86e-1, 1.18, 1.39e1},
        {1.759e-1, 9.429e-1, 1.02, 1.11, 1.03, 1.25, 1.36e1},
    };
    const double hv_table[14][7] = {
        {1.003, 9.897e-1, 9.590e-1, 7.540e-1, 9.960e-1, 7.410e-1, 5.160e-1},
        {1.334, 1.321, 1.280, 1.060, 1.340, 1.070, 8.240e-1},
        {8.499e-1, 8.407e-1, 7.980e-1, 4.860e-1, 5.910e-1, 4.710e-1, 4.080e-1},
        {1.059, 1.051, 1.020, 7.350e-1, 8.150e-1, 7.310e-1, 6.170e-1},
        {1.451, 1.084, 4.300e-2, 1.630e-1, 1.820e-1, 9.720e-2, 9.390e-1},
        {1.119, 5.337e-1, 5.400e-2, 1.880e-1, 3.020e-1, 2.330e-2, 4.130e-1},
        {3.002, 2.021, 3.030e-1, 3.740e-1, 9.880e-1, 2.040e-1, 2.400},
        {3.002, 1.498, 1.060e-1, 5.170e-1, 1.100, 1.660e-1, 1.900},
        {3.287, 2.826, 2.740, 2.770, 2.750, 2.770, 2.060},
        {3.212, 2.845, 2.890, 2.880, 2.930, 2.890, 2.040},
        {4.359, 3.115, 3.340, 3.350, 3.380, 3.240, 3.110},
        {5.449, 5.221, 4.880, 4.830, 5.030, 4.890, 3.280},
        {4.856, 1.518, 4.550e-1, 4.630e-1, 1.890, 6.290e-1, 0.0},
        {5.425, 1.744, 1.330, 8.810e-1, 1.270, 1.800e-1, 0.0},
    };
    const double igd_expected[7] = {1.1429, 2.9286, 4.6786, 4.8929, 3.1429, 5.5714, 5.6429};
    const double hv_expected[7] = {1.0714, 2.9286, 4.8214, 4.8929, 3.2143, 5.3571, 5.7143};

    auto to_matrix = [](const double (&table)[14][7]) {
        std::vector<std::vector<double>> m(14, std::vector<double>(7));
        for (int r = 0; r < 14; ++r)
            for (int c = 0; c < 7; ++c) m[r][c] = table[r][c];
        return m;
    };
    std::vector<double> igd_ranks = friedman_mean_ranks(to_matrix(igd_table), true);
    std::vector<double> hv_ranks = friedman_mean_ranks(to_matrix(hv_table), false);
    double worst = 0.0;
    for (int c = 0; c < 7; ++c) {
        worst = std::max(worst, std::fabs(igd_ranks[c] - igd_expected[c]));
        worst = std::max(worst, std::fabs(hv_ranks[c] - hv_expected[c]));
    }
    std::printf("  lead ranks %.4f (igd) / %.4f (hv), worst column deviation %.2e\n", igd_ranks[0],
                hv_ranks[0], worst);
    bool ranks_ok = worst <= 5e-5;

    // Step-down adjustment of the pairwise p-values, checked on the two
    // rows whose reference values survive four-decimal rounding intact.
    std::vector<double> adjusted =
        holm_adjust({0.0, 0.0, 0.000004, 0.000015, 0.014306, 0.028739});
    bool holm_ok = std::fabs(adjusted[4] - 0.028612) <= 1e-9 &&
                   std::fabs(adjusted[5] - 0.028739) <= 1e-9;
    std::printf("  adjusted p-values %.6f / %.6f\n", adjusted[4], adjusted[5]);
    return ranks_ok && holm_ok;
}

// --- criterion 9: determinism ------------------------------------------

bool criterion_determinism() {
    std::size_t mismatches = 0;
    std::size_t pairs = 0;
    for (const char* name : {"SPEC-CMOP1", "LIR-CMOP5"}) {
        const Problem& problem = find_problem(name);
        for (Algorithm a : {Algorithm::PpsM2m, Algorithm::Nsga2Cdp, Algorithm::M2mCdp}) {
            RunConfig rc;
            rc.problem = name;
            rc.algorithm = a;
            rc.seed = 77;
            rc.population = 40;
            rc.subregions = 4;
            rc.max_generations = 50;
            rc.tc = 40;
            rc.window = 5;
            std::string first = serialize_run_record(run_algorithm(rc, problem));
            std::string second = serialize_run_record(run_algorithm(rc, problem));
            ++pairs;
            if (first != second) ++mismatches;
        }
    }
    std::printf("  %zu replayed runs, %zu byte mismatches\n", pairs, mismatches);
    return mismatches == 0;
}

// --- criterion 10: property suites at full depth ------------------------

bool criterion_property_suites() {
    std::size_t failures = 0;
    std::size_t count = 0;
    for (const auto& prop : ts::all_properties()) {
        ++count;
        std::string failure = ts::run_property(prop, 1000, kSeed);
        if (!failure.empty()) {
            ++failures;
            std::printf("  %s\n", failure.c_str());
            std::fflush(stdout);
        }
    }
    std::printf("  %zu properties x 1000 cases, %zu failures\n", count, failures);
    return failures == 0;
}

struct Criterion {
    int number;
    const char* title;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "nondominated sort matches peeling oracle", criterion_sort_oracle},
    {2, "subregion allocation matches brute force", criterion_allocation_oracle},
    {3, "igd and hv match independent oracles", criterion_metric_oracles},
    {4, "epsilon schedule reproduces all three branches", criterion_epsilon_schedule},
    {5, "push stage switches exactly once when unconstrained", criterion_switch_behavior},
    {6, "synthetic end-to-end run reaches the banked front", criterion_synthetic_end_to_end},
    {7, "full-scale benchmark ordering and error bands", criterion_full_scale_benchmark},
    {8, "friedman ranks and holm adjustment match references", criterion_statistics_reproduction},
    {9, "seeded runs serialize to identical bytes", criterion_determinism},
    {10, "randomized property suites at one thousand cases", criterion_property_suites},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        int n = std::atoi(argv[i]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [criterion numbers 1-10]\n", argv[0]);
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (const Criterion& c : kCriteria) selected.push_back(c.number);

    int failed = 0;
    for (int n : selected) {
        const Criterion& c = kCriteria[n - 1];
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& ex) {
            std::printf("  error: %s\n", ex.what());
        }
        std::printf("criterion %02d %s %s\n", c.number, c.title, pass ? "PASS" : "FAIL");
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    return failed;
}

#ifndef PPSM2M_ENGINE_HPP
#define PPSM2M_ENGINE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ppsm2m/core.hpp"
#include "ppsm2m/decomposition.hpp"
#include "ppsm2m/operators.hpp"

namespace ppsm2m {

enum class Algorithm { PpsM2m, Nsga2Cdp, M2mCdp };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

/// Everything a single run needs. subregions = 0 picks the
/// conventional count for the problem's objective count (10 for two
/// objectives, 15 for three).
struct RunConfig {
    std::string problem;
    Algorithm algorithm = Algorithm::PpsM2m;
    std::uint64_t seed = 1;
    std::size_t population = 300;        // N
    std::size_t subregions = 0;          // K
    std::size_t max_generations = 1000;  // T_max
    double eps_dominance = 0.01;         // slack e of the merged phase
    double tau = 0.1;
    double alpha = 0.95;
    double cp = 2.0;
    std::size_t tc = 800;
    bool tc_from_switch = false;  // count the schedule clock from the switch
    double theta_fraction = 0.05;
    bool seed_eps_from_quantile = false;  // phi_theta seeding instead of max violation
    std::size_t window = 20;              // l
    double switch_threshold = 1e-3;
    double bounds_delta = 1e-6;
    OperatorParams operators;

    std::size_t resolved_subregions(std::size_t num_objectives) const;
    /// Operator settings with the Auto family resolved for this run's
    /// algorithm: difference-vector variation for the subregion
    /// engines, SBX for the global-sort baseline.
    OperatorParams resolved_operators() const;
    /// Throws unless population divides evenly into the subregions.
    void validate(std::size_t num_objectives) const;
};

struct TraceRow {
    std::size_t gen = 0;
    bool push_stage = false;
    double change_rate = 0.0;  // r_k
    double eps_level = 0.0;    // epsilon(k)
    double feasible_ratio = 0.0;
};

constexpr std::size_t kNoSwitch = static_cast<std::size_t>(-1);

struct RunRecord {
    RunConfig config;
    std::string build = "unknown";
    std::size_t evaluations = 0;
    std::size_t switch_generation = kNoSwitch;
    std::vector<TraceRow> trace;
    std::vector<Individual> final_population;
    std::vector<Individual> final_front;  // feasible non-dominated subset
};

/// Evaluation funnel of a run: clips into bounds, counts evaluations,
/// and keeps the running objective minima used for allocation.
struct EvalContext {
    const Problem& problem;
    NormalizationState norm;
    std::size_t evaluations = 0;

    explicit EvalContext(const Problem& p);
    Individual make(Vec x);
};

/// One child per bucket member: mates come from the same bucket, or
/// from the merged pool when the bucket is too small for distinct
/// mates (fewer than two for SBX, fewer than three for the
/// difference-vector family).
std::vector<Individual> generate_offspring(std::span<const Individual> bucket,
                                           std::span<const Individual> pool,
                                           const RunConfig& config, EvalContext& ctx,
                                           std::mt19937_64& rng);

/// Push-stage truncation: constraints ignored entirely.
std::vector<Individual> push_select(std::vector<Individual> bucket, std::size_t target);

/// Pull-stage truncation within one bucket at the given relaxation.
std::vector<Individual> pull_select(std::vector<Individual> bucket, std::size_t target,
                                    double eps_level);

/// Relation of the final merged phase: epsilon-CDP layering whose
/// objective comparison is eps_dominates with slack e. Mutual
/// epsilon-domination resolves to the better converged point (plain
/// dominance, then smaller objective sum beyond rounding noise), so
/// thinning removes depth rather than spread; equally converged points
/// are ordered by distance to the corner of a grid cell a quarter
/// coarser than the slack, which settles one representative per cell
/// at a spacing the relation never contests. Remaining exact ties fall
/// back to lexicographic order and violation to keep the relation
/// antisymmetric.
Comparison merged_pull_compare(const Individual& a, const Individual& b, double eps_level, double e);

/// Whole-population selection of the merged pull phase.
std::vector<Individual> merged_pull_select(std::vector<Individual> pool, std::size_t target,
                                           double eps_level, double e);

/// Feasible non-dominated subset, the reporting output of every run.
std::vector<Individual> feasible_front(std::span<const Individual> pop);

RunRecord pps_m2m_run(const RunConfig& config, const Problem& problem);
RunRecord nsga2_cdp_run(const RunConfig& config, const Problem& problem);
RunRecord m2m_cdp_run(const RunConfig& config, const Problem& problem);

/// Dispatch on config.algorithm; resolves the problem by name.
RunRecord run_algorithm(const RunConfig& config);
RunRecord run_algorithm(const RunConfig& config, const Problem& problem);

}  // namespace ppsm2m

#endif  // PPSM2M_ENGINE_HPP

#include "ppsm2m/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ppsm2m/pps.hpp"
#include "ppsm2m/problems.hpp"
#include "ppsm2m/ranking.hpp"

#ifndef PPSM2M_BUILD_ID
#define PPSM2M_BUILD_ID "unknown"
#endif

namespace ppsm2m {

namespace {

double feasible_ratio(std::span<const Individual> pop) {
    if (pop.empty()) return 0.0;
    std::size_t count = 0;
    for (const Individual& ind : pop)
        if (ind.feasible()) ++count;
    return static_cast<double>(count) / static_cast<double>(pop.size());
}

Vec random_point(const Problem& problem, std::mt19937_64& rng) {
    Vec x(problem.dimension, 0.0);
    for (std::size_t i = 0; i < problem.dimension; ++i) {
        std::uniform_real_distribution<double> dist(problem.bounds[i].first, problem.bounds[i].second);
        x[i] = dist(rng);
    }
    return x;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::PpsM2m: return "PPS-M2M";
    case Algorithm::Nsga2Cdp: return "NSGA-II-CDP";
    case Algorithm::M2mCdp: return "M2M-CDP";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "PPS-M2M") return Algorithm::PpsM2m;
    if (name == "NSGA-II-CDP") return Algorithm::Nsga2Cdp;
    if (name == "M2M-CDP") return Algorithm::M2mCdp;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "'; known: PPS-M2M, NSGA-II-CDP, M2M-CDP");
}

std::size_t RunConfig::resolved_subregions(std::size_t num_objectives) const {
    if (subregions != 0) return subregions;
    return num_objectives >= 3 ? 15 : 10;
}

OperatorParams RunConfig::resolved_operators() const {
    OperatorParams ops = operators;
    if (ops.family == VariationFamily::Auto)
        ops.family = algorithm == Algorithm::Nsga2Cdp ? VariationFamily::SbxPolynomial
                                                      : VariationFamily::DifferentialEvolution;
    return ops;
}

void RunConfig::validate(std::size_t num_objectives) const {
    if (population == 0) throw std::invalid_argument("config: population must be positive");
    std::size_t K = resolved_subregions(num_objectives);
    if (population % K != 0)
        throw std::invalid_argument("config: population " + std::to_string(population) +
                                    " is not divisible into " + std::to_string(K) + " subregions");
    if (!(eps_dominance >= 0.0)) throw std::invalid_argument("config: eps_dominance must be >= 0");
    if (tau < 0.0 || tau > 1.0) throw std::invalid_argument("config: tau must lie in [0,1]");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("config: alpha must lie in [0,1]");
    if (theta_fraction < 0.0 || theta_fraction > 1.0)
        throw std::invalid_argument("config: theta_fraction must lie in [0,1]");
    if (tc == 0) throw std::invalid_argument("config: tc must be positive");
    if (window == 0) throw std::invalid_argument("config: window must be positive");
}

EvalContext::EvalContext(const Problem& p) : problem(p) { norm.reset(p.num_objectives); }

Individual EvalContext::make(Vec x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::clamp(x[i], problem.bounds[i].first, problem.bounds[i].second);
    Individual ind = evaluate(problem, std::move(x));
    ++evaluations;
    norm.update(ind.f);
    return ind;
}

std::vector<Individual> generate_offspring(std::span<const Individual> bucket,
                                           std::span<const Individual> pool,
                                           const RunConfig& config, EvalContext& ctx,
                                           std::mt19937_64& rng) {
    std::vector<Individual> offspring;
    offspring.reserve(bucket.size());
    const auto bounds = std::span<const std::pair<double, double>>(ctx.problem.bounds);
    const OperatorParams ops = config.resolved_operators();
    for (std::size_t i = 0; i < bucket.size(); ++i) {
        const Individual& x = bucket[i];
        Vec child;
        if (ops.family == VariationFamily::DifferentialEvolution) {
            const Individual* a = &x;
            const Individual* b = &x;
            if (bucket.size() >= 3) {
                std::uniform_int_distribution<std::size_t> p1(0, bucket.size() - 2);
                std::size_t j = p1(rng);
                if (j >= i) ++j;
                std::uniform_int_distribution<std::size_t> p2(0, bucket.size() - 3);
                std::size_t k = p2(rng);
                if (k >= std::min(i, j)) ++k;
                if (k >= std::max(i, j)) ++k;
                a = &bucket[j];
                b = &bucket[k];
            } else if (pool.size() >= 2) {
                std::uniform_int_distribution<std::size_t> p1(0, pool.size() - 1);
                std::size_t j = p1(rng);
                std::uniform_int_distribution<std::size_t> p2(0, pool.size() - 2);
                std::size_t k = p2(rng);
                if (k >= j) ++k;
                a = &pool[j];
                b = &pool[k];
            }
            child = de_variation(x.x, a->x, b->x, bounds, ops, rng);
        } else {
            const Individual* y = nullptr;
            if (bucket.size() >= 2) {
                std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 2);
                std::size_t j = pick(rng);
                if (j >= i) ++j;
                y = &bucket[j];
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                y = &pool[pick(rng)];
            }
            child = sbx_crossover(x.x, y->x, bounds, ops, rng);
        }
        child = polynomial_mutation(std::move(child), bounds, ops, rng);
        offspring.push_back(ctx.make(std::move(child)));
    }
    return offspring;
}

std::vector<Individual> push_select(std::vector<Individual> bucket, std::size_t target) {
    return truncate_by_rank_crowding(std::move(bucket), target,
                                     [](const Individual& a, const Individual& b) {
                                         if (dominates(a.f, b.f)) return Comparison::FirstBetter;
                                         if (dominates(b.f, a.f)) return Comparison::SecondBetter;
                                         return Comparison::Incomparable;
                                     });
}

std::vector<Individual> pull_select(std::vector<Individual> bucket, std::size_t target,
                                    double eps_level) {
    return truncate_by_rank_crowding(std::move(bucket), target,
                                     [eps_level](const Individual& a, const Individual& b) {
                                         return eps_cdp_compare(a, b, eps_level);
                                     });
}

namespace {

// Squared distance from f to the lower corner of the slack box
// containing it (side length e per objective).
double box_corner_gap2(const Vec& f, double e) {
    if (e <= 0.0) return 0.0;
    double d2 = 0.0;
    for (double v : f) {
        double off = v - e * std::floor(v / e);
        d2 += off * off;
    }
    return d2;
}

}  // namespace

Comparison merged_pull_compare(const Individual& a, const Individual& b, double eps_level,
                               double e) {
    const bool fa = a.violation <= eps_level;
    const bool fb = b.violation <= eps_level;
    if (fa != fb) return fa ? Comparison::FirstBetter : Comparison::SecondBetter;
    if (!fa) {
        if (a.violation < b.violation) return Comparison::FirstBetter;
        if (b.violation < a.violation) return Comparison::SecondBetter;
        return Comparison::Incomparable;
    }
    const bool ab = eps_dominates(a.f, b.f, e);
    const bool ba = eps_dominates(b.f, a.f, e);
    if (ab && !ba) return Comparison::FirstBetter;
    if (ba && !ab) return Comparison::SecondBetter;
    if (ab && ba) {
        // Mutual slack-domination: the pair lies within one slack
        // neighbourhood, so thin it to one representative. Better
        // convergence decides first: plain dominance, then the
        // objective sum compared beyond rounding noise (on an exactly
        // converged front the sum is constant up to an ulp or two, and
        // ordering by that noise would thin the front at random).
        // Among equally converged points the one nearer the lower
        // corner of its grid cell wins. The grid is a quarter coarser
        // than the slack so neighbouring cell optima sit strictly
        // outside each other's slack radius; representatives settle
        // one per cell at a spacing the relation never contests, the
        // stable one-occupant-per-box shape of an epsilon archive. A
        // grid equal to the slack would put that equilibrium exactly
        // on the mutual-domination boundary, where rounding decides
        // which neighbour kills which and the front keeps tearing
        // double-width holes. Unlike a positional tie-break (which
        // chains across a dense front and ranks whole regions behind
        // one end) the cell preference is periodic, so it cannot
        // drain coverage.
        if (dominates(a.f, b.f)) return Comparison::FirstBetter;
        if (dominates(b.f, a.f)) return Comparison::SecondBetter;
        const double sa = std::accumulate(a.f.begin(), a.f.end(), 0.0);
        const double sb = std::accumulate(b.f.begin(), b.f.end(), 0.0);
        const double stol = 8.0 * std::numeric_limits<double>::epsilon() *
                            std::max(std::abs(sa), std::abs(sb));
        if (sa < sb - stol) return Comparison::FirstBetter;
        if (sb < sa - stol) return Comparison::SecondBetter;
        const double grid = 1.25 * e;
        const double da = box_corner_gap2(a.f, grid);
        const double db = box_corner_gap2(b.f, grid);
        if (da < db) return Comparison::FirstBetter;
        if (db < da) return Comparison::SecondBetter;
        if (lex_less(a.f, b.f)) return Comparison::FirstBetter;
        if (lex_less(b.f, a.f)) return Comparison::SecondBetter;
        if (a.violation < b.violation) return Comparison::FirstBetter;
        if (b.violation < a.violation) return Comparison::SecondBetter;
    }
    return Comparison::Incomparable;
}

std::vector<Individual> merged_pull_select(std::vector<Individual> pool, std::size_t target,
                                           double eps_level, double e) {
    // Exact clones are mutually incomparable under any antisymmetric
    // relation, so bound-clamped offspring would pile copies into the
    // first front and crowd the rest of the front out. Select over
    // distinct individuals and pad with copies only when the pool
    // lacks variety.
    std::vector<Individual> distinct;
    distinct.reserve(pool.size());
    for (Individual& ind : pool) {
        bool clone = false;
        for (const Individual& kept : distinct) {
            if (kept.f == ind.f && kept.x == ind.x && kept.violation == ind.violation) {
                clone = true;
                break;
            }
        }
        if (!clone) distinct.push_back(std::move(ind));
    }
    std::vector<Individual> kept =
        truncate_by_rank_crowding(std::move(distinct), target,
                                  [eps_level, e](const Individual& a, const Individual& b) {
                                      return merged_pull_compare(a, b, eps_level, e);
                                  });
    for (std::size_t i = 0; kept.size() < target; ++i) kept.push_back(kept[i]);
    return kept;
}

std::vector<Individual> feasible_front(std::span<const Individual> pop) {
    std::vector<Individual> feas;
    for (const Individual& ind : pop)
        if (ind.feasible()) feas.push_back(ind);
    std::vector<Individual> front;
    for (std::size_t i = 0; i < feas.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < feas.size() && !beaten; ++j)
            if (j != i && dominates(feas[j].f, feas[i].f)) beaten = true;
        if (!beaten) front.push_back(feas[i]);
    }
    return front;
}

namespace {

// Shared Alg.-4 loop. PPS mode runs push/pull with the epsilon
// schedule and the final merged phase; plain mode keeps CDP selection
// in every bucket for the whole run.
RunRecord m2m_loop(const RunConfig& config, const Problem& problem, bool pps_mode) {
    config.validate(problem.num_objectives);
    const std::size_t N = config.population;
    const std::size_t K = config.resolved_subregions(problem.num_objectives);
    const std::size_t S = N / K;

    RunRecord rec;
    rec.config = config;
    rec.build = PPSM2M_BUILD_ID;

    std::mt19937_64 rng(config.seed);
    EvalContext ctx(problem);
    DirectionSet dirs = uniform_directions(problem.num_objectives, K);

    std::vector<Individual> initial;
    initial.reserve(N);
    for (std::size_t i = 0; i < N; ++i) initial.push_back(ctx.make(random_point(problem, rng)));

    SubpopulationSet subs = allocate_subpops(initial, dirs, ctx.norm, S);
    std::vector<Individual> population = subs.flatten();

    BoundsHistory history{config.window, config.bounds_delta, {}};
    update_bounds(history, initial);

    StageFlag stage{pps_mode, config.switch_threshold, 1.0};
    EpsilonSchedule sched{0.0,       config.tau,            config.alpha, config.cp,
                          config.tc, config.theta_fraction, 0.0};
    double eps_level = 0.0;
    rec.trace.push_back({0, stage.push_stage, 1.0, eps_level, feasible_ratio(initial)});

    for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
        std::vector<Individual> merged = population;
        merged.reserve(2 * N);
        for (const auto& bucket : subs.buckets) {
            std::vector<Individual> kids = generate_offspring(bucket, population, config, ctx, rng);
            merged.insert(merged.end(), std::make_move_iterator(kids.begin()),
                          std::make_move_iterator(kids.end()));
        }

        const double rf = feasible_ratio(merged);
        stage.change_rate = compute_change_rate(history);

        if (pps_mode) {
            std::size_t k_eff = config.tc_from_switch
                                    ? (rec.switch_generation == kNoSwitch ? 0 : gen - rec.switch_generation)
                                    : gen;
            if (should_switch(stage, stage.change_rate)) {
                stage.push_stage = false;
                rec.switch_generation = gen;
                sched.eps0 = config.seed_eps_from_quantile
                                 ? seed_epsilon_quantile(initial, config.theta_fraction)
                                 : seed_epsilon(merged);
                k_eff = config.tc_from_switch ? 0 : gen;
                sched.current = k_eff >= config.tc ? 0.0 : sched.eps0;
                eps_level = sched.current;
            } else if (!stage.push_stage) {
                eps_level = update_epsilon_level(sched, k_eff, rf);
            }
        }

        const bool merged_phase = pps_mode && !stage.push_stage &&
                                  static_cast<double>(gen) >
                                      0.9 * static_cast<double>(config.max_generations);
        if (merged_phase) {
            population = merged_pull_select(std::move(merged), N, eps_level, config.eps_dominance);
            // Mating buckets still breed |M_k| kids each, so they are
            // re-balanced to S after the global cut: an overfull wedge
            // would otherwise amplify itself every generation and
            // starve offspring coverage everywhere else.
            subs = allocate_subpops(population, dirs, ctx.norm, S);
            for (auto& bucket : subs.buckets) {
                if (bucket.size() > S) {
                    bucket.resize(S);  // allocation preserved selection order: best ranked stay
                } else if (bucket.size() < S) {
                    bucket = fill_bucket(std::move(bucket), population, S, rng);
                }
            }
        } else {
            subs = allocate_subpops(merged, dirs, ctx.norm, S);
            for (auto& bucket : subs.buckets) {
                if (bucket.size() < S) {
                    bucket = fill_bucket(std::move(bucket), merged, S, rng);
                } else if (bucket.size() > S) {
                    bucket = stage.push_stage ? push_select(std::move(bucket), S)
                                              : pull_select(std::move(bucket), S, eps_level);
                }
            }
            population = subs.flatten();
        }

        update_bounds(history, population);
        rec.trace.push_back({gen, stage.push_stage, stage.change_rate, eps_level, rf});
        if (const char* every = std::getenv("PPSM2M_DEBUG_EVERY");
            every && gen % static_cast<std::size_t>(std::atoi(every)) == 0) {
            char path[64];
            std::snprintf(path, sizeof path, "/tmp/pop_gen%05zu.txt", gen);
            FILE* fp = std::fopen(path, "w");
            for (const Individual& ind : population)
                std::fprintf(fp, "%.17g %.17g %.17g %.17g\n", ind.f[0], ind.f[1], ind.violation,
                             ind.x[0]);
            std::fclose(fp);
        }
    }

    rec.final_population = population;
    rec.final_front = feasible_front(rec.final_population);
    rec.evaluations = ctx.evaluations;
    return rec;
}

}  // namespace

RunRecord pps_m2m_run(const RunConfig& config, const Problem& problem) {
    return m2m_loop(config, problem, true);
}

RunRecord m2m_cdp_run(const RunConfig& config, const Problem& problem) {
    return m2m_loop(config, problem, false);
}

RunRecord nsga2_cdp_run(const RunConfig& config, const Problem& problem) {
    config.validate(problem.num_objectives);
    const std::size_t N = config.population;

    RunRecord rec;
    rec.config = config;
    rec.build = PPSM2M_BUILD_ID;

    std::mt19937_64 rng(config.seed);
    EvalContext ctx(problem);
    const auto bounds = std::span<const std::pair<double, double>>(problem.bounds);

    auto cdp = [](const Individual& a, const Individual& b) { return cdp_compare(a, b); };

    std::vector<Individual> pop;
    pop.reserve(N);
    for (std::size_t i = 0; i < N; ++i) pop.push_back(ctx.make(random_point(problem, rng)));
    pop = truncate_by_rank_crowding(std::move(pop), N, cdp);  // annotate rank/crowding

    BoundsHistory history{config.window, config.bounds_delta, {}};
    update_bounds(history, pop);
    rec.trace.push_back({0, false, 1.0, 0.0, feasible_ratio(pop)});

    auto tournament = [&](const std::vector<Individual>& candidates) -> const Individual& {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const Individual& a = candidates[pick(rng)];
        const Individual& b = candidates[pick(rng)];
        if (a.rank != b.rank) return a.rank < b.rank ? a : b;
        return b.crowding > a.crowding ? b : a;
    };

    const OperatorParams ops = config.resolved_operators();
    for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
        std::vector<Individual> combined = pop;
        combined.reserve(2 * N);
        for (std::size_t i = 0; i < N; ++i) {
            const Individual& x = tournament(pop);
            Vec child;
            if (ops.family == VariationFamily::DifferentialEvolution) {
                const Individual& a = tournament(pop);
                const Individual& b = tournament(pop);
                child = de_variation(x.x, a.x, b.x, bounds, ops, rng);
            } else {
                const Individual& y = tournament(pop);
                child = sbx_crossover(x.x, y.x, bounds, ops, rng);
            }
            child = polynomial_mutation(std::move(child), bounds, ops, rng);
            combined.push_back(ctx.make(std::move(child)));
        }
        const double rf = feasible_ratio(combined);
        pop = truncate_by_rank_crowding(std::move(combined), N, cdp);
        update_bounds(history, pop);
        rec.trace.push_back({gen, false, compute_change_rate(history), 0.0, rf});
    }

    rec.final_population = pop;
    rec.final_front = feasible_front(rec.final_population);
    rec.evaluations = ctx.evaluations;
    return rec;
}

RunRecord run_algorithm(const RunConfig& config, const Problem& problem) {
    switch (config.algorithm) {
    case Algorithm::PpsM2m: return pps_m2m_run(config, problem);
    case Algorithm::Nsga2Cdp: return nsga2_cdp_run(config, problem);
    case Algorithm::M2mCdp: return m2m_cdp_run(config, problem);
    }
    throw std::invalid_argument("run_algorithm: unknown algorithm");
}

RunRecord run_algorithm(const RunConfig& config) {
    return run_algorithm(config, find_problem(config.problem));
}

}  // namespace ppsm2m

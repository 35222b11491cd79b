#ifndef PPSM2M_PPS_HPP
#define PPSM2M_PPS_HPP

#include <cstddef>
#include <deque>
#include <span>
#include <utility>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// Sliding window of (ideal, nadir) snapshots used to detect when the
/// unconstrained front has stopped moving. Holds at most window+1
/// entries: generations k-window .. k.
struct BoundsHistory {
    std::size_t window = 20;
    double delta = 1e-6;  // denominator clamp of the change-rate quotients
    std::deque<std::pair<Vec, Vec>> entries;
};

/// Append the population's componentwise objective min/max, evicting
/// entries older than the window.
void update_bounds(BoundsHistory& history, std::span<const Individual> pop);

/// Largest relative drift of ideal or nadir across the window:
/// max_i |b^k_i - b^{k-l}_i| / max(|b^{k-l}_i|, delta) over both bound
/// vectors. Returns 1.0 until the window is full.
double compute_change_rate(const BoundsHistory& history);

/// Push/pull stage indicator. The flip is one-way within a run.
struct StageFlag {
    bool push_stage = true;
    double switch_threshold = 1e-3;
    double change_rate = 1.0;
};

/// True exactly when still pushing and the change rate has settled to
/// the threshold or below.
bool should_switch(const StageFlag& flag, double r_k);

/// Max overall violation across the population; the epsilon level the
/// pull stage starts from.
double seed_epsilon(std::span<const Individual> pop);

/// Alternative seeding: the violation of the top theta-fraction
/// individual when the population is ordered by decreasing violation.
double seed_epsilon_quantile(std::span<const Individual> pop, double theta_fraction);

/// Relaxation level controller for the pull stage.
struct EpsilonSchedule {
    double eps0 = 0.0;   // epsilon(0), seeded at the switch
    double tau = 0.1;    // geometric decay factor while infeasible-heavy
    double alpha = 0.95; // feasible-ratio threshold between the two branches
    double cp = 2.0;     // exponent of the polynomial branch
    std::size_t tc = 800;  // generation after which epsilon is pinned to 0
    double theta_fraction = 0.05;
    double current = 0.0;  // epsilon(k)
};

/// Advance epsilon(k): zero from Tc onward, geometric decay of the
/// previous level while the feasible ratio rf_k is below alpha, and
/// the polynomial profile eps0*(1-k/Tc)^cp otherwise. Stores and
/// returns the new level.
double update_epsilon_level(EpsilonSchedule& sched, std::size_t k, double rf_k);

}  // namespace ppsm2m

#endif  // PPSM2M_PPS_HPP

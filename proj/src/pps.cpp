#include "ppsm2m/pps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ppsm2m {

void update_bounds(BoundsHistory& history, std::span<const Individual> pop) {
    if (pop.empty()) throw std::invalid_argument("update_bounds: population must be non-empty");
    const std::size_t m = pop.front().f.size();
    Vec ideal(m, 0.0), nadir(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        ideal[i] = nadir[i] = pop.front().f[i];
    }
    for (const Individual& ind : pop) {
        for (std::size_t i = 0; i < m; ++i) {
            ideal[i] = std::min(ideal[i], ind.f[i]);
            nadir[i] = std::max(nadir[i], ind.f[i]);
        }
    }
    history.entries.emplace_back(std::move(ideal), std::move(nadir));
    while (history.entries.size() > history.window + 1) history.entries.pop_front();
}

double compute_change_rate(const BoundsHistory& history) {
    if (history.entries.size() < history.window + 1) return 1.0;
    const auto& [z_old, n_old] = history.entries.front();
    const auto& [z_new, n_new] = history.entries.back();
    double rate = 0.0;
    for (std::size_t i = 0; i < z_old.size(); ++i) {
        double rz = std::fabs(z_new[i] - z_old[i]) / std::max(std::fabs(z_old[i]), history.delta);
        double rn = std::fabs(n_new[i] - n_old[i]) / std::max(std::fabs(n_old[i]), history.delta);
        rate = std::max(rate, std::max(rz, rn));
    }
    return rate;
}

bool should_switch(const StageFlag& flag, double r_k) {
    return flag.push_stage && r_k <= flag.switch_threshold;
}

double seed_epsilon(std::span<const Individual> pop) {
    double worst = 0.0;
    for (const Individual& ind : pop) worst = std::max(worst, ind.violation);
    return worst;
}

double seed_epsilon_quantile(std::span<const Individual> pop, double theta_fraction) {
    if (pop.empty()) return 0.0;
    std::vector<double> phis;
    phis.reserve(pop.size());
    for (const Individual& ind : pop) phis.push_back(ind.violation);
    std::sort(phis.begin(), phis.end(), std::greater<double>());
    // The top theta-th individual, 1-based, clamped into range.
    std::size_t idx = static_cast<std::size_t>(std::ceil(theta_fraction * static_cast<double>(pop.size())));
    idx = std::clamp<std::size_t>(idx, 1, phis.size());
    return phis[idx - 1];
}

double update_epsilon_level(EpsilonSchedule& sched, std::size_t k, double rf_k) {
    double next = 0.0;
    if (k < sched.tc) {
        if (rf_k < sched.alpha) {
            next = (1.0 - sched.tau) * sched.current;
        } else {
            double base = 1.0 - static_cast<double>(k) / static_cast<double>(sched.tc);
            next = sched.eps0 * std::pow(base, sched.cp);
        }
    }
    sched.current = std::max(next, 0.0);
    return sched.current;
}

}  // namespace ppsm2m

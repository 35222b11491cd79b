#ifndef PPSM2M_RANKING_HPP
#define PPSM2M_RANKING_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// Fronts as index lists into the population that produced them.
/// Front 0 holds the individuals nothing beats; indices within a front
/// are ascending (input order).
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& f : fronts) n += f.size();
        return n;
    }
};

/// Layered sorting under an arbitrary antisymmetric relation
/// (fast non-dominated sort bookkeeping, one comparison per pair).
/// Writes each individual's rank. If the relation admits cycles the
/// peeling can stall; the remaining individuals (each beaten by some
/// cycle member) are flushed as one final front so the partition is
/// always total.
template <typename Relation>
FrontPartition nondominated_sort(std::span<Individual> pop, Relation&& rel) {
    const std::size_t n = pop.size();
    FrontPartition part;
    if (n == 0) return part;
    for (auto& ind : pop) ind.rank = -1;

    std::vector<std::vector<std::size_t>> beats(n);
    std::vector<std::size_t> beaten_by(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Comparison c = rel(pop[i], pop[j]);
            if (c == Comparison::FirstBetter) {
                beats[i].push_back(j);
                ++beaten_by[j];
            } else if (c == Comparison::SecondBetter) {
                beats[j].push_back(i);
                ++beaten_by[i];
            }
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (beaten_by[i] == 0) current.push_back(i);

    std::size_t assigned = 0;
    int rank = 0;
    while (!current.empty()) {
        for (std::size_t i : current) pop[i].rank = rank;
        assigned += current.size();
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : beats[i])
                if (--beaten_by[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        part.fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    if (assigned < n) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (pop[i].rank < 0) rest.push_back(i);
        for (std::size_t i : rest) pop[i].rank = rank;
        part.fronts.push_back(std::move(rest));
    }
    return part;
}

/// Crowding distance of one front. Per objective the two extremes get
/// +infinity and interior members accumulate the normalized gap of
/// their neighbours; an objective that is constant across the front
/// contributes nothing. Writes the crowding field and returns the
/// values in front order.
inline std::vector<double> crowding_distance(std::span<Individual> pop,
                                             std::span<const std::size_t> front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    const std::size_t m = pop[front[0]].f.size();
    if (n == 1) {
        dist[0] = std::numeric_limits<double>::infinity();
    } else {
        std::vector<std::size_t> order(n);
        for (std::size_t obj = 0; obj < m; ++obj) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return pop[front[a]].f[obj] < pop[front[b]].f[obj];
            });
            const double lo = pop[front[order.front()]].f[obj];
            const double hi = pop[front[order.back()]].f[obj];
            if (hi == lo) continue;
            dist[order.front()] = std::numeric_limits<double>::infinity();
            dist[order.back()] = std::numeric_limits<double>::infinity();
            for (std::size_t k = 1; k + 1 < n; ++k) {
                if (dist[order[k]] == std::numeric_limits<double>::infinity()) continue;
                dist[order[k]] +=
                    (pop[front[order[k + 1]]].f[obj] - pop[front[order[k - 1]]].f[obj]) / (hi - lo);
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) pop[front[k]].crowding = dist[k];
    return dist;
}

/// Convenience overload: the whole span is one front.
inline std::vector<double> crowding_distance(std::span<Individual> front) {
    std::vector<std::size_t> idx(front.size());
    std::iota(idx.begin(), idx.end(), 0);
    return crowding_distance(front, idx);
}

/// NSGA-II environmental truncation under a pluggable relation: whole
/// fronts are admitted while they fit, the splitting front is cut by
/// descending crowding (ties keep input order). Output is ordered by
/// front and fully annotated. Undersized populations come back
/// unchanged; the caller handles filling.
template <typename Relation>
std::vector<Individual> truncate_by_rank_crowding(std::vector<Individual> pop,
                                                  std::size_t target, Relation&& rel) {
    if (pop.size() < target) return pop;
    FrontPartition part = nondominated_sort(std::span<Individual>(pop), rel);
    for (const auto& front : part.fronts) crowding_distance(std::span<Individual>(pop), front);

    std::vector<Individual> out;
    out.reserve(target);
    for (const auto& front : part.fronts) {
        if (out.size() == target) break;
        if (out.size() + front.size() <= target) {
            for (std::size_t i : front) out.push_back(pop[i]);
        } else {
            std::vector<std::size_t> order(front.begin(), front.end());
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return pop[a].crowding > pop[b].crowding;
            });
            order.resize(target - out.size());
            for (std::size_t i : order) out.push_back(pop[i]);
        }
    }
    return out;
}

}  // namespace ppsm2m

#endif  // PPSM2M_RANKING_HPP

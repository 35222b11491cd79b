#include "ppsm2m/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppsm2m {

std::vector<double> friedman_mean_ranks(const std::vector<std::vector<double>>& matrix,
                                        bool lower_is_better) {
    if (matrix.size() < 2) throw std::invalid_argument("friedman_mean_ranks: need at least two problems");
    const std::size_t algos = matrix.front().size();
    if (algos < 2) throw std::invalid_argument("friedman_mean_ranks: need at least two algorithms");

    std::vector<double> sums(algos, 0.0);
    for (const auto& row : matrix) {
        if (row.size() != algos)
            throw std::invalid_argument("friedman_mean_ranks: ragged matrix (missing cells)");
        std::vector<std::size_t> order(algos);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return lower_is_better ? row[a] < row[b] : row[a] > row[b];
        });
        // Equal scores share the average of the rank positions they span.
        std::size_t i = 0;
        while (i < algos) {
            std::size_t j = i;
            while (j + 1 < algos && row[order[j + 1]] == row[order[i]]) ++j;
            double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (std::size_t k = i; k <= j; ++k) sums[order[k]] += avg;
            i = j + 1;
        }
    }
    for (double& s : sums) s /= static_cast<double>(matrix.size());
    return sums;
}

std::vector<double> holm_adjust(const std::vector<double>& p_values) {
    const std::size_t k = p_values.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

    std::vector<double> adjusted(k, 0.0);
    double running = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double p = p_values[order[i]];
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("holm_adjust: p-values must lie in [0,1]");
        double scaled = std::min(1.0, static_cast<double>(k - i) * p);
        running = std::max(running, scaled);
        adjusted[order[i]] = running;
    }
    return adjusted;
}

}  // namespace ppsm2m

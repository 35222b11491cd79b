#ifndef PPSM2M_STATS_HPP
#define PPSM2M_STATS_HPP

#include <vector>

namespace ppsm2m {

/// Friedman mean ranks of a complete problems x algorithms score
/// matrix. Per problem the algorithms are ranked 1..A (ties share the
/// average rank); the return value is the per-algorithm column mean.
/// With lower_is_better = false larger scores rank first.
std::vector<double> friedman_mean_ranks(const std::vector<std::vector<double>>& matrix,
                                        bool lower_is_better);

/// Holm step-down adjustment. Input p-values in any order; the
/// adjusted values come back in the same positions.
std::vector<double> holm_adjust(const std::vector<double>& p_values);

}  // namespace ppsm2m

#endif  // PPSM2M_STATS_HPP

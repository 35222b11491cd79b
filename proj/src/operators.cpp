#include "ppsm2m/operators.hpp"

#include <algorithm>
#include <cmath>

namespace ppsm2m {

namespace {

double clip(double v, const std::pair<double, double>& b) {
    return std::clamp(v, b.first, b.second);
}

}  // namespace

Vec sbx_crossover(std::span<const double> x, std::span<const double> y,
                  std::span<const std::pair<double, double>> bounds,
                  const OperatorParams& params, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const std::size_t n = x.size();
    Vec c1(x.begin(), x.end());
    if (params.p_crossover <= 0.0 || u01(rng) > params.p_crossover) return c1;
    Vec c2(y.begin(), y.end());
    {
        for (std::size_t j = 0; j < n; ++j) {
            if (u01(rng) > 0.5) continue;
            if (std::fabs(x[j] - y[j]) <= 1e-14) continue;
            const double lo = std::min(x[j], y[j]);
            const double hi = std::max(x[j], y[j]);
            const double u = u01(rng);
            const double exponent = 1.0 / (params.eta_crossover + 1.0);
            double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                                   : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
            double a = 0.5 * ((1.0 + beta) * lo + (1.0 - beta) * hi);
            double b = 0.5 * ((1.0 - beta) * lo + (1.0 + beta) * hi);
            if (u01(rng) <= 0.5) std::swap(a, b);
            c1[j] = clip(a, bounds[j]);
            c2[j] = clip(b, bounds[j]);
        }
    }
    return u01(rng) <= 0.5 ? c1 : c2;
}

Vec de_variation(std::span<const double> base, std::span<const double> a,
                 std::span<const double> b,
                 std::span<const std::pair<double, double>> bounds,
                 const OperatorParams& params, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const std::size_t n = base.size();
    Vec child(base.begin(), base.end());
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t forced = pick(rng);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != forced && u01(rng) > params.de_crossover) continue;
        child[j] = clip(base[j] + params.de_scale * (a[j] - b[j]), bounds[j]);
    }
    return child;
}

Vec polynomial_mutation(Vec x, std::span<const std::pair<double, double>> bounds,
                        const OperatorParams& params, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rate = params.mutation_rate(x.size());
    const double exponent = 1.0 / (params.eta_mutation + 1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (u01(rng) > rate) continue;
        const double lo = bounds[j].first;
        const double hi = bounds[j].second;
        const double span = hi - lo;
        const double u = u01(rng);
        double delta;
        if (u < 0.5) {
            const double d1 = (x[j] - lo) / span;
            delta = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, params.eta_mutation + 1.0),
                             exponent) -
                    1.0;
        } else {
            const double d2 = (hi - x[j]) / span;
            delta = 1.0 - std::pow(2.0 * (1.0 - u) +
                                       2.0 * (u - 0.5) * std::pow(1.0 - d2, params.eta_mutation + 1.0),
                                   exponent);
        }
        x[j] = clip(x[j] + delta * span, bounds[j]);
    }
    return x;
}

}  // namespace ppsm2m

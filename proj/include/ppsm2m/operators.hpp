#ifndef PPSM2M_OPERATORS_HPP
#define PPSM2M_OPERATORS_HPP

#include <random>
#include <span>
#include <utility>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// Offspring variation families. Auto resolves per algorithm: the
/// subregion engines use the difference-vector family they were
/// originally designed around, the global-sort baseline keeps SBX.
enum class VariationFamily { Auto, SbxPolynomial, DifferentialEvolution };

/// Genetic-operator settings. p_mutation < 0 means "1/n".
struct OperatorParams {
    VariationFamily family = VariationFamily::Auto;
    double eta_crossover = 20.0;
    double eta_mutation = 20.0;
    double p_crossover = 1.0;
    double p_mutation = -1.0;
    double de_scale = 0.5;      // difference-vector weight F
    double de_crossover = 1.0;  // per-gene trial inheritance rate CR

    double mutation_rate(std::size_t dimension) const {
        return p_mutation < 0.0 ? 1.0 / static_cast<double>(dimension) : p_mutation;
    }
};

/// Simulated binary crossover producing a single child: both SBX
/// children are formed (per-gene spread from the eta_crossover kernel)
/// and one is returned uniformly at random, so the expected child per
/// gene is the parent-pair mean. Without the p_crossover trigger the
/// child is a copy of x. Results are clipped into the bounds.
Vec sbx_crossover(std::span<const double> x, std::span<const double> y,
                  std::span<const std::pair<double, double>> bounds,
                  const OperatorParams& params, std::mt19937_64& rng);

/// Bounded polynomial mutation: each gene moves with probability
/// mutation_rate(n) by a perturbation that cannot leave the bounds.
Vec polynomial_mutation(Vec x, std::span<const std::pair<double, double>> bounds,
                        const OperatorParams& params, std::mt19937_64& rng);

/// Difference-vector variation: trial = base + de_scale * (a - b),
/// inherited gene-wise at rate de_crossover with one gene always taken
/// from the trial. Difference vectors align with the population's own
/// spread, so steps stay coordinated across linked variables where
/// gene-wise recombination would break them apart. Clipped into the
/// bounds.
Vec de_variation(std::span<const double> base, std::span<const double> a,
                 std::span<const double> b,
                 std::span<const std::pair<double, double>> bounds,
                 const OperatorParams& params, std::mt19937_64& rng);

}  // namespace ppsm2m

#endif  // PPSM2M_OPERATORS_HPP

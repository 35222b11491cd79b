#ifndef PPSM2M_TESTS_ORACLES_HPP
#define PPSM2M_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ppsm2m/core.hpp"
#include "ppsm2m/decomposition.hpp"

// Independent reference implementations the tests compare the library
// against. Everything here is written directly from the defining
// formulas, sharing no code with src/.
namespace ppsm2m::testsupport {

Vec random_vec(std::mt19937_64& rng, std::size_t n, double lo, double hi);

/// Random population with the given objective count; a fraction of the
/// individuals get a positive violation.
std::vector<Individual> random_population(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                          double infeasible_fraction = 0.0);

/// Repeated peeling: remove the currently unbeaten set, repeat. The
/// relation beats x when it returns FirstBetter for (y, x).
std::vector<std::vector<std::size_t>> peel_sort(
    std::span<const Individual> pop,
    const std::function<Comparison(const Individual&, const Individual&)>& relation);

/// Per-point argmin of the acute angle between f - fbar and each
/// direction, lowest index on ties; zero vectors land in bucket 0.
std::vector<std::size_t> brute_force_allocation(std::span<const Individual> pop,
                                                const DirectionSet& directions, const Vec& fbar);

double igd_double_loop(const std::vector<Vec>& attained, const std::vector<Vec>& reference);

/// Uniform sampling in the [componentwise-min, ref] box.
double monte_carlo_hv(const std::vector<Vec>& points, const Vec& ref, std::size_t samples,
                      std::uint64_t seed);

/// Second, separately written transcription of the LIR-CMOP formulas.
Evaluation lircmop_reference_eval(int id, const Vec& x);

/// Objective-space feasibility of a reference-front point, using the
/// problem's published constraint conditions (or a constructed
/// preimage where constraints live in decision space).
bool front_point_feasible(const std::string& problem_name, const Vec& f, double tol);

}  // namespace ppsm2m::testsupport

#endif  // PPSM2M_TESTS_ORACLES_HPP

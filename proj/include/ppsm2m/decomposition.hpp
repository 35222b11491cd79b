#ifndef PPSM2M_DECOMPOSITION_HPP
#define PPSM2M_DECOMPOSITION_HPP

#include <cstddef>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// K unit vectors in the non-negative orthant, defining the angular
/// subregions of objective space.
struct DirectionSet {
    std::size_t num_objectives = 0;
    std::vector<Vec> vectors;

    std::size_t size() const { return vectors.size(); }
};

/// Deterministic direction set: quarter-circle angles for two
/// objectives, a simplex lattice projected to the unit sphere for
/// three. More than three objectives is unsupported.
DirectionSet uniform_directions(std::size_t m, std::size_t K);

/// Acute angle in [0, pi/2] between a non-negative vector and a unit
/// direction. A zero vector is defined to have angle 0 to everything.
double acute_angle(std::span<const double> u, std::span<const double> v);

/// Running componentwise minimum of every objective vector seen so far.
struct NormalizationState {
    Vec fbar;

    void reset(std::size_t m);
    void update(std::span<const double> f);
    void update(std::span<const Individual> pop);
    /// f - fbar, the shifted objectives used for angular membership.
    Vec shifted(std::span<const double> f) const;
};

/// The population split into K angular buckets plus the direction set
/// and per-bucket target size that produced it.
struct SubpopulationSet {
    DirectionSet directions;
    std::vector<std::vector<Individual>> buckets;
    std::size_t target_size = 0;

    std::size_t total() const;
    std::vector<Individual> flatten() const;
};

/// Index of the direction with the smallest acute angle to u; ties and
/// the zero vector resolve to the lowest index.
std::size_t nearest_direction(const DirectionSet& dirs, std::span<const double> u);

/// Assign every individual to the bucket whose direction minimizes the
/// acute angle against f - fbar. Buckets partition the input.
SubpopulationSet allocate_subpops(std::span<const Individual> pool, const DirectionSet& dirs,
                                  const NormalizationState& norm, std::size_t target_size = 0);

/// Top the bucket up to `target` members with uniform draws (without
/// replacement) from pool minus the bucket's current members. If the
/// pool is too small the draw falls back to replacement and
/// *with_replacement is set.
std::vector<Individual> fill_bucket(std::vector<Individual> bucket,
                                    std::span<const Individual> pool, std::size_t target,
                                    std::mt19937_64& rng, bool* with_replacement = nullptr);

/// One direction per row, components whitespace-separated.
void write_directions(std::ostream& os, const DirectionSet& dirs);

}  // namespace ppsm2m

#endif  // PPSM2M_DECOMPOSITION_HPP

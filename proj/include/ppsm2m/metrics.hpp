#ifndef PPSM2M_METRICS_HPP
#define PPSM2M_METRICS_HPP

#include <span>
#include <vector>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// Inverted generational distance: mean Euclidean distance from each
/// reference point to its nearest attained point. Empty attained set
/// is an error; lower is better.
double igd(std::span<const Vec> attained, std::span<const Vec> reference);

/// Exact hypervolume dominated by `points` relative to `ref`, for two
/// or three objectives. Points not strictly below the reference in
/// every coordinate contribute nothing; the empty set scores 0.
double hv(std::span<const Vec> points, const Vec& ref);

/// Reference point for hypervolume: componentwise 1.2 * nadir of the
/// true front. With `offset_variant` the nadir is pushed out by a
/// fifth of the ideal-to-nadir span instead: nadir + 0.2*(nadir-ideal).
/// The two coincide when the front's ideal point is the origin.
Vec hv_reference_point(std::span<const Vec> front, bool offset_variant = false);

}  // namespace ppsm2m

#endif  // PPSM2M_METRICS_HPP

#include "ppsm2m/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppsm2m {

namespace {

// Area of the union of boxes [p, ref] for 2-objective points, by a
// left-to-right sweep over the staircase of non-dominated points.
double hv2(std::vector<Vec> pts, double r1, double r2) {
    std::erase_if(pts, [&](const Vec& p) { return p[0] >= r1 || p[1] >= r2; });
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double area = 0.0;
    double top = r2;
    for (const Vec& p : pts) {
        if (p[1] < top) {
            area += (r1 - p[0]) * (top - p[1]);
            top = p[1];
        }
    }
    return area;
}

}  // namespace

double igd(std::span<const Vec> attained, std::span<const Vec> reference) {
    if (attained.empty()) throw std::invalid_argument("igd: attained set must be non-empty");
    if (reference.empty()) throw std::invalid_argument("igd: reference front must be non-empty");
    double total = 0.0;
    for (const Vec& ref : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const Vec& a : attained) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                double diff = a[i] - ref[i];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

double hv(std::span<const Vec> points, const Vec& ref) {
    if (ref.size() == 2) {
        return hv2(std::vector<Vec>(points.begin(), points.end()), ref[0], ref[1]);
    }
    if (ref.size() != 3) throw std::invalid_argument("hv: only two or three objectives supported");

    std::vector<Vec> pts(points.begin(), points.end());
    std::erase_if(pts, [&](const Vec& p) { return p[0] >= ref[0] || p[1] >= ref[1] || p[2] >= ref[2]; });
    if (pts.empty()) return 0.0;
    // Slice along f3: between consecutive levels the dominated area is
    // that of the points at or below the slab.
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<Vec> active;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        active.push_back({pts[i][0], pts[i][1]});
        double top = (i + 1 < pts.size()) ? pts[i + 1][2] : ref[2];
        if (top > pts[i][2]) volume += hv2(active, ref[0], ref[1]) * (top - pts[i][2]);
    }
    return volume;
}

Vec hv_reference_point(std::span<const Vec> front, bool offset_variant) {
    if (front.empty()) throw std::invalid_argument("hv_reference_point: empty reference front");
    const std::size_t m = front.front().size();
    Vec nadir(m, -std::numeric_limits<double>::infinity());
    Vec ideal(m, std::numeric_limits<double>::infinity());
    for (const Vec& p : front) {
        for (std::size_t i = 0; i < m; ++i) {
            nadir[i] = std::max(nadir[i], p[i]);
            ideal[i] = std::min(ideal[i], p[i]);
        }
    }
    Vec ref(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        ref[i] = offset_variant ? nadir[i] + 0.2 * (nadir[i] - ideal[i]) : 1.2 * nadir[i];
    return ref;
}

}  // namespace ppsm2m

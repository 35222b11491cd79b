#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ppsm2m/problems.hpp"

namespace ppsm2m {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShift = 0.7057;
constexpr double kScale = 1.7057;

// Distance components shared by the whole suite: x1 steers the front
// position, odd variables (1-based 3,5,...) track sin(pi/2 x1) and
// even variables track cos(pi/2 x1).
void lir_distances(const Vec& x, double& g1, double& g2) {
    const double s = std::sin(0.5 * kPi * x[0]);
    const double c = std::cos(0.5 * kPi * x[0]);
    g1 = 0.0;
    g2 = 0.0;
    for (std::size_t i = 2; i < x.size(); i += 2) g1 += (x[i] - s) * (x[i] - s);
    for (std::size_t i = 1; i < x.size(); i += 2) g2 += (x[i] - c) * (x[i] - c);
}

// Rotated-ellipse level term of the infeasible-region constraints;
// values >= r lie outside the region.
double ellipse_level(double f1, double f2, double p, double q, double a, double b) {
    constexpr double theta = -0.25 * kPi;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double u = (f1 - p) * ct - (f2 - q) * st;
    const double v = (f1 - p) * st + (f2 - q) * ct;
    return u * u / (a * a) + v * v / (b * b);
}

// Diagonal sine-wave constraint of LIR-CMOP9-12; feasible when >= 0.
double wave_margin(double f1, double f2, double level) {
    constexpr double alpha = 0.25 * kPi;
    const double along = f1 * std::cos(alpha) - f2 * std::sin(alpha);
    return f1 * std::sin(alpha) + f2 * std::cos(alpha) - std::sin(4.0 * kPi * along) - level;
}

struct EllipseSpec {
    double p, q, a, b;
};

// Per-problem objective-space geometry (two-objective instances).
struct Geometry {
    // Base curve (g terms at their feasible minimum), t in [0, 1].
    std::function<double(double)> c1;
    std::function<double(double)> c2;
    // Feasibility margin in objective space; >= 0 means feasible.
    std::function<double(double, double)> margin;
    double scan_extension = 0.0;  // how far past c1(1) the front may reach
};

double band_margin(double g) { return (0.51 - g) * (g - 0.5); }

std::vector<EllipseSpec> ellipses_for(int id) {
    switch (id) {
    case 5: return {{1.6, 1.6, 2.0, 4.0}, {2.5, 2.5, 2.0, 8.0}};
    case 6: return {{1.8, 1.8, 2.0, 8.0}, {2.8, 2.8, 2.0, 8.0}};
    case 7:
    case 8: return {{1.2, 1.2, 2.0, 6.0}, {2.25, 2.25, 2.5, 12.0}, {3.5, 3.5, 2.5, 10.0}};
    case 9: return {{1.4, 1.4, 1.5, 6.0}};
    case 10: return {{1.1, 1.2, 2.0, 4.0}};
    case 11: return {{1.2, 1.2, 1.5, 5.0}};
    case 12: return {{1.6, 1.6, 1.5, 6.0}};
    default: return {};
    }
}

double wave_level_for(int id) {
    switch (id) {
    case 9: return 2.0;
    case 10: return 1.0;
    case 11: return 2.1;
    case 12: return 2.5;
    default: return 0.0;
    }
}

Geometry geometry_for(int id) {
    Geometry geo;
    auto sqrt_c2 = [](double t) { return 1.0 - std::sqrt(t); };
    auto square_c2 = [](double t) { return 1.0 - t * t; };
    switch (id) {
    case 1:
    case 3:
        geo.c1 = [](double t) { return t + 0.5; };
        geo.c2 = [square_c2](double t) { return square_c2(t) + 0.5; };
        break;
    case 2:
    case 4:
        geo.c1 = [](double t) { return t + 0.5; };
        geo.c2 = [sqrt_c2](double t) { return sqrt_c2(t) + 0.5; };
        break;
    default: break;
    }
    switch (id) {
    case 5:
    case 7:
        geo.c1 = [](double t) { return t + kShift; };
        geo.c2 = [sqrt_c2](double t) { return sqrt_c2(t) + kShift; };
        break;
    case 6:
    case 8:
        geo.c1 = [](double t) { return t + kShift; };
        geo.c2 = [square_c2](double t) { return square_c2(t) + kShift; };
        break;
    case 9:
    case 12:
        geo.c1 = [](double t) { return kScale * t; };
        geo.c2 = [square_c2](double t) { return kScale * square_c2(t); };
        break;
    case 10:
    case 11:
        geo.c1 = [](double t) { return kScale * t; };
        geo.c2 = [sqrt_c2](double t) { return kScale * sqrt_c2(t); };
        break;
    default: break;
    }
    std::vector<EllipseSpec> ellipses = ellipses_for(id);
    const double wave = wave_level_for(id);
    const bool has_wave = id >= 9 && id <= 12;
    geo.margin = [ellipses, wave, has_wave](double f1, double f2) {
        double m = std::numeric_limits<double>::infinity();
        for (const EllipseSpec& e : ellipses)
            m = std::min(m, ellipse_level(f1, f2, e.p, e.q, e.a, e.b) - 0.1);
        if (has_wave) m = std::min(m, wave_margin(f1, f2, wave));
        return m;
    };
    geo.scan_extension = (id >= 5 && id <= 8) ? 3.5 : (id >= 9 ? 6.0 : 0.0);
    return geo;
}

// x1 bands where sin(20 pi x1) >= 0.5, intersected with [0, 1].
std::vector<std::pair<double, double>> sine_bands() {
    std::vector<std::pair<double, double>> bands;
    for (int k = 0; k < 10; ++k) {
        double lo = 1.0 / 120.0 + k / 10.0;
        double hi = 5.0 / 120.0 + k / 10.0;
        if (lo < 1.0) bands.emplace_back(lo, std::min(hi, 1.0));
    }
    return bands;
}

// Smallest feasible f2 at or above `base` for the scan column f1, or
// NaN when nothing below the cap is feasible. Returns the feasible end
// of the final bracket so emitted points satisfy the constraints.
double min_feasible_f2(const Geometry& geo, double f1, double base, double cap) {
    if (geo.margin(f1, base) >= 0.0) return base;
    const double step = 1e-3;
    double lo = base;
    double hi = base + step;
    while (hi <= cap && geo.margin(f1, hi) < 0.0) {
        lo = hi;
        hi += step;
    }
    if (hi > cap) return std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (geo.margin(f1, mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Invert the increasing base-curve coordinate c1 on [0, 1].
double curve_parameter(const Geometry& geo, double f1) {
    if (f1 >= geo.c1(1.0)) return 1.0;
    if (f1 <= geo.c1(0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (geo.c1(mid) <= f1)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Keep the non-dominated staircase: ascending f1, strictly descending f2.
std::vector<Vec> dominance_sweep(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    std::vector<Vec> kept;
    for (Vec& p : pts) {
        if (!kept.empty() && p[1] >= kept.back()[1]) continue;
        if (!kept.empty() && p[0] == kept.back()[0]) continue;
        kept.push_back(std::move(p));
    }
    return kept;
}

// Thin a polyline to ~target points at equal arc-length stations,
// always keeping the endpoints and never inventing new points.
std::vector<Vec> arc_length_downsample(const std::vector<Vec>& pts, std::size_t target) {
    if (pts.size() <= target || target < 2) return pts;
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < pts[i].size(); ++j) {
            double diff = pts[i][j] - pts[i - 1][j];
            d += diff * diff;
        }
        cum[i] = cum[i - 1] + std::sqrt(d);
    }
    std::vector<Vec> out;
    out.reserve(target);
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < target; ++k) {
        double station = cum.back() * static_cast<double>(k) / static_cast<double>(target - 1);
        while (cursor + 1 < pts.size() && cum[cursor + 1] <= station) ++cursor;
        std::size_t pick = cursor;
        if (cursor + 1 < pts.size() && cum[cursor + 1] - station < station - cum[cursor]) pick = cursor + 1;
        if (out.empty() || pts[pick] != out.back()) out.push_back(pts[pick]);
    }
    if (out.back() != pts.back()) out.push_back(pts.back());
    return out;
}

std::vector<Vec> curve_front(const Geometry& geo, const std::vector<std::pair<double, double>>& bands,
                             std::size_t target) {
    std::vector<Vec> pts;
    const std::size_t per = 40000;
    for (const auto& [lo, hi] : bands) {
        std::size_t count = std::max<std::size_t>(2, static_cast<std::size_t>(per * (hi - lo)) + 2);
        for (std::size_t i = 0; i < count; ++i) {
            double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
            pts.push_back({geo.c1(t), geo.c2(t)});
        }
    }
    return arc_length_downsample(dominance_sweep(std::move(pts)), target);
}

std::vector<Vec> scanned_front(const Geometry& geo, std::size_t target) {
    const double f1_lo = geo.c1(0.0);
    const double f1_hi = geo.c1(1.0) + geo.scan_extension;
    const double floor_f2 = geo.c2(1.0);
    const double cap = geo.c2(0.0) + geo.scan_extension + 20.0;

    auto column = [&](double f1) -> Vec {
        double base = geo.c2(curve_parameter(geo, f1));
        double f2 = min_feasible_f2(geo, f1, base, cap);
        if (std::isnan(f2)) return {};
        return {f1, f2};
    };

    auto scan = [&](std::size_t grid) {
        std::vector<Vec> pts;
        pts.reserve(grid / 4);
        for (std::size_t i = 0; i <= grid; ++i) {
            double f1 = f1_lo + (f1_hi - f1_lo) * static_cast<double>(i) / static_cast<double>(grid);
            Vec p = column(f1);
            if (!p.empty()) pts.push_back(std::move(p));
            // The front cannot extend right of the first point that reaches
            // the attainable floor: everything beyond is dominated by it.
            if (!pts.empty() && pts.back()[0] >= geo.c1(1.0) && pts.back()[1] <= floor_f2 + 1e-12)
                break;
        }

        // Steep arcs need extra columns: subdivide while the f2 jump
        // between neighbours is large. Discontinuities stop at the width
        // floor without adding interior points.
        double span = 0.0;
        for (const Vec& p : pts) span = std::max(span, p[1]);
        double jump_tol = std::max(1e-6, 0.004 * span);
        std::vector<Vec> refined;
        refined.reserve(pts.size() * 2);
        std::function<void(const Vec&, const Vec&, int)> subdivide = [&](const Vec& a, const Vec& b,
                                                                         int depth) {
            if (depth >= 24 || std::fabs(b[1] - a[1]) <= jump_tol || b[0] - a[0] <= 1e-10) return;
            Vec mid = column(0.5 * (a[0] + b[0]));
            if (mid.empty()) return;
            subdivide(a, mid, depth + 1);
            refined.push_back(mid);
            subdivide(mid, b, depth + 1);
        };
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            refined.push_back(pts[i]);
            subdivide(pts[i], pts[i + 1], 0);
        }
        if (!pts.empty()) refined.push_back(pts.back());
        return dominance_sweep(std::move(refined));
    };

    // Heavily constrained fronts survive only on narrow arcs, so the
    // column grid escalates until enough distinct points remain.
    std::vector<Vec> best;
    for (std::size_t grid = 6000;; grid *= 4) {
        std::vector<Vec> swept = scan(grid);
        if (swept.size() > best.size()) best = std::move(swept);
        if (best.size() >= target || grid >= 1'536'000) break;
    }
    return arc_length_downsample(best, target);
}

// All simplex-lattice directions with the smallest division count
// giving at least `target` points, scaled to the given radius.
std::vector<Vec> sphere_front(double radius, std::size_t target) {
    std::size_t H = 1;
    while ((H + 1) * (H + 2) / 2 < target) ++H;
    std::vector<Vec> pts;
    for (std::size_t i = 0; i <= H; ++i) {
        for (std::size_t j = 0; j + i <= H; ++j) {
            std::size_t k = H - i - j;
            Vec v = {static_cast<double>(i), static_cast<double>(j), static_cast<double>(k)};
            double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            for (double& c : v) c = c / norm * radius;
            pts.push_back(std::move(v));
        }
    }
    return pts;
}

Problem lir_base(int id) {
    Problem p;
    p.name = "LIR-CMOP" + std::to_string(id);
    p.num_objectives = id >= 13 ? 3 : 2;
    p.dimension = 30;
    p.bounds.assign(30, {0.0, 1.0});
    p.pf_reference = file_front_loader(p.name);
    return p;
}

}  // namespace

Problem make_lircmop(int id) {
    if (id < 1 || id > 14) throw std::invalid_argument("make_lircmop: id must be in 1..14");
    Problem p = lir_base(id);

    if (id <= 4) {
        const bool sqrt_shape = (id == 2 || id == 4);
        const bool banded = (id >= 3);
        p.num_inequalities = banded ? 3 : 2;
        p.evaluator = [sqrt_shape, banded](const Vec& x) {
            double g1, g2;
            lir_distances(x, g1, g2);
            Evaluation ev;
            double shape = sqrt_shape ? 1.0 - std::sqrt(x[0]) : 1.0 - x[0] * x[0];
            ev.objectives = {x[0] + g1, shape + g2};
            ev.inequalities = {band_margin(g1), band_margin(g2)};
            if (banded) ev.inequalities.push_back(std::sin(20.0 * kPi * x[0]) - 0.5);
            return ev;
        };
        return p;
    }

    if (id <= 8) {
        const bool sqrt_shape = (id == 5 || id == 7);
        std::vector<EllipseSpec> ellipses = ellipses_for(id);
        p.num_inequalities = ellipses.size();
        p.evaluator = [sqrt_shape, ellipses](const Vec& x) {
            double g1, g2;
            lir_distances(x, g1, g2);
            Evaluation ev;
            double shape = sqrt_shape ? 1.0 - std::sqrt(x[0]) : 1.0 - x[0] * x[0];
            ev.objectives = {x[0] + 10.0 * g1 + kShift, shape + 10.0 * g2 + kShift};
            for (const EllipseSpec& e : ellipses)
                ev.inequalities.push_back(
                    ellipse_level(ev.objectives[0], ev.objectives[1], e.p, e.q, e.a, e.b) - 0.1);
            return ev;
        };
        return p;
    }

    if (id <= 12) {
        const bool sqrt_shape = (id == 10 || id == 11);
        std::vector<EllipseSpec> ellipses = ellipses_for(id);
        const double wave = wave_level_for(id);
        p.num_inequalities = 1 + ellipses.size();
        p.evaluator = [sqrt_shape, ellipses, wave](const Vec& x) {
            double g1, g2;
            lir_distances(x, g1, g2);
            Evaluation ev;
            double shape = sqrt_shape ? 1.0 - std::sqrt(x[0]) : 1.0 - x[0] * x[0];
            ev.objectives = {kScale * x[0] * (10.0 * g1 + 1.0), kScale * shape * (10.0 * g2 + 1.0)};
            ev.inequalities = {wave_margin(ev.objectives[0], ev.objectives[1], wave)};
            for (const EllipseSpec& e : ellipses)
                ev.inequalities.push_back(
                    ellipse_level(ev.objectives[0], ev.objectives[1], e.p, e.q, e.a, e.b) - 0.1);
            return ev;
        };
        return p;
    }

    const bool banded = (id == 14);
    p.num_inequalities = banded ? 2 : 1;
    p.evaluator = [banded](const Vec& x) {
        double g = 0.0;
        for (std::size_t i = 2; i < x.size(); ++i) g += 10.0 * (x[i] - 0.5) * (x[i] - 0.5);
        const double radius = kScale + g;
        const double a1 = 0.5 * kPi * x[0];
        const double a2 = 0.5 * kPi * x[1];
        Evaluation ev;
        ev.objectives = {radius * std::cos(a1) * std::cos(a2), radius * std::cos(a1) * std::sin(a2),
                         radius * std::sin(a1)};
        double s = 0.0;
        for (double f : ev.objectives) s += f * f;
        ev.inequalities = {(s - 9.0) * (s - 4.0)};
        if (banded) ev.inequalities.push_back((s - 3.0625) * (s - 2.25));
        return ev;
    };
    return p;
}

std::vector<Vec> generate_lircmop_front(int id, std::size_t target_points) {
    if (id < 1 || id > 14) throw std::invalid_argument("generate_lircmop_front: id must be in 1..14");
    if (id == 13) return sphere_front(kScale, target_points);
    if (id == 14) return sphere_front(1.75, target_points);
    Geometry geo = geometry_for(id);
    if (id <= 4) {
        std::vector<std::pair<double, double>> bands =
            id <= 2 ? std::vector<std::pair<double, double>>{{0.0, 1.0}} : sine_bands();
        return curve_front(geo, bands, target_points);
    }
    return scanned_front(geo, target_points);
}

}  // namespace ppsm2m

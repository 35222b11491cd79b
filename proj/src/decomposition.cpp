#include "ppsm2m/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ppsm2m/text_io.hpp"

namespace ppsm2m {

namespace {

Vec normalized(Vec v) {
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;
    return v;
}

// All barycentric lattice points with H divisions of the simplex in
// dimension m, in lexicographic order of the leading coordinates.
std::vector<Vec> simplex_lattice(std::size_t m, std::size_t H) {
    std::vector<Vec> out;
    Vec point(m, 0.0);
    auto recurse = [&](auto&& self, std::size_t dim, std::size_t left) -> void {
        if (dim + 1 == m) {
            point[dim] = static_cast<double>(left) / static_cast<double>(H);
            out.push_back(point);
            return;
        }
        for (std::size_t take = 0; take <= left; ++take) {
            point[dim] = static_cast<double>(take) / static_cast<double>(H);
            self(self, dim + 1, left - take);
        }
    };
    recurse(recurse, 0, H);
    return out;
}

}  // namespace

DirectionSet uniform_directions(std::size_t m, std::size_t K) {
    if (m < 2) throw std::invalid_argument("uniform_directions: need at least two objectives");
    if (m > 3) throw std::invalid_argument("uniform_directions: more than three objectives is unsupported");
    if (K < 1) throw std::invalid_argument("uniform_directions: need at least one direction");

    DirectionSet dirs;
    dirs.num_objectives = m;
    if (K == 1) {
        dirs.vectors.push_back(normalized(Vec(m, 1.0)));
        return dirs;
    }
    if (m == 2) {
        for (std::size_t k = 0; k < K; ++k) {
            double angle = static_cast<double>(k) / static_cast<double>(K - 1) * std::numbers::pi / 2.0;
            dirs.vectors.push_back({std::cos(angle), std::sin(angle)});
        }
        // Pin the axis endpoints exactly.
        dirs.vectors.front() = {1.0, 0.0};
        dirs.vectors.back() = {0.0, 1.0};
        return dirs;
    }
    // m == 3: smallest simplex lattice holding K points, evenly
    // subsampled when the lattice is larger than K.
    std::size_t H = 1;
    while ((H + 1) * (H + 2) / 2 < K) ++H;
    std::vector<Vec> lattice = simplex_lattice(3, H);
    const std::size_t L = lattice.size();
    for (std::size_t k = 0; k < K; ++k) {
        std::size_t pick = k * (L - 1) / (K - 1);
        dirs.vectors.push_back(normalized(lattice[pick]));
    }
    return dirs;
}

double acute_angle(std::span<const double> u, std::span<const double> v) {
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0) return 0.0;
    double c = dot / std::sqrt(nu * nv);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

void NormalizationState::reset(std::size_t m) {
    fbar.assign(m, std::numeric_limits<double>::infinity());
}

void NormalizationState::update(std::span<const double> f) {
    if (fbar.size() != f.size()) fbar.assign(f.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = std::min(fbar[i], f[i]);
}

void NormalizationState::update(std::span<const Individual> pop) {
    for (const Individual& ind : pop) update(ind.f);
}

Vec NormalizationState::shifted(std::span<const double> f) const {
    Vec out(f.begin(), f.end());
    for (std::size_t i = 0; i < out.size() && i < fbar.size(); ++i) out[i] -= fbar[i];
    return out;
}

std::size_t SubpopulationSet::total() const {
    std::size_t n = 0;
    for (const auto& b : buckets) n += b.size();
    return n;
}

std::vector<Individual> SubpopulationSet::flatten() const {
    std::vector<Individual> out;
    out.reserve(total());
    for (const auto& b : buckets)
        for (const Individual& ind : b) out.push_back(ind);
    return out;
}

std::size_t nearest_direction(const DirectionSet& dirs, std::span<const double> u) {
    std::size_t best = 0;
    double best_angle = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dirs.vectors.size(); ++k) {
        double a = acute_angle(u, dirs.vectors[k]);
        if (a < best_angle) {
            best_angle = a;
            best = k;
        }
    }
    return best;
}

SubpopulationSet allocate_subpops(std::span<const Individual> pool, const DirectionSet& dirs,
                                  const NormalizationState& norm, std::size_t target_size) {
    SubpopulationSet subs;
    subs.directions = dirs;
    subs.target_size = target_size;
    subs.buckets.assign(dirs.size(), {});
    for (const Individual& ind : pool) {
        Vec u = norm.shifted(ind.f);
        subs.buckets[nearest_direction(dirs, u)].push_back(ind);
    }
    return subs;
}

std::vector<Individual> fill_bucket(std::vector<Individual> bucket,
                                    std::span<const Individual> pool, std::size_t target,
                                    std::mt19937_64& rng, bool* with_replacement) {
    if (with_replacement) *with_replacement = false;
    if (bucket.size() >= target) return bucket;

    // Pool entries minus the bucket's current members, matched by
    // decision vector (one pool entry consumed per bucket member).
    std::vector<bool> taken(pool.size(), false);
    for (const Individual& member : bucket) {
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!taken[i] && pool[i].x == member.x) {
                taken[i] = true;
                break;
            }
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!taken[i]) candidates.push_back(i);

    std::size_t need = target - bucket.size();
    if (candidates.size() >= need) {
        // Partial Fisher-Yates: the first `need` slots become the draw.
        for (std::size_t k = 0; k < need; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, candidates.size() - 1);
            std::swap(candidates[k], candidates[pick(rng)]);
            bucket.push_back(pool[candidates[k]]);
        }
    } else {
        if (with_replacement) *with_replacement = true;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (std::size_t k = 0; k < need; ++k) bucket.push_back(pool[pick(rng)]);
    }
    return bucket;
}

void write_directions(std::ostream& os, const DirectionSet& dirs) {
    for (const Vec& v : dirs.vectors) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << format_double(v[i]);
        }
        os << '\n';
    }
}

}  // namespace ppsm2m

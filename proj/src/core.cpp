#include "ppsm2m/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppsm2m {

void Problem::validate() const {
    if (name.empty()) throw std::invalid_argument("problem: name must be non-empty");
    if (num_objectives < 2) throw std::invalid_argument("problem " + name + ": needs at least two objectives");
    if (dimension < 1) throw std::invalid_argument("problem " + name + ": dimension must be positive");
    if (bounds.size() != dimension)
        throw std::invalid_argument("problem " + name + ": bounds count does not match dimension");
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (!(bounds[i].first < bounds[i].second))
            throw std::invalid_argument("problem " + name + ": empty bound interval at variable " +
                                        std::to_string(i + 1));
    }
    if (!(equality_tolerance > 0.0))
        throw std::invalid_argument("problem " + name + ": equality tolerance must be positive");
    if (!evaluator) throw std::invalid_argument("problem " + name + ": evaluator not set");
}

double overall_violation(std::span<const double> inequalities,
                         std::span<const double> equalities, double delta) {
    double total = 0.0;
    for (double g : inequalities) total += std::fabs(std::min(g, 0.0));
    for (double h : equalities) total += std::fabs(std::min(delta - std::fabs(h), 0.0));
    return total;
}

bool dominates(std::span<const double> fa, std::span<const double> fb) {
    bool strict = false;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        if (fa[i] > fb[i]) return false;
        if (fa[i] < fb[i]) strict = true;
    }
    return strict;
}

bool eps_dominates(std::span<const double> fa, std::span<const double> fb, double e) {
    bool equal = true;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        if (fa[i] - e > fb[i]) return false;
        if (fa[i] != fb[i]) equal = false;
    }
    return !equal || e > 0.0;
}

Comparison cdp_compare(const Individual& a, const Individual& b) {
    return eps_cdp_compare(a, b, 0.0);
}

Comparison eps_cdp_compare(const Individual& a, const Individual& b, double eps_level) {
    const bool fa = a.violation <= eps_level;
    const bool fb = b.violation <= eps_level;
    if (fa != fb) return fa ? Comparison::FirstBetter : Comparison::SecondBetter;
    if (!fa) {
        if (a.violation < b.violation) return Comparison::FirstBetter;
        if (b.violation < a.violation) return Comparison::SecondBetter;
        return Comparison::Incomparable;
    }
    if (dominates(a.f, b.f)) return Comparison::FirstBetter;
    if (dominates(b.f, a.f)) return Comparison::SecondBetter;
    return Comparison::Incomparable;
}

}  // namespace ppsm2m

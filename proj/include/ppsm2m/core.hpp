#ifndef PPSM2M_CORE_HPP
#define PPSM2M_CORE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ppsm2m {

using Vec = std::vector<double>;

/// Outcome of an ordered comparison between two individuals.
enum class Comparison { FirstBetter, SecondBetter, Incomparable };

inline Comparison flip(Comparison c) {
    switch (c) {
    case Comparison::FirstBetter: return Comparison::SecondBetter;
    case Comparison::SecondBetter: return Comparison::FirstBetter;
    default: return Comparison::Incomparable;
    }
}

/// Raw evaluator output: objectives plus constraint values.
/// Inequalities are satisfied when >= 0, equalities when |h| <= delta.
struct Evaluation {
    Vec objectives;
    Vec inequalities;
    Vec equalities;
};

/// A box-constrained multi-objective problem with inequality and
/// equality constraints. The evaluator must be a pure deterministic
/// function of the decision vector.
struct Problem {
    std::string name;
    std::size_t num_objectives = 2;                 // m >= 2
    std::size_t dimension = 1;                      // n >= 1
    std::vector<std::pair<double, double>> bounds;  // n pairs (a_i, b_i), a_i < b_i
    std::size_t num_inequalities = 0;               // q
    std::size_t num_equalities = 0;                 // p
    double equality_tolerance = 1e-4;               // delta > 0
    std::function<Evaluation(const Vec&)> evaluator;
    // Optional generator of a representative true-PF sample of at least
    // the requested size; empty when no closed-form front is known.
    std::function<std::vector<Vec>(std::size_t)> pf_reference;

    /// Throws std::invalid_argument when the definition is inconsistent.
    void validate() const;
};

/// An evaluated candidate solution. rank/crowding are annotations owned
/// by a selection pass; negative values mean "unset".
struct Individual {
    Vec x;
    Vec f;
    double violation = 0.0;  // overall constraint violation, >= 0
    int rank = -1;
    double crowding = -1.0;

    bool feasible() const { return violation == 0.0; }
};

/// Summed magnitude of constraint breaches; zero exactly on the
/// feasible set. Equalities are relaxed to |h| <= delta.
double overall_violation(std::span<const double> inequalities,
                         std::span<const double> equalities, double delta);

/// Strict Pareto dominance: fa <= fb componentwise and fa != fb.
bool dominates(std::span<const double> fa, std::span<const double> fb);

/// Additive epsilon dominance: fa_i - e <= fb_i for all i. With e = 0
/// this reduces to dominates(); with e > 0 a vector epsilon-dominates
/// itself and anything within the slack.
bool eps_dominates(std::span<const double> fa, std::span<const double> fb, double e);

/// Constraint-domination: feasible beats infeasible, smaller violation
/// beats larger among infeasible, Pareto dominance decides among
/// feasible. Equal violations among infeasible are incomparable.
Comparison cdp_compare(const Individual& a, const Individual& b);

/// cdp_compare with "feasible" relaxed to violation <= eps_level.
/// eps_level = 0 is identical to cdp_compare.
Comparison eps_cdp_compare(const Individual& a, const Individual& b, double eps_level);

}  // namespace ppsm2m

#endif  // PPSM2M_CORE_HPP

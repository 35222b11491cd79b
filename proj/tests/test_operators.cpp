#include <cmath>
#include <random>
#include <string_view>

#include "doctest.h"
#include "ppsm2m/operators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace ppsm2m;
namespace ts = ppsm2m::testsupport;

namespace {

std::vector<std::pair<double, double>> unit_box(std::size_t n) {
    return std::vector<std::pair<double, double>>(n, {0.0, 1.0});
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("crossover of identical parents is the parent") {
    OperatorParams params;
    std::mt19937_64 rng(1);
    Vec x{0.25, 0.75, 0.5};
    auto bounds = unit_box(3);
    for (int i = 0; i < 50; ++i) CHECK(sbx_crossover(x, x, bounds, params, rng) == x);
}

TEST_CASE("crossover without trigger copies the first parent") {
    OperatorParams params;
    params.p_crossover = 0.0;
    std::mt19937_64 rng(2);
    Vec x{0.2, 0.4}, y{0.9, 0.1};
    auto bounds = unit_box(2);
    for (int i = 0; i < 50; ++i) CHECK(sbx_crossover(x, y, bounds, params, rng) == x);
}

TEST_CASE("crossover children center on the parent-pair mean") {
    OperatorParams params;
    std::mt19937_64 rng(3);
    auto bounds = unit_box(2);
    const int trials = 10000;
    Vec x{0.3, 0.6}, y{0.5, 0.4};
    Vec sum(2, 0.0), sumsq(2, 0.0);
    for (int i = 0; i < trials; ++i) {
        Vec child = sbx_crossover(x, y, bounds, params, rng);
        for (std::size_t g = 0; g < 2; ++g) {
            sum[g] += child[g];
            sumsq[g] += child[g] * child[g];
        }
    }
    for (std::size_t g = 0; g < 2; ++g) {
        double mean = sum[g] / trials;
        double var = sumsq[g] / trials - mean * mean;
        double se = std::sqrt(var / trials);
        double target = 0.5 * (x[g] + y[g]);
        CHECK(std::fabs(mean - target) <= 3.0 * se + 1e-12);
    }
}

TEST_CASE("mutation respects rate zero and the box") {
    OperatorParams params;
    params.p_mutation = 0.0;
    std::mt19937_64 rng(4);
    Vec x{0.1, 0.9};
    auto bounds = unit_box(2);
    CHECK(polynomial_mutation(x, bounds, params, rng) == x);

    params.p_mutation = 1.0;
    Vec low{0.0, 0.0};
    for (int i = 0; i < 200; ++i) {
        Vec mutated = polynomial_mutation(low, bounds, params, rng);
        for (double v : mutated) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("default mutation rate changes about one gene in n") {
    OperatorParams params;  // p_mutation < 0 means 1/n
    const std::size_t n = 20;
    std::mt19937_64 rng(5);
    auto bounds = unit_box(n);
    Vec x(n, 0.5);
    const int trials = 10000;
    std::size_t changed = 0;
    for (int i = 0; i < trials; ++i) {
        Vec mutated = polynomial_mutation(x, bounds, params, rng);
        for (std::size_t g = 0; g < n; ++g)
            if (mutated[g] != x[g]) ++changed;
    }
    double rate = static_cast<double>(changed) / (static_cast<double>(trials) * n);
    double p = 1.0 / static_cast<double>(n);
    double sigma = std::sqrt(p * (1 - p) / (static_cast<double>(trials) * n));
    CHECK(std::fabs(rate - p) <= 3.0 * sigma);
}

TEST_CASE("replayed seeds reproduce the same children") {
    OperatorParams params;
    auto bounds = unit_box(5);
    std::mt19937_64 a(99), b(99);
    Vec x{0.1, 0.3, 0.5, 0.7, 0.9}, y{0.9, 0.7, 0.5, 0.3, 0.1};
    for (int i = 0; i < 100; ++i) {
        Vec ca = polynomial_mutation(sbx_crossover(x, y, bounds, params, a), bounds, params, a);
        Vec cb = polynomial_mutation(sbx_crossover(x, y, bounds, params, b), bounds, params, b);
        CHECK(ca == cb);
    }
}

}  // TEST_SUITE

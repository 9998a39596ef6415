#pragma once

#include "carat/interval_algebra.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace carat {

/// Random canonical algebra element: up to max_intervals pieces with
/// endpoint denominators up to max_den. Uses raw engine output only, so the
/// stream is identical across platforms for a fixed seed.
AlgebraElement random_element(std::mt19937_64& rng, int max_intervals = 6,
                              int max_den = 64);

struct LawReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string counterexample;  // first failure, rendered
};

struct LawSuiteResult {
    std::vector<LawReport> laws;
    bool all_passed() const;
};

using DistanceFn = std::function<Rat(const AlgebraElement&, const AlgebraElement&)>;

/// Runs the exact randomized law suite: the pseudometric axioms, the union
/// inequality, complement isometry, finite additivity of the premeasure on
/// disjoint pairs, and idempotence of normalization. All comparisons are
/// exact rational equality or order, zero tolerance.
///
/// The distance function is injectable so the harness can prove it reports
/// counterexamples when fed a broken metric; callers normally omit it.
LawSuiteResult run_laws(int trials, std::uint64_t seed, DistanceFn dist_fn = nullptr);

}  // namespace carat

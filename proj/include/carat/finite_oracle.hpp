#pragma once

#include "carat/rat.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace carat {

/// Subset of a finite universe {0,...,n-1} as a membership bitmask.
using FiniteSet = std::uint16_t;

/// A finite measure space: a partition of {0,...,n-1} into weighted blocks.
/// The algebra is every union of blocks; the measure of a union is the sum of
/// its block weights. Small enough that outer measure, measurability and the
/// closure under d can all be enumerated exactly.
class FiniteSpace {
public:
    static constexpr int kMaxUniverse = 12;
    /// Exhaustive test-set loop in is_measurable runs only up to this size;
    /// larger universes fall back to a deterministic sample of test sets.
    static constexpr int kExhaustiveUniverse = 8;

    /// Validates and builds. blocks must partition {0,...,n-1}; weights are
    /// per-block and nonnegative. Throws std::invalid_argument on any
    /// violation.
    static FiniteSpace create(int universe_size,
                              std::vector<std::vector<int>> blocks,
                              std::vector<Rat> weights);

    /// Parses a partition spec like "0,1:1/2;2,3:1/1".
    static FiniteSpace parse_spec(const std::string& spec);

    /// Seeded random space for the verification harness: universe size in
    /// [2, max_universe], random partition, block weights with denominator
    /// at most 16 (zero weights included, to exercise null blocks).
    static FiniteSpace random_space(std::mt19937_64& rng, int max_universe);

    int universe_size() const { return n_; }
    int block_count() const { return static_cast<int>(block_masks_.size()); }
    FiniteSet universe_mask() const { return static_cast<FiniteSet>((1u << n_) - 1); }
    const std::vector<FiniteSet>& block_masks() const { return block_masks_; }
    const std::vector<Rat>& weights() const { return weights_; }

    /// Masks of all 2^#blocks algebra elements, indexed by block subset.
    const std::vector<FiniteSet>& algebra_masks() const { return algebra_masks_; }
    /// Measures of the algebra elements, same indexing.
    const std::vector<Rat>& algebra_measures() const { return algebra_measures_; }

    std::string describe() const;

private:
    FiniteSpace() = default;

    int n_ = 0;
    std::vector<FiniteSet> block_masks_;
    std::vector<Rat> weights_;
    std::vector<FiniteSet> algebra_masks_;
    std::vector<Rat> algebra_measures_;
};

/// Outer measure of e: the infimum over algebra covers of the total measure.
/// Finite subadditivity collapses the infimum to the cheapest single algebra
/// element containing e, which is what gets enumerated.
Rat outer_measure(const FiniteSpace& space, FiniteSet e);

/// Independent route for the same quantity: exhaustively enumerates every
/// subset of the algebra whose union covers e and minimizes the summed
/// measure. Exponential in the algebra size; guarded to at most 4 blocks
/// (throws std::length_error beyond).
Rat outer_measure_covers(const FiniteSpace& space, FiniteSet e);

/// Splitting condition: e is measurable iff mu*(A) = mu*(A & e) + mu*(A & ~e)
/// for every test set A. Exhaustive over all 2^n test sets for universes up
/// to kExhaustiveUniverse, deterministically sampled beyond.
bool is_measurable(const FiniteSpace& space, FiniteSet e);

/// All sets at distance zero from some algebra element, i.e. the closure of
/// the algebra under d on a finite space. Returned sorted.
std::vector<FiniteSet> limit_closure(const FiniteSpace& space);

/// Checks that the measurable sets and the closure coincide, both sides
/// enumerated exhaustively.
bool verify_theorem2(const FiniteSpace& space);

/// Checks that the outer measure restricts to the premeasure on the algebra,
/// and agrees with the witness measure on every member of the closure.
bool verify_extension(const FiniteSpace& space);

/// For measurable e, the cheapest algebra element covering e; its distance to
/// e is exactly zero on a finite space, so the 1/n target is met for every n.
/// Throws std::domain_error if e is not measurable, std::invalid_argument if
/// n < 1.
FiniteSet truncated_cover(const FiniteSpace& space, FiniteSet e, int n);

}  // namespace carat

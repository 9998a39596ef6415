#pragma once

#include "carat/interval_algebra.hpp"

#include <functional>

namespace carat {

/// Certified bracket around a real value: guaranteed lo <= true value <= hi,
/// both bounds exact rationals. Never clamped to [0,1].
struct ErrorInterval {
    Rat lo;
    Rat hi;

    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    Rat width() const { return hi - lo; }
    bool overlaps(const ErrorInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    ErrorInterval operator+(const ErrorInterval& o) const {
        return {lo + o.lo, hi + o.hi};
    }
};

/// A measurable set given constructively: a total map from a precision eps > 0
/// to an algebra element within eps of the ideal set in the pseudometric d.
/// The testable consequence of that contract is self-consistency:
/// d(approx(e1), approx(e2)) <= e1 + e2 for all positive e1, e2.
///
/// A MeasurableSet stands for an equivalence class of sets at distance zero,
/// not a pointwise set; equality is undecidable and deliberately not exposed.
/// Oracles must be pure: same eps in, same element out.
class MeasurableSet {
public:
    using Approximant = std::function<AlgebraElement(const Rat& eps)>;

    explicit MeasurableSet(Approximant fn) : approximant_(std::move(fn)) {}

    /// Queries the oracle. Throws std::invalid_argument if eps <= 0.
    AlgebraElement approx(const Rat& eps) const;

private:
    Approximant approximant_;
};

/// Constant oracle: the algebra embeds into the completion.
MeasurableSet embed(AlgebraElement a);

/// Union of two oracles; each side is queried at eps/2 so the union
/// inequality certifies the result.
MeasurableSet limit_union(MeasurableSet s1, MeasurableSet s2);

/// Complement oracle; complement is an isometry of d, so precision carries
/// through unchanged.
MeasurableSet limit_complement(MeasurableSet s);

/// De Morgan composition of limit_union and limit_complement.
MeasurableSet limit_intersect(MeasurableSet s1, MeasurableSet s2);

/// Explicit tail-decay rate for a countable family {S_i}: bound_at(L) returns
/// an N_L with sum_{i > N_L} mu*(S_i) < 1/(2L). The accessor is monotone in L
/// regardless of the raw map supplied.
class TailBound {
public:
    explicit TailBound(std::function<long(long)> raw) : raw_(std::move(raw)) {}

    long bound_at(long level) const;

private:
    std::function<long(long)> raw_;
};

/// Countable union via the diagonal construction: the approximant at 1/L is
/// Y_L, the union of the first N_L = bound_at(L) members each queried at
/// 1/(2*L*N_L). Finite-union error stays under 1/(2L), the tail under 1/(2L).
/// For general eps the level is the smallest L with 1/L <= eps.
///
/// The family is 1-indexed. A TailBound that lies breaks the oracle contract
/// of the result; honoring it is the caller's obligation.
MeasurableSet countable_union(std::function<MeasurableSet(long)> family, TailBound tail);

/// Certified evaluation of the extended measure: the bracket
/// [length(approx(s, eps)) - eps, length(approx(s, eps)) + eps]
/// contains the true measure; width is exactly 2*eps.
/// Throws std::invalid_argument if eps <= 0.
ErrorInterval measure_with_error(const MeasurableSet& s, const Rat& eps);

/// Certified bracket around the quotient distance between two oracles,
/// width exactly 2*eps. Throws std::invalid_argument if eps <= 0.
ErrorInterval distance_between(const MeasurableSet& s1, const MeasurableSet& s2,
                               const Rat& eps);

}  // namespace carat

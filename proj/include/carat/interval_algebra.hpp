#pragma once

#include "carat/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace carat {

/// Half-open interval [lo, hi) inside the unit interval. Empty iff lo >= hi.
struct Interval {
    Rat lo;
    Rat hi;

    bool empty() const { return lo >= hi; }
    Rat length() const { return empty() ? Rat(0) : hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Element of the algebra over [0,1): a finite union of half-open rational
/// intervals, kept in canonical form (nonempty, sorted, disjoint,
/// non-adjacent). Two elements denote the same set iff they compare equal.
class AlgebraElement {
public:
    AlgebraElement() = default;

    /// Canonicalizes an arbitrary list of intervals: drops empties, sorts,
    /// merges overlap and adjacency. Throws std::out_of_range if any endpoint
    /// lies outside [0,1].
    static AlgebraElement normalize(std::vector<Interval> raw);

    static AlgebraElement empty_set() { return AlgebraElement(); }
    static AlgebraElement full_set();

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool is_empty() const { return intervals_.empty(); }

    /// Canonical text form: "lo_num/lo_den,hi_num/hi_den" segments joined by
    /// single spaces; the empty set renders as "∅".
    std::string to_string() const;

    /// Inverse of to_string; also accepts "empty" for the empty set.
    static std::optional<AlgebraElement> parse(std::string_view text);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    std::vector<Interval> intervals_;
};

AlgebraElement set_union(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement set_intersect(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement set_complement(const AlgebraElement& a);
AlgebraElement set_sym_diff(const AlgebraElement& a, const AlgebraElement& b);

/// Lebesgue length: the sum of interval lengths. Always in [0,1].
Rat premeasure(const AlgebraElement& a);

/// The pseudometric d(a,b) = length(a △ b), computed exactly.
Rat distance(const AlgebraElement& a, const AlgebraElement& b);

/// True iff a denotes a subset of b.
bool is_subset(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace carat

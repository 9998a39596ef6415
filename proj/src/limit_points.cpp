#include "carat/limit_points.hpp"

#include <stdexcept>

namespace carat {

namespace {

void require_positive(const Rat& eps) {
    if (eps <= Rat(0)) throw std::invalid_argument("eps must be positive");
}

}  // namespace

AlgebraElement MeasurableSet::approx(const Rat& eps) const {
    require_positive(eps);
    return approximant_(eps);
}

MeasurableSet embed(AlgebraElement a) {
    return MeasurableSet([a = std::move(a)](const Rat&) { return a; });
}

MeasurableSet limit_union(MeasurableSet s1, MeasurableSet s2) {
    return MeasurableSet([s1 = std::move(s1), s2 = std::move(s2)](const Rat& eps) {
        Rat half = eps / Rat(2);
        return set_union(s1.approx(half), s2.approx(half));
    });
}

MeasurableSet limit_complement(MeasurableSet s) {
    return MeasurableSet([s = std::move(s)](const Rat& eps) {
        return set_complement(s.approx(eps));
    });
}

MeasurableSet limit_intersect(MeasurableSet s1, MeasurableSet s2) {
    return limit_complement(
        limit_union(limit_complement(std::move(s1)), limit_complement(std::move(s2))));
}

long TailBound::bound_at(long level) const {
    if (level < 1) throw std::invalid_argument("tail bound level must be >= 1");
    long best = 1;
    for (long l = 1; l <= level; ++l) best = std::max(best, raw_(l));
    return best;
}

MeasurableSet countable_union(std::function<MeasurableSet(long)> family, TailBound tail) {
    return MeasurableSet(
        [family = std::move(family), tail = std::move(tail)](const Rat& eps) {
            long level = ceil_reciprocal(eps);
            long members = tail.bound_at(level);
            // 1/(2*L*N) per member keeps the finite-union error under 1/(2L)
            Rat inner = Rat(1, 1) / (Rat(2) * Rat(level) * Rat(members));
            AlgebraElement acc;
            for (long i = 1; i <= members; ++i) {
                acc = set_union(acc, family(i).approx(inner));
            }
            return acc;
        });
}

ErrorInterval measure_with_error(const MeasurableSet& s, const Rat& eps) {
    require_positive(eps);
    Rat center = premeasure(s.approx(eps));
    return {center - eps, center + eps};
}

ErrorInterval distance_between(const MeasurableSet& s1, const MeasurableSet& s2,
                               const Rat& eps) {
    require_positive(eps);
    Rat half = eps / Rat(2);
    Rat center = distance(s1.approx(half), s2.approx(half));
    return {center - eps, center + eps};
}

}  // namespace carat

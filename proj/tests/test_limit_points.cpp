#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carat/laws.hpp"
#include "carat/limit_points.hpp"
#include "carat/set_dsl.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace carat;

namespace {

AlgebraElement elem(std::initializer_list<std::pair<Rat, Rat>> pieces) {
    std::vector<Interval> raw;
    for (const auto& [lo, hi] : pieces) raw.push_back({lo, hi});
    return AlgebraElement::normalize(std::move(raw));
}

const std::vector<Rat> kEpsGrid = {Rat(1, 2), Rat(1, 8), Rat(1, 64), Rat(1, 1024)};

void check_self_consistency(const MeasurableSet& s) {
    for (const auto& e1 : kEpsGrid) {
        for (const auto& e2 : kEpsGrid) {
            CHECK(distance(s.approx(e1), s.approx(e2)) <= e1 + e2);
        }
    }
}

MeasurableSet dyadic_singleton(long i) {
    return embed(elem({{pow2(static_cast<int>(-i)), pow2(static_cast<int>(-i + 1))}}));
}

}  // namespace

TEST_CASE("embed is the constant oracle") {
    auto a = elem({{Rat(0), Rat(1, 2)}});
    auto s = embed(a);
    CHECK(s.approx(Rat(1, 1000000)) == a);
    CHECK(measure_with_error(s, Rat(1, 10)).contains(premeasure(a)));
    CHECK(distance(s.approx(Rat(1, 3)), s.approx(Rat(1, 7))) == Rat(0));
}

TEST_CASE("approx enforces a positive precision") {
    auto s = embed(elem({{Rat(0), Rat(1, 2)}}));
    CHECK_THROWS_AS(s.approx(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(s.approx(Rat(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(measure_with_error(s, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(distance_between(s, s, Rat(-1, 4)), std::invalid_argument);
}

TEST_CASE("cantor3 approximant at 1/2 is the stage-2 set") {
    auto got = builtin_cantor3().approx(Rat(1, 2));
    CHECK(got == cantor3_stage(2));
    CHECK(premeasure(got) == Rat(4, 9));
}

TEST_CASE("limit_union of embeds tracks the algebra union") {
    auto a = elem({{Rat(0), Rat(1, 4)}});
    auto b = elem({{Rat(1, 8), Rat(1, 2)}});
    auto s = limit_union(embed(a), embed(b));
    for (const auto& eps : kEpsGrid) {
        CHECK(s.approx(eps) == set_union(a, b));
    }
    CHECK(measure_with_error(limit_union(builtin_cantor3(), embed(AlgebraElement::full_set())),
                             Rat(1, 1000))
              .contains(Rat(1)));
    CHECK(distance_between(limit_union(builtin_cantor3(), builtin_cantor3()),
                           builtin_cantor3(), Rat(1, 64))
              .contains(Rat(0)));
}

TEST_CASE("limit_complement examples") {
    auto a = elem({{Rat(1, 4), Rat(1, 2)}});
    CHECK(limit_complement(embed(a)).approx(Rat(1, 16)) == set_complement(a));
    CHECK(measure_with_error(limit_complement(builtin_cantor3()), Rat(1, 1000))
              .contains(Rat(1)));
    auto s = builtin_fatcantor();
    CHECK(distance_between(limit_complement(limit_complement(s)), s, Rat(1, 64))
              .contains(Rat(0)));
}

TEST_CASE("limit_intersect examples") {
    auto a = elem({{Rat(0), Rat(1, 2)}});
    auto b = elem({{Rat(1, 4), Rat(3, 4)}});
    CHECK(limit_intersect(embed(a), embed(b)).approx(Rat(1, 16)) == set_intersect(a, b));
    CHECK(measure_with_error(
              limit_intersect(builtin_cantor3(), embed(AlgebraElement::full_set())),
              Rat(1, 1000))
              .contains(Rat(0)));
    auto s = builtin_fatcantor();
    CHECK(measure_with_error(limit_intersect(s, limit_complement(s)), Rat(1, 1000))
              .contains(Rat(0)));
}

TEST_CASE("countable_union of the dyadic family fills the unit interval") {
    auto s = countable_union(dyadic_singleton, TailBound([](long level) {
        long n = 0;
        while ((1L << n) < 2 * level) ++n;
        return n;
    }));
    CHECK(measure_with_error(s, Rat(1, 1024)).contains(Rat(1)));
    check_self_consistency(s);
}

TEST_CASE("countable_union of empty sets is empty") {
    auto s = countable_union([](long) { return embed(AlgebraElement::empty_set()); },
                             TailBound([](long) { return 1L; }));
    for (const auto& eps : kEpsGrid) CHECK(s.approx(eps).is_empty());
    CHECK(distance_between(s, embed(AlgebraElement::empty_set()), Rat(1, 64)).contains(Rat(0)));
}

TEST_CASE("countable_union with a singleton family reproduces its member") {
    auto target = builtin_fatcantor();
    auto s = countable_union(
        [&](long i) {
            return i == 1 ? target : embed(AlgebraElement::empty_set());
        },
        TailBound([](long) { return 1L; }));
    CHECK(distance_between(s, target, Rat(1, 64)).contains(Rat(0)));
    check_self_consistency(s);
}

TEST_CASE("measure_with_error examples") {
    auto half = measure_with_error(embed(elem({{Rat(0), Rat(1, 2)}})), Rat(1, 100));
    CHECK(half.lo == Rat(49, 100));
    CHECK(half.hi == Rat(51, 100));
    CHECK(half.contains(Rat(1, 2)));

    CHECK(measure_with_error(builtin_fatcantor(), Rat(1, 1000)).contains(Rat(1, 2)));
    CHECK(measure_with_error(builtin_cantor3(), Rat(1, 1000)).contains(Rat(0)));
}

TEST_CASE("measure_with_error width is exactly 2*eps and halves with eps") {
    for (const auto& s : {builtin_cantor3(), builtin_fatcantor(), builtin_dyadictail()}) {
        Rat eps(1, 8);
        for (int k = 0; k < 4; ++k) {
            CHECK(measure_with_error(s, eps).width() == Rat(2) * eps);
            eps = eps / Rat(2);
        }
    }
}

TEST_CASE("distance_between examples") {
    auto s = builtin_fatcantor();
    CHECK(distance_between(s, s, Rat(1, 64)).contains(Rat(0)));

    auto a = elem({{Rat(0), Rat(1, 2)}});
    auto b = elem({{Rat(1, 4), Rat(3, 4)}});
    CHECK(distance_between(embed(a), embed(b), Rat(1, 64)).contains(distance(a, b)));

    CHECK(distance_between(builtin_cantor3(), embed(AlgebraElement::empty_set()), Rat(1, 64))
              .contains(Rat(0)));
}

TEST_CASE("interval sum and overlap behave as exact interval arithmetic") {
    ErrorInterval x{Rat(1, 4), Rat(1, 2)};
    ErrorInterval y{Rat(1, 8), Rat(1, 4)};
    auto sum = x + y;
    CHECK(sum.lo == Rat(3, 8));
    CHECK(sum.hi == Rat(3, 4));
    CHECK(x.overlaps(y));
    CHECK(!x.overlaps(ErrorInterval{Rat(3, 4), Rat(1)}));
}

TEST_CASE("oracle self-consistency across constructors") {
    auto a = elem({{Rat(0), Rat(1, 3)}});
    auto b = elem({{Rat(1, 2), Rat(7, 8)}});
    check_self_consistency(embed(a));
    check_self_consistency(builtin_cantor3());
    check_self_consistency(builtin_fatcantor());
    check_self_consistency(builtin_dyadictail());
    check_self_consistency(limit_union(embed(a), builtin_cantor3()));
    check_self_consistency(limit_complement(builtin_fatcantor()));
    check_self_consistency(limit_intersect(embed(b), builtin_dyadictail()));
    check_self_consistency(
        limit_union(limit_intersect(builtin_cantor3(), embed(a)), limit_complement(embed(b))));
}

TEST_CASE("finite additivity of the certified measure on disjoint oracles") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto a = random_element(rng);
        auto b = set_intersect(random_element(rng), set_complement(a));
        auto s1 = embed(a);
        auto s2 = embed(b);
        for (const auto& eps : kEpsGrid) {
            auto parts = measure_with_error(s1, eps) + measure_with_error(s2, eps);
            auto whole = measure_with_error(limit_union(s1, s2), Rat(2) * eps);
            CHECK(parts.overlaps(whole));
        }
    }
    // a fixture pair: the middle-thirds set and a piece of its first gap
    auto gap_piece = embed(elem({{Rat(2, 5), Rat(3, 5)}}));
    for (const auto& eps : kEpsGrid) {
        auto parts = measure_with_error(builtin_cantor3(), eps) +
                     measure_with_error(gap_piece, eps);
        auto whole = measure_with_error(limit_union(builtin_cantor3(), gap_piece),
                                        Rat(2) * eps);
        CHECK(parts.overlaps(whole));
    }
}

TEST_CASE("countable additivity at each truncation level") {
    auto tail = TailBound([](long level) {
        long n = 0;
        while ((1L << n) < 2 * level) ++n;
        return n;
    });
    auto s = countable_union(dyadic_singleton, tail);
    for (long level = 1; level <= 16; ++level) {
        long members = tail.bound_at(level);
        Rat partial(0);
        for (long i = 1; i <= members; ++i) partial += pow2(static_cast<int>(-i));
        ErrorInterval certified = measure_with_error(s, Rat(1, level));
        ErrorInterval truncated{partial - Rat(1, level), partial + Rat(1, level)};
        CHECK(certified.overlaps(truncated));
    }
}

TEST_CASE("tail bounds are monotone even when the raw map is not") {
    TailBound tail([](long level) { return level == 3 ? 1L : level; });
    long prev = 0;
    for (long level = 1; level <= 8; ++level) {
        long cur = tail.bound_at(level);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(tail.bound_at(0), std::invalid_argument);
}

#include "carat/laws.hpp"

namespace carat {

namespace {

Rat random_unit_rat(std::mt19937_64& rng, int max_den) {
    long den = 1 + static_cast<long>(rng() % static_cast<unsigned>(max_den));
    long num = static_cast<long>(rng() % static_cast<unsigned>(den + 1));
    return Rat(num, den);
}

struct Law {
    std::string name;
    // returns empty string on success, a rendered counterexample on failure
    std::function<std::string(std::mt19937_64&)> check;
};

}  // namespace

AlgebraElement random_element(std::mt19937_64& rng, int max_intervals, int max_den) {
    int count = static_cast<int>(rng() % static_cast<unsigned>(max_intervals + 1));
    std::vector<Interval> raw;
    raw.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rat x = random_unit_rat(rng, max_den);
        Rat y = random_unit_rat(rng, max_den);
        raw.push_back(x <= y ? Interval{x, y} : Interval{y, x});
    }
    return AlgebraElement::normalize(std::move(raw));
}

bool LawSuiteResult::all_passed() const {
    for (const auto& law : laws) {
        if (law.failures > 0) return false;
    }
    return true;
}

LawSuiteResult run_laws(int trials, std::uint64_t seed, DistanceFn dist_fn) {
    if (!dist_fn) dist_fn = [](const AlgebraElement& a, const AlgebraElement& b) {
        return distance(a, b);
    };

    auto draw = [](std::mt19937_64& rng) { return random_element(rng); };

    std::vector<Law> laws;
    laws.push_back({"identity d(a,a)=0", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng);
        if (dist_fn(a, a).is_zero()) return {};
        return "a=" + a.to_string();
    }});
    laws.push_back({"symmetry d(a,b)=d(b,a)", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng), b = draw(rng);
        if (dist_fn(a, b) == dist_fn(b, a)) return {};
        return "a=" + a.to_string() + " b=" + b.to_string();
    }});
    laws.push_back({"triangle d(a,c)<=d(a,b)+d(b,c)", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng), b = draw(rng), c = draw(rng);
        if (dist_fn(a, c) <= dist_fn(a, b) + dist_fn(b, c)) return {};
        return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
    }});
    laws.push_back({"union inequality", [&](std::mt19937_64& rng) -> std::string {
        auto a1 = draw(rng), a2 = draw(rng), a3 = draw(rng), a4 = draw(rng);
        if (dist_fn(set_union(a1, a2), set_union(a3, a4)) <=
            dist_fn(a1, a3) + dist_fn(a2, a4)) {
            return {};
        }
        return "a1=" + a1.to_string() + " a2=" + a2.to_string() + " a3=" + a3.to_string() +
               " a4=" + a4.to_string();
    }});
    laws.push_back({"complement isometry", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng), b = draw(rng);
        if (dist_fn(set_complement(a), set_complement(b)) == dist_fn(a, b)) return {};
        return "a=" + a.to_string() + " b=" + b.to_string();
    }});
    laws.push_back({"disjoint additivity", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng);
        auto b = set_intersect(draw(rng), set_complement(a));
        if (premeasure(set_union(a, b)) == premeasure(a) + premeasure(b)) return {};
        return "a=" + a.to_string() + " b=" + b.to_string();
    }});
    laws.push_back({"normalize idempotent", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng);
        if (AlgebraElement::normalize(a.intervals()) == a) return {};
        return "a=" + a.to_string();
    }});
    laws.push_back({"quotient metric d=0 iff equal", [&](std::mt19937_64& rng) -> std::string {
        auto a = draw(rng), b = draw(rng);
        if (dist_fn(a, b).is_zero() == (a == b)) return {};
        return "a=" + a.to_string() + " b=" + b.to_string();
    }});

    LawSuiteResult result;
    for (const auto& law : laws) {
        LawReport report;
        report.name = law.name;
        std::mt19937_64 rng(seed);  // each law sees the same stream
        for (int t = 0; t < trials; ++t) {
            ++report.trials;
            std::string failure = law.check(rng);
            if (!failure.empty()) {
                if (report.failures == 0) report.counterexample = failure;
                ++report.failures;
            }
        }
        result.laws.push_back(std::move(report));
    }
    return result;
}

}  // namespace carat

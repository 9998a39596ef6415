#include "carat/interval_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carat {

AlgebraElement AlgebraElement::normalize(std::vector<Interval> raw) {
    const Rat zero(0), one(1);
    for (const auto& iv : raw) {
        if (iv.lo < zero || iv.lo > one || iv.hi < zero || iv.hi > one) {
            throw std::out_of_range("interval endpoint outside [0,1]");
        }
    }
    std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
    // inputs produced by the set operations arrive sorted; skip the sort then
    bool sorted = true;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i].lo < raw[i - 1].lo) {
            sorted = false;
            break;
        }
    }
    if (!sorted) {
        std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo;
        });
    }

    AlgebraElement out;
    for (auto& iv : raw) {
        if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
            // overlapping or adjacent: extend the previous piece
            if (iv.hi > out.intervals_.back().hi) out.intervals_.back().hi = iv.hi;
        } else {
            out.intervals_.push_back(std::move(iv));
        }
    }
    return out;
}

AlgebraElement AlgebraElement::full_set() {
    return normalize({{Rat(0), Rat(1)}});
}

std::string AlgebraElement::to_string() const {
    if (intervals_.empty()) return "∅";
    std::ostringstream out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out << ' ';
        out << intervals_[i].lo.to_string() << ',' << intervals_[i].hi.to_string();
    }
    return out.str();
}

std::optional<AlgebraElement> AlgebraElement::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty() || text == "∅" || text == "empty") return AlgebraElement();

    std::vector<Interval> raw;
    std::istringstream in{std::string(text)};
    std::string segment;
    while (in >> segment) {
        auto comma = segment.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto lo = Rat::parse(segment.substr(0, comma));
        auto hi = Rat::parse(segment.substr(comma + 1));
        if (!lo || !hi) return std::nullopt;
        raw.push_back({*lo, *hi});
    }
    try {
        return normalize(std::move(raw));
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

AlgebraElement set_union(const AlgebraElement& a, const AlgebraElement& b) {
    std::vector<Interval> raw;
    raw.reserve(a.intervals().size() + b.intervals().size());
    std::merge(a.intervals().begin(), a.intervals().end(), b.intervals().begin(),
               b.intervals().end(), std::back_inserter(raw),
               [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return AlgebraElement::normalize(std::move(raw));
}

AlgebraElement set_intersect(const AlgebraElement& a, const AlgebraElement& b) {
    std::vector<Interval> raw;
    std::size_t i = 0, j = 0;
    const auto& xs = a.intervals();
    const auto& ys = b.intervals();
    while (i < xs.size() && j < ys.size()) {
        Rat lo = std::max(xs[i].lo, ys[j].lo);
        Rat hi = std::min(xs[i].hi, ys[j].hi);
        if (lo < hi) raw.push_back({lo, hi});
        if (xs[i].hi < ys[j].hi) ++i; else ++j;
    }
    return AlgebraElement::normalize(std::move(raw));
}

AlgebraElement set_complement(const AlgebraElement& a) {
    std::vector<Interval> raw;
    Rat cursor(0);
    for (const auto& iv : a.intervals()) {
        if (cursor < iv.lo) raw.push_back({cursor, iv.lo});
        cursor = iv.hi;
    }
    if (cursor < Rat(1)) raw.push_back({cursor, Rat(1)});
    return AlgebraElement::normalize(std::move(raw));
}

AlgebraElement set_sym_diff(const AlgebraElement& a, const AlgebraElement& b) {
    return set_union(set_intersect(a, set_complement(b)),
                     set_intersect(b, set_complement(a)));
}

Rat premeasure(const AlgebraElement& a) {
    Rat total(0);
    for (const auto& iv : a.intervals()) total += iv.length();
    return total;
}

Rat distance(const AlgebraElement& a, const AlgebraElement& b) {
    return premeasure(set_sym_diff(a, b));
}

bool is_subset(const AlgebraElement& a, const AlgebraElement& b) {
    return set_intersect(a, b) == a;
}

}  // namespace carat

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace carat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number, always in lowest terms with positive denominator.
/// The only number type used by the core: every measure value, distance and
/// error bound is a Rat, so identities can be tested with zero tolerance.
///
/// Values whose reduced numerator and denominator fit in 64 bits (all of the
/// interval endpoints that arise in practice; denominators like 3^18 appear
/// by the hundred thousand in deep Cantor stages) are kept inline and
/// combined through 128-bit intermediates. Anything larger is promoted to an
/// arbitrary-precision backend, transparently.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d);
    Rat(const BigInt& n, const BigInt& d);

    /// Parses "p/q" or a bare integer "p". Returns nullopt on anything else
    /// (including q == 0).
    static std::optional<Rat> parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return big_ ? big_->is_zero() : num_ == 0; }

    /// Renders as "p/q", denominator always present ("0/1", "1/1", ...).
    std::string to_string() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const;

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

private:
    static Rat reduce128(__int128 n, __int128 d);
    static Rat from_backend(BigRational value);
    static int compare(const Rat& a, const Rat& b);
    BigRational backend() const;
    bool is_small() const { return big_ == nullptr; }

    std::int64_t num_;
    std::int64_t den_;  // > 0 when inline
    std::shared_ptr<const BigRational> big_;  // set iff the value is promoted
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

/// 2^k as a Rat, k may be negative.
Rat pow2(int k);

/// Smallest positive integer L with L >= 1/eps. Requires eps > 0.
long ceil_reciprocal(const Rat& eps);

}  // namespace carat

#include "carat/rat.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace carat {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt to_big_int(__int128 v) {
    bool negative = v < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                     : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? -out : out;
}

bool parse_big_int(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        i = 1;
        if (i == text.size()) return false;
    }
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        v = v * 10 + (text[i] - '0');
    }
    out = negative ? -v : v;
    return true;
}

}  // namespace

Rat Rat::reduce128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    unsigned __int128 mag = n < 0 ? -static_cast<unsigned __int128>(n)
                                  : static_cast<unsigned __int128>(n);
    unsigned __int128 g = gcd128(mag, static_cast<unsigned __int128>(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (n >= -static_cast<__int128>(kInt64Max) && n <= static_cast<__int128>(kInt64Max) &&
        d <= static_cast<__int128>(kInt64Max)) {
        Rat out;
        out.num_ = static_cast<std::int64_t>(n);
        out.den_ = static_cast<std::int64_t>(d);
        return out;
    }
    return from_backend(BigRational(to_big_int(n), to_big_int(d)));
}

Rat Rat::from_backend(BigRational value) {
    BigInt n = boost::multiprecision::numerator(value);
    BigInt d = boost::multiprecision::denominator(value);
    if (n >= -kInt64Max && n <= kInt64Max && d <= kInt64Max) {
        Rat out;
        out.num_ = n.convert_to<std::int64_t>();
        out.den_ = d.convert_to<std::int64_t>();
        return out;
    }
    Rat out;
    out.num_ = 0;
    out.den_ = 1;
    out.big_ = std::make_shared<BigRational>(std::move(value));
    return out;
}

BigRational Rat::backend() const {
    if (big_) return *big_;
    return BigRational(num_, den_);
}

Rat::Rat(long long n, long long d) {
    *this = reduce128(n, d);
}

Rat::Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from_backend(BigRational(n, d));
}

BigInt Rat::numerator() const {
    return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_);
}

BigInt Rat::denominator() const {
    return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_);
}

std::optional<Rat> Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_big_int(text, num)) return std::nullopt;
    } else {
        if (!parse_big_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_big_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rat(num, den);
}

std::string Rat::to_string() const {
    if (big_) {
        return boost::multiprecision::numerator(*big_).str() + "/" +
               boost::multiprecision::denominator(*big_).str();
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat operator+(const Rat& a, const Rat& b) {
    if (a.is_small() && b.is_small()) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rat::reduce128(n, d);
    }
    return Rat::from_backend(a.backend() + b.backend());
}

Rat operator-(const Rat& a, const Rat& b) {
    if (a.is_small() && b.is_small()) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ -
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rat::reduce128(n, d);
    }
    return Rat::from_backend(a.backend() - b.backend());
}

Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_small() && b.is_small()) {
        return Rat::reduce128(static_cast<__int128>(a.num_) * b.num_,
                              static_cast<__int128>(a.den_) * b.den_);
    }
    return Rat::from_backend(a.backend() * b.backend());
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        return Rat::reduce128(static_cast<__int128>(a.num_) * b.den_,
                              static_cast<__int128>(a.den_) * b.num_);
    }
    return Rat::from_backend(a.backend() / b.backend());
}

Rat Rat::operator-() const {
    if (is_small()) {
        Rat out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }
    return from_backend(-*big_);
}

int Rat::compare(const Rat& a, const Rat& b) {
    if (a.is_small() && b.is_small()) {
        __int128 left = static_cast<__int128>(a.num_) * b.den_;
        __int128 right = static_cast<__int128>(b.num_) * a.den_;
        return left < right ? -1 : (left > right ? 1 : 0);
    }
    BigRational left = a.backend();
    BigRational right = b.backend();
    return left < right ? -1 : (left > right ? 1 : 0);
}

Rat pow2(int k) {
    BigInt p = BigInt(1) << (k >= 0 ? k : -k);
    return k >= 0 ? Rat(p, BigInt(1)) : Rat(BigInt(1), p);
}

long ceil_reciprocal(const Rat& eps) {
    if (eps <= Rat(0)) throw std::invalid_argument("eps must be positive");
    BigInt num = eps.numerator();
    BigInt den = eps.denominator();
    BigInt level = (den + num - 1) / num;
    if (level < 1) level = 1;
    return level.convert_to<long>();
}

}  // namespace carat

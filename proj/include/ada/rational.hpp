#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ada {

// Exact rational number on 64-bit integers, always stored normalized
// (gcd(num, den) == 1, den > 0). All arithmetic goes through 128-bit
// intermediates and refuses to overflow silently.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)

    Rat(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n, d);
        num_ = g ? n / g : n;
        den_ = g ? d / g : d;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
        const i128 lhs = i128(a.num_) * b.den_;
        const i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Representative in [0, 1) of this value mod 1.
    Rat mod1() const {
        i128 n = i128(num_) % den_;
        if (n < 0) n += den_;
        return make(n, den_);
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: 64-bit overflow");
        Rat r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { const i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace ada

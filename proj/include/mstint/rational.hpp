#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mstint {

// Checked 64-bit helpers. Overflow aborts via exception, never wraps.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// Exact rational with int64 numerator and positive int64 denominator.
// Kept normalized; all comparisons exact via 128-bit cross products.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t value) : num_(value), den_(1) {}
    Rational(int64_t num, int64_t den) : num_(num), den_(den) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    int64_t num_;
    int64_t den_;
};

// Exact comparison of a/b against c/d without normalizing; b, d >= 0 with
// b == 0 meaning +infinity (used for efficiency ratios).
inline int compare_ratio(int64_t a, int64_t b, int64_t c, int64_t d) {
    if (b == 0 && d == 0) return 0;
    if (b == 0) return 1;
    if (d == 0) return -1;
    __int128 lhs = (__int128)a * d;
    __int128 rhs = (__int128)c * b;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace mstint

#ifndef CHROMA_RATIONAL_HPP
#define CHROMA_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chroma {

/// Exact rational over 64-bit integers, always reduced with positive
/// denominator. Magnitudes here stay tiny (bound arithmetic over counts),
/// so plain 64-bit cross-multiplication is safe.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}
    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr Rational operator+(Rational o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(Rational o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator*(Rational o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rational operator/(Rational o) const {
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    constexpr Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    constexpr bool operator==(const Rational&) const = default;
    constexpr auto operator<=>(const Rational& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    constexpr bool is_integer() const { return den_ == 1; }

    /// Largest integer <= value / smallest integer >= value.
    constexpr std::int64_t floor() const {
        return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
    }
    constexpr std::int64_t ceil() const { return -(-*this).floor(); }

    /// Serialized as "p/q", reduced, q >= 1; integers render as "p/1".
    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace chroma

#endif

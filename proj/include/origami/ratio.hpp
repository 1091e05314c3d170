#ifndef ORIGAMI_RATIO_HPP
#define ORIGAMI_RATIO_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace origami {

/// Exact fraction of 64-bit integers, always in lowest terms with a
/// positive denominator.  Big enough for every quantity this library
/// compares exactly (square counts, direction norms, gap lengths).
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n) : num(n), den(1) {}
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.num, a.den * b.den);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num == 0) throw std::invalid_argument("division by zero ratio");
        return Ratio(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a < b || a == b; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace origami

#endif

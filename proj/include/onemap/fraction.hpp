#ifndef ONEMAP_FRACTION_HPP
#define ONEMAP_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace onemap {

// Exact rational arithmetic for edge-density bounds (13/4, 5/2, ...).
// Values stay tiny, so int64 never overflows here.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n) : num(n), den(1) {}
    Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Fraction operator+(Fraction a, Fraction b) {
        return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Fraction operator-(Fraction a, Fraction b) {
        return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Fraction operator*(Fraction a, Fraction b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) {
        return a.num * b.den <= b.num * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
        return os << f.str();
    }
};

} // namespace onemap

#endif

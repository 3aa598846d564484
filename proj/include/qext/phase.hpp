#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qext {

// Additive phase p/q in Q/Z, standing for the circle value exp(2*pi*i*p/q).
// Always kept reduced with 0 <= num < den. Arithmetic is exact; all cocycle
// and coboundary relations are linear in this representation.
struct Phase {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Phase() = default;
    Phase(std::int64_t p, std::int64_t q) : num(p), den(q) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("Phase: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        num %= den;
        if (num < 0) num += den;
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }

    Phase operator+(const Phase& o) const {
        std::int64_t l = std::lcm(den, o.den);
        return Phase(num * (l / den) + o.num * (l / o.den), l);
    }
    Phase operator-() const { return Phase(-num, den); }
    Phase operator-(const Phase& o) const { return *this + (-o); }
    Phase& operator+=(const Phase& o) { *this = *this + o; return *this; }
    Phase& operator-=(const Phase& o) { *this = *this - o; return *this; }

    // k-fold sum in Q/Z (k may be negative).
    Phase times(std::int64_t k) const { return Phase(num * k, den); }

    bool operator==(const Phase& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Phase& o) const { return !(*this == o); }
    bool operator<(const Phase& o) const {  // total order for canonical sorting
        return num * o.den < o.num * den;
    }

    double radians() const;  // 2*pi*num/den
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace qext

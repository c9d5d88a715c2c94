#ifndef PRG_GAUSSIAN_HPP
#define PRG_GAUSSIAN_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prg {

/// Gaussian integer a + bi with exact 64-bit components.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    constexpr GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    constexpr GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    constexpr GaussianInt operator-() const { return {-re, -im}; }
    constexpr GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    constexpr GaussianInt conj() const { return {re, -im}; }

    /// |z|^2, always a nonnegative ordinary integer.
    constexpr std::int64_t norm2() const { return re * re + im * im; }

    constexpr bool operator==(const GaussianInt& o) const = default;

    std::string str() const {
        if (im == 0) return std::to_string(re);
        std::string s;
        if (re != 0) s = std::to_string(re) + (im > 0 ? "+" : "");
        if (im == 1) s += "i";
        else if (im == -1) s += "-i";
        else s += std::to_string(im) + "i";
        return s;
    }
};

/// The four units {1, i, -1, -i}, indexed by the power of i.
inline constexpr std::array<GaussianInt, 4> kUnits = {
    GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0}, GaussianInt{0, -1}};

/// Euclidean division in Z[i]: quotient with both components rounded to nearest.
inline GaussianInt gi_div_round(const GaussianInt& a, const GaussianInt& b) {
    const std::int64_t n = b.norm2();
    if (n == 0) throw std::domain_error("gaussian division by zero");
    const GaussianInt p = a * b.conj();
    auto round_div = [](std::int64_t x, std::int64_t d) {
        // round half away from zero; any nearest rounding keeps the remainder small
        const std::int64_t q = x / d, r = x % d;
        if (2 * std::abs(r) > d) return q + (x > 0 ? 1 : -1) * (d > 0 ? 1 : -1);
        return q;
    };
    return {round_div(p.re, n), round_div(p.im, n)};
}

inline GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        const GaussianInt q = gi_div_round(a, b);
        const GaussianInt r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

/// Gaussian rational num/den, always reduced, den >= 1.
struct GaussianRational {
    GaussianInt num;
    std::int64_t den = 1;

    GaussianRational() = default;
    GaussianRational(GaussianInt n, std::int64_t d = 1) : num(n), den(d) { reduce(); }
    GaussianRational(std::int64_t r) : num(r), den(1) {}

    void reduce() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        const std::int64_t g =
            std::gcd(std::gcd(std::abs(num.re), std::abs(num.im)), den);
        if (g > 1) {
            num.re /= g;
            num.im /= g;
            den /= g;
        }
        if (num.is_zero()) den = 1;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den == 1; }

    GaussianRational operator+(const GaussianRational& o) const {
        return {num * GaussianInt{o.den} + o.num * GaussianInt{den}, den * o.den};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {num * GaussianInt{o.den} - o.num * GaussianInt{den}, den * o.den};
    }
    GaussianRational operator-() const {
        GaussianRational r = *this;
        r.num = -r.num;
        return r;
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {num * o.num, den * o.den};
    }
    GaussianRational conj() const {
        GaussianRational r = *this;
        r.num = r.num.conj();
        return r;
    }

    bool operator==(const GaussianRational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (den == 1) return num.str();
        return (num.im == 0 ? num.str() : "(" + num.str() + ")") + "/" + std::to_string(den);
    }
};

}  // namespace prg

#endif

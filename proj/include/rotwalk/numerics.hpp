#pragma once

// Floating-point helpers shared across the library: error-free transforms
// (two_sum / two_prod), compensated reduction of n*alpha mod 1, Kahan
// summation, and rounding of exact big-integer ratios to double.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace rotwalk {

using BigInt = boost::multiprecision::cpp_int;

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    const double e = (a - (s - t)) + (b - t);
    return {s, e};
}

inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
    const DoubleDouble s = two_sum(a.hi, b.hi);
    const DoubleDouble r = two_sum(s.hi, s.lo + a.lo + b.lo);
    return r;
}

// Fractional part of hi+lo, wrapped into [0,1). The subtraction hi - floor
// is exact for the magnitudes handled here (|hi| well below 2^52).
inline double frac_dd(DoubleDouble x) {
    const double f = std::floor(x.hi + x.lo);
    double r = (x.hi - f) + x.lo;
    if (r >= 1.0) r -= 1.0;
    if (r < 0.0) r += 1.0;
    return r;
}

// frac(n * a) with the product error compensated; n must be exact in double.
inline double frac_mul(std::int64_t n, double a) {
    return frac_dd(two_prod(static_cast<double>(n), a));
}

// Distance from x in [0,1) to the nearest of {0, 1}.
inline double unit_dist(double x) {
    return x < 0.5 ? x : 1.0 - x;
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// num/den rounded to double; requires 0 <= num <= den, den > 0. Works for
// magnitudes far beyond double range (tiny ratios come out denormal, not 0).
double big_ratio(const BigInt& num, const BigInt& den);

// Uniform integer in [0, bound) by rejection from raw 64-bit draws, so the
// result stream does not depend on any standard-library distribution.
template <class Rng>
std::uint64_t bounded_rand(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

}  // namespace rotwalk

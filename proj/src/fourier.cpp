#include "rotwalk/fourier.hpp"

#include "rotwalk/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rotwalk {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// |q|^k via exp(k log q). Terms below e^-45 (~3e-20) are flushed to zero:
// summed over a 10^6-term scan they stay under 1e-13 of the 4/(M+1) floor.
double magnitude_power(double mag, long k) {
    if (k == 0) return 1.0;
    if (mag <= 0.0) return 0.0;
    if (mag >= 1.0) return 1.0;
    const double t = static_cast<double>(k) * std::log(mag);
    return t < -45.0 ? 0.0 : std::exp(t);
}

}  // namespace

double fourier_coefficient(const AlphaVector& alpha, std::int64_t m) {
    KahanSum sum;
    for (const double a : alpha.entries)
        sum.add(std::cos(two_pi * frac_mul(m, a)));
    return sum.value() / static_cast<double>(alpha.d());
}

std::vector<double> coefficient_magnitudes(const AlphaVector& alpha, std::int64_t m_max) {
    std::vector<double> mags;
    mags.reserve(static_cast<std::size_t>(m_max));
    for (std::int64_t m = 1; m <= m_max; ++m)
        mags.push_back(std::abs(fourier_coefficient(alpha, m)));
    return mags;
}

double su_lower_bound(std::span<const double> mags, long k, std::int64_t m_max) {
    if (m_max < 1) throw std::invalid_argument("su_lower_bound: m_max must be >= 1");
    if (m_max > static_cast<std::int64_t>(mags.size()))
        throw std::invalid_argument("su_lower_bound: magnitudes table too short");
    KahanSum sum;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const double q = mags[static_cast<std::size_t>(m - 1)];
        sum.add(magnitude_power(q, 2 * k) / (static_cast<double>(m) * static_cast<double>(m)));
    }
    return std::sqrt(2.0 / (std::numbers::pi * std::numbers::pi) * sum.value());
}

double su_lower_bound(const AlphaVector& alpha, long k, std::int64_t m_max) {
    return su_lower_bound(coefficient_magnitudes(alpha, m_max), k, m_max);
}

double erdos_turan_upper(std::span<const double> mags, long k, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("erdos_turan_upper: M must be >= 1");
    if (m > static_cast<std::int64_t>(mags.size()))
        throw std::invalid_argument("erdos_turan_upper: magnitudes table too short");
    KahanSum sum;
    for (std::int64_t i = 1; i <= m; ++i)
        sum.add(magnitude_power(mags[static_cast<std::size_t>(i - 1)], k) /
                static_cast<double>(i));
    return 4.0 / static_cast<double>(m + 1) + 4.0 / std::numbers::pi * sum.value();
}

double erdos_turan_upper(const AlphaVector& alpha, long k, std::int64_t m) {
    return erdos_turan_upper(coefficient_magnitudes(alpha, m), k, m);
}

EtOptimum optimize_et_m(std::span<const double> mags, long k) {
    if (mags.empty()) throw std::invalid_argument("optimize_et_m: empty magnitudes table");
    KahanSum sum;
    EtOptimum best{0, 0.0};
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(mags.size()); ++m) {
        sum.add(magnitude_power(mags[static_cast<std::size_t>(m - 1)], k) /
                static_cast<double>(m));
        const double bound =
            4.0 / static_cast<double>(m + 1) + 4.0 / std::numbers::pi * sum.value();
        if (best.m == 0 || bound < best.bound) best = {m, bound};
    }
    return best;
}

EtOptimum optimize_et_m(const AlphaVector& alpha, long k, std::int64_t m_cap) {
    if (m_cap < 1) throw std::invalid_argument("optimize_et_m: m_cap must be >= 1");
    return optimize_et_m(coefficient_magnitudes(alpha, m_cap), k);
}

std::int64_t analytic_truncation_m(double beta, long k, int d) {
    if (k < 1) throw std::invalid_argument("analytic_truncation_m: k must be >= 1");
    const double v =
        0.5 * std::pow(beta * beta * static_cast<double>(k) / std::pow(static_cast<double>(d), 3),
                       static_cast<double>(d) / 2.0);
    if (!(v >= 1.0)) return 1;
    return static_cast<std::int64_t>(std::floor(v));
}

EnvelopeConstants envelope_constants(int d, double b, double beta) {
    if (d < 1) throw std::invalid_argument("envelope_constants: dimension must be >= 1");
    if (!(b > 0.0)) throw std::invalid_argument("envelope_constants: b must be positive");
    if (!(beta > 0.0)) throw std::invalid_argument("envelope_constants: beta must be positive");
    const double rd = std::sqrt(static_cast<double>(d));
    EnvelopeConstants c;
    c.d = d;
    c.b_used = b;
    c.beta_used = beta;
    c.c1 = 0.0947 * std::pow(rd / (5.0 * b), d);
    c.c2 = 19.857 * std::pow(static_cast<double>(d) * rd / beta, d);
    return c;
}

}  // namespace rotwalk

#pragma once

// Fourier coefficients of the generating measure and the discrepancy
// bounds built from them: the L2-type lower bound, the Erdos-Turan upper
// bound with truncation optimization, and the explicit constants of the
// k^{-d/2} envelope.

#include "rotwalk/alpha.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rotwalk {

inline constexpr std::int64_t default_su_m_max = 10'000;

// m-th Fourier coefficient of the step law: (1/d) sum_l cos(2 pi m a_l).
// Even in m; m*a_l is reduced mod 1 with compensated arithmetic before the
// cosine so large m do not lose precision.
double fourier_coefficient(const AlphaVector& alpha, std::int64_t m);

// |coefficient(m)| for m = 1..m_max (index m-1), shared by the bound scans.
std::vector<double> coefficient_magnitudes(const AlphaVector& alpha, std::int64_t m_max);

// sqrt((2/pi^2) sum_{m=1}^{m_max} |Q^(m)|^{2k} / m^2). Every term is
// nonnegative, so any truncation is itself a valid lower bound on the
// discrepancy of the k-step distribution.
double su_lower_bound(const AlphaVector& alpha, long k, std::int64_t m_max = default_su_m_max);
double su_lower_bound(std::span<const double> mags, long k, std::int64_t m_max);

// Erdos-Turan: 4/(M+1) + (4/pi) sum_{m=1}^{M} |Q^(m)|^k / m.
double erdos_turan_upper(const AlphaVector& alpha, long k, std::int64_t m);
double erdos_turan_upper(std::span<const double> mags, long k, std::int64_t m);

struct EtOptimum {
    std::int64_t m;
    double bound;
};

// The M in [1, m_cap] minimizing the Erdos-Turan bound, found by a single
// incremental scan that reuses partial sums (ties go to the smaller M).
EtOptimum optimize_et_m(const AlphaVector& alpha, long k, std::int64_t m_cap);
EtOptimum optimize_et_m(std::span<const double> mags, long k);

// Closed-form truncation floor((beta^2 k / d^3)^{d/2} / 2), clamped to 1.
std::int64_t analytic_truncation_m(double beta, long k, int d);

struct EnvelopeConstants {
    double c1;
    double c2;
    int d;
    double b_used;
    double beta_used;
};

// c1 = 0.0947 (sqrt(d)/(5 b))^d and c2 = 19.857 (d sqrt(d)/beta)^d, the
// envelope constants for a tuple with approximation constants b and beta.
// Throws std::invalid_argument when b or beta is not positive.
EnvelopeConstants envelope_constants(int d, double b, double beta);

}  // namespace rotwalk

#include "rotwalk/diophantine.hpp"

#include "rotwalk/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rotwalk {

namespace {

// Streaming N*alpha mod 1, one accumulator per coordinate. Each advance
// adds alpha_j with a compensated sum; every 2^16 steps the accumulator is
// re-anchored from an exact product so drift stays bounded at any horizon.
class AngleStream {
public:
    explicit AngleStream(std::span<const double> alpha)
        : alpha_(alpha.begin(), alpha.end()), acc_(alpha.size()) {}

    // Advance to the next multiple and return the squared distance of
    // N*alpha to the nearest integer lattice point.
    double advance() {
        ++n_;
        const bool anchor = (n_ & 0xFFFF) == 0;
        double d2 = 0.0;
        for (std::size_t j = 0; j < alpha_.size(); ++j) {
            DoubleDouble& a = acc_[j];
            if (anchor) {
                const DoubleDouble p = two_prod(static_cast<double>(n_), alpha_[j]);
                const double f = std::floor(p.hi + p.lo);
                a = two_sum(p.hi - f, p.lo);
            } else {
                a = dd_add(a, {alpha_[j], 0.0});
                if (a.hi >= 1.0) a.hi -= 1.0;
            }
            double v = a.hi + a.lo;
            if (v >= 1.0) v -= 1.0;
            if (v < 0.0) v += 1.0;
            const double dist = unit_dist(v);
            d2 += dist * dist;
        }
        return d2;
    }

    std::int64_t n() const { return n_; }

private:
    std::vector<double> alpha_;
    std::vector<DoubleDouble> acc_;
    std::int64_t n_ = 0;
};

double nth_root(std::int64_t n, int d) {
    if (d == 1) return static_cast<double>(n);
    if (d == 2) return std::sqrt(static_cast<double>(n));
    return std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d));
}

// q^d saturated at cap so the inner scan length never overflows.
std::int64_t pow_saturated(std::int64_t q, int d, std::int64_t cap) {
    std::int64_t v = 1;
    for (int j = 0; j < d; ++j) {
        if (v > cap / q) return cap;
        v *= q;
    }
    return v < cap ? v : cap;
}

}  // namespace

double nearest_int_dist(std::span<const double> x) {
    double d2 = 0.0;
    for (const double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("nearest_int_dist: non-finite entry");
        double f = v - std::floor(v);
        if (f >= 1.0) f -= 1.0;
        const double dist = unit_dist(f);
        d2 += dist * dist;
    }
    return std::sqrt(d2);
}

BetaHat beta_hat(const AlphaVector& alpha, std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("beta_hat: n_max must be >= 1");
    AngleStream stream(alpha.entries);
    BetaHat result{0.0, 0, n_max};
    double best = -1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double score = nth_root(n, alpha.d()) * std::sqrt(stream.advance());
        if (best < 0.0 || score < best) {
            best = score;
            result.argmin = n;
        }
    }
    result.value = best;
    return result;
}

DirichletBHat dirichlet_b_hat(const AlphaVector& alpha, std::int64_t q_max,
                              std::int64_t per_q_cap) {
    if (q_max < 1) throw std::invalid_argument("dirichlet_b_hat: q_max must be >= 1");
    if (per_q_cap < 1) throw std::invalid_argument("dirichlet_b_hat: per_q_cap must be >= 1");
    AngleStream stream(alpha.entries);
    double prefix_min = -1.0;
    double best = 0.0;
    for (std::int64_t q = 1; q <= q_max; ++q) {
        const std::int64_t n_target = pow_saturated(q, alpha.d(), per_q_cap);
        while (stream.n() < n_target) {
            const double dist = std::sqrt(stream.advance());
            if (prefix_min < 0.0 || dist < prefix_min) prefix_min = dist;
        }
        const double witness = static_cast<double>(q) * prefix_min;
        if (witness > best) best = witness;
    }
    return {best, q_max, per_q_cap};
}

double davenport_mahler_threshold() {
    return std::sqrt(2.0 / std::sqrt(23.0));
}

DmVerdict davenport_mahler_check(double beta_candidate) {
    if (!(beta_candidate >= 0.0))
        throw std::invalid_argument("davenport_mahler_check: beta must be >= 0");
    return beta_candidate > davenport_mahler_threshold() ? DmVerdict::exceeds_dm : DmVerdict::ok;
}

}  // namespace rotwalk

#pragma once

// Nearest-lattice-point distances of generator multiples and the
// finite-horizon approximation constants they induce: beta_hat (how badly
// approximable the tuple looks up to a scan horizon) and b_hat (the
// smallest Dirichlet witness constant up to a horizon).

#include "rotwalk/alpha.hpp"

#include <cstdint>
#include <span>

namespace rotwalk {

inline constexpr std::int64_t default_per_q_cap = 1'000'000;

// Euclidean distance from x to the nearest point of Z^d.
double nearest_int_dist(std::span<const double> x);

struct BetaHat {
    double value;         // min over 1 <= N <= n_max of N^{1/d} <N alpha>
    std::int64_t argmin;  // first N attaining it
    std::int64_t n_max;
};

// Streaming scan; N*alpha mod 1 is accumulated with compensated sums and
// re-anchored from a full multiplication every 2^16 steps.
BetaHat beta_hat(const AlphaVector& alpha, std::int64_t n_max);

struct DirichletBHat {
    double value;  // max over q <= q_max of q * min_{N <= min(q^d, cap)} <N alpha>
    std::int64_t q_max;
    std::int64_t per_q_cap;
};

// One running pass over N serves every q: the inner minimum is a prefix
// minimum of the same distance stream.
DirichletBHat dirichlet_b_hat(const AlphaVector& alpha, std::int64_t q_max,
                              std::int64_t per_q_cap = default_per_q_cap);

// (2/sqrt(23))^{1/2} ~ 0.64578: no 2-tuple has an approximation constant
// beyond this.
double davenport_mahler_threshold();

enum class DmVerdict { ok, exceeds_dm };

// EXCEEDS_DM signals a beta claim no 2-tuple can satisfy (strictly above
// the threshold); the boundary itself passes.
DmVerdict davenport_mahler_check(double beta_candidate);

}  // namespace rotwalk

#pragma once

// Exact walk distribution on the coefficient lattice Z^d: for each integer
// vector m, the number of length-k step sequences whose signed generator
// counts equal m, over the implied denominator (2d)^k. Counts are exact
// big integers so downstream checks can rely on them bit for bit.

#include "rotwalk/numerics.hpp"

#include <span>
#include <vector>

namespace rotwalk {

inline constexpr long long default_support_cap = 5'000'000;

// Dense support (2k+1)^d, saturating at 2^62 to stay overflow-safe.
long long predicted_support(int d, long k);

class LatticeDistribution {
public:
    // Starts at k = 0 (unit mass at the origin), with storage sized so the
    // distribution can be stepped up to k_budget. Throws LimitError when
    // (2*k_budget+1)^d exceeds support_cap.
    LatticeDistribution(int d, long k_budget, long long support_cap = default_support_cap);

    // One convolution step: counts(m) <- sum_j counts(m - e_j) + counts(m + e_j).
    void step();
    void step_to(long k);

    int d() const { return d_; }
    long k() const { return k_; }
    long k_budget() const { return k_budget_; }
    const BigInt& total() const { return total_; }  // (2d)^k
    long long support_size() const;                 // nonzero counts

    // Count at coefficient vector m; zero outside the stored box.
    const BigInt& count(std::span<const long> m) const;

    // Visit every nonzero (m, count), m in lexicographic order.
    template <class F>
    void for_each(F&& f) const {
        std::vector<long> m(static_cast<std::size_t>(d_), -k_);
        while (true) {
            const BigInt& c = counts_[index_of(m)];
            if (c != 0) f(std::span<const long>(m), c);
            int axis = d_ - 1;
            while (axis >= 0 && m[static_cast<std::size_t>(axis)] == k_) {
                m[static_cast<std::size_t>(axis)] = -k_;
                --axis;
            }
            if (axis < 0) break;
            ++m[static_cast<std::size_t>(axis)];
        }
    }

private:
    int d_;
    long k_ = 0;
    long k_budget_;
    long extent_;                     // 2*k_budget+1 per axis
    std::vector<long long> strides_;
    std::vector<BigInt> counts_;
    std::vector<BigInt> scratch_;
    BigInt total_ = 1;
    BigInt zero_ = 0;

    std::size_t index_of(std::span<const long> m) const;
};

// The k-fold convolution power of the step law, computed exactly.
LatticeDistribution convolve_power(int d, long k, long long support_cap = default_support_cap);

}  // namespace rotwalk

#include "rotwalk/lattice.hpp"

#include "rotwalk/errors.hpp"

#include <stdexcept>
#include <string>

namespace rotwalk {

long long predicted_support(int d, long k) {
    const long long side = 2LL * k + 1;
    long long total = 1;
    constexpr long long kSat = 1LL << 62;
    for (int j = 0; j < d; ++j) {
        if (total > kSat / side) return kSat;
        total *= side;
    }
    return total;
}

LatticeDistribution::LatticeDistribution(int d, long k_budget, long long support_cap)
    : d_(d), k_budget_(k_budget), extent_(2 * k_budget + 1) {
    if (d < 1) throw std::invalid_argument("lattice: dimension must be >= 1");
    if (k_budget < 0) throw std::invalid_argument("lattice: step count must be >= 0");
    const long long need = predicted_support(d, k_budget);
    if (need > support_cap)
        throw LimitError("lattice: support " + std::to_string(need) + " for d=" +
                         std::to_string(d) + ", k=" + std::to_string(k_budget) +
                         " exceeds cap " + std::to_string(support_cap));

    strides_.resize(static_cast<std::size_t>(d));
    long long s = 1;
    for (int j = d - 1; j >= 0; --j) {
        strides_[static_cast<std::size_t>(j)] = s;
        s *= extent_;
    }
    counts_.assign(static_cast<std::size_t>(s), BigInt(0));
    scratch_.assign(static_cast<std::size_t>(s), BigInt(0));

    std::vector<long> origin(static_cast<std::size_t>(d), 0);
    counts_[index_of(origin)] = 1;
}

std::size_t LatticeDistribution::index_of(std::span<const long> m) const {
    long long idx = 0;
    for (int j = 0; j < d_; ++j)
        idx += (m[static_cast<std::size_t>(j)] + k_budget_) * strides_[static_cast<std::size_t>(j)];
    return static_cast<std::size_t>(idx);
}

const BigInt& LatticeDistribution::count(std::span<const long> m) const {
    for (int j = 0; j < d_; ++j) {
        const long c = m[static_cast<std::size_t>(j)];
        if (c < -k_budget_ || c > k_budget_) return zero_;
    }
    return counts_[index_of(m)];
}

void LatticeDistribution::step() {
    if (k_ >= k_budget_)
        throw std::invalid_argument("lattice: stepping past the allocated budget");

    const long r = k_ + 1;  // new support radius per axis
    std::vector<long> m(static_cast<std::size_t>(d_), -r);
    while (true) {
        const std::size_t idx = index_of(m);
        BigInt& out = scratch_[idx];
        out = 0;
        for (int j = 0; j < d_; ++j) {
            const long c = m[static_cast<std::size_t>(j)];
            const long long stride = strides_[static_cast<std::size_t>(j)];
            if (c - 1 >= -k_budget_) out += counts_[idx - static_cast<std::size_t>(stride)];
            if (c + 1 <= k_budget_) out += counts_[idx + static_cast<std::size_t>(stride)];
        }
        int axis = d_ - 1;
        while (axis >= 0 && m[static_cast<std::size_t>(axis)] == r) {
            m[static_cast<std::size_t>(axis)] = -r;
            --axis;
        }
        if (axis < 0) break;
        ++m[static_cast<std::size_t>(axis)];
    }
    counts_.swap(scratch_);
    ++k_;
    total_ *= 2 * d_;
}

void LatticeDistribution::step_to(long k) {
    while (k_ < k) step();
}

long long LatticeDistribution::support_size() const {
    long long n = 0;
    for_each([&](std::span<const long>, const BigInt&) { ++n; });
    return n;
}

LatticeDistribution convolve_power(int d, long k, long long support_cap) {
    LatticeDistribution dist(d, k, support_cap);
    dist.step_to(k);
    return dist;
}

}  // namespace rotwalk

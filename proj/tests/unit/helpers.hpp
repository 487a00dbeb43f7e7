#pragma once

// Shared test utilities: deterministic uniform doubles (independent of the
// standard library's distributions) and random atomic measures.

#include "rotwalk/measure.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace test_helpers {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random measure with up to max_atoms atoms, weights normalized to 1.
inline rotwalk::AtomicMeasure random_measure(std::mt19937_64& rng, std::size_t max_atoms) {
    const std::size_t n = 1 + rng() % max_atoms;
    std::vector<double> pos, w;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pos.push_back(uniform01(rng));
        w.push_back(uniform01(rng) + 1e-3);
        total += w.back();
    }
    for (double& x : w) x /= total;
    return rotwalk::make_measure(pos, w);
}

}  // namespace test_helpers

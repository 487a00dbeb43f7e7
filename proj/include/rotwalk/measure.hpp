#pragma once

// Finitely supported probability measures on the circle [0,1) and their
// discrepancy sup_I |P(I) - U(I)| from the uniform measure, where I ranges
// over connected arcs.

#include "rotwalk/alpha.hpp"
#include "rotwalk/lattice.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rotwalk {

struct Atom {
    double position;  // in [0,1)
    double weight;    // in (0,1]
};

// Atoms sorted strictly ascending by position; weights sum to 1.
struct AtomicMeasure {
    std::vector<Atom> atoms;

    std::size_t size() const { return atoms.size(); }
};

// Build a measure from raw atom arrays: sorts, merges bit-identical
// positions, and validates the invariants (positions in [0,1), positive
// weights, total weight 1 within 1e-12).
AtomicMeasure make_measure(std::span<const double> positions, std::span<const double> weights);

// Project lattice counts to the circle: an atom at frac(sum_j m_j alpha_j)
// with weight count/(2d)^k. Positions are computed with compensated dot
// products; only bit-identical positions are merged (a tolerance merge
// would silently move weight between genuinely distinct atoms).
AtomicMeasure atoms_on_circle(const LatticeDistribution& dist, const AlphaVector& alpha);

// Exact discrepancy as the range of the centered CDF over atom-adjacent
// limits, clamped against the boundary value 0.
double discrepancy_exact(const AtomicMeasure& p);

// Independent oracle: enumerate every arc with endpoints at atom positions,
// all four open/closed endpoint combinations, plus complements, and return
// the largest |P(I) - U(I)|. Quadratic in atoms; refuses above atom_cap.
double discrepancy_oracle(const AtomicMeasure& p, std::size_t atom_cap = 64);

// Empirical measure of n_samples independent k-step walks, deterministic
// for a fixed seed. Samples landing on the same circle point are merged.
AtomicMeasure sample_walk(const AlphaVector& alpha, long k, long long n_samples,
                          std::uint64_t seed);

}  // namespace rotwalk

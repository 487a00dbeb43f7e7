#include "rotwalk/measure.hpp"

#include "rotwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace rotwalk {

namespace {

// frac(sum_j m_j alpha_j) with an error-compensated dot product.
double circle_position(std::span<const long> m, std::span<const double> alpha) {
    DoubleDouble acc;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        acc = dd_add(acc, two_prod(static_cast<double>(m[j]), alpha[j]));
    return frac_dd(acc);
}

AtomicMeasure sorted_merged(std::vector<Atom>&& atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    AtomicMeasure p;
    p.atoms.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!p.atoms.empty() && p.atoms.back().position == a.position)
            p.atoms.back().weight += a.weight;
        else
            p.atoms.push_back(a);
    }
    return p;
}

void validate(const AtomicMeasure& p) {
    if (p.atoms.empty()) throw std::invalid_argument("measure: no atoms");
    KahanSum total;
    double prev = -1.0;
    for (const Atom& a : p.atoms) {
        if (!(a.position >= 0.0 && a.position < 1.0))
            throw std::invalid_argument("measure: position outside [0,1)");
        if (!(a.position > prev))
            throw std::invalid_argument("measure: positions not strictly increasing");
        if (!(a.weight > 0.0))
            throw std::invalid_argument("measure: nonpositive weight");
        total.add(a.weight);
        prev = a.position;
    }
    if (std::abs(total.value() - 1.0) > 1e-12)
        throw std::invalid_argument("measure: weights sum to " + std::to_string(total.value()));
}

}  // namespace

AtomicMeasure make_measure(std::span<const double> positions, std::span<const double> weights) {
    if (positions.size() != weights.size())
        throw std::invalid_argument("measure: position/weight length mismatch");
    std::vector<Atom> atoms;
    atoms.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        atoms.push_back({positions[i], weights[i]});
    AtomicMeasure p = sorted_merged(std::move(atoms));
    validate(p);
    return p;
}

AtomicMeasure atoms_on_circle(const LatticeDistribution& dist, const AlphaVector& alpha) {
    if (dist.d() != alpha.d())
        throw std::invalid_argument("atoms_on_circle: dimension mismatch");

    std::vector<Atom> atoms;
    dist.for_each([&](std::span<const long> m, const BigInt& c) {
        atoms.push_back({circle_position(m, alpha.entries), big_ratio(c, dist.total())});
    });
    AtomicMeasure p = sorted_merged(std::move(atoms));
    validate(p);
    return p;
}

double discrepancy_exact(const AtomicMeasure& p) {
    validate(p);
    // Centered CDF H(x) = P([0,x]) - x jumps by w_i at each atom and falls
    // with slope -1 between atoms; its sup is attained at an atom, its inf
    // at a left limit, and the wrap point contributes the boundary value 0.
    KahanSum cum;
    double hi = 0.0;
    double lo = 0.0;
    for (const Atom& a : p.atoms) {
        const double before = cum.value() - a.position;
        cum.add(a.weight);
        const double at = cum.value() - a.position;
        if (at > hi) hi = at;
        if (before < lo) lo = before;
    }
    return hi - lo;
}

double discrepancy_oracle(const AtomicMeasure& p, std::size_t atom_cap) {
    validate(p);
    const std::size_t n = p.atoms.size();
    if (n > atom_cap)
        throw LimitError("discrepancy_oracle: " + std::to_string(n) + " atoms exceeds cap " +
                         std::to_string(atom_cap));

    // Forward arc from a to b (wrapping when b < a); end inclusion chosen
    // per convention. A point is inside a wrapped arc iff it is outside the
    // complementary forward arc from b to a.
    const auto arc_weight = [&](double a, double b, bool closed_lo, bool closed_hi) {
        double w = 0.0;
        for (const Atom& atom : p.atoms) {
            const double x = atom.position;
            bool in;
            if (a < b) {
                in = (x > a && x < b) || (closed_lo && x == a) || (closed_hi && x == b);
            } else if (a > b) {
                in = (x > a || x < b) || (closed_lo && x == a) || (closed_hi && x == b);
            } else {
                in = closed_lo && closed_hi && x == a;
            }
            if (in) w += atom.weight;
        }
        return w;
    };
    const auto arc_length = [](double a, double b) {
        if (a < b) return b - a;
        if (a > b) return 1.0 - a + b;
        return 0.0;
    };

    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a = p.atoms[i].position;
            const double b = p.atoms[j].position;
            for (int conv = 0; conv < 4; ++conv) {
                const bool closed_lo = conv & 1;
                const bool closed_hi = conv & 2;
                const double pw = arc_weight(a, b, closed_lo, closed_hi);
                const double u = arc_length(a, b);
                best = std::max(best, std::abs(pw - u));
                // complement of the arc
                best = std::max(best, std::abs((1.0 - pw) - (1.0 - u)));
            }
        }
    }
    return best;
}

AtomicMeasure sample_walk(const AlphaVector& alpha, long k, long long n_samples,
                          std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("sample_walk: k must be >= 0");
    if (n_samples < 1) throw std::invalid_argument("sample_walk: need n_samples >= 1");

    const int d = alpha.d();
    std::mt19937_64 rng(seed);
    const std::uint64_t moves = 2ULL * static_cast<std::uint64_t>(d);

    // Accumulate signed generator counts per path, then place the path at
    // frac(sum m_j alpha_j); identical coefficient vectors land on the same
    // double and merge via the position map.
    std::map<double, long long> hits;
    std::vector<long> m(static_cast<std::size_t>(d));
    for (long long s = 0; s < n_samples; ++s) {
        std::fill(m.begin(), m.end(), 0L);
        for (long step = 0; step < k; ++step) {
            const std::uint64_t r = bounded_rand(rng, moves);
            const std::size_t j = static_cast<std::size_t>(r >> 1);
            m[j] += (r & 1) ? 1 : -1;
        }
        ++hits[circle_position(m, alpha.entries)];
    }

    AtomicMeasure p;
    p.atoms.reserve(hits.size());
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    for (const auto& [pos, count] : hits)
        p.atoms.push_back({pos, static_cast<double>(count) * inv_n});
    validate(p);
    return p;
}

}  // namespace rotwalk

#include "rotwalk/diophantine.hpp"

#include "helpers.hpp"
#include "rotwalk/numerics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace rotwalk;
using test_helpers::uniform01;

namespace {

// Naive beta scan: every <N alpha> recomputed from scratch via frac_mul.
double beta_naive(const AlphaVector& alpha, std::int64_t n_max, std::int64_t* argmin = nullptr) {
    double best = -1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        double d2 = 0.0;
        for (const double a : alpha.entries) {
            const double f = frac_mul(n, a);
            const double dist = std::min(f, 1.0 - f);
            d2 += dist * dist;
        }
        const double score =
            std::pow(static_cast<double>(n), 1.0 / alpha.d()) * std::sqrt(d2);
        if (best < 0.0 || score < best) {
            best = score;
            if (argmin) *argmin = n;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("nearest_int_dist basics") {
    const double half = 0.5;
    CHECK(nearest_int_dist({&half, 1}) == 0.5);
    const double corner[] = {0.5, 0.5};
    CHECK(nearest_int_dist(corner) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    const double shifted = 2.25;
    CHECK(nearest_int_dist({&shifted, 1}) == 0.25);
    const double zero = 0.0;
    CHECK(nearest_int_dist({&zero, 1}) == 0.0);
}

TEST_CASE("nearest_int_dist invariances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        std::vector<double> x, shifted, negated, permuted;
        for (int j = 0; j < d; ++j) x.push_back(uniform01(rng) * 20.0 - 10.0);
        const double base = nearest_int_dist(x);
        for (const double v : x) {
            shifted.push_back(v + static_cast<double>(static_cast<long>(rng() % 7)) - 3.0);
            negated.push_back(-v);
        }
        permuted = x;
        std::reverse(permuted.begin(), permuted.end());
        CHECK(nearest_int_dist(shifted) == doctest::Approx(base).epsilon(1e-12));
        CHECK(nearest_int_dist(negated) == doctest::Approx(base).epsilon(1e-12));
        CHECK(nearest_int_dist(permuted) == doctest::Approx(base).epsilon(1e-15));
        CHECK(base <= std::sqrt(static_cast<double>(d)) / 2.0 + 1e-15);
    }
}

TEST_CASE("beta_hat detects rationality exactly for dyadic inputs") {
    const auto r = beta_hat(parse_alpha("dec:0.5"), 10);
    CHECK(r.value == 0.0);
    CHECK(r.argmin == 2);
    const auto r2 = beta_hat(parse_alpha("dec:0.625"), 100);
    CHECK(r2.value == 0.0);
    CHECK(r2.argmin == 8);
}

TEST_CASE("beta_hat of the golden ratio sits at N=1") {
    const auto r = beta_hat(parse_alpha("phi"), 100000);
    CHECK(r.argmin == 1);
    CHECK(r.value == doctest::Approx(0.3819660112501051).epsilon(1e-12));
}

TEST_CASE("beta_hat is nonincreasing in the horizon") {
    const auto alpha = parse_alpha("sqrt:2");
    double prev = 1e9;
    for (const std::int64_t n : {10, 100, 1000, 10000}) {
        const double v = beta_hat(alpha, n).value;
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("beta_hat scales back to the distance at its argmin") {
    for (const char* spec : {"phi", "plastic", "sqrt:2,3,5"}) {
        const auto alpha = parse_alpha(spec);
        const auto r = beta_hat(alpha, 5000);
        std::vector<double> at_argmin;
        for (const double a : alpha.entries)
            at_argmin.push_back(static_cast<double>(r.argmin) * a);
        const double dist = nearest_int_dist(at_argmin);
        CHECK(std::abs(r.value * std::pow(static_cast<double>(r.argmin), -1.0 / alpha.d()) -
                       dist) < 1e-12);
    }
}

TEST_CASE("dirichlet b_hat is nondecreasing in the horizon") {
    const auto alpha = parse_alpha("phi");
    double prev = 0.0;
    for (const std::int64_t q : {1, 3, 10, 50, 200, 1000}) {
        const double v = dirichlet_b_hat(alpha, q).value;
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
}

TEST_CASE("streaming scan equals the naive recomputation") {
    for (const char* spec : {"phi", "plastic", "sqrt:2,3", "dec:0.1,0.37"}) {
        const auto alpha = parse_alpha(spec);
        std::int64_t naive_argmin = 0;
        const double naive = beta_naive(alpha, 1000, &naive_argmin);
        const auto streamed = beta_hat(alpha, 1000);
        CHECK(std::abs(streamed.value - naive) < 1e-12);
        CHECK(streamed.argmin == naive_argmin);
    }
}

TEST_CASE("streaming stays anchored across the re-anchor boundary") {
    const auto alpha = parse_alpha("phi");
    // horizon straddles 2^16 where the accumulator is re-anchored
    const auto r = beta_hat(alpha, (1 << 16) + 10);
    const double naive = beta_naive(alpha, (1 << 16) + 10);
    CHECK(std::abs(r.value - naive) < 1e-12);
}

TEST_CASE("plastic pair stays well above the rational floor") {
    const auto r = beta_hat(parse_alpha("plastic"), 10000);
    CHECK(r.value > 0.3);
    CHECK(r.value < 0.6458);
}

TEST_CASE("dirichlet b_hat: hand enumeration for alpha = 1/2") {
    const auto r = dirichlet_b_hat(parse_alpha("dec:0.5"), 3);
    CHECK(r.value == 0.5);
}

TEST_CASE("dirichlet b_hat at q_max=1 is the first distance") {
    for (const char* spec : {"phi", "plastic", "sqrt:2,3"}) {
        const auto alpha = parse_alpha(spec);
        const auto r = dirichlet_b_hat(alpha, 1);
        CHECK(r.value == doctest::Approx(nearest_int_dist(alpha.entries)).epsilon(1e-14));
        CHECK(r.value <= std::sqrt(static_cast<double>(alpha.d())) / 2.0 + 1e-15);
    }
}

TEST_CASE("dirichlet b_hat respects the universal sqrt(d) bound") {
    const auto phi = dirichlet_b_hat(parse_alpha("phi"), 1000);
    CHECK(phi.value <= 1.0);
    CHECK(phi.value > 0.5);  // the golden ratio is the worst d=1 case

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 2);
        AlphaVector alpha;
        alpha.spec = "random";
        for (int j = 0; j < d; ++j) alpha.entries.push_back(uniform01(rng));
        const auto r = dirichlet_b_hat(alpha, 50);
        CHECK(r.value <= std::sqrt(static_cast<double>(d)) + 1e-12);
        CHECK(r.value >= 0.0);
    }
}

TEST_CASE("davenport-mahler verdicts") {
    CHECK(davenport_mahler_check(0.5485) == DmVerdict::ok);
    CHECK(davenport_mahler_check(0.7) == DmVerdict::exceeds_dm);
    CHECK(davenport_mahler_check(davenport_mahler_threshold()) == DmVerdict::ok);  // strict
    CHECK(davenport_mahler_threshold() == doctest::Approx(0.6457776924872441).epsilon(1e-15));
    CHECK_THROWS(davenport_mahler_check(-0.1));
}

TEST_CASE("scan preconditions") {
    const auto alpha = parse_alpha("phi");
    CHECK_THROWS(beta_hat(alpha, 0));
    CHECK_THROWS(dirichlet_b_hat(alpha, 0));
    CHECK_THROWS(dirichlet_b_hat(alpha, 10, 0));
}

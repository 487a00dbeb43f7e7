#pragma once

// Experiment drivers behind the CLI: the per-k bound table with envelope
// verification, single-distribution dumps, and the Diophantine constant
// report. Everything is deterministic for a fixed config (including seed).

#include "rotwalk/alpha.hpp"
#include "rotwalk/diophantine.hpp"
#include "rotwalk/fourier.hpp"
#include "rotwalk/measure.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rotwalk {

enum class RunMode { exact, montecarlo, both };
enum class OutFormat { csv, json };

struct ExperimentConfig {
    std::string alpha_spec;
    long k_min = 1;
    long k_max = 1;
    long k_step = 1;
    RunMode mode = RunMode::exact;
    long long n_samples = 100'000;
    std::uint64_t seed = 12345;
    std::int64_t n_max_dioph = 100'000;
    std::int64_t q_max = 1'000;
    std::int64_t m_cap = 0;  // 0: default 10^6 / d
    long long support_cap = default_support_cap;
    std::string output_path = "-";  // "-" writes to stdout
    OutFormat format = OutFormat::csv;
};

struct BoundRow {
    long k = 0;
    std::optional<double> d_exact;  // absent beyond the support cap
    double su_lower = 0.0;
    double et_upper = 0.0;
    std::int64_t et_m = 0;     // truncation achieving et_upper
    std::int64_t paper_m = 0;  // closed-form truncation, for comparison
    double c1_envelope = 0.0;  // c1 k^{-d/2}; 0 when c1 is unavailable
    double c2_envelope = 0.0;  // c2 k^{-d/2}; +inf when c2 is unavailable
};

struct VerifyReport {
    ExperimentConfig config;
    AlphaVector alpha;
    BetaHat beta{};
    DirichletBHat b{};
    std::optional<double> c1;  // absent when b_hat is 0 at the horizon
    std::optional<double> c2;  // absent when beta_hat is 0 at the horizon
    std::int64_t m_cap_used = 0;
    std::int64_t su_m_max_used = default_su_m_max;
    std::vector<BoundRow> rows;
    std::vector<std::pair<long, double>> mc_rows;  // (k, empirical discrepancy)
    std::optional<double> slope;  // log-log regression over the upper half
    long slope_k_lo = 0;
    long slope_k_hi = 0;
    std::optional<DmVerdict> dm;  // present for d = 2
    std::optional<double> mc_error_budget;  // 3/sqrt(n_samples)
    std::vector<std::string> caveats;
};

struct WalkReport {
    ExperimentConfig config;
    AlphaVector alpha;
    AtomicMeasure measure;
};

struct DiophReport {
    ExperimentConfig config;
    AlphaVector alpha;
    BetaHat beta{};
    DirichletBHat b{};
    std::optional<DmVerdict> dm;
};

// Estimates the approximation constants, then for every k in the range
// emits one row of bounds and envelope values; d_exact is filled when the
// mode asks for exact computation and the support fits the cap.
VerifyReport run_verify(const ExperimentConfig& config);

// The k-step distribution itself (exact or sampled), atoms sorted.
WalkReport run_walk(const ExperimentConfig& config);

// beta_hat, b_hat and (for pairs) the Davenport-Mahler verdict.
DiophReport run_dioph(const ExperimentConfig& config);

// Least-squares slope of log d_exact against log k over rows with k in
// [k_lo, k_hi]; empty when fewer than two rows qualify.
std::optional<double> loglog_slope(std::span<const BoundRow> rows, long k_lo, long k_hi);

}  // namespace rotwalk

#include "rotwalk/experiments.hpp"

#include "rotwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rotwalk {

namespace {

void validate_common(const ExperimentConfig& cfg) {
    if (cfg.k_step < 1) throw std::invalid_argument("config: k_step must be >= 1");
    if (cfg.k_min > cfg.k_max) throw std::invalid_argument("config: k_min must be <= k_max");
    if (cfg.mode != RunMode::exact && cfg.n_samples < 1)
        throw std::invalid_argument("config: montecarlo mode needs n_samples >= 1");
    if (cfg.n_max_dioph < 1) throw std::invalid_argument("config: n_max must be >= 1");
    if (cfg.q_max < 1) throw std::invalid_argument("config: q_max must be >= 1");
    if (cfg.m_cap < 0) throw std::invalid_argument("config: m_cap must be >= 0");
    if (cfg.support_cap < 1) throw std::invalid_argument("config: support_cap must be >= 1");
}

std::int64_t resolved_m_cap(const ExperimentConfig& cfg, int d) {
    return cfg.m_cap > 0 ? cfg.m_cap : 1'000'000 / d;
}

// Largest k (at most k_max) whose dense support (2k+1)^d fits the cap;
// -1 when even k = 0 does not fit.
long exact_k_budget(int d, long k_max, long long support_cap) {
    long lo = -1;
    long hi = k_max;
    while (lo < hi) {
        const long mid = lo + (hi - lo + 1) / 2;
        if (predicted_support(d, mid) <= support_cap)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

std::optional<double> loglog_slope(std::span<const BoundRow> rows, long k_lo, long k_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (const BoundRow& row : rows) {
        if (row.k < k_lo || row.k > k_hi) continue;
        if (!row.d_exact || !(*row.d_exact > 0.0)) continue;
        const double x = std::log(static_cast<double>(row.k));
        const double y = std::log(*row.d_exact);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return std::nullopt;
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

VerifyReport run_verify(const ExperimentConfig& cfg) {
    validate_common(cfg);
    if (cfg.k_min < 1) throw std::invalid_argument("config: verify needs k_min >= 1");

    VerifyReport rep;
    rep.config = cfg;
    rep.alpha = parse_alpha(cfg.alpha_spec);
    const int d = rep.alpha.d();

    rep.beta = beta_hat(rep.alpha, cfg.n_max_dioph);
    rep.b = dirichlet_b_hat(rep.alpha, cfg.q_max);
    if (d == 2) rep.dm = davenport_mahler_check(rep.beta.value);

    // The two constants are independent pieces of envelope_constants: c1
    // needs only b_hat, c2 only beta_hat. Placeholder 1.0 fills the side
    // that is dropped afterwards.
    const EnvelopeConstants ec = envelope_constants(
        d, rep.b.value > 0.0 ? rep.b.value : 1.0, rep.beta.value > 0.0 ? rep.beta.value : 1.0);
    if (rep.b.value > 0.0) rep.c1 = ec.c1;
    if (rep.beta.value > 0.0) rep.c2 = ec.c2;

    rep.caveats.push_back(
        "approximation constants are finite-horizon estimates; envelopes are not certified");
    if (!rep.c2)
        rep.caveats.push_back(
            "beta_hat is 0 at the scanned horizon (rational behaviour); no upper envelope");
    if (!rep.c1) rep.caveats.push_back("b_hat is 0 at the scanned horizon; no lower envelope");

    rep.m_cap_used = resolved_m_cap(cfg, d);
    const std::int64_t table_len = std::max<std::int64_t>(rep.m_cap_used, rep.su_m_max_used);
    const std::vector<double> mags = coefficient_magnitudes(rep.alpha, table_len);
    const std::span<const double> et_mags(mags.data(), static_cast<std::size_t>(rep.m_cap_used));

    const bool want_exact = cfg.mode != RunMode::montecarlo;
    const bool want_mc = cfg.mode != RunMode::exact;
    const long k_exact = want_exact ? exact_k_budget(d, cfg.k_max, cfg.support_cap) : -1;
    std::optional<LatticeDistribution> walker;
    if (k_exact >= cfg.k_min) walker.emplace(d, k_exact, cfg.support_cap);

    bool capped_rows = false;
    for (long k = cfg.k_min; k <= cfg.k_max; k += cfg.k_step) {
        BoundRow row;
        row.k = k;
        if (walker && k <= k_exact) {
            walker->step_to(k);
            row.d_exact = discrepancy_exact(atoms_on_circle(*walker, rep.alpha));
        } else if (want_exact) {
            capped_rows = true;
        }
        row.su_lower = su_lower_bound(mags, k, rep.su_m_max_used);
        const EtOptimum opt = optimize_et_m(et_mags, k);
        row.et_m = opt.m;
        row.et_upper = opt.bound;
        row.paper_m = analytic_truncation_m(rep.beta.value, k, d);
        const double decay = std::pow(static_cast<double>(k), -0.5 * d);
        row.c1_envelope = rep.c1 ? *rep.c1 * decay : 0.0;
        row.c2_envelope = rep.c2 ? *rep.c2 * decay
                                 : std::numeric_limits<double>::infinity();
        rep.rows.push_back(row);

        if (want_mc) {
            const AtomicMeasure emp =
                sample_walk(rep.alpha, k, cfg.n_samples, cfg.seed + static_cast<std::uint64_t>(k));
            rep.mc_rows.emplace_back(k, discrepancy_exact(emp));
        }
    }
    if (capped_rows)
        rep.caveats.push_back("d_exact omitted where (2k+1)^d exceeds the support cap");
    if (want_mc) {
        rep.mc_error_budget = 3.0 / std::sqrt(static_cast<double>(cfg.n_samples));
        rep.caveats.push_back("montecarlo discrepancies carry a ~3/sqrt(n_samples) error budget");
    }

    // Regress over the upper half of the k range to suppress small-k
    // transients; the window is part of the report.
    rep.slope_k_lo = cfg.k_min + (cfg.k_max - cfg.k_min) / 2;
    rep.slope_k_hi = cfg.k_max;
    rep.slope = loglog_slope(rep.rows, rep.slope_k_lo, rep.slope_k_hi);
    return rep;
}

WalkReport run_walk(const ExperimentConfig& cfg) {
    validate_common(cfg);
    if (cfg.k_min < 0) throw std::invalid_argument("config: walk needs k >= 0");

    WalkReport rep;
    rep.config = cfg;
    rep.alpha = parse_alpha(cfg.alpha_spec);
    const long k = cfg.k_min;
    if (cfg.mode == RunMode::montecarlo) {
        rep.measure = sample_walk(rep.alpha, k, cfg.n_samples, cfg.seed);
    } else {
        const LatticeDistribution dist = convolve_power(rep.alpha.d(), k, cfg.support_cap);
        rep.measure = atoms_on_circle(dist, rep.alpha);
    }
    return rep;
}

DiophReport run_dioph(const ExperimentConfig& cfg) {
    validate_common(cfg);
    DiophReport rep;
    rep.config = cfg;
    rep.alpha = parse_alpha(cfg.alpha_spec);
    rep.beta = beta_hat(rep.alpha, cfg.n_max_dioph);
    rep.b = dirichlet_b_hat(rep.alpha, cfg.q_max);
    if (rep.alpha.d() == 2) rep.dm = davenport_mahler_check(rep.beta.value);
    return rep;
}

}  // namespace rotwalk

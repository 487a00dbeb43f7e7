#include "rotwalk.h"

#include "rotwalk/alpha.hpp"
#include "rotwalk/diophantine.hpp"
#include "rotwalk/errors.hpp"
#include "rotwalk/experiments.hpp"
#include "rotwalk/fourier.hpp"
#include "rotwalk/lattice.hpp"
#include "rotwalk/measure.hpp"
#include "rotwalk/report_io.hpp"

#include <cstring>
#include <new>
#include <span>
#include <string>

struct rw_alpha {
    rotwalk::AlphaVector v;
};
struct rw_dist {
    rotwalk::LatticeDistribution d;
};
struct rw_measure {
    rotwalk::AtomicMeasure m;
};
struct rw_config {
    rotwalk::ExperimentConfig c;
};

namespace {

thread_local std::string g_last_error;

rw_status fail(rw_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

// Runs f, translating core exceptions to status codes at the boundary.
template <class F>
rw_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return RW_OK;
    } catch (const rotwalk::ParseError& e) {
        return fail(RW_ERR_PARSE, e.what());
    } catch (const rotwalk::LimitError& e) {
        return fail(RW_ERR_LIMIT, e.what());
    } catch (const rotwalk::IoError& e) {
        return fail(RW_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RW_ERR_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(RW_ERR_INVALID, e.what());
    }
}

rw_status require(bool ok, const char* msg) {
    return ok ? RW_OK : fail(RW_ERR_INVALID, msg);
}

}  // namespace

extern "C" {

const char* rw_last_error(void) {
    return g_last_error.c_str();
}

/* ---- generator tuples ------------------------------------------------- */

rw_status rw_alpha_parse(const char* spec, rw_alpha** out) {
    if (require(spec && out, "rw_alpha_parse: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = new rw_alpha{rotwalk::parse_alpha(spec)}; });
}

int rw_alpha_dim(const rw_alpha* a) {
    return a ? a->v.d() : 0;
}

rw_status rw_alpha_entries(const rw_alpha* a, double* out, int cap) {
    if (require(a && out, "rw_alpha_entries: null argument")) return RW_ERR_INVALID;
    if (require(cap >= a->v.d(), "rw_alpha_entries: buffer too small")) return RW_ERR_INVALID;
    for (int j = 0; j < a->v.d(); ++j) out[j] = a->v.entries[static_cast<std::size_t>(j)];
    return RW_OK;
}

void rw_alpha_free(rw_alpha* a) {
    delete a;
}

/* ---- exact lattice distributions -------------------------------------- */

rw_status rw_walk_exact(int d, long k, long long support_cap, rw_dist** out) {
    if (require(out != nullptr, "rw_walk_exact: null output")) return RW_ERR_INVALID;
    const long long cap = support_cap > 0 ? support_cap : rotwalk::default_support_cap;
    return guarded([&] { *out = new rw_dist{rotwalk::convolve_power(d, k, cap)}; });
}

int rw_dist_dim(const rw_dist* dist) {
    return dist ? dist->d.d() : 0;
}

long rw_dist_k(const rw_dist* dist) {
    return dist ? dist->d.k() : -1;
}

long long rw_dist_support(const rw_dist* dist) {
    return dist ? dist->d.support_size() : 0;
}

rw_status rw_dist_count(const rw_dist* dist, const long* m, char* buf, size_t buflen) {
    if (require(dist && m && buf, "rw_dist_count: null argument")) return RW_ERR_INVALID;
    return guarded([&] {
        const rotwalk::BigInt& c =
            dist->d.count(std::span<const long>(m, static_cast<std::size_t>(dist->d.d())));
        const std::string s = c.str();
        if (s.size() + 1 > buflen)
            throw std::invalid_argument("rw_dist_count: buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

void rw_dist_free(rw_dist* dist) {
    delete dist;
}

/* ---- atomic measures and discrepancy ----------------------------------- */

rw_status rw_project(const rw_dist* dist, const rw_alpha* a, rw_measure** out) {
    if (require(dist && a && out, "rw_project: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = new rw_measure{rotwalk::atoms_on_circle(dist->d, a->v)}; });
}

rw_status rw_sample(const rw_alpha* a, long k, long long n_samples, unsigned long long seed,
                    rw_measure** out) {
    if (require(a && out, "rw_sample: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = new rw_measure{rotwalk::sample_walk(a->v, k, n_samples, seed)}; });
}

rw_status rw_measure_create(const double* positions, const double* weights, long long n,
                            rw_measure** out) {
    if (require(positions && weights && out, "rw_measure_create: null argument"))
        return RW_ERR_INVALID;
    if (require(n > 0, "rw_measure_create: need at least one atom")) return RW_ERR_INVALID;
    return guarded([&] {
        *out = new rw_measure{rotwalk::make_measure(
            std::span<const double>(positions, static_cast<std::size_t>(n)),
            std::span<const double>(weights, static_cast<std::size_t>(n)))};
    });
}

long long rw_measure_size(const rw_measure* p) {
    return p ? static_cast<long long>(p->m.size()) : 0;
}

rw_status rw_measure_atoms(const rw_measure* p, double* positions, double* weights,
                           long long cap) {
    if (require(p && positions && weights, "rw_measure_atoms: null argument"))
        return RW_ERR_INVALID;
    if (require(cap >= static_cast<long long>(p->m.size()), "rw_measure_atoms: buffer too small"))
        return RW_ERR_INVALID;
    for (std::size_t i = 0; i < p->m.size(); ++i) {
        positions[i] = p->m.atoms[i].position;
        weights[i] = p->m.atoms[i].weight;
    }
    return RW_OK;
}

rw_status rw_discrepancy(const rw_measure* p, double* out) {
    if (require(p && out, "rw_discrepancy: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::discrepancy_exact(p->m); });
}

rw_status rw_discrepancy_oracle(const rw_measure* p, double* out) {
    if (require(p && out, "rw_discrepancy_oracle: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::discrepancy_oracle(p->m); });
}

void rw_measure_free(rw_measure* p) {
    delete p;
}

/* ---- Fourier bounds ----------------------------------------------------- */

rw_status rw_fourier_coefficient(const rw_alpha* a, long long m, double* out) {
    if (require(a && out, "rw_fourier_coefficient: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::fourier_coefficient(a->v, m); });
}

rw_status rw_su_lower(const rw_alpha* a, long k, long long m_max, double* out) {
    if (require(a && out, "rw_su_lower: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::su_lower_bound(a->v, k, m_max); });
}

rw_status rw_et_upper(const rw_alpha* a, long k, long long M, double* out) {
    if (require(a && out, "rw_et_upper: null argument")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::erdos_turan_upper(a->v, k, M); });
}

rw_status rw_et_optimize(const rw_alpha* a, long k, long long m_cap, long long* m_out,
                         double* bound_out) {
    if (require(a && m_out && bound_out, "rw_et_optimize: null argument")) return RW_ERR_INVALID;
    return guarded([&] {
        const rotwalk::EtOptimum opt = rotwalk::optimize_et_m(a->v, k, m_cap);
        *m_out = opt.m;
        *bound_out = opt.bound;
    });
}

rw_status rw_analytic_truncation(double beta, long k, int d, long long* out) {
    if (require(out != nullptr, "rw_analytic_truncation: null output")) return RW_ERR_INVALID;
    return guarded([&] { *out = rotwalk::analytic_truncation_m(beta, k, d); });
}

rw_status rw_envelope_constants(int d, double b, double beta, double* c1, double* c2) {
    if (require(c1 && c2, "rw_envelope_constants: null output")) return RW_ERR_INVALID;
    return guarded([&] {
        const rotwalk::EnvelopeConstants ec = rotwalk::envelope_constants(d, b, beta);
        *c1 = ec.c1;
        *c2 = ec.c2;
    });
}

/* ---- Diophantine scans --------------------------------------------------- */

rw_status rw_nearest_int_dist(const double* x, int d, double* out) {
    if (require(x && out, "rw_nearest_int_dist: null argument")) return RW_ERR_INVALID;
    if (require(d >= 1, "rw_nearest_int_dist: dimension must be >= 1")) return RW_ERR_INVALID;
    return guarded([&] {
        *out = rotwalk::nearest_int_dist(std::span<const double>(x, static_cast<std::size_t>(d)));
    });
}

rw_status rw_beta_hat(const rw_alpha* a, long long n_max, double* value, long long* argmin) {
    if (require(a && value && argmin, "rw_beta_hat: null argument")) return RW_ERR_INVALID;
    return guarded([&] {
        const rotwalk::BetaHat r = rotwalk::beta_hat(a->v, n_max);
        *value = r.value;
        *argmin = r.argmin;
    });
}

rw_status rw_dirichlet_b_hat(const rw_alpha* a, long long q_max, long long per_q_cap,
                             double* out) {
    if (require(a && out, "rw_dirichlet_b_hat: null argument")) return RW_ERR_INVALID;
    const long long cap = per_q_cap > 0 ? per_q_cap : rotwalk::default_per_q_cap;
    return guarded([&] { *out = rotwalk::dirichlet_b_hat(a->v, q_max, cap).value; });
}

double rw_davenport_mahler_threshold(void) {
    return rotwalk::davenport_mahler_threshold();
}

rw_status rw_davenport_mahler_exceeded(double beta, int* out) {
    if (require(out != nullptr, "rw_davenport_mahler_exceeded: null output"))
        return RW_ERR_INVALID;
    return guarded([&] {
        *out = rotwalk::davenport_mahler_check(beta) == rotwalk::DmVerdict::exceeds_dm ? 1 : 0;
    });
}

/* ---- experiment runner ---------------------------------------------------- */

rw_config* rw_config_new(void) {
    return new (std::nothrow) rw_config{};
}

void rw_config_free(rw_config* cfg) {
    delete cfg;
}

rw_status rw_config_set_alpha(rw_config* cfg, const char* spec) {
    if (require(cfg && spec, "rw_config_set_alpha: null argument")) return RW_ERR_INVALID;
    cfg->c.alpha_spec = spec;
    return RW_OK;
}

rw_status rw_config_set_k_range(rw_config* cfg, long k_min, long k_max, long k_step) {
    if (require(cfg != nullptr, "rw_config_set_k_range: null config")) return RW_ERR_INVALID;
    cfg->c.k_min = k_min;
    cfg->c.k_max = k_max;
    cfg->c.k_step = k_step;
    return RW_OK;
}

rw_status rw_config_set_mode(rw_config* cfg, const char* mode) {
    if (require(cfg && mode, "rw_config_set_mode: null argument")) return RW_ERR_INVALID;
    const std::string m = mode;
    if (m == "exact")
        cfg->c.mode = rotwalk::RunMode::exact;
    else if (m == "montecarlo")
        cfg->c.mode = rotwalk::RunMode::montecarlo;
    else if (m == "both")
        cfg->c.mode = rotwalk::RunMode::both;
    else
        return fail(RW_ERR_PARSE, "rw_config_set_mode: expected exact|montecarlo|both");
    return RW_OK;
}

rw_status rw_config_set_samples(rw_config* cfg, long long n_samples) {
    if (require(cfg != nullptr, "rw_config_set_samples: null config")) return RW_ERR_INVALID;
    cfg->c.n_samples = n_samples;
    return RW_OK;
}

rw_status rw_config_set_seed(rw_config* cfg, unsigned long long seed) {
    if (require(cfg != nullptr, "rw_config_set_seed: null config")) return RW_ERR_INVALID;
    cfg->c.seed = seed;
    return RW_OK;
}

rw_status rw_config_set_nmax(rw_config* cfg, long long n_max) {
    if (require(cfg != nullptr, "rw_config_set_nmax: null config")) return RW_ERR_INVALID;
    cfg->c.n_max_dioph = n_max;
    return RW_OK;
}

rw_status rw_config_set_qmax(rw_config* cfg, long long q_max) {
    if (require(cfg != nullptr, "rw_config_set_qmax: null config")) return RW_ERR_INVALID;
    cfg->c.q_max = q_max;
    return RW_OK;
}

rw_status rw_config_set_mcap(rw_config* cfg, long long m_cap) {
    if (require(cfg != nullptr, "rw_config_set_mcap: null config")) return RW_ERR_INVALID;
    cfg->c.m_cap = m_cap;
    return RW_OK;
}

rw_status rw_config_set_support_cap(rw_config* cfg, long long cap) {
    if (require(cfg != nullptr, "rw_config_set_support_cap: null config")) return RW_ERR_INVALID;
    cfg->c.support_cap = cap;
    return RW_OK;
}

rw_status rw_config_set_output(rw_config* cfg, const char* path, const char* format) {
    if (require(cfg && path && format, "rw_config_set_output: null argument"))
        return RW_ERR_INVALID;
    const std::string f = format;
    if (f == "csv")
        cfg->c.format = rotwalk::OutFormat::csv;
    else if (f == "json")
        cfg->c.format = rotwalk::OutFormat::json;
    else
        return fail(RW_ERR_PARSE, "rw_config_set_output: expected csv|json");
    cfg->c.output_path = path;
    return RW_OK;
}

rw_status rw_run_walk(const rw_config* cfg) {
    if (require(cfg != nullptr, "rw_run_walk: null config")) return RW_ERR_INVALID;
    return guarded([&] { rotwalk::write_report(rotwalk::run_walk(cfg->c)); });
}

rw_status rw_run_verify(const rw_config* cfg) {
    if (require(cfg != nullptr, "rw_run_verify: null config")) return RW_ERR_INVALID;
    return guarded([&] { rotwalk::write_report(rotwalk::run_verify(cfg->c)); });
}

rw_status rw_run_dioph(const rw_config* cfg) {
    if (require(cfg != nullptr, "rw_run_dioph: null config")) return RW_ERR_INVALID;
    return guarded([&] { rotwalk::write_report(rotwalk::run_dioph(cfg->c)); });
}

} /* extern "C" */

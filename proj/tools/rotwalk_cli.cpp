// Command-line front end. All functionality goes through the C API in
// rotwalk.h; this file only maps flags onto a config and status codes onto
// exit codes (0 ok, 2 config/parse error, 3 resource cap with no output).

#include "rotwalk.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

struct Options {
    std::string alpha;
    long k = -1;  // single-k shorthand; -1 = unset
    long k_min = -1;
    long k_max = -1;
    long k_step = 1;
    std::string mode = "exact";
    long long samples = 100000;
    unsigned long long seed = 12345;
    long long n_max = 100000;
    long long q_max = 1000;
    long long m_cap = 0;
    long long support_cap = 5000000;
    std::string out = "-";
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--alpha", opt.alpha,
                    "generator spec: phi | plastic | sqrt:<int>[,<int>...] | "
                    "dec:<decimal>[,<decimal>...]")
        ->required();
    cmd->add_option("--k", opt.k, "single step count (sets kmin = kmax = k)");
    cmd->add_option("--kmin", opt.k_min, "first step count");
    cmd->add_option("--kmax", opt.k_max, "last step count");
    cmd->add_option("--kstep", opt.k_step, "step count stride (default 1)");
    cmd->add_option("--mode", opt.mode, "exact | montecarlo | both (default exact)");
    cmd->add_option("--samples", opt.samples, "montecarlo sample paths (default 1e5)");
    cmd->add_option("--seed", opt.seed, "RNG seed (default 12345)");
    cmd->add_option("--nmax", opt.n_max, "beta_hat scan horizon (default 1e5)");
    cmd->add_option("--qmax", opt.q_max, "Dirichlet scan horizon (default 1e3)");
    cmd->add_option("--mcap", opt.m_cap, "Erdos-Turan truncation cap (default 1e6/d)");
    cmd->add_option("--support-cap", opt.support_cap,
                    "max lattice points for exact mode (default 5e6)");
    cmd->add_option("--out", opt.out, "output path, - for stdout (default -)");
    cmd->add_option("--format", opt.format, "csv | json (default csv)");
}

int exit_code_for(rw_status s) {
    switch (s) {
        case RW_OK: return 0;
        case RW_ERR_LIMIT: return 3;
        default: return 2;
    }
}

int report_failure(rw_status s) {
    std::fprintf(stderr, "rotwalk: %s\n", rw_last_error());
    return exit_code_for(s);
}

int run(const Options& opt, bool needs_k, rw_status (*runner)(const rw_config*)) {
    long k_min = opt.k_min;
    long k_max = opt.k_max;
    if (opt.k >= 0) {
        k_min = opt.k;
        k_max = opt.k;
    }
    if (needs_k && (k_min < 0 || k_max < 0)) {
        std::fprintf(stderr, "rotwalk: missing --k (or --kmin/--kmax)\n");
        return 2;
    }
    if (k_min < 0) k_min = 1;  // dioph ignores the range
    if (k_max < 0) k_max = k_min;

    std::unique_ptr<rw_config, decltype(&rw_config_free)> cfg(rw_config_new(), &rw_config_free);
    if (!cfg) {
        std::fprintf(stderr, "rotwalk: out of memory\n");
        return 2;
    }
    rw_status s = RW_OK;
    const auto set = [&](rw_status r) {
        if (s == RW_OK) s = r;
    };
    set(rw_config_set_alpha(cfg.get(), opt.alpha.c_str()));
    set(rw_config_set_k_range(cfg.get(), k_min, k_max, opt.k_step));
    set(rw_config_set_mode(cfg.get(), opt.mode.c_str()));
    set(rw_config_set_samples(cfg.get(), opt.samples));
    set(rw_config_set_seed(cfg.get(), opt.seed));
    set(rw_config_set_nmax(cfg.get(), opt.n_max));
    set(rw_config_set_qmax(cfg.get(), opt.q_max));
    set(rw_config_set_mcap(cfg.get(), opt.m_cap));
    set(rw_config_set_support_cap(cfg.get(), opt.support_cap));
    set(rw_config_set_output(cfg.get(), opt.out.c_str(), opt.format.c_str()));
    if (s != RW_OK) return report_failure(s);

    s = runner(cfg.get());
    if (s != RW_OK) return report_failure(s);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "rotwalk: random walks on the circle generated by d rotations -- exact "
        "distributions, discrepancy, Fourier bounds, approximation constants"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* walk = app.add_subcommand(
        "walk", "dump the k-step distribution as position,weight atoms");
    CLI::App* verify = app.add_subcommand(
        "verify", "per-k discrepancy bounds and k^{-d/2} envelope check");
    CLI::App* dioph = app.add_subcommand(
        "dioph", "approximation constants beta_hat and b_hat of the tuple");
    add_common_flags(walk, opt);
    add_common_flags(verify, opt);
    add_common_flags(dioph, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (walk->parsed()) return run(opt, true, &rw_run_walk);
    if (verify->parsed()) return run(opt, true, &rw_run_verify);
    return run(opt, false, &rw_run_dioph);
}

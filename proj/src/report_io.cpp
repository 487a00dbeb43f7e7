#include "rotwalk/report_io.hpp"

#include "rotwalk/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

namespace rotwalk {

namespace {

const char* mode_name(RunMode m) {
    switch (m) {
        case RunMode::exact: return "exact";
        case RunMode::montecarlo: return "montecarlo";
        case RunMode::both: return "both";
    }
    return "?";
}

const char* dm_name(DmVerdict v) {
    return v == DmVerdict::ok ? "OK" : "EXCEEDS_DM";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_real(double v) {
    if (!std::isfinite(v)) return "null";
    return format_real(v);
}

std::string json_opt(const std::optional<double>& v) {
    return v ? json_real(*v) : "null";
}

std::string json_string_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += '"' + json_escape(items[i]) + '"';
    }
    return out + "]";
}

std::string alpha_entries_json(const AlphaVector& a) {
    std::string out = "[";
    for (int j = 0; j < a.d(); ++j) {
        if (j) out += ", ";
        out += format_real(a.entries[static_cast<std::size_t>(j)]);
    }
    return out + "]";
}

// Meta fields shared by the three report kinds.
void write_meta_common(std::ostream& out, const ExperimentConfig& cfg, const AlphaVector& a) {
    out << "    \"alpha_spec\": \"" << json_escape(cfg.alpha_spec) << "\",\n";
    out << "    \"alpha_entries\": " << alpha_entries_json(a) << ",\n";
    out << "    \"d\": " << a.d() << ",\n";
    out << "    \"mode\": \"" << mode_name(cfg.mode) << "\",\n";
    out << "    \"seed\": " << cfg.seed << ",\n";
    out << "    \"n_samples\": " << cfg.n_samples << ",\n";
    out << "    \"support_cap\": " << cfg.support_cap << ",\n";
}

template <class Report>
void write_to_destination(const Report& rep,
                          void (*csv)(const Report&, std::ostream&),
                          void (*json)(const Report&, std::ostream&)) {
    const auto emit = [&](std::ostream& out) {
        if (rep.config.format == OutFormat::csv)
            csv(rep, out);
        else
            json(rep, out);
        out.flush();
        if (!out) throw IoError("report: write failed for '" + rep.config.output_path + "'");
    };
    if (rep.config.output_path == "-") {
        emit(std::cout);
    } else {
        std::ofstream file(rep.config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("report: cannot open '" + rep.config.output_path + "'");
        emit(file);
    }
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_verify_csv(const VerifyReport& rep, std::ostream& out) {
    out << "k,d_exact,su_lower,et_upper,et_M,paper_M,c1_envelope,c2_envelope\n";
    for (const BoundRow& r : rep.rows) {
        out << r.k << ',';
        if (r.d_exact) out << format_real(*r.d_exact);
        out << ',' << format_real(r.su_lower) << ',' << format_real(r.et_upper) << ',' << r.et_m
            << ',' << r.paper_m << ',' << format_real(r.c1_envelope) << ','
            << format_real(r.c2_envelope) << '\n';
    }
}

void write_verify_json(const VerifyReport& rep, std::ostream& out) {
    out << "{\n  \"meta\": {\n";
    write_meta_common(out, rep.config, rep.alpha);
    out << "    \"k_min\": " << rep.config.k_min << ",\n";
    out << "    \"k_max\": " << rep.config.k_max << ",\n";
    out << "    \"k_step\": " << rep.config.k_step << ",\n";
    out << "    \"beta_hat\": " << json_real(rep.beta.value) << ",\n";
    out << "    \"beta_argmin\": " << rep.beta.argmin << ",\n";
    out << "    \"beta_n_max\": " << rep.beta.n_max << ",\n";
    out << "    \"b_hat\": " << json_real(rep.b.value) << ",\n";
    out << "    \"b_q_max\": " << rep.b.q_max << ",\n";
    out << "    \"b_per_q_cap\": " << rep.b.per_q_cap << ",\n";
    out << "    \"c1\": " << json_opt(rep.c1) << ",\n";
    out << "    \"c2\": " << json_opt(rep.c2) << ",\n";
    out << "    \"m_cap\": " << rep.m_cap_used << ",\n";
    out << "    \"su_m_max\": " << rep.su_m_max_used << ",\n";
    out << "    \"slope\": " << json_opt(rep.slope) << ",\n";
    out << "    \"slope_window\": [" << rep.slope_k_lo << ", " << rep.slope_k_hi << "],\n";
    out << "    \"dm_verdict\": "
        << (rep.dm ? '"' + std::string(dm_name(*rep.dm)) + '"' : std::string("null")) << ",\n";
    out << "    \"mc_error_budget\": " << json_opt(rep.mc_error_budget) << ",\n";
    out << "    \"caveats\": " << json_string_list(rep.caveats) << "\n";
    out << "  },\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const BoundRow& r = rep.rows[i];
        out << "    {\"k\": " << r.k << ", \"d_exact\": "
            << (r.d_exact ? json_real(*r.d_exact) : std::string("null"))
            << ", \"su_lower\": " << json_real(r.su_lower)
            << ", \"et_upper\": " << json_real(r.et_upper) << ", \"et_M\": " << r.et_m
            << ", \"paper_M\": " << r.paper_m
            << ", \"c1_envelope\": " << json_real(r.c1_envelope)
            << ", \"c2_envelope\": " << json_real(r.c2_envelope) << "}"
            << (i + 1 < rep.rows.size() ? "," : "") << '\n';
    }
    out << "  ]";
    if (!rep.mc_rows.empty()) {
        out << ",\n  \"mc\": [\n";
        for (std::size_t i = 0; i < rep.mc_rows.size(); ++i) {
            out << "    [" << rep.mc_rows[i].first << ", " << json_real(rep.mc_rows[i].second)
                << "]" << (i + 1 < rep.mc_rows.size() ? "," : "") << '\n';
        }
        out << "  ]";
    }
    out << "\n}\n";
}

void write_walk_csv(const WalkReport& rep, std::ostream& out) {
    out << "position,weight\n";
    for (const Atom& a : rep.measure.atoms)
        out << format_real(a.position) << ',' << format_real(a.weight) << '\n';
}

void write_walk_json(const WalkReport& rep, std::ostream& out) {
    out << "{\n  \"meta\": {\n";
    write_meta_common(out, rep.config, rep.alpha);
    out << "    \"k\": " << rep.config.k_min << "\n";
    out << "  },\n  \"atoms\": [\n";
    for (std::size_t i = 0; i < rep.measure.atoms.size(); ++i) {
        const Atom& a = rep.measure.atoms[i];
        out << "    {\"position\": " << json_real(a.position)
            << ", \"weight\": " << json_real(a.weight) << "}"
            << (i + 1 < rep.measure.atoms.size() ? "," : "") << '\n';
    }
    out << "  ]\n}\n";
}

void write_dioph_csv(const DiophReport& rep, std::ostream& out) {
    out << "beta_hat,beta_argmin,n_max,b_hat,q_max,dm_verdict\n";
    out << format_real(rep.beta.value) << ',' << rep.beta.argmin << ',' << rep.beta.n_max << ','
        << format_real(rep.b.value) << ',' << rep.b.q_max << ','
        << (rep.dm ? dm_name(*rep.dm) : "") << '\n';
}

void write_dioph_json(const DiophReport& rep, std::ostream& out) {
    out << "{\n  \"meta\": {\n";
    write_meta_common(out, rep.config, rep.alpha);
    out << "    \"per_q_cap\": " << rep.b.per_q_cap << "\n";
    out << "  },\n";
    out << "  \"beta_hat\": " << json_real(rep.beta.value) << ",\n";
    out << "  \"beta_argmin\": " << rep.beta.argmin << ",\n";
    out << "  \"n_max\": " << rep.beta.n_max << ",\n";
    out << "  \"b_hat\": " << json_real(rep.b.value) << ",\n";
    out << "  \"q_max\": " << rep.b.q_max << ",\n";
    out << "  \"dm_verdict\": "
        << (rep.dm ? '"' + std::string(dm_name(*rep.dm)) + '"' : std::string("null")) << "\n";
    out << "}\n";
}

void write_report(const VerifyReport& rep) {
    write_to_destination(rep, &write_verify_csv, &write_verify_json);
}

void write_report(const WalkReport& rep) {
    write_to_destination(rep, &write_walk_csv, &write_walk_json);
}

void write_report(const DiophReport& rep) {
    write_to_destination(rep, &write_dioph_csv, &write_dioph_json);
}

}  // namespace rotwalk

#pragma once

#include <fstream>
#include <ostream>

#include "rrsgp/analysis.hpp"
#include "rrsgp/instances.hpp"
#include "rrsgp/io.hpp"

namespace rrsgp {

struct SweepConfig {
    InstanceParams params;
    std::string out_path; ///< empty means stdout
};

/// Plain key=value file: count, seed, mult_min, mult_max, gen_bound,
/// max_sgp_gens, max_ideal_gens, ideal_gen_margin, out. '#' starts a comment.
inline SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        try {
            if (key == "count") cfg.params.count = std::stoll(value);
            else if (key == "seed") cfg.params.seed = std::stoull(value);
            else if (key == "mult_min") cfg.params.mult_min = std::stoll(value);
            else if (key == "mult_max") cfg.params.mult_max = std::stoll(value);
            else if (key == "gen_bound") cfg.params.sgp_gen_bound = std::stoll(value);
            else if (key == "max_sgp_gens") cfg.params.max_sgp_gens = std::stoll(value);
            else if (key == "max_ideal_gens") cfg.params.max_ideal_gens = std::stoll(value);
            else if (key == "ideal_gen_margin") cfg.params.ideal_gen_margin = std::stoll(value);
            else if (key == "out") cfg.out_path = value;
            else throw error(errc::parse_error, "unknown config key '" + key + "'");
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad value for config key '" + key + "'");
        }
    }
    return cfg;
}

struct SweepStats {
    Int rows = 0;
    Int errors = 0;   ///< per-instance failures, recorded as rows
    Int breaches = 0; ///< internal consistency violations, also recorded
};

/// One CSV row per instance, deterministic order for a fixed seed. Failures
/// never abort the sweep; they become rows with the error column set.
inline SweepStats run_sweep(const SweepConfig& cfg, std::ostream& out) {
    out << "sgp_gens,ideal_gens,e,c,r,h,l,prop1,suff,thm_comp,closed_flags,error\n";
    SweepStats stats;
    InstanceGenerator gen(cfg.params);
    for (Int i = 0; i < cfg.params.count; ++i) {
        std::string sgp_text, ideal_text, body;
        try {
            const Instance inst = gen.next();
            sgp_text = format_generator_list(inst.sgp_gens);
            ideal_text = format_generator_list(inst.ideal_gens);
            const auto s = NumericalSemigroup::from_generators(inst.sgp_gens);
            const RelativeIdeal e(s, inst.ideal_gens);
            const AnalysisReport rep = analyze(e);
            const auto breaches = analysis_breaches(rep);
            std::string flags;
            for (const auto& p : rep.rr.powers) flags += p.closed ? '1' : '0';
            std::ostringstream row;
            row << rep.rr.e << ',' << e.ambient().conductor() << ',' << rep.rr.r << ',' << rep.rr.h << ',';
            if (rep.rr.l) row << *rep.rr.l;
            row << ',' << (rep.rr.prop1 ? 1 : 0) << ',' << (rep.rr.suff ? 1 : 0) << ','
                << (rep.pb.verdict ? 1 : 0) << ',' << flags << ',';
            if (!breaches.empty()) {
                ++stats.breaches;
                row << "\"consistency: " << breaches.front() << '"';
            }
            body = row.str();
        } catch (const error& err) {
            ++stats.errors;
            body = ",,,,,,,,,\"" + std::string(err.what()) + '"';
        }
        out << '"' << sgp_text << "\",\"" << ideal_text << "\"," << body << '\n';
        ++stats.rows;
    }
    return stats;
}

} // namespace rrsgp

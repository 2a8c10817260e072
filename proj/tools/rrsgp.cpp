// Command-line front end: semigroup and ideal reports, the Ratliff-Rush
// pipeline, the pullback test, the parametric family, randomized sweeps, and
// the built-in verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rrsgp/json_io.hpp"
#include "rrsgp/sweep.hpp"
#include "rrsgp/verify.hpp"

namespace {

using namespace rrsgp;

struct GlobalOpts {
    bool json = false;
    bool ascii = false;
};

RelativeIdeal ideal_from_flags(const std::string& sgp_text, const std::string& gens_text) {
    const auto s = NumericalSemigroup::from_generators(parse_generator_list(sgp_text));
    return RelativeIdeal(s, parse_generator_list(gens_text));
}

void print_semigroup_report(const NumericalSemigroup& s, const GlobalOpts& g) {
    const auto mi = micro_semigroup(s);
    const auto b = s.blowup();
    if (g.json) {
        nlohmann::json j = semigroup_json(s);
        j["frobenius"] = s.frobenius();
        j["gaps"] = s.gaps();
        j["apery"] = s.apery().entries;
        j["blowup_gens"] = b.generators();
        j["gr_ring_cm"] = mi.cm();
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "semigroup        <" << format_generator_list(s.generators()) << ">\n"
              << "elements         " << format_set(s, g.ascii) << "\n"
              << "multiplicity     " << s.multiplicity() << "\n"
              << "conductor        " << s.conductor() << "\n"
              << "frobenius        " << s.frobenius() << "\n"
              << "gaps             " << format_int_list(s.gaps()) << "\n"
              << "apery (mod m)    " << format_apery(mi.apery) << "\n"
              << "blow-up          <" << format_generator_list(b.generators()) << "> = " << format_set(b, g.ascii)
              << "\n"
              << "a-array          " << format_int_list(mi.a) << "\n"
              << "b-array          " << format_int_list(mi.b) << "\n"
              << "gr ring CM       " << (mi.cm() ? "yes" : "no") << "\n";
}

void print_ideal_report(const RelativeIdeal& e, const GlobalOpts& g) {
    const auto closure = integral_closure(e);
    std::vector<Int> gap;
    for (Int z : closure.elements_below(e.tail_start()))
        if (!e.contains(z)) gap.push_back(z);
    const auto be = blowup(e);
    if (g.json) {
        nlohmann::json j = ideal_json(e);
        j["multiplicity"] = e.min_element();
        j["integral_closure_gap"] = gap;
        j["blowup_gens"] = be.generators();
        j["apery"] = apery(e, e.ambient().multiplicity()).entries;
        j["gr_module_cm"] = graded_module_is_cm(e);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "ideal            {" << format_generator_list(e.generators()) << "} + <"
              << format_generator_list(e.ambient().generators()) << ">\n"
              << "elements         " << format_set(e, g.ascii) << "\n"
              << "multiplicity     " << e.min_element() << "\n"
              << "apery (mod m)    " << format_apery(apery(e, e.ambient().multiplicity())) << "\n"
              << "closure gap      " << format_int_list(gap) << "\n"
              << "blow-up          {" << format_generator_list(be.generators()) << "} over <"
              << format_generator_list(be.ambient().generators()) << ">\n"
              << "gr module CM     " << (graded_module_is_cm(e) ? "yes" : "no") << "\n";
}

int print_analysis(const RelativeIdeal& e, const GlobalOpts& g, bool with_oracle) {
    const AnalysisReport rep = analyze(e);
    const auto breaches = analysis_breaches(rep);

    std::vector<std::string> oracle_bad;
    if (with_oracle) {
        const Int m_max = std::min<Int>(std::max<Int>(rep.rr.r, 1) + 1, 4);
        oracle_bad = closure_cross_check(e, m_max);
    }

    if (g.json) {
        nlohmann::json j;
        j["semigroup"] = semigroup_json(e.ambient());
        j["ideal"] = ideal_json(e);
        j["rr"] = rr_report_json(rep.rr);
        j["pullback"] = pullback_json(rep.pb);
        j["criteria"] = {{"prop1", rep.rr.prop1},
                         {"suff", rep.rr.suff},
                         {"thm_comp", rep.pb.verdict},
                         {"gr_ring_cm", rep.gr_ring_cm}};
        if (rep.intclosed_verdict) j["criteria"]["intclosed_h_one"] = *rep.intclosed_verdict;
        else j["criteria"]["intclosed_h_one"] = nullptr;
        j["integral_closure_gap"] = rep.closure_gap;
        j["timing_ms"] = rep.ms;
        if (!breaches.empty()) j["consistency_breaches"] = breaches;
        if (with_oracle) j["oracle_mismatches"] = oracle_bad;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "semigroup        <" << format_generator_list(e.ambient().generators())
                  << ">, c = " << e.ambient().conductor() << "\n"
                  << "ideal            {" << format_generator_list(e.generators()) << "} = "
                  << format_set(e, g.ascii) << "\n"
                  << "e (multiplicity) " << rep.rr.e << "\n"
                  << "reduction number " << rep.rr.r << "\n"
                  << "h                " << rep.rr.h << "\n";
        if (rep.rr.l) std::cout << "conductor index  " << *rep.rr.l << "\n";
        for (const auto& p : rep.rr.powers) {
            std::cout << "  power m=" << p.m << "  " << (p.closed ? "closed" : "open  ") << "  "
                      << format_set(p.power, g.ascii);
            if (!p.closed) std::cout << "  closure " << format_set(p.closure, g.ascii);
            std::cout << "\n";
        }
        std::cout << "criteria         prop1=" << (rep.rr.prop1 ? "yes" : "no")
                  << " suff=" << (rep.rr.suff ? "yes" : "no")
                  << " thm_comp=" << (rep.pb.verdict ? "yes" : "no") << "\n"
                  << "pullback T       <" << format_generator_list(rep.pb.t.generators()) << ">\n"
                  << "pullback F gens  {" << format_generator_list(rep.pb.f.generators()) << "}\n"
                  << "a-array          " << format_int_list(rep.pb.micro.a) << "\n"
                  << "b-array          " << format_int_list(rep.pb.micro.b) << "\n"
                  << "closure gap      " << format_int_list(rep.closure_gap) << "\n"
                  << "time             " << rep.ms << " ms\n";
        if (with_oracle)
            std::cout << "oracle           " << (oracle_bad.empty() ? "three-way agreement" : "MISMATCH") << "\n";
        for (const auto& msg : breaches) std::cout << "BREACH           " << msg << "\n";
        for (const auto& msg : oracle_bad) std::cout << "ORACLE           " << msg << "\n";
    }
    return breaches.empty() && oracle_bad.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ratliff-Rush closures, reduction numbers, and Cohen-Macaulay criteria "
                 "for monomial ideals of numerical semigroup rings"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    Int nmax = 0;
    app.add_flag("--json", g.json, "emit JSON instead of tables");
    app.add_flag("--ascii", g.ascii, "render arrows as -> instead of →");
    app.add_option("--nmax", nmax, "override the global scan bound (env RRSGP_NMAX)");

    std::string sgp_text, gens_text, literal;

    auto* cmd_sgp = app.add_subcommand("semigroup", "report on a numerical semigroup");
    cmd_sgp->add_option("gens", literal, "comma-separated generators, e.g. 6,9,11")->required();

    auto* cmd_ideal = app.add_subcommand("ideal", "report on a (relative) ideal");
    std::string ideal_literal;
    cmd_ideal->add_option("ideal", ideal_literal, "ideal literal \"9,11 @ 6,9,11\"");
    cmd_ideal->add_option("--sgp", sgp_text, "ambient generators");
    cmd_ideal->add_option("--gens", gens_text, "ideal generators");

    auto* cmd_rr = app.add_subcommand("rr", "full closure pipeline for one ideal");
    cmd_rr->add_option("--sgp", sgp_text, "ambient generators")->required();
    cmd_rr->add_option("--gens", gens_text, "ideal generators")->required();
    bool with_oracle = false;
    cmd_rr->add_flag("--oracle", with_oracle, "cross-check closures against the brute-force oracle");

    auto* cmd_pull = app.add_subcommand("pullback", "the h=1 test through the pullback semigroup");
    cmd_pull->add_option("--sgp", sgp_text, "ambient generators")->required();
    cmd_pull->add_option("--gens", gens_text, "ideal generators")->required();

    auto* cmd_family = app.add_subcommand("family", "the parametric family S_n with r = n-1, h = 1");
    Int n_min = 3, n_max = 8, n_cap = 12;
    cmd_family->add_option("n_min", n_min, "first index (>= 3)");
    cmd_family->add_option("n_max", n_max, "last index");
    cmd_family->add_option("--cap", n_cap, "largest allowed index");

    auto* cmd_sweep = app.add_subcommand("sweep", "randomized instances to CSV");
    std::string config_path, out_path;
    Int count = -1;
    Int seed = -1;
    cmd_sweep->add_option("--config", config_path, "key=value config file");
    cmd_sweep->add_option("--count", count, "number of instances");
    cmd_sweep->add_option("--seed", seed, "random seed");
    cmd_sweep->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "run the built-in verification battery");
    Int verify_count = 100;
    Int verify_seed = 42;
    Int family_hi = 8;
    cmd_verify->add_option("--count", verify_count, "randomized corpus size");
    cmd_verify->add_option("--seed", verify_seed, "corpus seed");
    cmd_verify->add_option("--family-max", family_hi, "largest family index to sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* env = std::getenv("RRSGP_NMAX"); env && nmax == 0) nmax = std::atoll(env);
        if (nmax > 0) set_scan_limit(nmax);

        if (cmd_sgp->parsed()) {
            print_semigroup_report(NumericalSemigroup::from_generators(parse_generator_list(literal)), g);
            return 0;
        }
        if (cmd_ideal->parsed()) {
            if (!ideal_literal.empty()) {
                auto [igens, sgens] = parse_ideal_literal(ideal_literal);
                print_ideal_report(RelativeIdeal(NumericalSemigroup::from_generators(sgens), igens), g);
            } else if (!sgp_text.empty() && !gens_text.empty()) {
                print_ideal_report(ideal_from_flags(sgp_text, gens_text), g);
            } else {
                throw error(errc::parse_error, "give an ideal literal or both --sgp and --gens");
            }
            return 0;
        }
        if (cmd_rr->parsed()) return print_analysis(ideal_from_flags(sgp_text, gens_text), g, with_oracle);
        if (cmd_pull->parsed()) {
            const auto pb = pullback(ideal_from_flags(sgp_text, gens_text));
            if (g.json) {
                std::cout << pullback_json(pb).dump(2) << "\n";
            } else {
                std::cout << "T                <" << format_generator_list(pb.t.generators()) << ">\n"
                          << "F gens           {" << format_generator_list(pb.f.generators()) << "}\n"
                          << "F                " << format_set(pb.f, g.ascii) << "\n"
                          << "apery F          " << format_apery(pb.micro.apery) << "\n"
                          << "apery B(F)       " << format_apery(pb.micro.apery_blowup) << "\n"
                          << "a-array          " << format_int_list(pb.micro.a) << "\n"
                          << "b-array          " << format_int_list(pb.micro.b) << "\n"
                          << "h = 1            " << (pb.verdict ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (cmd_family->parsed()) {
            if (n_min < 3 || n_min > n_max || n_max > n_cap)
                throw error(errc::range_error, "family range must satisfy 3 <= n_min <= n_max <= cap");
            int status = 0;
            for (Int n = n_min; n <= n_max; ++n) {
                const FamilyInstance fam = family_instance(n);
                const AnalysisReport rep = analyze(fam.e);
                const auto breaches = analysis_breaches(rep);
                const bool expected = rep.rr.r == n - 1 && rep.rr.h == 1;
                if (g.json) {
                    nlohmann::json j{{"n", n},          {"a", fam.a},
                                     {"b", fam.b},      {"d", fam.d},
                                     {"c", fam.c},      {"sgp", semigroup_json(fam.s)},
                                     {"r", rep.rr.r},   {"h", rep.rr.h},
                                     {"thm_comp", rep.pb.verdict}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "n=" << n << "  S_n=<" << format_generator_list(fam.s.generators())
                              << ">  r=" << rep.rr.r << "  h=" << rep.rr.h
                              << "  thm_comp=" << (rep.pb.verdict ? "yes" : "no") << "\n";
                }
                if (!expected || !breaches.empty()) {
                    status = 2;
                    for (const auto& b : breaches) std::cerr << "BREACH n=" << n << ": " << b << "\n";
                    if (!expected) std::cerr << "BREACH n=" << n << ": expected r=n-1 and h=1\n";
                }
            }
            return status;
        }
        if (cmd_sweep->parsed()) {
            SweepConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw error(errc::parse_error, "cannot open config file " + config_path);
                cfg = parse_sweep_config(in);
            }
            if (count >= 0) cfg.params.count = count;
            if (seed >= 0) cfg.params.seed = static_cast<std::uint64_t>(seed);
            if (!out_path.empty()) cfg.out_path = out_path;
            SweepStats stats;
            if (cfg.out_path.empty()) {
                stats = run_sweep(cfg, std::cout);
            } else {
                std::ofstream out(cfg.out_path);
                if (!out) throw error(errc::parse_error, "cannot open output file " + cfg.out_path);
                stats = run_sweep(cfg, out);
            }
            std::cerr << "sweep: " << stats.rows << " rows, " << stats.errors << " errors, " << stats.breaches
                      << " consistency breaches\n";
            return stats.breaches > 0 ? 2 : 0;
        }
        if (cmd_verify->parsed()) {
            InstanceParams params;
            params.count = verify_count;
            params.seed = static_cast<std::uint64_t>(verify_seed);
            const VerifySummary summary = run_verification(params, family_hi);
            for (const auto& c : summary.checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << " (" << static_cast<long>(c.ms) << " ms)\n";
            }
            return summary.all_pass() ? 0 : 1;
        }
    } catch (const rrsgp::error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return err.code() == errc::parse_error ? 1 : 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}

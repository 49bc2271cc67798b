// weilpoly command-line tool: enumerate, check, crosscheck, selftest.
//
// Exit codes: 0 success/member, 1 non-member, 2 invalid arguments,
// 3 q not a prime power, 4 precision exhausted, 5 crosscheck discrepancy,
// 6 budget exceeded, 7 selftest failure.

#include "weilpoly/weilpoly.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace weilpoly;

namespace {

PrecisionConfig precision_from(long prec_flag, long cap_flag) {
    PrecisionConfig pc;
    if (const char* env = std::getenv("WEILPOLY_PREC")) {
        long v = std::atol(env);
        if (v >= 8) pc.start = v;
    }
    if (prec_flag > 0) pc.start = prec_flag;
    if (cap_flag > 0) pc.cap = cap_flag;
    if (pc.cap < pc.start) pc.cap = pc.start;
    return pc;
}

std::vector<Int> parse_coeffs(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.emplace_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.emplace_back(cur);
    return out;
}

int cmd_enumerate(unsigned long q, unsigned g, const EnumConfig& cfg, const std::string& format,
                  const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    std::size_t count = 0, realroots = 0;
    if (format == "csv") *os << csv_header() << "\n";
    auto recs = enumerate_weil(q, g, cfg);
    for (const auto& r : recs) {
        OutputRecord rec = make_record(r);
        ++count;
        realroots += rec.real_root;
        if (format == "csv")
            *os << to_csv_row(rec) << "\n";
        else
            *os << to_jsonl(rec) << "\n";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "count=" << count << " real_roots=" << realroots << " elapsed=" << dt << "s\n";
    return 0;
}

int cmd_check(unsigned long q, unsigned g, const std::string& a_csv, const EnumConfig& cfg) {
    std::vector<Int> a = parse_coeffs(a_csv);
    if (a.size() != g) {
        std::cerr << "need exactly g=" << g << " coefficients\n";
        return 2;
    }
    WeilCandidate c(q, g, a);
    bool member = is_weil(c);
    EnumRecord rec;
    rec.c = c;
    if (member) {
        rec.real_root = has_real_root(c, /*assume_weil=*/true);
        rec.cls = classify_real_roots(c, /*assume_weil=*/true);
        OutputRecord out = make_record(rec);
        std::cout << "{\"member\":true,\"record\":" << to_jsonl(out) << "}\n";
        return 0;
    }
    OutputRecord out = make_record(rec);
    std::cout << "{\"member\":false,\"record\":" << to_jsonl(out) << "}\n";
    (void)cfg;
    return 1;
}

void report_json(const CompareReport& rep, std::ostream& os) {
    os << "{\"q\":" << rep.q << ",\"g\":" << rep.g << ",\"count_theorem\":" << rep.count_theorem
       << ",\"count_oracle\":" << rep.count_oracle << ",\"missing\":[";
    for (std::size_t i = 0; i < rep.missing.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < rep.missing[i].a.size(); ++j) {
            if (j) os << ",";
            os << rep.missing[i].a[j].get_str();
        }
        os << "]";
    }
    os << "],\"spurious\":[";
    for (std::size_t i = 0; i < rep.spurious.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < rep.spurious[i].a.size(); ++j) {
            if (j) os << ",";
            os << rep.spurious[i].a[j].get_str();
        }
        os << "]";
    }
    os << "],\"realroot_count\":" << rep.realroot_count;
    if (rep.samples) os << ",\"samples\":" << rep.samples;
    os << ",\"elapsed\":" << rep.elapsed_seconds << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Weil polynomial enumeration and verification"};
    app.require_subcommand(1);

    long prec_flag = 0, cap_flag = 0;
    int jobs = 1;
    app.add_option("--prec", prec_flag, "working precision in bits (env WEILPOLY_PREC)");
    app.add_option("--prec-cap", cap_flag, "precision doubling cap in bits");
    app.add_option("--jobs", jobs, "parallel workers for enumeration partitions");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "enumerate W_q(g)");
    unsigned long en_q = 2;
    unsigned en_g = 1;
    std::string en_mode = "theorem", en_filter = "all", en_format = "jsonl", en_out;
    en->add_option("--q", en_q, "prime power q")->required();
    en->add_option("--g", en_g, "dimension g (1..5)")->required();
    en->add_option("--mode", en_mode, "theorem|safe")
        ->check(CLI::IsMember({"theorem", "safe"}));
    en->add_option("--filter", en_filter, "all|real-roots|no-real-roots")
        ->check(CLI::IsMember({"all", "real-roots", "no-real-roots"}));
    en->add_option("--format", en_format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
    en->add_option("--out", en_out, "output file (default stdout)");

    // check
    auto* ch = app.add_subcommand("check", "check one candidate");
    unsigned long ch_q = 2;
    unsigned ch_g = 1;
    std::string ch_a;
    ch->add_option("--q", ch_q)->required();
    ch->add_option("--g", ch_g)->required();
    ch->add_option("--a", ch_a, "comma-separated a_1..a_g")->required();

    // crosscheck
    auto* cc = app.add_subcommand("crosscheck", "compare against the brute-force oracle");
    unsigned long cc_q = 2;
    unsigned cc_g = 1;
    long long cc_budget = 50000000;
    long long cc_sample = 0;
    std::string cc_oracle = "auto";
    bool cc_literal = false, cc_unsorted = false;
    cc->add_option("--q", cc_q)->required();
    cc->add_option("--g", cc_g)->required();
    cc->add_option("--budget", cc_budget, "candidate-count budget for exhaustive walks");
    cc->add_option("--sample", cc_sample, "random samples instead of exhaustive walk");
    cc->add_option("--oracle", cc_oracle, "auto|box|trace")
        ->check(CLI::IsMember({"auto", "box", "trace"}));
    cc->add_flag("--paper-literal", cc_literal,
                 "diagnostic: decide with the printed (uncorrected) sign conditions");
    cc->add_flag("--unsorted-theta", cc_unsorted,
                 "diagnostic: decide with construction-order thetas");

    // selftest
    auto* st = app.add_subcommand("selftest", "run the embedded invariant suites");
    bool st_inject = false;
    unsigned st_scale = 1;
    st->add_flag("--inject-unsorted-theta", st_inject, "fault injection for the sorting property");
    st->add_option("--scale", st_scale, "sample-count multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    PrecisionConfig pc = precision_from(prec_flag, cap_flag);

    try {
        if (*en) {
            EnumConfig cfg;
            cfg.mode = en_mode == "safe" ? EnumConfig::Mode::Safe : EnumConfig::Mode::Theorem;
            cfg.filter = en_filter == "real-roots"  ? EnumConfig::Filter::RealRootsOnly
                         : en_filter == "no-real-roots" ? EnumConfig::Filter::NoRealRoots
                                                        : EnumConfig::Filter::All;
            cfg.prec = pc;
            cfg.jobs = jobs;
            return cmd_enumerate(en_q, en_g, cfg, en_format, en_out);
        }
        if (*ch) {
            EnumConfig cfg;
            cfg.prec = pc;
            return cmd_check(ch_q, ch_g, ch_a, cfg);
        }
        if (*cc) {
            CompareReport rep;
            if (cc_sample > 0) {
                rep = compare_sampled(cc_q, cc_g, static_cast<std::size_t>(cc_sample), 20240901,
                                      jobs);
            } else {
                PredicateOptions diag;
                diag.literal_signs = cc_literal;
                diag.sort_thetas = !cc_unsorted;
                diag.prec = pc;
                OracleKind ok = cc_oracle == "box"     ? OracleKind::Box
                                : cc_oracle == "trace" ? OracleKind::Trace
                                                       : OracleKind::Auto;
                rep = compare(cc_q, cc_g, Int(static_cast<long>(cc_budget)), jobs, ok, diag);
            }
            report_json(rep, std::cout);
            return rep.ok() ? 0 : 5;
        }
        if (*st) {
            SelftestOptions opt;
            opt.prec = pc;
            opt.inject_unsorted_theta = st_inject;
            opt.scale = st_scale;
            SelftestResult res = run_selftest(opt, std::cerr);
            if (res.passed) {
                std::cout << "selftest: all properties hold\n";
                return 0;
            }
            if (res.precision_exhausted) {
                std::cout << "selftest: precision exhausted\n";
                return 4;
            }
            std::cout << "selftest: property failed: " << res.failed_property << "\n";
            return 7;
        }
    } catch (const NotPrimePower& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

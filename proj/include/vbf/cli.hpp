#pragma once

// The vbf command line: construct, analyze and verify.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or precondition error,
// 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "vbf/constructions.hpp"
#include "vbf/error.hpp"
#include "vbf/io.hpp"
#include "vbf/verify.hpp"

namespace vbf {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitBudget = 3 };

namespace cli_detail {

// VBF_DEFAULT_POLY_TABLE holds "m=poly" pairs separated by commas, spaces or
// newlines, either inline or in the file it names.
inline std::optional<std::uint64_t> env_default_poly(unsigned m) {
    const char* env = std::getenv("VBF_DEFAULT_POLY_TABLE");
    if (env == nullptr || *env == '\0') return std::nullopt;
    std::string text = env;
    if (text.find('=') == std::string::npos) {
        std::ifstream in(text);
        if (!in) throw Error(Errc::MalformedInput, "cannot read VBF_DEFAULT_POLY_TABLE file " + text);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error(Errc::MalformedInput, "bad VBF_DEFAULT_POLY_TABLE entry '" + tok + "'");
        if (detail::parse_uint(tok.substr(0, eq)) == m) return detail::parse_hex(tok.substr(eq + 1));
    }
    return std::nullopt;
}

inline FieldPtr make_field(unsigned m, const std::string& poly) {
    if (!poly.empty()) return Field::make(m, detail::parse_hex(poly));
    return Field::make(m, env_default_poly(m));
}

struct FamilyArgs {
    std::string family;
    unsigned m = 0;
    unsigned i = 1;
    unsigned n = 1;
    std::uint64_t d = 0;
    std::string poly;
    bool relaxed = false;

    void attach(CLI::App* app, bool required) {
        auto* f = app->add_option("--family", family,
                                  "power, gold, kasami, welch, niho, inverse, dobbertin, thm1, thm2, thm3, thm4");
        auto* mm = app->add_option("--m", m, "field degree")->check(CLI::Range(2u, 32u));
        if (required) {
            f->required();
            mm->required();
        }
        app->add_option("--i", i, "Gold/Kasami parameter");
        app->add_option("--n", n, "subfield degree (thm4)");
        app->add_option("--d", d, "exponent (power)");
        app->add_option("--poly", poly, "reduction polynomial in hex");
        app->add_flag("--relaxed", relaxed, "allow gcd(i, m) > 1 (gold, thm1, thm2)");
    }

    FuncTable build() const {
        const auto fam = family_from_name(family);
        if (!fam) throw Error(Errc::MalformedInput, "unknown family '" + family + "'");
        const FieldPtr field = make_field(m, poly);
        FamilySpec s;
        s.family = *fam;
        s.m = m;
        s.i = i;
        s.n = n;
        s.d = d;
        s.relaxed = relaxed;
        return build_family(field, s);
    }
};

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::MalformedInput, "cannot write " + path);
    f << text;
}

// "30s" is a time limit in seconds, a bare integer is a candidate count.
inline void parse_budget(const std::string& s, VerifyParams& p) {
    if (s.empty()) return;
    const bool seconds = s.back() == 's';
    const std::string digits = seconds ? s.substr(0, s.size() - 1) : s;
    if (digits.empty() || digits.size() > 19 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::MalformedInput, "budget must be COUNT or SECONDSs, got '" + s + "'");
    const std::uint64_t v = std::stoull(digits);
    if (seconds)
        p.time_limit = std::chrono::seconds(v);
    else
        p.budget = v;
}

} // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vectorial Boolean functions over GF(2^m): construct, analyze, verify", "vbf"};
    app.require_subcommand(1);

    cli_detail::FamilyArgs cons;
    std::string cons_out;
    auto* construct = app.add_subcommand("construct", "write the lookup table of a family member");
    cons.attach(construct, true);
    construct->add_option("--out", cons_out, "output file (default: stdout)");

    cli_detail::FamilyArgs an;
    std::string an_in, an_json;
    unsigned an_threads = 0;
    bool an_timing = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "degree, spectra, APN/AB flags and EA test as JSON");
    an.attach(analyze_cmd, false);
    analyze_cmd->add_option("--in", an_in, "lookup table file");
    analyze_cmd->add_option("--json-out", an_json, "report file (default: stdout)");
    analyze_cmd->add_option("--threads", an_threads, "worker threads (0 = all cores)");
    analyze_cmd->add_flag("--timing", an_timing, "include timing_ms in the report");

    std::string claim;
    VerifyParams vp;
    unsigned v_m = 0;
    unsigned v_a = 0;
    std::string v_poly, v_budget;
    auto* verify = app.add_subcommand("verify", "check a construction claim by direct computation");
    verify->add_option("claim", claim, "thm1, thm2, thm3, thm4, remark4, example1, prop-gold-perm, "
                                       "prop-gold-perm-even, f8-check, ccz-invariance")
        ->required();
    verify->add_option("--m", v_m, "field degree")->check(CLI::Range(2u, 32u));
    verify->add_option("--i", vp.i, "Gold parameter");
    verify->add_option("--n", vp.n, "subfield degree (thm4)");
    verify->add_option("--a", v_a, "extra witness parameter a (nonzero element)");
    verify->add_option("--poly", v_poly, "reduction polynomial in hex");
    verify->add_flag("--relaxed", vp.relaxed, "allow gcd(i, m) > 1 (thm1, thm2)");
    verify->add_option("--threads", vp.threads, "worker threads (0 = all cores)");
    verify->add_option("--budget", v_budget, "search budget: COUNT candidates or SECONDSs");
    verify->add_option("--seed", vp.seed, "seed for sampled checks");
    verify->add_option("--samples", vp.samples, "number of random samples (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            std::ostringstream ss;
            write_lut(ss, cons.build());
            cli_detail::write_text(cons_out, ss.str(), out);
            return kExitOk;
        }
        if (analyze_cmd->parsed()) {
            std::optional<FuncTable> f;
            if (!an_in.empty()) {
                if (!an.family.empty()) throw Error(Errc::MalformedInput, "give either --in or --family, not both");
                std::ifstream in(an_in);
                if (!in) throw Error(Errc::MalformedInput, "cannot read " + an_in);
                f = read_lut(in);
            } else {
                if (an.family.empty() || an.m == 0) throw Error(Errc::MalformedInput, "analyze needs --in or --family with --m");
                f = an.build();
            }
            const AnalysisReport rep = analyze(*f, resolve_threads(an_threads));
            cli_detail::write_text(an_json, to_json(rep, an_timing).dump(2) + "\n", out);
            return kExitOk;
        }
        if (verify->parsed()) {
            if (v_m != 0) vp.m = v_m;
            if (v_a != 0) vp.a = v_a;
            if (!v_poly.empty()) vp.poly = detail::parse_hex(v_poly);
            else if (vp.m) vp.poly = cli_detail::env_default_poly(*vp.m);
            cli_detail::parse_budget(v_budget, vp);
            vp.threads = resolve_threads(vp.threads);
            const VerifyReport rep = verify_claim(claim, vp);
            for (const auto& c : rep.checks) {
                const char* tag = c.passed ? "PASS" : (c.advisory ? "NOTE" : "FAIL");
                out << tag << "  " << c.name;
                if (!c.detail.empty()) out << " [" << c.detail << "]";
                out << '\n';
            }
            if (!rep.ok()) {
                out << claim << ": FAILED\n";
                return kExitCheckFailed;
            }
            if (rep.budget_exceeded) {
                out << claim << ": budget exceeded\n";
                return kExitBudget;
            }
            out << claim << ": verified\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

} // namespace vbf

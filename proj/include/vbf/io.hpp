#pragma once

// Lookup-table text format and the JSON analysis report.
//
// LUT format: a header line "m=<int> poly=0x<hex>" followed by the 2^m
// values F(0), F(1), ... in hex, one per line. The reader also accepts
// several values per line, values without the 0x prefix and '#' comments.

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "vbf/ccz.hpp"
#include "vbf/error.hpp"
#include "vbf/function.hpp"
#include "vbf/gf2m.hpp"
#include "vbf/spectra.hpp"

namespace vbf {

inline std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

inline void write_lut(std::ostream& os, const FuncTable& f) {
    os << "m=" << f.degree_m() << " poly=" << hex(f.field().poly()) << '\n';
    for (std::uint64_t x = 0; x < f.size(); ++x) os << hex(f[static_cast<Elem>(x)]) << '\n';
}

namespace detail {

inline std::uint64_t parse_hex(const std::string& tok) {
    std::string s = tok;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s = s.substr(2);
    if (s.empty() || s.size() > 16) throw Error(Errc::MalformedInput, "bad hex token '" + tok + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw Error(Errc::MalformedInput, "bad hex token '" + tok + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

inline unsigned parse_uint(const std::string& tok) {
    if (tok.empty() || tok.size() > 3 || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::MalformedInput, "bad integer '" + tok + "'");
    return static_cast<unsigned>(std::stoul(tok));
}

} // namespace detail

/// Parses the LUT format. The header is required; its poly may be omitted,
/// in which case the default polynomial for m is used.
inline FuncTable read_lut(std::istream& is) {
    std::string line;
    std::optional<unsigned> m;
    std::optional<std::uint64_t> poly;
    std::vector<std::string> tokens;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind("m=", 0) == 0) {
                if (m || !tokens.empty()) throw Error(Errc::MalformedInput, "misplaced m= header");
                m = detail::parse_uint(tok.substr(2));
            } else if (tok.rfind("poly=", 0) == 0) {
                if (!m || poly || !tokens.empty()) throw Error(Errc::MalformedInput, "misplaced poly= header");
                poly = detail::parse_hex(tok.substr(5));
            } else {
                if (!m) throw Error(Errc::MalformedInput, "missing m= header");
                tokens.push_back(tok);
            }
        }
    }
    if (!m) throw Error(Errc::MalformedInput, "missing m= header");
    FieldPtr field;
    try {
        field = Field::make(*m, poly);
    } catch (const Error& e) {
        throw Error(Errc::MalformedInput, std::string("bad field header: ") + e.what());
    }
    if (tokens.size() != field->size())
        throw Error(Errc::MalformedInput,
                    "expected " + std::to_string(field->size()) + " values, got " + std::to_string(tokens.size()));
    std::vector<Elem> vals(tokens.size());
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const std::uint64_t v = detail::parse_hex(tokens[k]);
        if (v > field->mask()) throw Error(Errc::MalformedInput, "value " + tokens[k] + " exceeds 2^m - 1");
        vals[k] = static_cast<Elem>(v);
    }
    return FuncTable(field, std::move(vals));
}

struct AnalysisReport {
    unsigned m = 0;
    std::uint64_t reduction_poly = 0;
    unsigned degree = 0;
    std::int64_t nonlinearity = 0;
    std::uint64_t differential_uniformity = 0;
    bool is_apn = false;
    bool is_ab = false;
    WalshSpectrum walsh;
    DifferentialSpectrum delta;
    std::optional<Elem> ea_power_witness;
    double timing_ms = 0;
};

inline AnalysisReport analyze(const FuncTable& f, unsigned threads = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.m = f.degree_m();
    r.reduction_poly = f.field().poly();
    r.degree = algebraic_degree(f);
    r.walsh = walsh_spectrum(f, threads);
    r.delta = differential_spectrum(f, threads);
    r.nonlinearity = nonlinearity_from(r.walsh, r.m);
    r.differential_uniformity = r.delta.max;
    r.is_apn = r.delta.max == 2;
    r.is_ab = is_ab_from(r.walsh, r.m);
    const EaPowerVerdict v = ea_power_test(f);
    if (v.proven_inequivalent) r.ea_power_witness = v.witness;
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Keys come out sorted, so equal reports serialise to identical bytes.
inline nlohmann::json to_json(const AnalysisReport& r, bool with_timing = false) {
    nlohmann::json j;
    j["schema"] = 1;
    j["m"] = r.m;
    j["reduction_poly"] = hex(r.reduction_poly);
    j["degree"] = r.degree;
    j["nonlinearity"] = r.nonlinearity;
    j["differential_uniformity"] = r.differential_uniformity;
    j["is_apn"] = r.is_apn;
    j["is_ab"] = r.is_ab;
    nlohmann::json w = nlohmann::json::object();
    for (auto [v, c] : r.walsh.distribution) w[std::to_string(v)] = c;
    j["walsh_distribution"] = w;
    nlohmann::json d = nlohmann::json::object();
    for (auto [v, c] : r.delta.distribution) d[std::to_string(v)] = c;
    j["delta_distribution"] = d;
    if (r.ea_power_witness) j["ea_power_witness"] = hex(*r.ea_power_witness);
    if (with_timing) j["timing_ms"] = r.timing_ms;
    return j;
}

} // namespace vbf

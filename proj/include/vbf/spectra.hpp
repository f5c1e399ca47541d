#pragma once

// Walsh and differential spectra of F: GF(2^m) -> GF(2^m), with the inner
// product x.y = tr(xy).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbf/error.hpp"
#include "vbf/function.hpp"
#include "vbf/parallel.hpp"

namespace vbf {

inline constexpr unsigned kMaxSpectrumDegree = 24;

/// Multiset of lambda_F(a, b) over all a and all b != 0.
struct WalshSpectrum {
    std::map<std::int64_t, std::uint64_t> distribution;
    std::int64_t max_abs = 0;

    std::set<std::int64_t> support() const {
        std::set<std::int64_t> s;
        for (const auto& kv : distribution) s.insert(kv.first);
        return s;
    }

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// Multiset of delta_F(a, b) over all a != 0 and all b; max is the differential uniformity.
struct DifferentialSpectrum {
    std::map<std::uint64_t, std::uint64_t> distribution;
    std::uint64_t max = 0;

    friend bool operator==(const DifferentialSpectrum&, const DifferentialSpectrum&) = default;
};

/// Naive O(2^m) character sum; the oracle for the fast transform.
inline std::int64_t walsh_value(const FuncTable& f, Elem a, Elem b) {
    const Field& fd = f.field();
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const auto xe = static_cast<Elem>(x);
        const unsigned e = fd.trace(fd.mul(b, f[xe])) ^ fd.trace(fd.mul(a, xe));
        s += e ? -1 : 1;
    }
    return s;
}

/// In-place unnormalised Walsh-Hadamard transform.
inline void fwht_inplace(std::span<std::int32_t> v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int32_t u = v[j];
                const std::int32_t w = v[j + h];
                v[j] = u + w;
                v[j + h] = u - w;
            }
}

namespace detail {

inline void check_spectrum_size(const FuncTable& f) {
    if (f.degree_m() > kMaxSpectrumDegree)
        throw Error(Errc::TooLarge, "spectra are limited to m <= " + std::to_string(kMaxSpectrumDegree));
}

// Transform of (-1)^{tr(bF(x))} indexed by the coordinate vector a' with a'.x = tr(ax).
inline void walsh_coordinate_column(const FuncTable& f, Elem b, std::vector<std::int32_t>& buf) {
    const Elem w = f.field().trace_dual(b);
    buf.resize(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x)
        buf[x] = (std::popcount(f[static_cast<Elem>(x)] & w) & 1) ? -1 : 1;
    fwht_inplace(buf);
}

} // namespace detail

/// lambda_F(a, b) for every a, indexed by a.
inline std::vector<std::int64_t> walsh_column(const FuncTable& f, Elem b) {
    detail::check_spectrum_size(f);
    std::vector<std::int32_t> buf;
    detail::walsh_coordinate_column(f, b, buf);
    const Field& fd = f.field();
    std::vector<Elem> basis_dual(fd.degree());
    for (unsigned k = 0; k < fd.degree(); ++k) basis_dual[k] = fd.trace_dual(Elem{1} << k);
    std::vector<std::int64_t> out(f.size());
    for (std::uint64_t a = 0; a < f.size(); ++a) {
        Elem ad = 0;
        for (unsigned k = 0; k < fd.degree(); ++k)
            if ((a >> k) & 1u) ad ^= basis_dual[k];
        out[a] = buf[ad];
    }
    return out;
}

/// Full Walsh spectrum by one fast transform per component b != 0. The
/// merged multiset does not depend on how b is split across workers.
inline WalshSpectrum walsh_spectrum(const FuncTable& f, unsigned threads = 1) {
    detail::check_spectrum_size(f);
    std::mutex mu;
    WalshSpectrum result;
    parallel_blocks(1, f.size(), threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::map<std::int64_t, std::uint64_t> local;
        std::vector<std::int32_t> buf;
        std::vector<std::uint64_t> hist(2 * f.size() + 1);
        const auto off = static_cast<std::int64_t>(f.size());
        for (std::uint64_t b = lo; b < hi; ++b) {
            detail::walsh_coordinate_column(f, static_cast<Elem>(b), buf);
            for (std::int32_t v : buf) ++hist[static_cast<std::size_t>(v + off)];
        }
        for (std::size_t k = 0; k < hist.size(); ++k)
            if (hist[k]) local[static_cast<std::int64_t>(k) - off] += hist[k];
        std::lock_guard lock(mu);
        for (auto [v, c] : local) result.distribution[v] += c;
    });
    for (auto [v, c] : result.distribution) result.max_abs = std::max(result.max_abs, std::abs(v));
    return result;
}

inline std::int64_t nonlinearity_from(const WalshSpectrum& s, unsigned m) {
    return (std::int64_t{1} << (m - 1)) - s.max_abs / 2;
}

inline std::int64_t nonlinearity(const FuncTable& f, unsigned threads = 1) {
    return nonlinearity_from(walsh_spectrum(f, threads), f.degree_m());
}

/// Support of the spectrum contained in {0, +-2^{(m+s)/2}}.
inline bool spectrum_three_valued(const WalshSpectrum& s, unsigned m, unsigned shift) {
    const std::int64_t peak = std::int64_t{1} << ((m + shift) / 2);
    for (const auto& kv : s.distribution)
        if (kv.first != 0 && kv.first != peak && kv.first != -peak) return false;
    return true;
}

/// Almost bent from an existing spectrum. Both the support condition and the
/// nonlinearity bound 2^{m-1} - 2^{(m-1)/2} are evaluated; they must agree.
inline bool is_ab_from(const WalshSpectrum& s, unsigned m) {
    if (m % 2 == 0) return false;
    const bool by_support = spectrum_three_valued(s, m, 1);
    const bool by_nl = nonlinearity_from(s, m) == (std::int64_t{1} << (m - 1)) - (std::int64_t{1} << ((m - 1) / 2));
    if (by_support != by_nl) throw std::logic_error("AB characterisations disagree");
    return by_support;
}

inline bool is_ab(const FuncTable& f, unsigned threads = 1) {
    if (f.degree_m() % 2 == 0) return false;
    return is_ab_from(walsh_spectrum(f, threads), f.degree_m());
}

inline bool is_three_valued(const FuncTable& f, unsigned s, unsigned threads = 1) {
    if ((f.degree_m() + s) % 2 != 0)
        throw Error(Errc::ParityMismatch, "m + s must be even");
    return spectrum_three_valued(walsh_spectrum(f, threads), f.degree_m(), s);
}

inline DifferentialSpectrum differential_spectrum(const FuncTable& f, unsigned threads = 1) {
    detail::check_spectrum_size(f);
    std::mutex mu;
    DifferentialSpectrum result;
    const auto vals = f.values();
    parallel_blocks(1, f.size(), threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> cnt(f.size());
        std::vector<std::uint64_t> hist(f.size() + 1);
        for (std::uint64_t a = lo; a < hi; ++a) {
            std::fill(cnt.begin(), cnt.end(), 0u);
            for (std::uint64_t x = 0; x < f.size(); ++x) ++cnt[vals[x] ^ vals[x ^ a]];
            for (std::uint32_t c : cnt) ++hist[c];
        }
        std::lock_guard lock(mu);
        for (std::size_t v = 0; v < hist.size(); ++v)
            if (hist[v]) result.distribution[v] += hist[v];
    });
    if (!result.distribution.empty()) result.max = result.distribution.rbegin()->first;
    return result;
}

inline std::uint64_t differential_uniformity(const FuncTable& f, unsigned threads = 1) {
    return differential_spectrum(f, threads).max;
}

inline bool is_apn(const FuncTable& f, unsigned threads = 1) {
    return differential_uniformity(f, threads) == 2;
}

} // namespace vbf

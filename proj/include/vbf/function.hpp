#pragma once

// Functions F: GF(2^m) -> GF(2^m) as lookup tables, their univariate
// polynomial form, Boolean components and algebraic degree.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vbf/error.hpp"
#include "vbf/gf2m.hpp"

namespace vbf {

class FuncTable {
public:
    FuncTable(FieldPtr field, std::vector<Elem> values) : field_(std::move(field)), values_(std::move(values)) {
        if (values_.size() != field_->size())
            throw Error(Errc::MalformedInput, "table length " + std::to_string(values_.size()) + " != 2^m");
        for (Elem v : values_)
            if (v > field_->mask()) throw Error(Errc::MalformedInput, "table entry out of range");
    }

    template <class Fn>
    static FuncTable generate(FieldPtr field, Fn&& fn) {
        std::vector<Elem> v(field->size());
        for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = fn(static_cast<Elem>(x));
        return FuncTable(std::move(field), std::move(v));
    }

    static FuncTable identity(FieldPtr field) {
        return generate(std::move(field), [](Elem x) { return x; });
    }

    static FuncTable constant(FieldPtr field, Elem c) {
        return generate(std::move(field), [c](Elem) { return c; });
    }

    static FuncTable power(FieldPtr field, std::uint64_t d) {
        const Field& f = *field;
        return generate(std::move(field), [&f, d](Elem x) { return f.pow(x, d); });
    }

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    unsigned degree_m() const noexcept { return field_->degree(); }
    std::uint64_t size() const noexcept { return values_.size(); }
    Elem operator[](Elem x) const { return values_[x]; }
    std::span<const Elem> values() const noexcept { return values_; }

    friend bool operator==(const FuncTable& a, const FuncTable& b) {
        return a.field_->same_as(*b.field_) && a.values_ == b.values_;
    }

private:
    FieldPtr field_;
    std::vector<Elem> values_;
};

/// Sparse univariate form sum c_k x^k, exponents in [0, 2^m - 1], no zero coefficients.
class UnivariatePoly {
public:
    using Terms = std::map<std::uint64_t, Elem>;

    explicit UnivariatePoly(FieldPtr field, Terms terms = {}) : field_(std::move(field)) {
        for (auto [e, c] : terms) add_term(e, c);
    }

    /// Adds c*x^e (XOR into an existing coefficient).
    void add_term(std::uint64_t e, Elem c) {
        if (e > field_->order()) throw Error(Errc::MalformedInput, "exponent exceeds 2^m - 1");
        if (c > field_->mask()) throw Error(Errc::MalformedInput, "coefficient out of range");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second ^= c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    Elem operator()(Elem x) const {
        Elem acc = 0;
        for (auto [e, c] : terms_) acc ^= field_->mul(c, field_->pow(x, e));
        return acc;
    }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
    }

private:
    FieldPtr field_;
    Terms terms_;
};

/// Truth table of a Boolean function on F_2^m, one byte per entry.
using BoolTable = std::vector<std::uint8_t>;

inline unsigned two_weight(std::uint64_t k) { return static_cast<unsigned>(std::popcount(k)); }

inline FuncTable evaluate(const UnivariatePoly& poly) {
    return FuncTable::generate(poly.field_ptr(), [&poly](Elem x) { return poly(x); });
}

/// Unique polynomial of degree < 2^m through the table. Coefficients are the
/// cyclic transform c_k = sum_{x != 0} F(x) x^{-k} for 0 < k < 2^m - 1, with
/// c_0 = F(0) and c_{2^m-1} = sum_x F(x). Cost O(4^m) products.
inline UnivariatePoly interpolate(const FuncTable& f) {
    const Field& fd = f.field();
    if (fd.degree() > 16) throw Error(Errc::TooLarge, "interpolation is limited to m <= 16");
    const std::uint64_t n = fd.order();
    const Elem g = fd.generator();
    const Elem g_inv = fd.inv(g);

    // vals[j] = F(g^j)
    std::vector<Elem> vals(n);
    Elem gj = 1;
    Elem total = f[0];
    for (std::uint64_t j = 0; j < n; ++j) {
        vals[j] = f[gj];
        total ^= vals[j];
        gj = fd.mul(gj, g);
    }

    UnivariatePoly p(f.field_ptr());
    p.add_term(0, f[0]);
    p.add_term(n, total);
    Elem step = 1; // g^{-k}
    for (std::uint64_t k = 1; k < n; ++k) {
        step = fd.mul(step, g_inv);
        Elem acc = 0;
        Elem w = 1; // g^{-jk}
        for (std::uint64_t j = 0; j < n; ++j) {
            if (vals[j] != 0) acc ^= fd.mul(vals[j], w);
            w = fd.mul(w, step);
        }
        p.add_term(k, acc);
    }
    return p;
}

/// Degree read off the univariate form: max 2-weight of exponents with a nonzero coefficient.
inline unsigned univariate_degree(const UnivariatePoly& p) {
    unsigned d = 0;
    for (const auto& term : p.terms()) d = std::max(d, two_weight(term.first));
    return d;
}

/// In-place binary Moebius transform: truth table -> ANF coefficients.
inline void moebius_inplace(std::span<std::uint8_t> t) {
    for (std::size_t step = 1; step < t.size(); step <<= 1)
        for (std::size_t blk = 0; blk < t.size(); blk += 2 * step)
            for (std::size_t j = blk; j < blk + step; ++j) t[j + step] ^= t[j];
}

/// ANF degree of a Boolean function: max popcount of a monomial with nonzero coefficient.
inline unsigned bool_degree(BoolTable t) {
    moebius_inplace(t);
    unsigned d = 0;
    for (std::size_t u = 0; u < t.size(); ++u)
        if (t[u]) d = std::max(d, static_cast<unsigned>(std::popcount(u)));
    return d;
}

/// x -> tr(c F(x)).
inline BoolTable component(const FuncTable& f, Elem c) {
    const Elem w = f.field().trace_dual(c);
    BoolTable t(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x)
        t[x] = static_cast<std::uint8_t>(std::popcount(f[static_cast<Elem>(x)] & w) & 1);
    return t;
}

inline unsigned component_degree(const FuncTable& f, Elem c) {
    if (c == 0) return 0;
    return bool_degree(component(f, c));
}

/// Algebraic degree via the ANF of the m coordinate functions. Every component
/// tr(cF) is a sum of coordinates and each coordinate is a component, so this
/// equals both the max over components and the univariate 2-weight degree.
inline unsigned algebraic_degree(const FuncTable& f) {
    const unsigned m = f.degree_m();
    unsigned d = 0;
    BoolTable t(f.size());
    for (unsigned bit = 0; bit < m; ++bit) {
        for (std::uint64_t x = 0; x < f.size(); ++x) t[x] = static_cast<std::uint8_t>((f[static_cast<Elem>(x)] >> bit) & 1u);
        d = std::max(d, bool_degree(t));
    }
    return d;
}

/// ANFs of the m coordinate functions, packed 64 monomials per word. The ANF
/// of tr(cF) is the XOR of the coordinates selected by trace_dual(c).
class PackedCoordinateAnf {
public:
    explicit PackedCoordinateAnf(const FuncTable& f)
        : m_(f.degree_m()), words_(std::max<std::uint64_t>(1, f.size() / 64)), coords_(m_) {
        for (unsigned bit = 0; bit < m_; ++bit) {
            auto& c = coords_[bit];
            c.assign(words_, 0);
            for (std::uint64_t x = 0; x < f.size(); ++x)
                c[x / 64] |= static_cast<std::uint64_t>((f[static_cast<Elem>(x)] >> bit) & 1u) << (x % 64);
            moebius_packed(c);
        }
    }

    unsigned component_degree(const Field& fd, Elem c) const {
        if (c == 0) return 0;
        const Elem sel = fd.trace_dual(c);
        std::vector<std::uint64_t> acc(words_, 0);
        for (unsigned bit = 0; bit < m_; ++bit)
            if ((sel >> bit) & 1u)
                for (std::size_t w = 0; w < words_; ++w) acc[w] ^= coords_[bit][w];
        return degree_of(acc);
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& c : coords_) d = std::max(d, degree_of(c));
        return d;
    }

private:
    void moebius_packed(std::vector<std::uint64_t>& v) const {
        static constexpr std::uint64_t kLow[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                                  0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
        const unsigned in_word = std::min(m_, 6u);
        for (auto& w : v)
            for (unsigned s = 0; s < in_word; ++s) w ^= (w & kLow[s]) << (1u << s);
        for (std::size_t step = 1; step < v.size(); step <<= 1)
            for (std::size_t blk = 0; blk < v.size(); blk += 2 * step)
                for (std::size_t j = blk; j < blk + step; ++j) v[j + step] ^= v[j];
    }

    static unsigned degree_of(const std::vector<std::uint64_t>& v) {
        // kByWeight[k]: positions b in [0, 64) with popcount(b) = k.
        static const auto kByWeight = [] {
            std::array<std::uint64_t, 7> t{};
            for (unsigned b = 0; b < 64; ++b) t[std::popcount(b)] |= std::uint64_t{1} << b;
            return t;
        }();
        unsigned d = 0;
        for (std::size_t w = 0; w < v.size(); ++w) {
            if (v[w] == 0) continue;
            for (int k = 6; k >= 0; --k)
                if (v[w] & kByWeight[k]) {
                    d = std::max(d, static_cast<unsigned>(std::popcount(w)) + static_cast<unsigned>(k));
                    break;
                }
        }
        return d;
    }

    unsigned m_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> coords_;
};

inline bool is_permutation(const FuncTable& f) {
    std::vector<bool> seen(f.size());
    for (Elem v : f.values()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline FuncTable invert(const FuncTable& f) {
    std::vector<Elem> g(f.size());
    std::vector<bool> seen(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const Elem y = f[static_cast<Elem>(x)];
        if (seen[y]) throw Error(Errc::NotAPermutation, "function is not a permutation");
        seen[y] = true;
        g[y] = static_cast<Elem>(x);
    }
    return FuncTable(f.field_ptr(), std::move(g));
}

/// (f o g)(x) = f(g(x)).
inline FuncTable compose(const FuncTable& f, const FuncTable& g) {
    require_same_field(f.field(), g.field());
    return FuncTable::generate(f.field_ptr(), [&](Elem x) { return f[g[x]]; });
}

inline FuncTable add(const FuncTable& f, const FuncTable& g) {
    require_same_field(f.field(), g.field());
    return FuncTable::generate(f.field_ptr(), [&](Elem x) { return f[x] ^ g[x]; });
}

/// f composed with itself k times (k = 0 gives the identity).
inline FuncTable iterate(const FuncTable& f, unsigned k) {
    FuncTable r = FuncTable::identity(f.field_ptr());
    for (unsigned j = 0; j < k; ++j) r = compose(f, r);
    return r;
}

} // namespace vbf

#pragma once

// Arithmetic in GF(2^m), 2 <= m <= 32, in the polynomial basis.
//
// Elements are bit patterns: bit k is the coefficient of x^k. A Field is
// immutable after construction and shared between function tables through
// FieldPtr, so it is safe to use from several threads at once.

#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vbf/error.hpp"

namespace vbf {

using Elem = std::uint32_t;

namespace gf2x {

// Polynomials over F_2 packed into 64-bit words (bit k = coefficient of x^k).

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t r = 0;
    std::uint64_t aa = a;
    while (b != 0) {
        if (b & 1u) r ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t p) {
    const int dp = degree(p);
    for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
    return a;
}

/// a*b mod p for deg a, deg b < deg p <= 32.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return mod(clmul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), p);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

/// Irreducibility of a polynomial of degree m in [1, 32]: gcd(x^{2^k} - x, p) = 1
/// for 1 <= k < m and x^{2^m} = x (mod p).
inline bool is_irreducible(std::uint64_t p) {
    const int m = degree(p);
    if (m < 1 || m > 32) return false;
    if (m == 1) return true;
    const std::uint64_t x = 2;
    std::uint64_t xp = x; // x^{2^k} mod p
    for (int k = 1; k < m; ++k) {
        xp = mulmod(xp, xp, p);
        if (gcd(p, xp ^ x) != 1) return false;
    }
    xp = mulmod(xp, xp, p);
    return xp == x;
}

} // namespace gf2x

/// Lowest irreducible polynomial of degree m, in numeric order of its bitmask.
inline std::uint64_t default_poly(unsigned m) {
    if (m < 2 || m > 32) throw Error(Errc::UnsupportedDegree, "m must lie in [2, 32], got " + std::to_string(m));
    for (std::uint64_t p = (std::uint64_t{1} << m) | 1u;; p += 2)
        if (gf2x::is_irreducible(p)) return p;
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
    struct Token {};

public:
    // Log/antilog tables are built up to this degree; above it products use
    // carry-less multiplication with reduction.
    static constexpr unsigned kTableDegree = 16;

    static FieldPtr make(unsigned m, std::optional<std::uint64_t> poly = std::nullopt) {
        if (m < 2 || m > 32) throw Error(Errc::UnsupportedDegree, "m must lie in [2, 32], got " + std::to_string(m));
        std::uint64_t p = poly ? *poly : default_poly(m);
        if (gf2x::degree(p) != static_cast<int>(m))
            throw Error(Errc::PolyDegreeMismatch, "reduction polynomial does not have degree " + std::to_string(m));
        if (!gf2x::is_irreducible(p)) throw Error(Errc::RejectsReducible, "reduction polynomial is reducible");
        return std::make_shared<const Field>(Token{}, m, p);
    }

    Field(Token, unsigned m, std::uint64_t poly) : m_(m), poly_(poly) {
        size_ = std::uint64_t{1} << m;
        order_ = size_ - 1;
        mask_ = static_cast<Elem>(order_);
        for (unsigned k = 0; k < m; ++k)
            if (trace_slow(Elem{1} << k)) trace_mask_ |= Elem{1} << k;
        find_generator();
        if (m <= kTableDegree) build_tables();
    }

    unsigned degree() const noexcept { return m_; }
    std::uint64_t poly() const noexcept { return poly_; }
    /// 2^m.
    std::uint64_t size() const noexcept { return size_; }
    /// 2^m - 1, the order of the multiplicative group.
    std::uint64_t order() const noexcept { return order_; }
    Elem mask() const noexcept { return mask_; }
    Elem generator() const noexcept { return gen_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    bool same_as(const Field& o) const noexcept { return m_ == o.m_ && poly_ == o.poly_; }

    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        if (has_tables()) return exp_[log_[x] + log_[y]];
        return static_cast<Elem>(gf2x::mulmod(x, y, poly_));
    }

    Elem sqr(Elem x) const { return mul(x, x); }

    /// x^e with 0^0 = 1 and 0^e = 0 for e > 0.
    Elem pow(Elem x, std::uint64_t e) const {
        if (e == 0) return 1;
        if (x == 0) return 0;
        e %= order_;
        if (has_tables()) return exp_[(static_cast<std::uint64_t>(log_[x]) * e) % order_];
        Elem r = 1;
        Elem b = x;
        while (e != 0) {
            if (e & 1u) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem x) const {
        if (x == 0) throw Error(Errc::ZeroInverse, "0 has no inverse");
        if (has_tables()) return exp_[(order_ - log_[x]) % order_];
        return pow(x, order_ - 1);
    }

    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    /// x^{2^k}.
    Elem frobenius(Elem x, unsigned k) const {
        k %= m_;
        for (unsigned j = 0; j < k; ++j) x = sqr(x);
        return x;
    }

    /// Absolute trace tr(x) = x + x^2 + ... + x^{2^{m-1}}; linear, so a parity mask.
    unsigned trace(Elem x) const noexcept { return static_cast<unsigned>(std::popcount(x & trace_mask_) & 1); }

    Elem trace_mask() const noexcept { return trace_mask_; }

    /// The vector w with tr(b*y) = <w, y> (coordinate dot product) for all y.
    Elem trace_dual(Elem b) const {
        Elem w = 0;
        for (unsigned k = 0; k < m_; ++k)
            if (trace(mul(b, Elem{1} << k))) w |= Elem{1} << k;
        return w;
    }

    /// tr_{m/n}(x) = sum_{k < m/n} x^{2^{kn}}; lands in the subfield F_{2^n}.
    Elem rel_trace(Elem x, unsigned n) const {
        check_divisor(n);
        Elem acc = x;
        Elem y = x;
        for (unsigned k = 1; k < m_ / n; ++k) {
            y = frobenius(y, n);
            acc ^= y;
        }
        return acc;
    }

    /// Membership in the subfield F_{2^n} (fixed points of the n-th Frobenius power).
    bool in_subfield(Elem x, unsigned n) const {
        check_divisor(n);
        return frobenius(x, n) == x;
    }

    void check_divisor(unsigned n) const {
        if (n == 0 || m_ % n != 0)
            throw Error(Errc::NotADivisor, std::to_string(n) + " does not divide m = " + std::to_string(m_));
    }

    /// d with e*d = 1 (mod 2^m - 1), so that (x^e)^d = x for every x.
    std::uint64_t inverse_exponent(std::uint64_t e) const {
        const auto n = static_cast<std::int64_t>(order_);
        std::int64_t r0 = n;
        std::int64_t r1 = static_cast<std::int64_t>(e % order_);
        std::int64_t t0 = 0;
        std::int64_t t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (r0 != 1)
            throw Error(Errc::NotInvertible, "gcd(" + std::to_string(e) + ", 2^m-1) = " + std::to_string(r0));
        if (t0 < 0) t0 += n;
        return static_cast<std::uint64_t>(t0);
    }

private:
    unsigned trace_slow(Elem x) const {
        Elem acc = 0;
        for (unsigned k = 0; k < m_; ++k) {
            acc ^= x;
            x = static_cast<Elem>(gf2x::mulmod(x, x, poly_));
        }
        return acc & 1u;
    }

    Elem pow_slow(Elem x, std::uint64_t e) const {
        Elem r = 1;
        while (e != 0) {
            if (e & 1u) r = static_cast<Elem>(gf2x::mulmod(r, x, poly_));
            x = static_cast<Elem>(gf2x::mulmod(x, x, poly_));
            e >>= 1;
        }
        return r;
    }

    void find_generator() {
        std::vector<std::uint64_t> primes;
        std::uint64_t n = order_;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        }
        if (n > 1) primes.push_back(n);
        for (std::uint64_t g = 2; g <= mask_; ++g) {
            bool primitive = true;
            for (std::uint64_t p : primes) {
                if (pow_slow(static_cast<Elem>(g), order_ / p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen_ = static_cast<Elem>(g);
                return;
            }
        }
        gen_ = 1; // m where 2^m - 1 is 1 does not occur for m >= 2
    }

    void build_tables() {
        exp_.resize(2 * order_);
        log_.assign(size_, 0);
        Elem v = 1;
        for (std::uint64_t k = 0; k < order_; ++k) {
            exp_[k] = v;
            log_[v] = static_cast<std::uint32_t>(k);
            v = static_cast<Elem>(gf2x::mulmod(v, gen_, poly_));
        }
        for (std::uint64_t k = order_; k < 2 * order_; ++k) exp_[k] = exp_[k - order_];
    }

    unsigned m_;
    std::uint64_t poly_;
    std::uint64_t size_ = 0;
    std::uint64_t order_ = 0;
    Elem mask_ = 0;
    Elem gen_ = 0;
    Elem trace_mask_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) throw Error(Errc::ContextMismatch, "operands live in different fields");
}

} // namespace vbf

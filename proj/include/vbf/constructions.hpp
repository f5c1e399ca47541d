#pragma once

// Power-function families with known APN/AB exponents, the four polynomial
// families built as CCZ images of Gold functions, and the witnesses that
// certify each construction.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "vbf/ccz.hpp"
#include "vbf/error.hpp"
#include "vbf/function.hpp"
#include "vbf/gf2m.hpp"
#include "vbf/linear.hpp"

namespace vbf {

enum class Family { Power, Gold, Kasami, Welch, Niho, Inverse, Dobbertin, Thm1, Thm2, Thm3, Thm4 };

inline std::optional<Family> family_from_name(std::string_view s) {
    if (s == "power") return Family::Power;
    if (s == "gold") return Family::Gold;
    if (s == "kasami") return Family::Kasami;
    if (s == "welch") return Family::Welch;
    if (s == "niho") return Family::Niho;
    if (s == "inverse") return Family::Inverse;
    if (s == "dobbertin") return Family::Dobbertin;
    if (s == "thm1") return Family::Thm1;
    if (s == "thm2") return Family::Thm2;
    if (s == "thm3") return Family::Thm3;
    if (s == "thm4") return Family::Thm4;
    return std::nullopt;
}

struct FamilySpec {
    Family family = Family::Gold;
    unsigned m = 0;
    unsigned i = 1;
    unsigned n = 1;           ///< subfield degree (thm4)
    std::uint64_t d = 0;      ///< exponent (power)
    bool relaxed = false;     ///< allow gcd(i, m) = s > 1 (gold, thm1, thm2)
};

namespace detail {

inline std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

inline void require_gcd(unsigned i, unsigned m, bool relaxed) {
    require(i >= 1, Errc::ConditionViolated, "i must be positive");
    if (!relaxed)
        require(std::gcd(i, m) == 1, Errc::GcdViolation,
                "gcd(i, m) must be 1 (i = " + std::to_string(i) + ", m = " + std::to_string(m) + ")");
}

inline unsigned half_t(unsigned m) {
    require(m % 2 == 1, Errc::ConditionViolated, "family requires m = 2t+1 odd");
    return (m - 1) / 2;
}

} // namespace detail

/// Exponent d of a power family.
inline std::uint64_t family_exponent(const FamilySpec& s) {
    using detail::pow2;
    const unsigned m = s.m;
    switch (s.family) {
    case Family::Power:
        return s.d;
    case Family::Gold:
        detail::require_gcd(s.i, m, s.relaxed);
        return pow2(s.i) + 1;
    case Family::Kasami:
        detail::require_gcd(s.i, m, false);
        return pow2(2 * s.i) - pow2(s.i) + 1;
    case Family::Welch:
        return pow2(detail::half_t(m)) + 3;
    case Family::Niho: {
        const unsigned t = detail::half_t(m);
        return t % 2 == 0 ? pow2(t) + pow2(t / 2) - 1 : pow2(t) + pow2((3 * t + 1) / 2) - 1;
    }
    case Family::Inverse:
        return pow2(m) - 2;
    case Family::Dobbertin: {
        detail::require(m % 5 == 0, Errc::ConditionViolated, "Dobbertin family requires m = 5i");
        const unsigned i = m / 5;
        return pow2(4 * i) + pow2(3 * i) + pow2(2 * i) + pow2(i) - 1;
    }
    default:
        throw Error(Errc::ConditionViolated, "family is not a power family");
    }
}

inline bool is_power_family(Family f) {
    return f != Family::Thm1 && f != Family::Thm2 && f != Family::Thm3 && f != Family::Thm4;
}

/// Whether the tables of known power exponents list this instance as APN.
inline bool listed_apn(const FamilySpec& s) {
    switch (s.family) {
    case Family::Gold: return std::gcd(s.i, s.m) == 1;
    case Family::Kasami:
    case Family::Dobbertin: return true;
    case Family::Welch:
    case Family::Niho:
    case Family::Inverse: return s.m % 2 == 1;
    default: return false;
    }
}

/// Whether the AB table lists this instance (m odd only).
inline bool listed_ab(const FamilySpec& s) {
    if (s.m % 2 == 0) return false;
    switch (s.family) {
    case Family::Gold: return std::gcd(s.i, s.m) == 1;
    case Family::Kasami:
    case Family::Welch:
    case Family::Niho: return true;
    default: return false;
    }
}

// ---------------------------------------------------------------------------
// Gold-derived families

/// x^{2^i+1} + (x^{2^i} + x) tr(x^{2^i+1} + x), no parameter checks.
inline FuncTable theorem1_formula(const FieldPtr& field, unsigned i) {
    const Field& fd = *field;
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) {
        const Elem g = fd.pow(x, d);
        return fd.trace(g ^ x) ? g ^ fd.frobenius(x, i) ^ x : g;
    });
}

/// x^{2^i+1} + (x^{2^i} + x + 1) tr(x^{2^i+1}), no parameter checks.
inline FuncTable theorem2_formula(const FieldPtr& field, unsigned i) {
    const Field& fd = *field;
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) {
        const Elem g = fd.pow(x, d);
        return fd.trace(g) ? g ^ fd.frobenius(x, i) ^ x ^ 1u : g;
    });
}

/// AB for m > 3 odd with gcd(i, m) = 1; relaxed mode admits gcd(i, m) = s > 1.
inline FuncTable theorem1(const FieldPtr& field, unsigned i, bool relaxed = false) {
    const unsigned m = field->degree();
    detail::require(m % 2 == 1, Errc::ParityViolated, "m must be odd");
    detail::require(m > 3, Errc::ConditionViolated, "m must exceed 3");
    detail::require_gcd(i, m, relaxed);
    return theorem1_formula(field, i);
}

/// APN for m >= 4 even with gcd(i, m) = 1; relaxed mode admits gcd(i, m) = s > 1.
inline FuncTable theorem2(const FieldPtr& field, unsigned i, bool relaxed = false) {
    const unsigned m = field->degree();
    detail::require(m % 2 == 0, Errc::ParityViolated, "m must be even");
    detail::require(m >= 4, Errc::ConditionViolated, "m must be at least 4");
    detail::require_gcd(i, m, relaxed);
    return theorem2_formula(field, i);
}

namespace detail {

inline void require_thm3(const Field& fd, unsigned i) {
    require(fd.degree() % 6 == 0, Errc::DivisibilityViolated, "m must be divisible by 6");
    require_gcd(i, fd.degree(), false);
}

} // namespace detail

/// F1(x) = x + tr_{m/3}(x^{2(2^i+1)} + x^{4(2^i+1)}).
inline FuncTable theorem3_f1(const FieldPtr& field, unsigned i) {
    const Field& fd = *field;
    detail::require(fd.degree() % 6 == 0, Errc::DivisibilityViolated, "m must be divisible by 6");
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) {
        const Elem g = fd.pow(x, d);
        const Elem g2 = fd.sqr(g);
        return x ^ fd.rel_trace(g2 ^ fd.sqr(g2), 3);
    });
}

struct Theorem3F1Check {
    bool is_permutation = false;
    bool sixth_iterate_identity = false;  ///< F1^6 = id
    bool inverse_is_fifth_iterate = false;
};

inline Theorem3F1Check check_theorem3_f1(const FuncTable& f1) {
    Theorem3F1Check c;
    c.is_permutation = is_permutation(f1);
    const FuncTable f5 = iterate(f1, 5);
    c.sixth_iterate_identity = compose(f1, f5) == FuncTable::identity(f1.field_ptr());
    c.inverse_is_fifth_iterate = c.is_permutation && invert(f1) == f5;
    return c;
}

/// F' = x^{2^i+1} o F1^{-1}; APN of algebraic degree 4 for 6 | m, gcd(i, m) = 1.
inline FuncTable theorem3(const FieldPtr& field, unsigned i) {
    detail::require_thm3(*field, i);
    const FuncTable f1 = theorem3_f1(field, i);
    return compose(FuncTable::power(field, detail::pow2(i) + 1), invert(f1));
}

/// The closed expression [x + tr_{m/3}(x^{2(2^i+1)} + x^{4(2^i+1)})
///   + tr(x) tr_{m/3}(x^{2^i+1} + x^{2^{2i}(2^i+1)})]^{2^i+1}.
inline FuncTable theorem3_expanded(const FieldPtr& field, unsigned i) {
    const Field& fd = *field;
    detail::require_thm3(fd, i);
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) {
        const Elem g = fd.pow(x, d);
        const Elem g2 = fd.sqr(g);
        Elem inner = x ^ fd.rel_trace(g2 ^ fd.sqr(g2), 3);
        if (fd.trace(x)) inner ^= fd.rel_trace(g ^ fd.frobenius(g, 2 * i), 3);
        return fd.pow(inner, d);
    });
}

/// For all u, w in F_8^* with tr_3(w) = 0: (u^{2^i+1} w)^2 + (u^{2^i+1} w)^4 != u.
struct F8Check {
    bool holds = true;
    unsigned pairs_checked = 0;
};

inline F8Check f8_side_condition(unsigned i) {
    const FieldPtr f8 = Field::make(3);
    const Field& fd = *f8;
    const std::uint64_t d = detail::pow2(i) + 1;
    F8Check r;
    for (Elem u = 1; u < 8; ++u)
        for (Elem w = 1; w < 8; ++w) {
            if (fd.trace(w) != 0) continue;
            ++r.pairs_checked;
            const Elem z = fd.mul(fd.pow(u, d), w);
            const Elem z2 = fd.sqr(z);
            if ((z2 ^ fd.sqr(z2)) == u) r.holds = false;
        }
    return r;
}

namespace detail {

inline void require_thm4(const Field& fd, unsigned n, unsigned i) {
    const unsigned m = fd.degree();
    require(m % 2 == 1, Errc::ParityViolated, "m must be odd");
    require(n >= 1 && m % n == 0, Errc::DivisibilityViolated, "n must divide m");
    require(n != m, Errc::ConditionViolated, "n must differ from m");
    require_gcd(i, m, false);
}

// [tr(x)^{2^i+1} + tr(x^{2^i+1}) + tr(x)]^{1/(2^i+1)} with tr = tr_{m/n}.
struct Thm4Parts {
    Elem t;     // tr_{m/n}(x)
    Elem root;  // the bracket raised to 1/(2^i+1)
};

inline Thm4Parts thm4_parts(const Field& fd, unsigned n, unsigned i, std::uint64_t root_exp, Elem x) {
    const std::uint64_t d = pow2(i) + 1;
    const Elem t = fd.rel_trace(x, n);
    const Elem w = fd.pow(t, d) ^ fd.rel_trace(fd.pow(x, d), n) ^ t;
    return {t, fd.pow(w, root_exp)};
}

} // namespace detail

/// Closed-form inverse of F1(x) = x + tr_{m/n}(x) + tr_{m/n}(x^{2^i+1}).
inline Elem theorem4_f1_inverse(const Field& fd, unsigned n, unsigned i, Elem y) {
    detail::require_thm4(fd, n, i);
    const std::uint64_t e = fd.inverse_exponent(detail::pow2(i) + 1);
    const auto p = detail::thm4_parts(fd, n, i, e, y);
    return y ^ p.root ^ p.t;
}

inline FuncTable theorem4_f1(const FieldPtr& field, unsigned n, unsigned i) {
    const Field& fd = *field;
    detail::require_thm4(fd, n, i);
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) { return x ^ fd.rel_trace(x, n) ^ fd.rel_trace(fd.pow(x, d), n); });
}

inline FuncTable theorem4_f2(const FieldPtr& field, unsigned n, unsigned i) {
    const Field& fd = *field;
    detail::require_thm4(fd, n, i);
    const std::uint64_t d = detail::pow2(i) + 1;
    return FuncTable::generate(field, [&](Elem x) { return fd.pow(x, d) ^ fd.rel_trace(x, n); });
}

/// AB of algebraic degree n + 2 for m odd, n | m, n != m, gcd(i, m) = 1:
///   x^{2^i+1} + tr(x^{2^i+1}) + x^{2^i} tr(x) + x tr(x)^{2^i}
///   + R (x^{2^i} + tr(x)^{2^i} + 1) + R^{2^i} (x + tr(x)),
/// tr = tr_{m/n}, R = [tr(x)^{2^i+1} + tr(x^{2^i+1}) + tr(x)]^{1/(2^i+1)}.
/// It differs from F2 o F1^{-1} by the linear term tr_{m/n}(x); for n = 1 it
/// coincides with theorem1.
inline FuncTable theorem4(const FieldPtr& field, unsigned n, unsigned i) {
    const Field& fd = *field;
    detail::require_thm4(fd, n, i);
    const std::uint64_t d = detail::pow2(i) + 1;
    const std::uint64_t e = fd.inverse_exponent(d);
    return FuncTable::generate(field, [&](Elem x) {
        const auto p = detail::thm4_parts(fd, n, i, e, x);
        const Elem xi = fd.frobenius(x, i);
        const Elem ti = fd.frobenius(p.t, i);
        Elem r = fd.pow(x, d) ^ fd.rel_trace(fd.pow(x, d), n) ^ fd.mul(xi, p.t) ^ fd.mul(x, ti);
        r ^= fd.mul(p.root, xi ^ ti ^ 1u);
        r ^= fd.mul(fd.frobenius(p.root, i), x ^ p.t);
        return r;
    });
}

// ---------------------------------------------------------------------------
// CCZ witnesses

struct TheoremWitness {
    CczWitness witness;
    FuncTable image;            ///< F2 o F1^{-1}
    bool map_involution = false;
    bool f1_involution = false;
    bool scaling_identity = false;  ///< F2 o F1^{-1}(x) = a^{2^i+1} F'(x/a)
};

/// The graph maps that carry x^{2^i+1} to the first (which = 1, m odd) or
/// second (which = 2, m even) family, for a nonzero parameter a.
inline TheoremWitness theorem12_ccz_witness(const FieldPtr& field, unsigned which, unsigned i, Elem a) {
    const Field& fd = *field;
    const unsigned m = fd.degree();
    if (a == 0) throw Error(Errc::ZeroElement, "a must be nonzero");
    if (which != 1 && which != 2) throw Error(Errc::ConditionViolated, "which must be 1 or 2");
    detail::require(m % 2 == (which == 1 ? 1u : 0u), Errc::ParityViolated,
                    which == 1 ? "first family needs m odd" : "second family needs m even");
    const std::uint64_t d = detail::pow2(i) + 1;
    const Elem ad = fd.pow(a, d);
    const Elem ad_inv = fd.inv(ad);
    const Elem a_inv = fd.inv(a);
    const BitVec mask = low_mask(m);

    const BinLinearMap l = BinLinearMap::from_function(2 * m, 2 * m, [&](BitVec v) {
        const auto x = static_cast<Elem>(v & mask);
        const auto y = static_cast<Elem>(v >> m);
        const unsigned ty = fd.trace(fd.mul(ad_inv, y));
        if (which == 2) return graph_point(ty ? x ^ a : x, y, m);
        const unsigned tx = fd.trace(fd.mul(a_inv, x));
        const Elem x2 = x ^ (tx ? a : 0u) ^ (ty ? a : 0u);
        const Elem y2 = y ^ (ty ? ad : 0u) ^ (tx ? ad : 0u);
        return graph_point(x2, y2, m);
    });

    const FuncTable gold = FuncTable::power(field, d);
    TheoremWitness r{graph_image(l, gold), gold, false, false, false};
    r.map_involution = compose(l, l) == BinLinearMap::identity(2 * m);
    r.f1_involution = compose(r.witness.f1, r.witness.f1) == FuncTable::identity(field);
    if (!is_permutation(r.witness.f1)) return r;
    r.image = compose(r.witness.f2, invert(r.witness.f1));
    const FuncTable fprime = which == 1 ? theorem1_formula(field, i) : theorem2_formula(field, i);
    const FuncTable scaled = FuncTable::generate(field, [&](Elem x) { return fd.mul(ad, fprime[fd.mul(x, a_inv)]); });
    r.scaling_identity = r.image == scaled;
    return r;
}

struct Example1Witness {
    CczWitness witness;
    BinLinearMap l;             ///< inverse of x + x^{2^i} + tr(x)
    bool map_invertible = false;
    bool f1_permutation = false;
    bool l_inverse_identity = false;     ///< L o L^{-1} = id with L^{-1}(x) = x + x^{2^i} + tr(x)
    std::optional<bool> sum_form_matches; ///< i = 1: L(y) = sum_{j=0}^{n-s} y^{2^{2j+s}}
};

/// (x, y) -> (x + tr(x) + L(y), y + tr(x)) for m = 2n+1: a graph map of
/// x^{2^i+1} with both coordinates depending on both variables.
inline Example1Witness example1_witness(const FieldPtr& field, unsigned i) {
    const Field& fd = *field;
    const unsigned m = fd.degree();
    detail::require(m % 2 == 1, Errc::ParityViolated, "m must be odd");
    detail::require_gcd(i, m, false);
    const BitVec mask = low_mask(m);

    const BinLinearMap linv = BinLinearMap::from_function(m, m, [&](BitVec x) {
        const auto e = static_cast<Elem>(x);
        return BitVec{e ^ fd.frobenius(e, i) ^ static_cast<Elem>(fd.trace(e))};
    });
    if (!linv.is_invertible()) throw std::logic_error("x + x^{2^i} + tr(x) is singular");
    const BinLinearMap l = linv.inverse();

    const BinLinearMap big = BinLinearMap::from_function(2 * m, 2 * m, [&](BitVec v) {
        const auto x = static_cast<Elem>(v & mask);
        const auto y = static_cast<Elem>(v >> m);
        const Elem tx = static_cast<Elem>(fd.trace(x));
        return graph_point(x ^ tx ^ static_cast<Elem>(l.apply(y)), y ^ tx, m);
    });

    Example1Witness r{CczWitness{big, FuncTable::identity(field), FuncTable::identity(field)}, l, false, false, false, std::nullopt};
    r.map_invertible = big.is_invertible();
    if (!r.map_invertible) return r;
    r.witness = graph_image(big, FuncTable::power(field, detail::pow2(i) + 1));
    r.f1_permutation = is_permutation(r.witness.f1);
    r.l_inverse_identity = compose(l, linv) == BinLinearMap::identity(m) && compose(linv, l) == BinLinearMap::identity(m);
    if (i == 1) {
        const unsigned nn = (m - 1) / 2;
        const unsigned s = nn % 2;
        const BinLinearMap sum = BinLinearMap::from_function(m, m, [&](BitVec y) {
            Elem acc = 0;
            for (unsigned j = 0; j + s <= nn; ++j) acc ^= fd.frobenius(static_cast<Elem>(y), 2 * j + s);
            return BitVec{acc};
        });
        r.sum_form_matches = sum == l;
    }
    return r;
}

/// Table for any family member, with every parameter condition enforced.
inline FuncTable build_family(const FieldPtr& field, const FamilySpec& s) {
    switch (s.family) {
    case Family::Thm1: return theorem1(field, s.i, s.relaxed);
    case Family::Thm2: return theorem2(field, s.i, s.relaxed);
    case Family::Thm3: return theorem3(field, s.i);
    case Family::Thm4: return theorem4(field, s.n, s.i);
    default: break;
    }
    FamilySpec t = s;
    t.m = field->degree();
    return FuncTable::power(field, family_exponent(t));
}

} // namespace vbf

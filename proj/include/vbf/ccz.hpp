#pragma once

// Graph transforms of functions on GF(2^m), transversality of graphs to
// subgroups of F_2^{2m}, the EA -> CCZ bridge, a sufficient test for
// EA-inequivalence to power functions, permutation criteria for
// L(x^{2^i+1}) + L'(x), and the search for linear L with F + L bijective.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "vbf/error.hpp"
#include "vbf/function.hpp"
#include "vbf/gf2m.hpp"
#include "vbf/linear.hpp"
#include "vbf/parallel.hpp"

namespace vbf {

// ---------------------------------------------------------------------------
// Linearized polynomials <-> matrices

inline bool is_linearized(const UnivariatePoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return std::has_single_bit(t.first); });
}

inline BinLinearMap linearized_to_matrix(const UnivariatePoly& p) {
    if (!is_linearized(p)) throw Error(Errc::NotLinearized, "exponents must be powers of 2");
    const unsigned m = p.field().degree();
    return BinLinearMap::from_function(m, m, [&p](BitVec x) { return BitVec{p(static_cast<Elem>(x))}; });
}

inline FuncTable matrix_table(FieldPtr field, const BinLinearMap& mat) {
    if (mat.n_in() != field->degree() || mat.n_out() != field->degree())
        throw Error(Errc::WrongDimension, "matrix is not m x m");
    return FuncTable::generate(std::move(field), [&mat](Elem x) { return static_cast<Elem>(mat.apply(x)); });
}

inline UnivariatePoly matrix_to_linearized(FieldPtr field, const BinLinearMap& mat) {
    return interpolate(matrix_table(std::move(field), mat));
}

/// Gram matrix of the trace form: row j of T x is tr(e_j x).
inline BinLinearMap trace_form_matrix(const Field& fd) {
    return BinLinearMap::from_function(fd.degree(), fd.degree(), [&fd](BitVec x) { return BitVec{fd.trace_dual(static_cast<Elem>(x))}; });
}

/// Adjoint with respect to tr(xy): tr(v L(x)) = tr(L*(v) x). Reached from the
/// coordinate transpose as T^{-1} L^T T.
inline BinLinearMap trace_adjoint(const Field& fd, const BinLinearMap& mat) {
    const BinLinearMap t = trace_form_matrix(fd);
    return compose(t.inverse(), compose(mat.transpose(), t));
}

// ---------------------------------------------------------------------------
// Graph transforms

inline BitVec graph_point(Elem x, Elem y, unsigned m) { return BitVec{x} | (BitVec{y} << m); }

/// L together with F1(x) = L_1(x, F(x)) and F2(x) = L_2(x, F(x)).
struct CczWitness {
    BinLinearMap map;
    FuncTable f1;
    FuncTable f2;
};

/// Applies the affine map v -> L v + shift to every graph point (x, F(x)).
inline CczWitness graph_image(const BinLinearMap& l, const FuncTable& f, BitVec shift = 0) {
    const unsigned m = f.degree_m();
    if (l.n_in() != 2 * m || l.n_out() != 2 * m) throw Error(Errc::WrongDimension, "graph map must be 2m x 2m");
    if (!l.is_invertible()) throw Error(Errc::Singular, "graph map is not invertible");
    std::vector<Elem> f1(f.size());
    std::vector<Elem> f2(f.size());
    const BitVec mask = low_mask(m);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const BitVec v = l.apply(graph_point(static_cast<Elem>(x), f[static_cast<Elem>(x)], m)) ^ shift;
        f1[x] = static_cast<Elem>(v & mask);
        f2[x] = static_cast<Elem>(v >> m);
    }
    return CczWitness{l, FuncTable(f.field_ptr(), std::move(f1)), FuncTable(f.field_ptr(), std::move(f2))};
}

/// F' = F2 o F1^{-1}; the image of the graph of F is the graph of F'.
inline FuncTable ccz_transform(const BinLinearMap& l, const FuncTable& f, BitVec shift = 0) {
    CczWitness w = graph_image(l, f, shift);
    if (!is_permutation(w.f1)) throw Error(Errc::NotAPermutation, "F1 is not a permutation; the image is not a graph");
    return compose(w.f2, invert(w.f1));
}

/// L^{-1}(V) for V = {(0, y)}.
inline Subspace preimage_of_vertical(const BinLinearMap& l) {
    const unsigned m = l.n_in() / 2;
    const BinLinearMap inv = l.inverse();
    Subspace s(2 * m);
    for (unsigned k = 0; k < m; ++k) s.insert(inv.apply(BitVec{1} << (m + k)));
    return s;
}

inline Subspace vertical_subspace(unsigned m) {
    Subspace s(2 * m);
    for (unsigned k = 0; k < m; ++k) s.insert(BitVec{1} << (m + k));
    return s;
}

inline Subspace horizontal_subspace(unsigned m) {
    Subspace s(2 * m);
    for (unsigned k = 0; k < m; ++k) s.insert(BitVec{1} << k);
    return s;
}

/// The graph meets every coset of V exactly once.
inline bool is_transversal(const FuncTable& f, const Subspace& v) {
    const unsigned m = f.degree_m();
    if (v.ambient() != 2 * m || v.dim() != m) throw Error(Errc::WrongDimension, "subgroup must have dimension m in F_2^{2m}");
    std::vector<BitVec> labels(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x)
        labels[x] = v.reduce(graph_point(static_cast<Elem>(x), f[static_cast<Elem>(x)], m));
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

/// A_F = {(a, F(x + a) + F(x)) : a != 0} has empty intersection with V.
inline bool avoids_subgroup(const FuncTable& f, const Subspace& v) {
    const unsigned m = f.degree_m();
    if (v.ambient() != 2 * m) throw Error(Errc::WrongDimension, "subgroup must live in F_2^{2m}");
    for (std::uint64_t a = 1; a < f.size(); ++a)
        for (std::uint64_t x = 0; x < f.size(); ++x)
            if (v.contains(graph_point(static_cast<Elem>(a), f[static_cast<Elem>(x)] ^ f[static_cast<Elem>(x ^ a)], m)))
                return false;
    return true;
}

namespace detail {

template <class Pred>
Subspace subgroup_from_points(const Field& fd, Pred&& in_set, std::uint64_t expected_size) {
    const unsigned m = fd.degree();
    Subspace s(2 * m);
    std::uint64_t count = 0;
    for (std::uint64_t b = 0; b < fd.size(); ++b)
        for (std::uint64_t x = 0; x < fd.size(); ++x)
            if (in_set(static_cast<Elem>(b), static_cast<Elem>(x))) {
                ++count;
                s.insert(graph_point(static_cast<Elem>(b), static_cast<Elem>(x), m));
            }
    // Closed under addition iff the point set fills its own span.
    if (count != expected_size || (std::uint64_t{1} << s.dim()) != count)
        throw std::logic_error("point set is not a subgroup of the expected size");
    return s;
}

} // namespace detail

/// V' = {0, a} x (F \ H_a) for m odd, (0, H_a) u (a, F \ H_a) for m even,
/// where H_a = {x : tr(a^{-(2^i+1)} x) = 1} (m odd) or "= 0" (m even) is the
/// derivative image of x^{2^i+1} in direction a.
inline Subspace subgroup_gold_hyperplane(const Field& fd, Elem a, unsigned i) {
    if (a == 0) throw Error(Errc::ZeroElement, "a must be nonzero");
    const Elem s = fd.inv(fd.pow(a, (std::uint64_t{1} << i) + 1));
    const bool odd = fd.degree() % 2 == 1;
    auto in_h = [&](Elem x) { return fd.trace(fd.mul(s, x)) == (odd ? 1u : 0u); };
    return detail::subgroup_from_points(
        fd,
        [&](Elem b, Elem x) {
            if (b == 0) return odd ? !in_h(x) : in_h(x);
            if (b == a) return !in_h(x);
            return false;
        },
        fd.size());
}

/// V' = {(b, x) : b in F_{2^n}, tr_{m/n}(x) = 0}.
inline Subspace subgroup_subfield(const Field& fd, unsigned n) {
    fd.check_divisor(n);
    std::vector<bool> sub(fd.size());
    std::vector<bool> ker(fd.size());
    for (std::uint64_t x = 0; x < fd.size(); ++x) {
        sub[x] = fd.in_subfield(static_cast<Elem>(x), n);
        ker[x] = fd.rel_trace(static_cast<Elem>(x), n) == 0;
    }
    return detail::subgroup_from_points(
        fd, [&](Elem b, Elem x) { return sub[b] && ker[x]; }, fd.size());
}

/// Extends L_1 (2m -> m, with x -> L_1(x, F(x)) bijective) to an invertible
/// (L_1, L_2): L_2 maps Ker(L_1) onto F_2^m and vanishes on a complement E
/// spanned by unit vectors.
inline BinLinearMap complete_to_permutation(const BinLinearMap& l1, const FuncTable& f) {
    const unsigned m = f.degree_m();
    if (l1.n_in() != 2 * m || l1.n_out() != m) throw Error(Errc::WrongDimension, "L1 must map 2m -> m bits");
    const FuncTable f1 = FuncTable::generate(f.field_ptr(), [&](Elem x) {
        return static_cast<Elem>(l1.apply(graph_point(x, f[x], m)));
    });
    if (!is_permutation(f1)) throw Error(Errc::NotAPermutation, "x -> L1(x, F(x)) is not a permutation");
    if (l1.rank() != m) throw Error(Errc::RankDeficient, "L1 is not onto");

    const std::vector<BitVec> ker = l1.kernel();
    Subspace span = Subspace::span(2 * m, ker);
    std::vector<BitVec> basis = ker;
    for (unsigned j = 0; j < 2 * m && basis.size() < 2 * m; ++j)
        if (span.insert(BitVec{1} << j)) basis.push_back(BitVec{1} << j);

    // L2 o B = T, where B has the basis as columns and T sends the kernel part to unit vectors.
    const BinLinearMap b = BinLinearMap::from_columns(2 * m, basis);
    std::vector<BitVec> targets(2 * m, 0);
    for (unsigned c = 0; c < m; ++c) targets[c] = BitVec{1} << c;
    const BinLinearMap t = BinLinearMap::from_columns(m, targets);
    const BinLinearMap l2 = compose(t, b.inverse());
    BinLinearMap full = BinLinearMap::stack(l1, l2);
    if (!full.is_invertible()) throw std::logic_error("kernel completion produced a singular map");
    return full;
}

/// Random graph map L with L(G_F) again a graph. L1 is drawn uniformly until
/// x -> L1(x, F(x)) is a permutation; the second half is A L1 + B L2 with A
/// random, B random invertible and L2 from complete_to_permutation. Returns
/// nothing if no L1 qualifies within max_tries draws.
template <class Rng>
std::optional<BinLinearMap> random_admissible_map(const FuncTable& f, Rng& rng, std::uint64_t max_tries) {
    const unsigned m = f.degree_m();
    std::vector<std::uint32_t> stamp(f.size(), 0);
    for (std::uint64_t t = 1; t <= max_tries; ++t) {
        const BinLinearMap l1 = BinLinearMap::random(2 * m, m, rng);
        bool perm = true;
        for (std::uint64_t x = 0; x < f.size() && perm; ++x) {
            const auto y = static_cast<Elem>(l1.apply(graph_point(static_cast<Elem>(x), f[static_cast<Elem>(x)], m)));
            if (stamp[y] == t) perm = false;
            stamp[y] = static_cast<std::uint32_t>(t);
        }
        if (!perm) continue;
        const BinLinearMap full = complete_to_permutation(l1, f);
        const BinLinearMap l2 = full.row_block(m, m);
        const BinLinearMap a = BinLinearMap::random(m, m, rng);
        const BinLinearMap b = BinLinearMap::random_invertible(m, rng);
        return BinLinearMap::stack(l1, add(compose(a, l1), compose(b, l2)));
    }
    return std::nullopt;
}

/// Graph map realising R1 o F o R2 + R (or R1 o F^{-1} o R2 + R with use_inverse).
inline BinLinearMap ea_to_ccz_map(const BinLinearMap& r1, const BinLinearMap& r2, const BinLinearMap& r, bool use_inverse) {
    if (!r1.is_invertible() || !r2.is_invertible()) throw Error(Errc::Singular, "R1 and R2 must be invertible");
    const unsigned m = r1.n_in();
    const BinLinearMap r2i = r2.inverse();
    const BinLinearMap zero = BinLinearMap::zero(m, m);
    if (!use_inverse) return block_map(r2i, zero, compose(r, r2i), r1);
    return block_map(zero, r2i, r1, compose(r, r2i));
}

/// R1 o F o R2 + R, or R1 o F^{-1} o R2 + R.
inline FuncTable ea_transform(const FuncTable& f, const BinLinearMap& r1, const BinLinearMap& r2, const BinLinearMap& r,
                              bool use_inverse) {
    const FuncTable g = use_inverse ? invert(f) : f;
    return FuncTable::generate(f.field_ptr(), [&](Elem x) {
        return static_cast<Elem>(r1.apply(g[static_cast<Elem>(r2.apply(x))]) ^ r.apply(x));
    });
}

// ---------------------------------------------------------------------------
// EA-inequivalence to power functions

struct EaPowerVerdict {
    bool proven_inequivalent = false;
    Elem witness = 0;  ///< first c (ascending) with d(tr(cF)) outside {0, 1, d(F)}
    unsigned component_degree = 0;
    unsigned function_degree = 0;
};

/// Sufficient test only: Inconclusive proves nothing.
inline EaPowerVerdict ea_power_test(const FuncTable& f) {
    EaPowerVerdict v;
    const PackedCoordinateAnf anf(f);
    v.function_degree = anf.degree();
    for (std::uint64_t c = 1; c < f.size(); ++c) {
        const unsigned d = anf.component_degree(f.field(), static_cast<Elem>(c));
        if (d != 0 && d != 1 && d != v.function_degree) {
            v.proven_inequivalent = true;
            v.witness = static_cast<Elem>(c);
            v.component_degree = d;
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Permutation criteria for L(x^{2^i+1}) + L'(x)

namespace detail {

inline void require_coprime(const Field& fd, unsigned i) {
    if (std::gcd(i, fd.degree()) != 1)
        throw Error(Errc::GcdViolation, "gcd(i, m) must be 1 (i = " + std::to_string(i) + ", m = " + std::to_string(fd.degree()) + ")");
}

inline FuncTable linearized_table(const UnivariatePoly& p) {
    if (!is_linearized(p)) throw Error(Errc::NotLinearized, "exponents must be powers of 2");
    return evaluate(p);
}

} // namespace detail

inline FuncTable gold_composite(const UnivariatePoly& lp, const UnivariatePoly& lq, unsigned i) {
    require_same_field(lp.field(), lq.field());
    const FuncTable a = detail::linearized_table(lp);
    const FuncTable b = detail::linearized_table(lq);
    const Field& fd = lp.field();
    const std::uint64_t d = (std::uint64_t{1} << i) + 1;
    return FuncTable::generate(lp.field_ptr(), [&](Elem x) { return a[fd.pow(x, d)] ^ b[x]; });
}

/// F(x) = L(x^{2^i+1}) + L'(x) is a permutation iff L(u^{2^i+1} v) != L'(u) for
/// every u != 0 and every v with tr(v) = tr(1).
inline bool gold_perm_criterion(const UnivariatePoly& lp, const UnivariatePoly& lq, unsigned i) {
    require_same_field(lp.field(), lq.field());
    const Field& fd = lp.field();
    detail::require_coprime(fd, i);
    const FuncTable l = detail::linearized_table(lp);
    const FuncTable lprime = detail::linearized_table(lq);
    const unsigned tr1 = fd.trace(1);
    std::vector<Elem> vs;
    for (std::uint64_t v = 0; v < fd.size(); ++v)
        if (fd.trace(static_cast<Elem>(v)) == tr1) vs.push_back(static_cast<Elem>(v));
    const std::uint64_t d = (std::uint64_t{1} << i) + 1;
    for (std::uint64_t u = 1; u < fd.size(); ++u) {
        const Elem target = lprime[static_cast<Elem>(u)];
        const Elem p = fd.pow(static_cast<Elem>(u), d);
        for (Elem v : vs)
            if (l[fd.mul(p, v)] == target) return false;
    }
    return true;
}

/// m even: F(x) = L(x^{2^i+1}) + x is a permutation iff every v with L*(v) != 0
/// has L*(v) = u^{2^i+1} for some u with tr_{m/2}(v/u) != 0. L* is the adjoint
/// for tr(xy). All (2^i+1)-th roots u are tried and must give the same answer.
inline bool gold_perm_criterion_even(const UnivariatePoly& lp, unsigned i) {
    const Field& fd = lp.field();
    if (fd.degree() % 2 != 0) throw Error(Errc::OddDegree, "criterion requires m even");
    detail::require_coprime(fd, i);
    const BinLinearMap adj = trace_adjoint(fd, linearized_to_matrix(lp));
    const std::uint64_t d = (std::uint64_t{1} << i) + 1;

    // roots[first[w] .. first[w+1]) are the u with u^d = w.
    std::vector<std::uint32_t> first(fd.size() + 1, 0);
    std::vector<Elem> pw(fd.size());
    for (std::uint64_t u = 0; u < fd.size(); ++u) {
        pw[u] = fd.pow(static_cast<Elem>(u), d);
        ++first[pw[u] + 1];
    }
    for (std::uint64_t w = 0; w < fd.size(); ++w) first[w + 1] += first[w];
    std::vector<Elem> roots(fd.size());
    std::vector<std::uint32_t> fill(first.begin(), first.end() - 1);
    for (std::uint64_t u = 0; u < fd.size(); ++u) roots[fill[pw[u]]++] = static_cast<Elem>(u);

    for (std::uint64_t v = 1; v < fd.size(); ++v) {
        const auto w = static_cast<Elem>(adj.apply(v));
        if (w == 0) continue;
        if (first[w] == first[w + 1]) return false;
        std::optional<bool> verdict;
        for (std::uint32_t k = first[w]; k < first[w + 1]; ++k) {
            const bool ok = fd.rel_trace(fd.div(static_cast<Elem>(v), roots[k]), 2) != 0;
            if (verdict && *verdict != ok) throw std::logic_error("criterion depends on the choice of root");
            verdict = ok;
        }
        if (!*verdict) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Search for linear L with F + L a permutation

struct CompletionSearchOptions {
    std::optional<std::uint64_t> budget;                   ///< max candidates examined
    std::optional<std::chrono::milliseconds> time_limit;
    unsigned threads = 0;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;            ///< sampled mode only
};

struct CompletionSearchResult {
    std::optional<BinLinearMap> witness;
    std::uint64_t witness_index = 0;  ///< position in the enumeration / sample sequence
    std::uint64_t examined = 0;
    bool exhausted = false;           ///< the whole space was scanned (exhaustive mode only)
    bool sampled = false;
};

inline constexpr unsigned kExhaustiveSearchDegree = 5;

/// Matrix number idx in the exhaustive order: row 0 is the most significant
/// m-bit digit, so the order starts 0, ..., and the identity is the first
/// invertible matrix.
inline BinLinearMap matrix_from_index(unsigned m, std::uint64_t idx) {
    std::vector<BitVec> rows(m);
    for (unsigned r = 0; r < m; ++r) rows[r] = (idx >> ((m - 1 - r) * m)) & low_mask(m);
    return BinLinearMap(m, m, std::move(rows));
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline BinLinearMap sampled_matrix(unsigned m, std::uint64_t seed, std::uint64_t k) {
    std::vector<BitVec> rows(m);
    std::uint64_t s = seed ^ splitmix64(k);
    for (auto& r : rows) {
        s = splitmix64(s);
        r = s & low_mask(m);
    }
    return BinLinearMap(m, m, std::move(rows));
}

// Columns of the matrix with index idx; F + L is checked point by point with
// a 64-bit seen-mask (m <= 5 here).
inline bool small_sum_is_permutation(const std::vector<Elem>& f, unsigned m, std::uint64_t idx) {
    Elem col[kExhaustiveSearchDegree] = {};
    for (unsigned r = 0; r < m; ++r) {
        const std::uint64_t row = (idx >> ((m - 1 - r) * m)) & low_mask(m);
        for (unsigned c = 0; c < m; ++c) col[c] |= static_cast<Elem>(((row >> c) & 1u) << r);
    }
    Elem lx[1u << kExhaustiveSearchDegree];
    lx[0] = 0;
    std::uint64_t seen = std::uint64_t{1} << f[0];
    const std::size_t n = f.size();
    for (std::size_t x = 1; x < n; ++x) {
        lx[x] = lx[x & (x - 1)] ^ col[std::countr_zero(x)];
        const std::uint64_t bit = std::uint64_t{1} << (f[x] ^ lx[x]);
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

inline bool sum_is_permutation(const FuncTable& f, const BinLinearMap& l, std::vector<std::uint32_t>& stamp, std::uint32_t tag) {
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const Elem y = f[static_cast<Elem>(x)] ^ static_cast<Elem>(l.apply(x));
        if (stamp[y] == tag) return false;
        stamp[y] = tag;
    }
    return true;
}

} // namespace detail

/// Finds the first linear L (in the fixed order) with F + L a permutation.
/// m <= 5: exhaustive over all 2^{m^2} matrices, optionally capped. Larger m:
/// seeded random sampling, which requires a budget or a time limit.
inline CompletionSearchResult linear_completion_search(const FuncTable& f, const CompletionSearchOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    const unsigned m = f.degree_m();
    const bool exhaustive = m <= kExhaustiveSearchDegree;
    if (!exhaustive && !opt.budget && !opt.time_limit)
        throw Error(Errc::BudgetRequired, "m > 5 needs an explicit budget");

    const std::uint64_t space = exhaustive ? (std::uint64_t{1} << (m * m)) : std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = opt.budget ? std::min(space, *opt.budget) : space;
    const auto deadline = opt.time_limit ? std::optional(clock::now() + *opt.time_limit) : std::nullopt;

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> timed_out{false};
    const std::vector<Elem> vals(f.values().begin(), f.values().end());

    parallel_blocks(0, limit, opt.threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> stamp;
        if (!exhaustive) stamp.assign(f.size(), 0);
        std::uint64_t local = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if ((local & 0xffff) == 0) {
                if (idx > best.load(std::memory_order_relaxed)) break;
                if (deadline && clock::now() > *deadline) {
                    timed_out = true;
                    break;
                }
            }
            ++local;
            bool ok;
            if (exhaustive) {
                ok = detail::small_sum_is_permutation(vals, m, idx);
            } else {
                ok = detail::sum_is_permutation(f, detail::sampled_matrix(m, opt.seed, idx), stamp,
                                                static_cast<std::uint32_t>(local));
            }
            if (ok) {
                std::uint64_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {}
                break;
            }
        }
        examined += local;
    });

    CompletionSearchResult res;
    res.sampled = !exhaustive;
    res.examined = examined.load();
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
        res.witness_index = best.load();
        res.witness = exhaustive ? matrix_from_index(m, res.witness_index) : detail::sampled_matrix(m, opt.seed, res.witness_index);
    } else {
        res.exhausted = exhaustive && limit == space && !timed_out.load();
    }
    return res;
}

} // namespace vbf

#pragma once

// Linear maps and subspaces over F_2 on bit vectors of width <= 64.
//
// A map n_in -> n_out is stored by rows: output bit r is the parity of
// rows[r] & x. Maps on F_2^{2m} pack a pair (x, y) as x | (y << m).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vbf/error.hpp"

namespace vbf {

using BitVec = std::uint64_t;

inline unsigned parity(BitVec v) { return static_cast<unsigned>(std::popcount(v) & 1); }

inline BitVec low_mask(unsigned n) { return n >= 64 ? ~BitVec{0} : (BitVec{1} << n) - 1; }

class BinLinearMap {
public:
    BinLinearMap() = default;

    BinLinearMap(unsigned n_in, unsigned n_out, std::vector<BitVec> rows)
        : n_in_(n_in), n_out_(n_out), rows_(std::move(rows)) {
        if (n_in > 64 || n_out > 64) throw Error(Errc::WrongDimension, "bit maps are limited to 64 dimensions");
        if (rows_.size() != n_out) throw Error(Errc::WrongDimension, "row count != n_out");
        for (BitVec r : rows_)
            if ((r & ~low_mask(n_in)) != 0) throw Error(Errc::WrongDimension, "row wider than n_in");
    }

    static BinLinearMap zero(unsigned n_in, unsigned n_out) {
        return BinLinearMap(n_in, n_out, std::vector<BitVec>(n_out, 0));
    }

    static BinLinearMap identity(unsigned n) {
        std::vector<BitVec> rows(n);
        for (unsigned r = 0; r < n; ++r) rows[r] = BitVec{1} << r;
        return BinLinearMap(n, n, std::move(rows));
    }

    /// Map with the given images of the unit vectors e_0 .. e_{n_in - 1}.
    static BinLinearMap from_columns(unsigned n_out, const std::vector<BitVec>& cols) {
        const auto n_in = static_cast<unsigned>(cols.size());
        std::vector<BitVec> rows(n_out, 0);
        for (unsigned c = 0; c < n_in; ++c)
            for (unsigned r = 0; r < n_out; ++r)
                if ((cols[c] >> r) & 1u) rows[r] |= BitVec{1} << c;
        return BinLinearMap(n_in, n_out, std::move(rows));
    }

    /// Matrix of a function known to be F_2-linear, sampled on unit vectors.
    template <class Fn>
    static BinLinearMap from_function(unsigned n_in, unsigned n_out, Fn&& fn) {
        std::vector<BitVec> cols(n_in);
        for (unsigned c = 0; c < n_in; ++c) cols[c] = fn(BitVec{1} << c);
        return from_columns(n_out, cols);
    }

    /// Stacks A (rows 0 .. ) over B; both on the same input space.
    static BinLinearMap stack(const BinLinearMap& top, const BinLinearMap& bottom) {
        if (top.n_in_ != bottom.n_in_) throw Error(Errc::WrongDimension, "stacked maps differ in input width");
        std::vector<BitVec> rows = top.rows_;
        rows.insert(rows.end(), bottom.rows_.begin(), bottom.rows_.end());
        return BinLinearMap(top.n_in_, top.n_out_ + bottom.n_out_, std::move(rows));
    }

    template <class Rng>
    static BinLinearMap random(unsigned n_in, unsigned n_out, Rng& rng) {
        std::vector<BitVec> rows(n_out);
        for (auto& r : rows) r = rng() & low_mask(n_in);
        return BinLinearMap(n_in, n_out, std::move(rows));
    }

    template <class Rng>
    static BinLinearMap random_invertible(unsigned n, Rng& rng) {
        for (;;) {
            BinLinearMap m = random(n, n, rng);
            if (m.is_invertible()) return m;
        }
    }

    unsigned n_in() const noexcept { return n_in_; }
    unsigned n_out() const noexcept { return n_out_; }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }

    BitVec apply(BitVec x) const {
        BitVec y = 0;
        for (unsigned r = 0; r < n_out_; ++r) y |= static_cast<BitVec>(parity(rows_[r] & x)) << r;
        return y;
    }

    BitVec column(unsigned c) const {
        BitVec v = 0;
        for (unsigned r = 0; r < n_out_; ++r) v |= ((rows_[r] >> c) & 1u) << r;
        return v;
    }

    /// Rows [first, first + count) as a map n_in -> count.
    BinLinearMap row_block(unsigned first, unsigned count) const {
        return BinLinearMap(n_in_, count, std::vector<BitVec>(rows_.begin() + first, rows_.begin() + first + count));
    }

    BinLinearMap transpose() const {
        std::vector<BitVec> cols(n_out_);
        for (unsigned r = 0; r < n_out_; ++r) cols[r] = rows_[r];
        return from_columns(n_in_, cols);
    }

    unsigned rank() const {
        std::vector<BitVec> m = rows_;
        unsigned rk = 0;
        for (unsigned c = 0; c < n_in_ && rk < m.size(); ++c) {
            auto piv = std::find_if(m.begin() + rk, m.end(), [c](BitVec r) { return (r >> c) & 1u; });
            if (piv == m.end()) continue;
            std::iter_swap(m.begin() + rk, piv);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != rk && ((m[k] >> c) & 1u)) m[k] ^= m[rk];
            ++rk;
        }
        return rk;
    }

    bool is_invertible() const { return n_in_ == n_out_ && rank() == n_in_; }

    /// Gauss-Jordan elimination over F_2.
    BinLinearMap inverse() const {
        if (n_in_ != n_out_) throw Error(Errc::WrongDimension, "inverse of a non-square map");
        const unsigned n = n_in_;
        std::vector<BitVec> a = rows_;
        std::vector<BitVec> b = identity(n).rows_;
        for (unsigned c = 0; c < n; ++c) {
            unsigned p = c;
            while (p < n && !((a[p] >> c) & 1u)) ++p;
            if (p == n) throw Error(Errc::Singular, "map is not invertible");
            std::swap(a[c], a[p]);
            std::swap(b[c], b[p]);
            for (unsigned k = 0; k < n; ++k)
                if (k != c && ((a[k] >> c) & 1u)) {
                    a[k] ^= a[c];
                    b[k] ^= b[c];
                }
        }
        return BinLinearMap(n, n, std::move(b));
    }

    /// Basis of {x : apply(x) = 0}.
    std::vector<BitVec> kernel() const {
        std::vector<BitVec> m = rows_;
        std::vector<int> pivot_row_of_col(n_in_, -1);
        unsigned rk = 0;
        for (unsigned c = 0; c < n_in_ && rk < m.size(); ++c) {
            auto piv = std::find_if(m.begin() + rk, m.end(), [c](BitVec r) { return (r >> c) & 1u; });
            if (piv == m.end()) continue;
            std::iter_swap(m.begin() + rk, piv);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != rk && ((m[k] >> c) & 1u)) m[k] ^= m[rk];
            pivot_row_of_col[c] = static_cast<int>(rk);
            ++rk;
        }
        std::vector<BitVec> basis;
        for (unsigned f = 0; f < n_in_; ++f) {
            if (pivot_row_of_col[f] >= 0) continue;
            BitVec v = BitVec{1} << f;
            for (unsigned c = 0; c < n_in_; ++c)
                if (pivot_row_of_col[c] >= 0 && ((m[pivot_row_of_col[c]] >> f) & 1u)) v |= BitVec{1} << c;
            basis.push_back(v);
        }
        return basis;
    }

    friend bool operator==(const BinLinearMap&, const BinLinearMap&) = default;

private:
    unsigned n_in_ = 0;
    unsigned n_out_ = 0;
    std::vector<BitVec> rows_;
};

/// (a o b)(x) = a(b(x)).
inline BinLinearMap compose(const BinLinearMap& a, const BinLinearMap& b) {
    if (a.n_in() != b.n_out()) throw Error(Errc::WrongDimension, "composition width mismatch");
    std::vector<BitVec> rows(a.n_out(), 0);
    for (unsigned r = 0; r < a.n_out(); ++r)
        for (unsigned k = 0; k < b.n_out(); ++k)
            if ((a.rows()[r] >> k) & 1u) rows[r] ^= b.rows()[k];
    return BinLinearMap(b.n_in(), a.n_out(), std::move(rows));
}

inline BinLinearMap add(const BinLinearMap& a, const BinLinearMap& b) {
    if (a.n_in() != b.n_in() || a.n_out() != b.n_out()) throw Error(Errc::WrongDimension, "sum of maps of different shapes");
    std::vector<BitVec> rows(a.rows());
    for (unsigned r = 0; r < rows.size(); ++r) rows[r] ^= b.rows()[r];
    return BinLinearMap(a.n_in(), a.n_out(), std::move(rows));
}

/// Block map (x, y) -> (A x + B y, C x + D y) on F_2^{2m}, each block m x m.
inline BinLinearMap block_map(const BinLinearMap& a, const BinLinearMap& b, const BinLinearMap& c, const BinLinearMap& d) {
    const unsigned m = a.n_in();
    std::vector<BitVec> rows(2 * m);
    for (unsigned r = 0; r < m; ++r) {
        rows[r] = a.rows()[r] | (b.rows()[r] << m);
        rows[m + r] = c.rows()[r] | (d.rows()[r] << m);
    }
    return BinLinearMap(2 * m, 2 * m, std::move(rows));
}

/// Subspace of F_2^n held in reduced row echelon form (pivot = highest set bit,
/// every pivot column cleared in the other rows). The form is canonical.
class Subspace {
public:
    explicit Subspace(unsigned ambient) : ambient_(ambient) {
        if (ambient > 64) throw Error(Errc::WrongDimension, "ambient dimension above 64");
    }

    static Subspace span(unsigned ambient, const std::vector<BitVec>& gens) {
        Subspace s(ambient);
        for (BitVec g : gens) s.insert(g);
        return s;
    }

    /// Adds v to the span; returns false when v was already inside.
    bool insert(BitVec v) {
        v = reduce(v);
        if (v == 0) return false;
        const int p = 63 - std::countl_zero(v);
        for (auto& r : rows_)
            if ((r >> p) & 1u) r ^= v;
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
        return true;
    }

    /// Canonical representative of the coset v + V (zero in every pivot position).
    BitVec reduce(BitVec v) const {
        for (BitVec r : rows_) {
            const int p = 63 - std::countl_zero(r);
            if ((v >> p) & 1u) v ^= r;
        }
        return v;
    }

    bool contains(BitVec v) const { return reduce(v) == 0; }

    unsigned ambient() const noexcept { return ambient_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(rows_.size()); }
    const std::vector<BitVec>& basis() const noexcept { return rows_; }

    /// All 2^dim elements (small dimensions only).
    std::vector<BitVec> elements() const {
        std::vector<BitVec> out{0};
        for (BitVec r : rows_) {
            const std::size_t n = out.size();
            for (std::size_t k = 0; k < n; ++k) out.push_back(out[k] ^ r);
        }
        return out;
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    unsigned ambient_;
    std::vector<BitVec> rows_;
};

} // namespace vbf

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vbf/ccz.hpp"
#include "vbf/constructions.hpp"
#include "vbf/spectra.hpp"

using namespace vbf;

namespace {

FuncTable random_table(const FieldPtr& f, std::mt19937_64& rng) {
    return FuncTable::generate(f, [&](Elem) { return static_cast<Elem>(rng() & f->mask()); });
}

WalshSpectrum naive_walsh(const FuncTable& t) {
    WalshSpectrum s;
    for (Elem b = 1; b < t.size(); ++b)
        for (Elem a = 0; a < t.size(); ++a) ++s.distribution[oracle::walsh(t, a, b)];
    for (auto [v, c] : s.distribution) s.max_abs = std::max(s.max_abs, std::abs(v));
    return s;
}

DifferentialSpectrum naive_delta(const FuncTable& t) {
    DifferentialSpectrum s;
    for (Elem a = 1; a < t.size(); ++a)
        for (Elem b = 0; b < t.size(); ++b) ++s.distribution[oracle::delta(t, a, b)];
    s.max = s.distribution.rbegin()->first;
    return s;
}

} // namespace

TEST(Walsh, ValueBasics) {
    const auto f = Field::make(4);
    const FuncTable id = FuncTable::identity(f);
    for (Elem a = 0; a < 16; ++a)
        for (Elem b = 0; b < 16; ++b) EXPECT_EQ(walsh_value(id, a, b), a == b ? 16 : 0);
    std::mt19937_64 rng(1);
    const FuncTable t = random_table(f, rng);
    for (Elem a = 0; a < 16; ++a) EXPECT_EQ(walsh_value(t, a, 0), a == 0 ? 16 : 0);
}

TEST(Walsh, FastMatchesNaivePointwise) {
    std::mt19937_64 rng(2);
    for (unsigned m : {3u, 4u, 5u}) {
        const auto f = Field::make(m);
        for (int k = 0; k < 3; ++k) {
            const FuncTable t = random_table(f, rng);
            for (Elem b = 0; b < f->size(); ++b) {
                const auto col = walsh_column(t, b);
                for (Elem a = 0; a < f->size(); ++a) {
                    ASSERT_EQ(col[a], oracle::walsh(t, a, b));
                    ASSERT_EQ(col[a], walsh_value(t, a, b));
                }
            }
            EXPECT_EQ(walsh_spectrum(t), naive_walsh(t));
        }
    }
}

TEST(Walsh, Parseval) {
    std::mt19937_64 rng(4);
    const auto f = Field::make(6);
    const FuncTable t = random_table(f, rng);
    for (Elem b = 1; b < f->size(); ++b) {
        std::int64_t sum = 0;
        for (std::int64_t v : walsh_column(t, b)) sum += v * v;
        EXPECT_EQ(sum, std::int64_t{1} << 12);
    }
}

TEST(Walsh, IdentitySpectrumM3) {
    const WalshSpectrum s = walsh_spectrum(FuncTable::identity(Field::make(3)));
    EXPECT_EQ(s.distribution, (std::map<std::int64_t, std::uint64_t>{{0, 49}, {8, 7}}));
    EXPECT_EQ(s.max_abs, 8);
}

TEST(Walsh, GoldM5) {
    const FuncTable cube = FuncTable::power(Field::make(5), 3);
    for (Elem a = 0; a < 32; ++a)
        for (Elem b = 1; b < 32; ++b) {
            const auto v = walsh_value(cube, a, b);
            EXPECT_TRUE(v == 0 || v == 8 || v == -8);
        }
    const WalshSpectrum s = walsh_spectrum(cube);
    EXPECT_EQ(s.support(), (std::set<std::int64_t>{-8, 0, 8}));
    EXPECT_EQ(nonlinearity_from(s, 5), 12);
    EXPECT_TRUE(is_ab(cube));
    EXPECT_TRUE(is_three_valued(cube, 1));
    EXPECT_TRUE(is_apn(cube));
}

TEST(Walsh, ThreadCountDoesNotMatter) {
    std::mt19937_64 rng(8);
    const FuncTable t = random_table(Field::make(7), rng);
    const WalshSpectrum one = walsh_spectrum(t, 1);
    const DifferentialSpectrum d1 = differential_spectrum(t, 1);
    for (unsigned th : {2u, 3u, 5u}) {
        EXPECT_EQ(walsh_spectrum(t, th), one);
        EXPECT_EQ(differential_spectrum(t, th), d1);
    }
}

TEST(Nonlinearity, KnownValues) {
    const auto f5 = Field::make(5);
    EXPECT_EQ(nonlinearity(FuncTable::identity(f5)), 0);
    EXPECT_EQ(nonlinearity(FuncTable::constant(f5, 0)), 0);
    EXPECT_EQ(nonlinearity(FuncTable::power(f5, 3)), 12);
    const auto f6 = Field::make(6);
    EXPECT_EQ(nonlinearity(FuncTable::power(f6, 62)), 24);
    EXPECT_EQ(differential_uniformity(FuncTable::power(f6, 62)), 4u);
}

TEST(AlmostBent, Flags) {
    const auto f5 = Field::make(5);
    EXPECT_FALSE(is_ab(FuncTable::power(f5, 30)));
    EXPECT_TRUE(is_apn(FuncTable::power(f5, 30)));
    EXPECT_FALSE(is_ab(FuncTable::power(Field::make(4), 3)));
    EXPECT_FALSE(is_ab(FuncTable::power(Field::make(6), 3)));
    // Dobbertin, m = 5: d = 29
    const FuncTable dob = FuncTable::power(f5, 29);
    EXPECT_TRUE(is_apn(dob));
    EXPECT_FALSE(is_ab(dob));
}

TEST(ThreeValued, GoldWithCommonFactor) {
    const auto f9 = Field::make(9);
    const FuncTable g = FuncTable::power(f9, 9);
    EXPECT_TRUE(is_three_valued(g, 3));
    EXPECT_EQ(walsh_spectrum(g).support(), (std::set<std::int64_t>{-64, 0, 64}));
    EXPECT_FALSE(is_three_valued(FuncTable::identity(f9), 1));
    EXPECT_FALSE(is_three_valued(FuncTable::identity(f9), 3));
    EXPECT_THROW(is_three_valued(g, 2), Error);
}

TEST(Differential, MatchesNaive) {
    std::mt19937_64 rng(3);
    for (unsigned m : {3u, 4u, 5u}) {
        const auto f = Field::make(m);
        const FuncTable t = random_table(f, rng);
        EXPECT_EQ(differential_spectrum(t), naive_delta(t));
        const DifferentialSpectrum s = differential_spectrum(t);
        std::uint64_t total = 0, weighted = 0;
        for (auto [v, c] : s.distribution) {
            total += c;
            weighted += v * c;
        }
        EXPECT_EQ(total, (f->size() - 1) * f->size());
        EXPECT_EQ(weighted, (f->size() - 1) * f->size());
    }
}

TEST(Differential, LinearFunction) {
    const auto f = Field::make(4);
    std::mt19937_64 rng(6);
    const BinLinearMap l = BinLinearMap::random(4, 4, rng);
    const FuncTable t = FuncTable::generate(f, [&](Elem x) { return static_cast<Elem>(l.apply(x)); });
    for (Elem a = 1; a < 16; ++a)
        for (Elem b = 0; b < 16; ++b) EXPECT_EQ(oracle::delta(t, a, b), b == l.apply(a) ? 16u : 0u);
    const DifferentialSpectrum s = differential_spectrum(t);
    EXPECT_EQ(s.max, 16u);
    EXPECT_FALSE(is_apn(t));
}

TEST(Spectra, EaInvariance) {
    std::mt19937_64 rng(12);
    for (unsigned m : {4u, 5u}) {
        const auto f = Field::make(m);
        for (int k = 0; k < 5; ++k) {
            const FuncTable t = k == 0 ? FuncTable::power(f, 3) : random_table(f, rng);
            const BinLinearMap r1 = BinLinearMap::random_invertible(m, rng);
            const BinLinearMap r2 = BinLinearMap::random_invertible(m, rng);
            const BinLinearMap r = BinLinearMap::random(m, m, rng);
            const FuncTable g = ea_transform(t, r1, r2, r, false);
            EXPECT_EQ(walsh_spectrum(g), walsh_spectrum(t));
            EXPECT_EQ(differential_spectrum(g), differential_spectrum(t));
        }
    }
}

TEST(Spectra, PowerFamilies) {
    for (unsigned m = 3; m <= 9; ++m) {
        const auto f = Field::make(m);
        for (unsigned i = 1; i < m; ++i) {
            FamilySpec s{Family::Gold, m, i};
            if (std::gcd(i, m) != 1) continue;
            const FuncTable g = FuncTable::power(f, family_exponent(s));
            EXPECT_TRUE(is_apn(g)) << m << " " << i;
            EXPECT_EQ(is_ab(g), m % 2 == 1) << m << " " << i;
        }
    }
}

TEST(Spectra, TooLarge) {
    const auto f = Field::make(25);
    const FuncTable t = FuncTable::constant(f, 0);
    EXPECT_THROW(walsh_spectrum(t), Error);
    EXPECT_THROW(differential_spectrum(t), Error);
}

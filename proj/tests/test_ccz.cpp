#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vbf/ccz.hpp"
#include "vbf/constructions.hpp"
#include "vbf/spectra.hpp"
#include "vbf/verify.hpp"

using namespace vbf;

namespace {

BinLinearMap swap_map(unsigned m) {
    return block_map(BinLinearMap::zero(m, m), BinLinearMap::identity(m), BinLinearMap::identity(m),
                     BinLinearMap::zero(m, m));
}

FuncTable random_table(const FieldPtr& f, std::mt19937_64& rng) {
    return FuncTable::generate(f, [&](Elem) { return static_cast<Elem>(rng() & f->mask()); });
}

Subspace random_subspace(unsigned ambient, unsigned dim, std::mt19937_64& rng) {
    Subspace s(ambient);
    while (s.dim() < dim) s.insert(rng() & low_mask(ambient));
    return s;
}

} // namespace

TEST(Linearized, MatrixRoundTrip) {
    const auto f = Field::make(5);
    EXPECT_EQ(linearized_to_matrix(UnivariatePoly(f, {{1, 1}})), BinLinearMap::identity(5));
    const BinLinearMap sq = linearized_to_matrix(UnivariatePoly(f, {{2, 1}}));
    EXPECT_EQ(compose(sq, sq), linearized_to_matrix(UnivariatePoly(f, {{4, 1}})));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k) {
        const UnivariatePoly p = random_linearized(f, rng);
        EXPECT_TRUE(is_linearized(p));
        EXPECT_EQ(matrix_to_linearized(f, linearized_to_matrix(p)), p);
    }
    for (int k = 0; k < 10; ++k) {
        const BinLinearMap m = BinLinearMap::random(5, 5, rng);
        EXPECT_EQ(linearized_to_matrix(matrix_to_linearized(f, m)), m);
    }
    EXPECT_THROW(linearized_to_matrix(UnivariatePoly(f, {{3, 1}})), Error);
}

TEST(Linearized, SmallFamilyCount) {
    const auto f = Field::make(4);
    std::uint64_t n = 0;
    for_each_small_linearized(f, [&](const UnivariatePoly& p) {
        EXPECT_TRUE(is_linearized(p));
        EXPECT_LE(p.terms().size(), 2u);
        ++n;
    });
    EXPECT_EQ(n, 1u + 4u * 15u + 6u * 225u);
}

TEST(Linearized, ExampleOneInverseMatrix) {
    const auto f = Field::make(5);
    // x + x^2 plus the trace row: tr(x) lands in the constant coordinate.
    BinLinearMap m = linearized_to_matrix(UnivariatePoly(f, {{1, 1}, {2, 1}}));
    std::vector<BitVec> rows = m.rows();
    rows[0] ^= f->trace_mask();
    const BinLinearMap linv(5, 5, rows);
    for (Elem x = 0; x < 32; ++x) EXPECT_EQ(linv.apply(x), x ^ f->sqr(x) ^ f->trace(x));
    EXPECT_TRUE(linv.is_invertible());
    const Example1Witness w = example1_witness(f, 1);
    EXPECT_EQ(w.l, linv.inverse());
}

TEST(Adjoint, DefiningIdentity) {
    std::mt19937_64 rng(2);
    for (unsigned m : {3u, 4u, 6u}) {
        const auto f = Field::make(m);
        for (int k = 0; k < 5; ++k) {
            const BinLinearMap l = BinLinearMap::random(m, m, rng);
            const BinLinearMap adj = trace_adjoint(*f, l);
            for (Elem x = 0; x < f->size(); ++x)
                for (Elem v = 0; v < f->size(); ++v)
                    ASSERT_EQ(f->trace(f->mul(v, static_cast<Elem>(l.apply(x)))),
                              f->trace(f->mul(static_cast<Elem>(adj.apply(v)), x)));
            EXPECT_EQ(trace_adjoint(*f, adj), l);
        }
    }
}

TEST(Adjoint, ClosedFormForLinearizedPolynomials) {
    // L(x) = sum c_j x^{2^j} has L*(v) = sum (c_j v)^{2^{m-j}}.
    std::mt19937_64 rng(3);
    for (unsigned m : {4u, 5u, 6u}) {
        const auto f = Field::make(m);
        for (int k = 0; k < 5; ++k) {
            const UnivariatePoly p = random_linearized(f, rng);
            const BinLinearMap adj = trace_adjoint(*f, linearized_to_matrix(p));
            for (Elem v = 0; v < f->size(); ++v) {
                Elem want = 0;
                for (auto [e, c] : p.terms()) {
                    const unsigned j = static_cast<unsigned>(std::countr_zero(e));
                    want ^= f->frobenius(f->mul(c, v), (m - j) % m);
                }
                ASSERT_EQ(adj.apply(v), want);
            }
        }
    }
}

TEST(GraphImage, IdentityAndSwap) {
    const auto f = Field::make(5);
    const FuncTable cube = FuncTable::power(f, 3);
    const CczWitness w = graph_image(BinLinearMap::identity(10), cube);
    EXPECT_EQ(w.f1, FuncTable::identity(f));
    EXPECT_EQ(w.f2, cube);
    const CczWitness s = graph_image(swap_map(5), cube);
    EXPECT_EQ(s.f1, cube);
    EXPECT_EQ(s.f2, FuncTable::identity(f));
    EXPECT_EQ(ccz_transform(BinLinearMap::identity(10), cube), cube);
    EXPECT_EQ(ccz_transform(swap_map(5), cube), invert(cube));
    EXPECT_THROW(graph_image(BinLinearMap::identity(8), cube), Error);
    EXPECT_THROW(graph_image(BinLinearMap::zero(10, 10), cube), Error);
    EXPECT_THROW(ccz_transform(swap_map(4), FuncTable::power(Field::make(4), 3)), Error);
}

TEST(GraphImage, TheoremOneMapCarriesGoldToFamily) {
    const auto f = Field::make(5);
    const TheoremWitness w = theorem12_ccz_witness(f, 1, 1, 1);
    EXPECT_EQ(ccz_transform(w.witness.map, FuncTable::power(f, 3)), theorem1_formula(f, 1));
}

TEST(Transversal, StandardSubspaces) {
    const auto f = Field::make(4);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
        const FuncTable t = random_table(f, rng);
        EXPECT_TRUE(is_transversal(t, vertical_subspace(4)));
        EXPECT_EQ(is_transversal(t, horizontal_subspace(4)), is_permutation(t));
    }
    EXPECT_TRUE(is_transversal(FuncTable::identity(f), horizontal_subspace(4)));
    EXPECT_THROW(is_transversal(FuncTable::identity(f), Subspace(8)), Error);
}

TEST(Transversal, EquivalentToAvoidingDerivativeSet) {
    std::mt19937_64 rng(5);
    for (unsigned m : {3u, 4u}) {
        const auto f = Field::make(m);
        for (int k = 0; k < 200; ++k) {
            const FuncTable t = k % 2 ? random_table(f, rng) : FuncTable::power(f, 3);
            const Subspace v = random_subspace(2 * m, m, rng);
            EXPECT_EQ(is_transversal(t, v), avoids_subgroup(t, v));
        }
    }
}

TEST(Transversal, CczSucceedsIffTransversalToPreimage) {
    std::mt19937_64 rng(6);
    for (unsigned m : {3u, 4u}) {
        const auto f = Field::make(m);
        unsigned successes = 0;
        const FuncTable t = FuncTable::power(f, 3);
        auto check = [&](const BinLinearMap& l) {
            const bool ok = is_permutation(graph_image(l, t).f1);
            successes += ok;
            EXPECT_EQ(ok, is_transversal(t, preimage_of_vertical(l)));
        };
        for (int k = 0; k < 400; ++k) check(BinLinearMap::random_invertible(2 * m, rng));
        for (int k = 0; k < 20; ++k)
            if (const auto l = random_admissible_map(t, rng, 1u << 16)) check(*l);
        EXPECT_GT(successes, 0u);
    }
}

TEST(Subgroups, TheoremSubgroups) {
    const auto f5 = Field::make(5);
    const Subspace v = subgroup_gold_hyperplane(*f5, 1, 1);
    EXPECT_EQ(v.dim(), 5u);
    EXPECT_TRUE(is_transversal(FuncTable::power(f5, 3), v));
    EXPECT_TRUE(avoids_subgroup(FuncTable::power(f5, 3), v));
    EXPECT_THROW(subgroup_gold_hyperplane(*f5, 0, 1), Error);

    const auto f6 = Field::make(6);
    for (Elem a : {1u, 5u, 33u}) {
        const Subspace w = subgroup_gold_hyperplane(*f6, a, 1);
        EXPECT_EQ(w.dim(), 6u);
        EXPECT_TRUE(is_transversal(FuncTable::power(f6, 3), w));
    }

    const auto f9 = Field::make(9);
    const Subspace s = subgroup_subfield(*f9, 3);
    EXPECT_EQ(s.dim(), 9u);
    EXPECT_TRUE(is_transversal(FuncTable::power(f9, 3), s));
    EXPECT_THROW(subgroup_subfield(*f9, 2), Error);
}

TEST(Completion, SimpleCases) {
    const auto f = Field::make(4);
    std::mt19937_64 rng(7);
    const FuncTable t = random_table(f, rng);
    const BinLinearMap take_x = BinLinearMap::identity(8).row_block(0, 4);
    const BinLinearMap full = complete_to_permutation(take_x, t);
    EXPECT_TRUE(full.is_invertible());
    EXPECT_EQ(full.row_block(0, 4), take_x);
    for (BitVec k : take_x.kernel()) EXPECT_EQ(k & 15u, 0u);

    const auto f5 = Field::make(5);
    const FuncTable cube = FuncTable::power(f5, 3);
    const BinLinearMap take_y = BinLinearMap::identity(10).row_block(5, 5);
    EXPECT_TRUE(complete_to_permutation(take_y, cube).is_invertible());
    EXPECT_THROW(complete_to_permutation(take_y, FuncTable::constant(f5, 0)), Error);
    EXPECT_THROW(complete_to_permutation(BinLinearMap::identity(10), cube), Error);
}

TEST(Completion, ExampleOneFirstHalf) {
    const auto f = Field::make(5);
    const Example1Witness w = example1_witness(f, 1);
    const BinLinearMap l1 = w.witness.map.row_block(0, 5);
    const BinLinearMap full = complete_to_permutation(l1, FuncTable::power(f, 3));
    EXPECT_TRUE(full.is_invertible());
    const FuncTable img = ccz_transform(full, FuncTable::power(f, 3));
    EXPECT_EQ(walsh_spectrum(img), walsh_spectrum(FuncTable::power(f, 3)));
}

TEST(Completion, RandomAdmissibleMaps) {
    const auto f = Field::make(4);
    const FuncTable cube = FuncTable::power(f, 3);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 10; ++k) {
        const auto l = random_admissible_map(cube, rng, 1u << 20);
        ASSERT_TRUE(l.has_value());
        EXPECT_TRUE(l->is_invertible());
        EXPECT_TRUE(is_permutation(graph_image(*l, cube).f1));
    }
}

TEST(EaBridge, MatchesDirectTransform) {
    const auto f = Field::make(5);
    const FuncTable cube = FuncTable::power(f, 3);
    const BinLinearMap id = BinLinearMap::identity(5);
    const BinLinearMap zero = BinLinearMap::zero(5, 5);
    EXPECT_EQ(ccz_transform(ea_to_ccz_map(id, id, zero, false), cube), cube);
    EXPECT_EQ(ccz_transform(ea_to_ccz_map(id, id, zero, true), cube), invert(cube));
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        const BinLinearMap r1 = BinLinearMap::random_invertible(5, rng);
        const BinLinearMap r2 = BinLinearMap::random_invertible(5, rng);
        const BinLinearMap r = BinLinearMap::random(5, 5, rng);
        const FuncTable direct = FuncTable::generate(f, [&](Elem x) {
            return static_cast<Elem>(r1.apply(cube[static_cast<Elem>(r2.apply(x))]) ^ r.apply(x));
        });
        EXPECT_EQ(ea_transform(cube, r1, r2, r, false), direct);
        EXPECT_EQ(ccz_transform(ea_to_ccz_map(r1, r2, r, false), cube), direct);
        EXPECT_EQ(ccz_transform(ea_to_ccz_map(r1, r2, r, true), cube), ea_transform(cube, r1, r2, r, true));
    }
    EXPECT_THROW(ea_to_ccz_map(zero, id, zero, false), Error);
}

TEST(EaPowerTest, PowerFunctionsAreInconclusive) {
    for (unsigned m : {4u, 5u, 6u}) {
        const auto f = Field::make(m);
        for (std::uint64_t d = 0; d < f->size(); ++d) {
            const EaPowerVerdict v = ea_power_test(FuncTable::power(f, d));
            EXPECT_FALSE(v.proven_inequivalent) << "m=" << m << " d=" << d;
        }
    }
}

TEST(EaPowerTest, GoldFamilies) {
    const auto f5 = Field::make(5);
    const EaPowerVerdict v = ea_power_test(theorem1(f5, 1));
    EXPECT_TRUE(v.proven_inequivalent);
    EXPECT_EQ(v.witness, 1u);
    EXPECT_EQ(v.component_degree, 2u);
    EXPECT_EQ(v.function_degree, 3u);
    EXPECT_TRUE(ea_power_test(theorem2(Field::make(6), 1)).proven_inequivalent);
}

TEST(GoldCriterion, Examples) {
    const auto f5 = Field::make(5);
    const UnivariatePoly zero(f5), id(f5, {{1, 1}});
    EXPECT_TRUE(gold_perm_criterion(zero, id, 1));
    EXPECT_TRUE(gold_perm_criterion(id, zero, 1));
    const auto f4 = Field::make(4);
    EXPECT_FALSE(gold_perm_criterion(UnivariatePoly(f4, {{1, 1}}), UnivariatePoly(f4), 1));
    EXPECT_THROW(gold_perm_criterion(UnivariatePoly(f4, {{1, 1}}), UnivariatePoly(f4), 2), Error);
    EXPECT_THROW(gold_perm_criterion(UnivariatePoly(f5, {{3, 1}}), id, 1), Error);
    EXPECT_THROW(gold_perm_criterion(id, UnivariatePoly(f4, {{1, 1}}), 1), Error);
}

TEST(GoldCriterion, ExampleOneBuildingBlocks) {
    // F1(x) = x + tr(x) + L(x^3) with L the inverse of x + x^2 + tr(x).
    const auto f = Field::make(5);
    const Example1Witness w = example1_witness(f, 1);
    const UnivariatePoly l = matrix_to_linearized(f, w.l);
    BinLinearMap xt = BinLinearMap::identity(5);
    std::vector<BitVec> rows = xt.rows();
    rows[0] ^= f->trace_mask();
    const UnivariatePoly lq = matrix_to_linearized(f, BinLinearMap(5, 5, rows));
    EXPECT_TRUE(gold_perm_criterion(l, lq, 1));
    EXPECT_EQ(gold_composite(l, lq, 1), w.witness.f1);
}

TEST(GoldCriterion, AgreesWithBruteForce) {
    for (unsigned m : {4u, 5u}) {
        const auto f = Field::make(m);
        const UnivariatePoly x(f, {{1, 1}});
        std::uint64_t perms = 0;
        for (unsigned i = 1; i < m; ++i) {
            if (std::gcd(i, m) != 1) continue;
            for_each_small_linearized(f, [&](const UnivariatePoly& l) {
                for (const UnivariatePoly& lq : {UnivariatePoly(f), x}) {
                    const bool brute = oracle::is_permutation(gold_composite(l, lq, i));
                    perms += brute;
                    ASSERT_EQ(gold_perm_criterion(l, lq, i), brute);
                }
            });
        }
        EXPECT_GT(perms, 1u);
    }
}

TEST(GoldCriterionEven, Examples) {
    const auto f4 = Field::make(4);
    EXPECT_TRUE(gold_perm_criterion_even(UnivariatePoly(f4), 1));
    EXPECT_FALSE(gold_perm_criterion_even(UnivariatePoly(f4, {{1, 1}}), 1));
    EXPECT_FALSE(oracle::is_permutation(gold_composite(UnivariatePoly(f4, {{1, 1}}), UnivariatePoly(f4, {{1, 1}}), 1)));
    EXPECT_THROW(gold_perm_criterion_even(UnivariatePoly(Field::make(5)), 1), Error);
    EXPECT_THROW(gold_perm_criterion_even(UnivariatePoly(Field::make(6)), 3), Error);
}

TEST(GoldCriterionEven, RankOneFamilyHasPermutations) {
    // x + c tr(d x^{2^i+1}) permutes whenever d c^{2^i+1} = 1.
    for (unsigned m : {4u, 6u}) {
        const auto f = Field::make(m);
        const UnivariatePoly x(f, {{1, 1}});
        std::uint64_t perms = 0;
        for_each_rank_one_linearized(f, [&](const UnivariatePoly& l) {
            const bool brute = oracle::is_permutation(gold_composite(l, x, 1));
            perms += brute;
            ASSERT_EQ(gold_perm_criterion_even(l, 1), brute);
            ASSERT_EQ(gold_perm_criterion(l, x, 1), brute);
        });
        EXPECT_GE(perms, f->order());
    }
}

TEST(Search, MatrixOrder) {
    EXPECT_EQ(matrix_from_index(3, 0), BinLinearMap::zero(3, 3));
    std::uint64_t first = 0;
    while (!matrix_from_index(4, first).is_invertible()) ++first;
    EXPECT_EQ(matrix_from_index(4, first), BinLinearMap::identity(4));
}

TEST(Search, FindsFirstWitness) {
    const auto f4 = Field::make(4);
    CompletionSearchOptions opt;
    opt.threads = 1;
    const CompletionSearchResult zero = linear_completion_search(FuncTable::constant(f4, 0), opt);
    ASSERT_TRUE(zero.witness);
    EXPECT_EQ(*zero.witness, BinLinearMap::identity(4));
    EXPECT_FALSE(zero.sampled);

    const auto f5 = Field::make(5);
    const CompletionSearchResult cube = linear_completion_search(FuncTable::power(f5, 3), opt);
    ASSERT_TRUE(cube.witness);
    EXPECT_EQ(cube.witness_index, 0u);
    EXPECT_EQ(*cube.witness, BinLinearMap::zero(5, 5));
}

TEST(Search, ThreadCountDoesNotChangeTheAnswer) {
    const auto f = Field::make(4);
    std::mt19937_64 rng(10);
    for (int k = 0; k < 5; ++k) {
        const FuncTable t = random_table(f, rng);
        CompletionSearchOptions one, many;
        one.threads = 1;
        many.threads = 4;
        const auto a = linear_completion_search(t, one);
        const auto b = linear_completion_search(t, many);
        EXPECT_EQ(a.witness.has_value(), b.witness.has_value());
        if (a.witness) {
            EXPECT_EQ(a.witness_index, b.witness_index);
            EXPECT_TRUE(is_permutation(add(t, matrix_table(f, *a.witness))));
        } else {
            EXPECT_TRUE(a.exhausted);
            EXPECT_TRUE(b.exhausted);
        }
    }
}

TEST(Search, BudgetsAndSampling) {
    const auto f6 = Field::make(6);
    EXPECT_THROW(linear_completion_search(FuncTable::constant(f6, 0)), Error);
    CompletionSearchOptions opt;
    opt.budget = 1000;
    opt.threads = 1;
    const auto r = linear_completion_search(FuncTable::constant(f6, 0), opt);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(r.sampled);
    EXPECT_TRUE(r.witness->is_invertible());

    const auto f5 = Field::make(5);
    opt.budget = 5000;
    const auto capped = linear_completion_search(theorem1(f5, 1), opt);
    EXPECT_FALSE(capped.witness);
    EXPECT_FALSE(capped.exhausted);
    EXPECT_EQ(capped.examined, 5000u);
}

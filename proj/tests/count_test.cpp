#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "lrkit/count.hpp"
#include "lrkit/reduce.hpp"
#include "lrkit/verify.hpp"
#include "oracle.hpp"

using namespace lrkit;
using oracle::C;
using oracle::P;

TEST(CountKostka, Examples) {
    EXPECT_EQ(count_kostka(Partition{7, 3}, C({3, 2, 2, 3})), 8);
    EXPECT_EQ(count_kostka(Partition{5}, C({5})), 1);
    EXPECT_EQ(count_kostka(Partition{2, 1}, C({1, 1, 1})), 2);
    EXPECT_EQ(count_kostka(Partition{2, 1}, C({2, 2})), 0);
}

TEST(CountKostka, EdgeCases) {
    EXPECT_EQ(count_kostka(Partition{}, C({})), 1);
    EXPECT_EQ(count_kostka(Partition{}, C({0, 0})), 1);
    EXPECT_EQ(count_kostka(Partition{3}, C({})), 0);
    EXPECT_EQ(count_kostka(Partition{2, 2}, C({3, 1})), 0);
    EXPECT_EQ(count_kostka(Partition{3}, C({0, 3, 0})), 1);
}

TEST(CountKostka, MatchesBoxOracleExhaustive) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& mu : oracle::contents(n, 3)) {
                const auto expected = oracle::tableaux(lam, mu).size();
                EXPECT_EQ(count_kostka(P(lam), C(mu)), expected);
                EXPECT_EQ(count_kostka(P(lam), C(mu), Method::Enumeration), expected);
            }
}

TEST(CountKostka, LargeMultiplicitiesStayExact) {
    // K_{(n,n),(n,n)} = 1 and K_{(2n),(n,n)} = 1. Counting is pseudo-polynomial, so n stays moderate.
    const Nat n(2000);
    EXPECT_EQ(count_kostka(Partition{n, n}, Composition{n, n}), 1);
    EXPECT_EQ(count_kostka(Partition{2 * n}, Composition{n, n}), 1);
    // Row 1 = 50 ones, x twos, 10-x threes; row 2 = 30-x twos, 10+x threes; x in [0, 10].
    EXPECT_EQ(count_kostka(Partition{60, 40}, Composition{50, 30, 20}), 11);
}

TEST(CountLr, Examples) {
    EXPECT_EQ(count_lr(Partition{7, 3}, Partition{7, 5, 3}, C({10, 7, 5, 3})), 8);
    EXPECT_EQ(count_lr(Partition{1}, Partition{1, 1}, C({2, 1})), 1);
    EXPECT_EQ(count_lr(Partition{2}, Partition{1}, C({2})), 0);
}

TEST(CountLr, EmptyAlphaIsIndicator) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& nu : oracle::contents(n, 3)) {
                auto padded = lam;
                padded.resize(std::max(lam.size(), nu.size()), 0);
                auto nu_padded = nu;
                nu_padded.resize(padded.size(), 0);
                EXPECT_EQ(count_lr(P(lam), Partition{}, C(nu)), padded == nu_padded ? 1 : 0);
            }
}

TEST(CountLr, MatchesBoxOracleExhaustive) {
    for (int total = 0; total <= 7; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& lam : oracle::partitions(total - a))
                for (const auto& al : oracle::partitions(a))
                    for (const auto& nu : oracle::contents(total, 3)) {
                        const auto expected = oracle::lr_tableaux(lam, al, nu).size();
                        EXPECT_EQ(count_lr(P(lam), P(al), C(nu)), expected);
                        EXPECT_EQ(count_lr(P(lam), P(al), C(nu), Method::Enumeration), expected);
                    }
}

TEST(CountLr, SymmetricInLambdaAlpha) {
    for (int total = 0; total <= 8; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& lam : oracle::partitions(total - a))
                for (const auto& al : oracle::partitions(a))
                    for (const auto& nu : oracle::partitions(total))
                        EXPECT_EQ(count_lr(P(lam), P(al), C(nu)), count_lr(P(al), P(lam), C(nu)));
}

TEST(CountTables, Examples) {
    EXPECT_EQ(count_tables(C({4, 3}), C({3, 2, 2})), 8);
    EXPECT_EQ(count_tables(C({5}), C({2, 3})), 1);
    EXPECT_EQ(count_tables(C({1, 1}), C({1, 1})), 2);
    EXPECT_EQ(count_tables(C({0}), C({0})), 1);
    EXPECT_EQ(count_tables(C({2}), C({1})), 0);
}

TEST(CountTables, FirstRowOracle) {
    // 2 x 3 tables are fixed by their first row (x1, x2, x3) <= b with sum a1.
    std::size_t n = 0;
    for (int x1 = 0; x1 <= 3; ++x1)
        for (int x2 = 0; x2 <= 2; ++x2)
            for (int x3 = 0; x3 <= 2; ++x3) n += (x1 + x2 + x3 == 4);
    EXPECT_EQ(n, 8u);
    EXPECT_EQ(count_tables(C({4, 3}), C({3, 2, 2})), n);
}

TEST(CountTables, MatchesCellOracle) {
    for (int n = 0; n <= 7; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const auto& a : oracle::weak_compositions(n, m))
                for (int k = 1; k <= 3; ++k)
                    for (const auto& b : oracle::weak_compositions(n, k))
                        EXPECT_EQ(count_tables(C(a), C(b)), oracle::tables(a, b).size());
}

TEST(CauchyIdentity, TablesFromKostkaSquares) {
    for (int n = 0; n <= 7; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const auto& a : oracle::weak_compositions(n, m))
                for (int k = 1; k <= 3; ++k)
                    for (const auto& b : oracle::weak_compositions(n, k)) {
                        Nat sum = 0;
                        for (const auto& shape : oracle::partitions(n))
                            sum += count_kostka(P(shape), C(a)) * count_kostka(P(shape), C(b));
                        EXPECT_EQ(count_tables(C(a), C(b)), sum);
                    }
}

TEST(KostkaPermutationInvariance, AllPermutations) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& mu : oracle::contents(n, 3)) {
                if (mu.size() > 5) continue;
                const auto base = count_kostka(P(lam), C(mu));
                auto perm = mu;
                std::sort(perm.begin(), perm.end());
                do {
                    EXPECT_EQ(count_kostka(P(lam), C(perm)), base);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
}

TEST(Lemma1Counting, TablesEqualKostka) {
    for (int n = 0; n <= 8; ++n)
        for (int a2 = 0; 2 * a2 <= n; ++a2)
            for (const auto& b : oracle::contents(n, 3)) {
                const Composition a{n - a2, a2};
                const auto inst = lemma1_instance(a, C(b));
                EXPECT_EQ(count_tables(a, C(b)), count_kostka(inst.shape, inst.content));
            }
}

TEST(EnumerateTableaux, Examples) {
    auto e = enumerate_tableaux(Partition{2, 1}, C({1, 1, 1}), 10);
    EXPECT_EQ(e.items.size(), 2u);
    EXPECT_FALSE(e.truncated);
    // Lexicographic on row-major flattening: [1,0,1 | 0,1,0] < [1,1,0 | 0,0,1].
    EXPECT_EQ(e.items[0], RowContentMatrix::from_rows({{1, 0, 1}, {0, 1, 0}}, 3));
    EXPECT_EQ(e.items[1], RowContentMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}, 3));

    e = enumerate_tableaux(Partition{5}, C({5}));
    ASSERT_EQ(e.items.size(), 1u);
    EXPECT_EQ(e.items[0], RowContentMatrix::from_rows({{5}}, 1));

    EXPECT_TRUE(enumerate_tableaux(Partition{2, 2}, C({3, 1})).items.empty());
}

TEST(EnumerateTableaux, TruncationIsSignalled) {
    auto e = enumerate_tableaux(Partition{7, 3}, C({3, 2, 2, 3}), 8);
    EXPECT_EQ(e.items.size(), 8u);
    EXPECT_FALSE(e.truncated);
    e = enumerate_tableaux(Partition{7, 3}, C({3, 2, 2, 3}), 5);
    EXPECT_EQ(e.items.size(), 5u);
    EXPECT_TRUE(e.truncated);
    e = enumerate_tableaux(Partition{7, 3}, C({3, 2, 2, 3}), 0);
    EXPECT_TRUE(e.items.empty());
    EXPECT_TRUE(e.truncated);
}

TEST(EnumerateTableaux, SortedValidAndMatchesOracleSet) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& mu : oracle::contents(n, 3)) {
                const auto e = enumerate_tableaux(P(lam), C(mu));
                std::vector<std::vector<Nat>> flat;
                for (const auto& m : e.items) {
                    EXPECT_TRUE(validate_tableau(P(lam), C(mu), m));
                    std::vector<std::vector<Nat>> rows = m.to_rows();
                    std::vector<Nat> f;
                    for (auto& r : rows) f.insert(f.end(), r.begin(), r.end());
                    flat.push_back(f);
                }
                EXPECT_TRUE(std::is_sorted(flat.begin(), flat.end()));
                EXPECT_EQ(std::set(flat.begin(), flat.end()).size(), flat.size());
                std::set<std::vector<Nat>> expected;
                for (const auto& f : oracle::tableaux(lam, mu)) {
                    const auto rows = oracle::certificate(f, mu.size()).to_rows();
                    std::vector<Nat> g;
                    for (auto& r : rows) g.insert(g.end(), r.begin(), r.end());
                    expected.insert(g);
                }
                EXPECT_EQ(std::set(flat.begin(), flat.end()), expected);
            }
}

TEST(EnumerateLr, Examples) {
    const auto e = enumerate_lr(Partition{7, 3}, Partition{7, 5, 3}, C({10, 7, 5, 3}), 100);
    EXPECT_EQ(e.items.size(), 8u);
    EXPECT_FALSE(e.truncated);
    const auto sh = skew_concat(Partition{7, 3}, Partition{7, 5, 3});
    for (const auto& s : e.items) {
        EXPECT_TRUE(validate_skew_tableau(sh, C({10, 7, 5, 3}), s));
        EXPECT_TRUE(validate_lr(sh, C({10, 7, 5, 3}), s));
    }

    const auto one = enumerate_lr(Partition{1}, Partition{1, 1}, C({2, 1}));
    ASSERT_EQ(one.items.size(), 1u);
    EXPECT_EQ(one.items[0], RowContentMatrix::from_rows({{1, 0}, {0, 1}, {1, 0}}, 2));

    EXPECT_TRUE(enumerate_lr(Partition{2}, Partition{1}, C({2})).items.empty());
}

TEST(EnumerateTables, Examples) {
    EXPECT_EQ(enumerate_tables(C({4, 3}), C({3, 2, 2})).items.size(), 8u);
    const auto e = enumerate_tables(C({1, 1}), C({1, 1}));
    ASSERT_EQ(e.items.size(), 2u);
    EXPECT_EQ(e.items[0], ContingencyTable::from_rows({{0, 1}, {1, 0}}));
    EXPECT_EQ(e.items[1], ContingencyTable::from_rows({{1, 0}, {0, 1}}));
    const auto z = enumerate_tables(C({0}), C({0}));
    ASSERT_EQ(z.items.size(), 1u);
    EXPECT_EQ(z.items[0], ContingencyTable::from_rows({{0}}));
    const auto t = enumerate_tables(C({4, 3}), C({3, 2, 2}), 3);
    EXPECT_EQ(t.items.size(), 3u);
    EXPECT_TRUE(t.truncated);
}

TEST(EnumerateTables, MarginsAndCardinality) {
    for (int n = 0; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const auto& a : oracle::weak_compositions(n, m))
                for (const auto& b : oracle::weak_compositions(n, 3)) {
                    const auto e = enumerate_tables(C(a), C(b));
                    for (const auto& t : e.items) {
                        EXPECT_EQ(t.row_sums(), C(a));
                        EXPECT_EQ(t.col_sums(), C(b));
                    }
                    EXPECT_TRUE(std::is_sorted(e.items.begin(), e.items.end()));
                    EXPECT_EQ(e.items.size(), count_tables(C(a), C(b)));
                }
}

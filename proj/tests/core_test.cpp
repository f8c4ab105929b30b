#include <gtest/gtest.h>

#include "lrkit/core.hpp"
#include "oracle.hpp"

using namespace lrkit;
using oracle::C;
using oracle::P;

TEST(Weight, SumsEntries) {
    EXPECT_EQ(weight(Partition{7, 3}), 10);
    EXPECT_EQ(weight(Partition{}), 0);
    EXPECT_EQ(weight(Composition{3, 2, 2, 3}), 10);
}

TEST(PartitionType, RejectsBadParts) {
    EXPECT_THROW((Partition{3, 4}), DomainError);
    EXPECT_THROW((Partition{3, 0}), DomainError);
    EXPECT_NO_THROW((Partition{3, 3, 1}));
    EXPECT_EQ(Partition::strip_zeros({Nat(4), Nat(0)}), (Partition{4}));
}

TEST(CompositionType, KeepsZeros) {
    Composition c{0, 5, 0};
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.weight(), 5);
    EXPECT_THROW(Composition(std::vector<Nat>{Nat(-1)}), DomainError);
}

TEST(Dominance, Examples) {
    EXPECT_EQ(dominance_compare(C({7, 3}), C({3, 3, 2, 2})), Dominance::Dominates);
    EXPECT_EQ(dominance_compare(C({4, 1, 1}), C({3, 3})), Dominance::Incomparable);
    EXPECT_EQ(dominance_compare(C({5}), C({5})), Dominance::Equal);
    EXPECT_EQ(dominance_compare(C({3, 3, 2, 2}), C({7, 3})), Dominance::Dominated);
    EXPECT_EQ(dominance_compare(C({2, 1}), C({2, 2})), Dominance::DifferentWeight);
}

TEST(Dominance, AntisymmetryAndPaddingExhaustive) {
    for (int n = 0; n <= 6; ++n) {
        const auto cs = oracle::contents(n, 3);
        for (const auto& x : cs) {
            EXPECT_EQ(dominance_compare(C(x), C(x)), Dominance::Equal);
            auto padded = x;
            padded.push_back(0);
            padded.push_back(0);
            for (const auto& y : cs) {
                const auto d = dominance_compare(C(x), C(y));
                const auto r = dominance_compare(C(y), C(x));
                EXPECT_EQ(d == Dominance::Dominates, r == Dominance::Dominated);
                EXPECT_EQ(d == Dominance::Incomparable, r == Dominance::Incomparable);
                EXPECT_EQ(dominance_compare(C(padded), C(y)), d);
            }
        }
    }
}

TEST(SortToPartition, Examples) {
    auto s = sort_to_partition(C({3, 2, 2, 3}));
    EXPECT_EQ(s.partition, (Partition{3, 3, 2, 2}));
    ASSERT_EQ(s.permutation.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s.partition[i], (C({3, 2, 2, 3})[s.permutation[i]]));

    s = sort_to_partition(C({0, 5, 0}));
    EXPECT_EQ(s.partition, (Partition{5}));
    EXPECT_EQ(s.permutation.front(), 1u);

    s = sort_to_partition(C({1, 1, 1}));
    EXPECT_EQ(s.partition, (Partition{1, 1, 1}));
    EXPECT_EQ(s.permutation, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SkewConcat, Layout) {
    const auto sh = skew_concat(Partition{7, 3}, Partition{7, 5, 3});
    EXPECT_EQ(sh.rows(), 5u);
    EXPECT_EQ(sh.boundary(), 3u);
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(sh.row_offset(r), 7);
    EXPECT_EQ(sh.row_offset(3), 0);
    EXPECT_EQ(sh.row_lengths(), (std::vector<Nat>{7, 5, 3, 7, 3}));
    EXPECT_FALSE(sh.linked_to_previous(3));
    EXPECT_TRUE(sh.linked_to_previous(4));

    const auto upper_only = skew_concat(Partition{}, Partition{2, 1});
    EXPECT_EQ(upper_only.rows(), 2u);
    EXPECT_EQ(upper_only.row_offset(0), 0);

    const auto lower_only = skew_concat(Partition{2, 1}, Partition{});
    EXPECT_EQ(lower_only.row_lengths(), (std::vector<Nat>{2, 1}));
    EXPECT_TRUE(lower_only.linked_to_previous(1));
}

TEST(SkewConcat, BlocksShareNoColumn) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& al : oracle::partitions(5 - n)) {
                const auto sh = skew_concat(P(lam), P(al));
                for (std::size_t u = 0; u < sh.boundary(); ++u)
                    for (std::size_t l = sh.boundary(); l < sh.rows(); ++l)
                        EXPECT_GE(sh.row_offset(u), sh.row_offset(l) + sh.row_length(l));
            }
}

TEST(Expand, Examples) {
    auto m = RowContentMatrix::from_rows({{3, 2, 1, 1}, {0, 0, 1, 2}}, 4);
    const auto t = expand(m);
    EXPECT_EQ(t.rows, (std::vector<std::vector<std::size_t>>{{1, 1, 1, 2, 2, 3, 4}, {3, 4, 4}}));
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(compress(t, 4), m);

    const auto ones = expand(RowContentMatrix::from_rows({{5}}, 1));
    EXPECT_EQ(ones.rows, (std::vector<std::vector<std::size_t>>{{1, 1, 1, 1, 1}}));

    const RowContentMatrix zero(2, 3);
    EXPECT_EQ(expand(zero).boxes(), 0u);
    EXPECT_EQ(compress(expand(zero), 3), zero);
}

TEST(Expand, RefusesOverBudget) {
    auto m = RowContentMatrix::from_rows({{Nat("1000000000000")}}, 1);
    EXPECT_THROW(expand(m), BudgetExceeded);
    EXPECT_THROW(expand(RowContentMatrix::from_rows({{10}}, 1), {}, 9), BudgetExceeded);
}

TEST(Compress, Examples) {
    Tableau t{{{1, 2}, {3}}, {}};
    auto m = compress(t);
    EXPECT_EQ(m, RowContentMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}, 3));
    EXPECT_EQ(compress(Tableau{{{1, 1, 1}}, {}}), RowContentMatrix::from_rows({{3}}, 1));
    EXPECT_EQ(compress(Tableau{}).rows(), 0u);
}

TEST(ExpandCompress, InverseOnAllSmallTableaux) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& mu : oracle::compositions(n))
                for (const auto& f : oracle::tableaux(lam, mu)) {
                    Tableau t{f, {}};
                    ASSERT_TRUE(t.is_semistandard());
                    const auto m = compress(t, mu.size());
                    EXPECT_EQ(expand(m), t);
                    EXPECT_EQ(compress(expand(m), mu.size()), m);
                }
}

TEST(TableauType, Semistandard) {
    EXPECT_TRUE((Tableau{{{1, 1, 2}, {2}}, {}}.is_semistandard()));
    EXPECT_FALSE((Tableau{{{1, 1}, {1}}, {}}.is_semistandard()));
    EXPECT_FALSE((Tableau{{{2, 1}}, {}}.is_semistandard()));
    // Offsets: the row above does not cover column 0 of the lower row.
    EXPECT_TRUE((Tableau{{{1}, {1}}, {1, 0}}.is_semistandard()));
}

TEST(ContingencyTableType, Margins) {
    auto t = ContingencyTable::from_rows({{1, 2, 1}, {2, 0, 1}});
    EXPECT_EQ(t.row_sums(), (Composition{4, 3}));
    EXPECT_EQ(t.col_sums(), (Composition{3, 2, 2}));
    EXPECT_THROW(ContingencyTable::from_rows({{1, 2}, {3}}), DimensionError);
}

#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"
#include "dtroots/primary.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace dtroots;

TEST(IsPrimary, Examples)
{
    EXPECT_TRUE(is_primary(DataSet(TwistType::A, 3, 1, 2, 2)));
    EXPECT_TRUE(is_primary(DataSet(TwistType::A, 3, 4, 2, 2, {{3, 1}, {3, 1}})));
    EXPECT_FALSE(is_primary(DataSet(TwistType::A, 9, 2, 2, 2, {{3, 1}})));
    EXPECT_THROW(is_primary(DataSet(TwistType::A, 4, 1, 1, 1)), InvalidDataSet);
}

TEST(PrimaryClosedForm, Examples)
{
    EXPECT_FALSE(primary_exists_closed_form({TwistType::A, 3, 4}));
    EXPECT_TRUE(primary_exists_closed_form({TwistType::A, 3, 5}));
    EXPECT_FALSE(primary_exists_closed_form({TwistType::B, 3, 1}));
    EXPECT_THROW(primary_exists_closed_form({TwistType::A, 4, 5}), InvalidInput);
    EXPECT_THROW(primary_exists_closed_form({TwistType::A, 1, 5}), InvalidInput);
}

TEST(PrimaryBruteForce, Examples)
{
    EXPECT_FALSE(primary_exists_bruteforce({TwistType::A, 5, 6}));
    EXPECT_TRUE(primary_exists_bruteforce({TwistType::B, 5, 2}));
    EXPECT_TRUE(primary_exists_bruteforce({TwistType::A, 3, 3}));
}

TEST(PrimaryBruteForce, AgreesWithClosedFormOnGrid)
{
    SearchCache cache;
    for (auto type : {TwistType::A, TwistType::B})
        for (Int n = 3; n <= 15; n += 2)
            for (Int g = 0; g <= 120; ++g) {
                PrimaryQuery q{type, n, g};
                EXPECT_EQ(primary_exists_bruteforce(q, cache), primary_exists_closed_form(q))
                    << to_char(type) << " n=" << n << " g=" << g;
            }
}

TEST(PrimaryBruteForce, AgreesWithEnumerationFilter)
{
    for (auto type : {TwistType::A, TwistType::B})
        for (Int g = 1; g <= 14; ++g) {
            std::set<Int> primary_degrees;
            for (const auto& ds : oracle::all_datasets(type, dataset_genus(type, g), 15))
                if (is_primary(ds))
                    primary_degrees.insert(ds.degree());
            for (Int n = 3; n <= 15; n += 2)
                EXPECT_EQ(primary_exists_bruteforce({type, n, g}), primary_degrees.count(n) == 1)
                    << to_char(type) << n << " " << g;
        }
}

TEST(PrimaryBoundaries, TypeA)
{
    for (Int n = 3; n <= 13; n += 2) {
        const Int square = (n - 1) * (n - 1);
        for (Int g = square + 1; g <= square + 2 * n; ++g)
            EXPECT_TRUE(primary_exists_bruteforce({TwistType::A, n, g})) << n << " " << g;
        EXPECT_FALSE(primary_exists_bruteforce({TwistType::A, n, square})) << n;
        for (Int g = 0; g < n; ++g)
            EXPECT_FALSE(primary_exists_bruteforce({TwistType::A, n, g})) << n << " " << g;
    }
}

TEST(PrimaryBoundaries, TypeB)
{
    for (Int n = 3; n <= 13; n += 2) {
        const Int start = (n - 3) * (n - 1) / 2;
        const Int hole = (n * n - 2 * n - 1) / 2;
        for (Int g = std::max<Int>(start, 1); g <= start + 3 * n; ++g)
            EXPECT_EQ(primary_exists_bruteforce({TwistType::B, n, g}), !(n % 3 == 0 && g == hole)) << n << " " << g;
        if (start >= 2)
            EXPECT_FALSE(primary_exists_bruteforce({TwistType::B, n, start - 1})) << n;
    }
}

TEST(DegreeThree, Examples)
{
    EXPECT_TRUE(degree3_exists(TwistType::A, 3));
    EXPECT_FALSE(degree3_exists(TwistType::A, 4));
    EXPECT_TRUE(degree3_exists(TwistType::B, 2));
    EXPECT_TRUE(is_valid(DataSet(TwistType::B, 3, 0, 2, 1, {{3, 1}, {3, 2}})));
}

TEST(DegreeThree, ImpliedByExistence)
{
    SearchCache cache;
    for (auto type : {TwistType::A, TwistType::B})
        for (Int g = 1; g <= 300; ++g)
            if (root_exists(type, g, cache))
                EXPECT_TRUE(degree3_exists(type, g, cache)) << to_char(type) << g;
}

TEST(Construction, Examples)
{
    const auto a = construction_dataset(TwistType::A, 5, 1, 2);
    EXPECT_EQ(a, DataSet(TwistType::A, 5, 1, 2, 2, {{5, 4}, {5, 4}}));
    EXPECT_TRUE(is_valid(a));
    EXPECT_EQ(genus(a), 13);

    const auto b = construction_dataset(TwistType::B, 5, 0, 1);
    EXPECT_EQ(b, DataSet(TwistType::B, 5, 0, 4, 2, {{5, 4}}));
    EXPECT_TRUE(is_valid(b));

    EXPECT_THROW(construction_dataset(TwistType::B, 9, 0, 1), Unconstructible);
    EXPECT_THROW(construction_dataset(TwistType::B, 5, 0, 0), InvalidInput);
    EXPECT_THROW(construction_dataset(TwistType::A, 5, 0, 2), InvalidInput);
    EXPECT_THROW(construction_dataset(TwistType::A, 6, 1, 2), InvalidInput);
    EXPECT_THROW(construction_dataset(TwistType::A, 5, 1, -1), InvalidInput);
}

TEST(Construction, ValidPrimaryWithExpectedGenus)
{
    for (auto type : {TwistType::A, TwistType::B})
        for (Int n = 3; n <= 15; n += 2)
            for (Int g0 = 0; g0 <= 4; ++g0)
                for (Int m = 0; m <= 4; ++m) {
                    const bool admissible = type == TwistType::A ? g0 >= 1
                                                                 : (g0 > 0 || m > 0) && !(m == 1 && n % 3 == 0);
                    if (!admissible)
                        continue;
                    const auto ds = construction_dataset(type, n, g0, m);
                    ASSERT_TRUE(is_valid(ds)) << to_string(ds);
                    EXPECT_TRUE(is_primary(ds));
                    EXPECT_EQ(static_cast<Int>(ds.cones().size()), m);
                    const Int expected = (type == TwistType::A ? g0 * n : 2 * g0 * n) + m * (n - 1);
                    EXPECT_EQ(genus(ds), expected);
                }
}

#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "support.hpp"

using namespace dgb;

TEST(ShiftMonoid, MulIsComponentwiseSum)
{
    EXPECT_EQ(mul(Shift{1, 0, 2}, Shift{0, 3, 1}), (Shift{1, 3, 3}));
    EXPECT_EQ(mul(Shift::identity(3), Shift{2, 1, 0}), (Shift{2, 1, 0}));
    EXPECT_EQ(mul(Shift{1}, Shift{1}), Shift{2});
}

TEST(ShiftMonoid, RankMismatchIsStructural)
{
    EXPECT_THROW(mul(Shift{1, 0}, Shift{1}), structural_error);
    EXPECT_THROW(gcd(Shift{1, 0}, Shift{1}), structural_error);
}

TEST(ShiftMonoid, GcdIsComponentwiseMin)
{
    EXPECT_EQ(gcd(Shift{2, 1, 0}, Shift{1, 0, 4}), (Shift{1, 0, 0}));
    EXPECT_EQ(gcd(Shift{3, 2}, Shift::identity(2)), Shift::identity(2));
    EXPECT_EQ(gcd(Shift{3, 2}, Shift{3, 2}), (Shift{3, 2}));
}

TEST(ShiftMonoid, DividesAndDiv)
{
    EXPECT_TRUE(divides(Shift{1, 0}, Shift{2, 3}));
    EXPECT_EQ(div(Shift{2, 3}, Shift{1, 0}), (Shift{1, 3}));
    EXPECT_FALSE(divides(Shift{2, 0}, Shift{1, 5}));
    EXPECT_EQ(div(Shift{4, 1}, Shift{4, 1}), Shift::identity(2));
    EXPECT_THROW(div(Shift{1, 5}, Shift{2, 0}), domain_error);
}

TEST(ShiftMonoid, Degree)
{
    EXPECT_EQ(deg(Shift{1, 0, 1}), 2u);
    EXPECT_EQ(deg(Shift::identity(3)), 0u);
    EXPECT_EQ(deg(Shift{0, 5, 0}), 5u);
}

TEST(ShiftMonoid, EnumerationOrder)
{
    EXPECT_EQ(enumerate_up_to_degree(2, 1), (std::vector<Shift>{Shift{0, 0}, Shift{1, 0}, Shift{0, 1}}));
    EXPECT_EQ(enumerate_up_to_degree(3, 0), (std::vector<Shift>{Shift{0, 0, 0}}));
    EXPECT_EQ(enumerate_up_to_degree(1, 4).size(), 5u);
    EXPECT_TRUE(enumerate_up_to_degree(2, -1).empty());
}

TEST(ShiftMonoid, EnumerationCountIsBinomial)
{
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) {
            r = r * (n - k + i) / i;
        }
        return r;
    };
    for (std::size_t r = 1; r <= 4; ++r) {
        for (std::int64_t d = 0; d <= 6; ++d) {
            auto all = enumerate_up_to_degree(r, d);
            EXPECT_EQ(all.size(), binom(d + r, r)) << "r=" << r << " d=" << d;
            std::set<Shift> distinct(all.begin(), all.end());
            EXPECT_EQ(distinct.size(), all.size());
            for (const auto &s : all) {
                EXPECT_LE(deg(s), static_cast<std::uint64_t>(d));
            }
        }
    }
}

TEST(ShiftMonoid, LatticeLaws)
{
    dgbtest::Random rnd(11);
    for (int k = 0; k < 500; ++k) {
        const std::size_t r = rnd.uniform(1, 4);
        Shift s = rnd.shift(r, 6), t = rnd.shift(r, 6), u = rnd.shift(r, 6);
        const Shift g = gcd(s, t);
        EXPECT_EQ(mul(g, div(s, g)), s);
        EXPECT_EQ(deg(mul(s, t)), deg(s) + deg(t));
        EXPECT_TRUE(divides(g, s) && divides(g, t));
        if (divides(u, s) && divides(u, t)) {
            EXPECT_TRUE(divides(u, g));
        }
        EXPECT_TRUE(divides(s, lcm(s, t)) && divides(t, lcm(s, t)));
        EXPECT_EQ(mul(gcd(s, t), lcm(s, t)), mul(s, t));
        if (divides(s, t) && divides(t, u)) {
            EXPECT_TRUE(divides(s, u));
        }
        if (divides(s, t) && divides(t, s)) {
            EXPECT_EQ(s, t);
        }
    }
}

TEST(ShiftMonoid, OverflowIsReported)
{
    const auto big = std::numeric_limits<Shift::exponent_type>::max();
    EXPECT_THROW(mul(Shift{big}, Shift{1}), std::overflow_error);
}

TEST(ShiftMonoid, RankLimits)
{
    EXPECT_THROW(Shift(max_shift_rank + 1), structural_error);
    EXPECT_NO_THROW(Shift(max_shift_rank));
}

TEST(OrderValueTest, NegativeInfinity)
{
    const OrderValue n = OrderValue::neg_inf();
    EXPECT_TRUE(n.is_neg_inf());
    EXPECT_LT(n, OrderValue(0));
    EXPECT_EQ(max(n, OrderValue(3)), OrderValue(3));
    EXPECT_TRUE(n.plus(5).is_neg_inf());
    EXPECT_EQ(OrderValue(2).plus(3), OrderValue(5));
    EXPECT_TRUE(n.at_most(-1));
    EXPECT_EQ(n.to_string(), "-inf");
}

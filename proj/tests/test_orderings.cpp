#include <gtest/gtest.h>

#include "support.hpp"

using namespace dgb;
using dgbtest::Bridge;
using dgbtest::Random;

namespace
{

int sgn(std::strong_ordering c)
{
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

} // namespace

TEST(ShiftOrder, DegrevlexChain)
{
    const OrderingSpec o = OrderingSpec::standard(3, 1);
    const std::vector<Shift> chain{Shift{2, 0, 0}, Shift{1, 1, 0}, Shift{0, 2, 0},
                                   Shift{1, 0, 1}, Shift{0, 1, 1}, Shift{0, 0, 2}};
    for (std::size_t k = 1; k < chain.size(); ++k) {
        EXPECT_TRUE(o.compare_shift(chain[k - 1], chain[k]) > 0) << k;
    }
    EXPECT_TRUE(o.compare_shift(Shift::identity(3), Shift::identity(3)) == 0);
    EXPECT_TRUE(o.compare_shift(Shift{1, 0, 0}, Shift{0, 2, 0}) < 0);
}

TEST(MonomialOrder, VariableChain)
{
    auto r = Ring::make(RingSignature{3, {"x", "y"}, {}});
    const std::vector<std::string> chain{"x(1,0,0)", "y(1,0,0)", "x(0,1,0)", "y(0,1,0)",
                                         "x(0,0,1)", "y(0,0,1)", "x(0,0,0)", "y(0,0,0)"};
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const Monomial a = parse_polynomial(r, chain[k - 1]).lm(), b = parse_polynomial(r, chain[k]).lm();
        EXPECT_TRUE(compare_monomials(r->order(), a, b) > 0) << chain[k - 1] << " vs " << chain[k];
    }
}

TEST(MonomialOrder, OneIsMinimal)
{
    Random rnd(1);
    for (int k = 0; k < 100; ++k) {
        auto r = rnd.ring(rnd.uniform(1, 3), rnd.uniform(1, 3));
        const Monomial m = rnd.monomial(r, 3, 3, 2);
        if (!m.is_one()) {
            EXPECT_TRUE(compare_monomials(r->order(), m, Monomial()) > 0);
        }
    }
}

TEST(MonomialOrder, CyclicSetting)
{
    auto r = Ring::make(RingSignature{1, {"x"}, {}}, OrderingSpec::standard(1, 1, OrderKind::lex, OrderKind::lex));
    auto m = [&](const char *s) { return parse_polynomial(r, s).lm(); };
    EXPECT_TRUE(compare_monomials(r->order(), m("x(7)^2"), m("x(6)*x(7)")) > 0);
    EXPECT_TRUE(compare_monomials(r->order(), m("x(6)*x(7)"), m("x(0)*x(2)")) > 0);
}

TEST(MonomialOrder, AgreesWithOracleComparator)
{
    Random rnd(2);
    for (int k = 0; k < 1000; ++k) {
        auto r = rnd.ring(rnd.uniform(1, 3), rnd.uniform(1, 3));
        Bridge b(r, 3);
        const Monomial m = rnd.monomial(r, 3, 4, 3), n = rnd.monomial(r, 3, 4, 3);
        EXPECT_EQ(sgn(compare_monomials(r->order(), m, n)), b.order()(b.exp(m), b.exp(n)))
            << to_string(*r, m) << " vs " << to_string(*r, n) << " under "
            << r->order().to_string(r->signature().symbols);
    }
}

TEST(MonomialOrder, TotalMultiplicativeSigmaOrdering)
{
    Random rnd(4);
    for (int k = 0; k < 1000; ++k) {
        auto r = rnd.ring(rnd.uniform(1, 3), rnd.uniform(1, 3));
        const auto &o = r->order();
        const Monomial a = rnd.monomial(r, 3, 3, 2), b = rnd.monomial(r, 3, 3, 2), c = rnd.monomial(r, 3, 3, 2);
        const Shift s = rnd.shift(r->rank(), 3);
        const int ab = sgn(compare_monomials(o, a, b));
        EXPECT_EQ(ab, -sgn(compare_monomials(o, b, a)));
        EXPECT_EQ(ab == 0, a == b);
        if (ab < 0 && compare_monomials(o, b, c) < 0) {
            EXPECT_TRUE(compare_monomials(o, a, c) < 0);
        }
        EXPECT_EQ(sgn(compare_monomials(o, mul(o, a, c), mul(o, b, c))), ab);
        EXPECT_EQ(sgn(compare_monomials(o, shift_monomial(s, a), shift_monomial(s, b))), ab);
        EXPECT_TRUE(compare_monomials(o, shift_monomial(s, a), a) >= 0);
    }
}

TEST(OrdCompatibility, Flags)
{
    EXPECT_TRUE(OrderingSpec::standard(3, 2, OrderKind::degrevlex, OrderKind::lex).is_ord_compatible());
    EXPECT_FALSE(OrderingSpec::standard(3, 2, OrderKind::lex, OrderKind::lex).is_ord_compatible());
    EXPECT_TRUE(OrderingSpec::standard(3, 2, OrderKind::deglex, OrderKind::degrevlex).is_ord_compatible());
    EXPECT_TRUE(OrderingSpec::standard(1, 1, OrderKind::lex, OrderKind::lex).is_ord_compatible());
}

TEST(OrdCompatibility, SmallerOrderMeansSmallerMonomial)
{
    Random rnd(6);
    int checked = 0;
    for (int k = 0; k < 1000; ++k) {
        auto r = rnd.ring(rnd.uniform(1, 3), rnd.uniform(1, 3), true);
        const Monomial m = rnd.monomial(r, 4, 3, 3), n = rnd.monomial(r, 4, 3, 3);
        if (ord(m) < ord(n)) {
            ++checked;
            EXPECT_TRUE(compare_monomials(r->order(), m, n) < 0);
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(OrderingSpecTest, Printing)
{
    auto r = Ring::make(RingSignature{3, {"u", "v", "p"}, {}});
    EXPECT_EQ(r->order().to_string(r->signature().symbols), "block(shifts=degrevlex[s1>s2>s3], symbols=lex[u>v>p])");
}

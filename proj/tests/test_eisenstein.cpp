#include <numeric>
#include <random>

#include "emel/eisenstein.hpp"
#include "test_util.hpp"

using namespace emel;

TEST(DivisorSigma, Examples)
{
    EXPECT_EQ(divisor_sigma(3, 4), 73);
    EXPECT_EQ(divisor_sigma(3, 1), 1);
    EXPECT_EQ(divisor_sigma(5, 6), 8052);
    EXPECT_EQ(sigma_real(5, 6), Real(8052));
}

TEST(DivisorSigma, MultiplicativeOnCoprimePairs)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(1, 400);
    for (int trial = 0; trial < 300; ++trial) {
        long m = d(rng), n = d(rng);
        if (std::gcd(m, n) != 1)
            continue;
        for (int w : {3, 5, 7})
            EXPECT_EQ(divisor_sigma(w, m * n), divisor_sigma(w, m) * divisor_sigma(w, n));
    }
}

TEST(Bernoulli, Examples)
{
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(EisConstant, Examples)
{
    EXPECT_EQ(eis_constant(2), Rational(1, 240));
    EXPECT_EQ(eis_constant(3), Rational(-1, 504));
    EXPECT_EQ(eis_constant(4), Rational(1, 480));
}

TEST(EisCusp, AtIAgainstDirectSum)
{
    TruncationBudget b{1e-30, 200000};
    auto v = eis_cusp_eval(2, I(), b);
    Real direct = 0;
    for (long n = 1; n <= 60; ++n)
        direct += to_real(divisor_sigma(3, n)) * exp(Complex(-two_pi() * n)).re;
    EXPECT_LT(dist(v.value, Complex(direct)), 1e-30);
    EXPECT_NEAR(static_cast<double>(v.value.re), 1.8990120e-3, 1e-9);
    EXPECT_GE(v.terms, 10);
    EXPECT_LE(v.terms, 20);
    EXPECT_LT(v.tail_bound, 1e-30);
}

TEST(EisCusp, HighUpIsZero)
{
    auto v = eis_cusp_eval(2, cx(0, 1e6), TruncationBudget{1e-30, 200000});
    EXPECT_EQ(static_cast<double>(abs(v.value)), 0.0);
}

TEST(EisCusp, TwoIUsesFewTerms)
{
    auto v = eis_cusp_eval(3, cx(0, 2), TruncationBudget{1e-30, 200000});
    EXPECT_LE(v.terms, 15);
    Real direct = 0;
    for (long n = 1; n <= v.terms + 10; ++n)
        direct += to_real(divisor_sigma(5, n)) * exp(Complex(-2 * two_pi() * n)).re;
    EXPECT_LT(dist(v.value, Complex(direct)), 1e-30);
}

TEST(EisCusp, BudgetExhaustionIsReported)
{
    EXPECT_THROW(eis_cusp_eval(2, cx(0, 0.001), TruncationBudget{1e-40, 50}), std::runtime_error);
}

TEST(Modularity, E6VanishesAtI)
{
    EXPECT_LT(precision_selftest(), boost::multiprecision::pow(Real(10), -(digits() - 5)));
}

TEST(Modularity, OffFixedPoint)
{
    const Complex tau(Real(1) / 2, Real(2));
    const auto b = default_budget();
    for (int k : {2, 3, 4}) {
        Complex lhs = eis_eval(k, Complex(-1) / tau, b).value;
        Complex rhs = pow(tau, 2 * k) * eis_eval(k, tau, b).value;
        EXPECT_LT(dist(lhs, rhs), 10 * b.target()) << "2k = " << 2 * k;
        // the same through the built-in inversion
        EXPECT_LT(dist(eis_cusp_eval_modular(k, Complex(-1) / tau, b), eis_cusp_eval(k, Complex(-1) / tau, b).value),
                  10 * b.target());
    }
}

TEST(ComplexText, RoundTripAtWorkingDigits)
{
    Complex z(Real(1) / 3, -two_pi());
    std::string s = to_string(z, 40);
    Complex w = parse_complex(s);
    EXPECT_LT(dist(z, w), 1e-39);
    EXPECT_EQ(to_string(w, 40), s);
    EXPECT_LT(dist(parse_complex("2i"), cx(0, 2)), 1e-50);
    EXPECT_LT(dist(parse_complex("1/3+i"), Complex(Real(1) / 3, Real(1))), 1e-50);
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
}

#include "emel/integrals.hpp"
#include "emel/mmv.hpp"
#include "emel/oracles.hpp"
#include "test_util.hpp"

using namespace emel;

namespace {
Real E(int k) { return to_real(eis_constant(k)); }
}

TEST(TConst, Examples)
{
    EXPECT_LT(dist(T_const_closed(2, 1), I() * (Real(1) / 240)), 1e-55);
    EXPECT_LT(dist(T_const_closed(2, 2), Complex(Real(-1) / 480)), 1e-55);
    EXPECT_LT(dist(T_const_closed(2, -1), I() * (Real(1) / 240)), 1e-55);
    EXPECT_THROW(T_const_closed(2, 0), SingularExponent);
}

TEST(TConstConst, ClosedForm)
{
    // i^{b1+b2}/(b1(b1+b2)); the product exponent i^{b1 b2} differs already at (1,2)
    Complex v = T_const_const(2, 3, 1, 2);
    EXPECT_LT(dist(v, ipow(3) * (E(2) * E(3) / 3)), 1e-55);
    EXPECT_GT(dist(v, ipow(2) * (E(2) * E(3) / 3)), 1e-8);
    EXPECT_THROW(T_const_const(2, 2, 2, -2), SingularExponent);
    // nested monomial integral along (0, i]
    auto inner = [](const Complex& t) { return pow(t, 2) / Real(2); }; // int_0^t s ds
    auto f = [&](const Real& y) {
        Complex t(Real(0), y);
        return inner(t) * pow(t, 2) * I(); // t^{b2-1} with b2 = 3
    };
    Complex direct = integrate_real_line(f, Real(0), Real(1), 1e-40).value * (E(2) * E(3));
    EXPECT_LT(dist(direct, T_const_const(2, 3, 2, 3)), 1e-40);
}

TEST(RCusp, DepthOneSum)
{
    Complex s;
    for (long n = 1; n <= 60; ++n)
        s += -exp(Complex(-two_pi() * n)) / (two_pi_i_pow(1) * Real(n)) * to_real(divisor_sigma(3, n));
    EXPECT_LT(dist(R_cusp(2, 1), s), 1e-40);
}

TEST(RCusp, NonPositiveExponentsMatchQuadrature)
{
    for (long a : {0L, -1L, -3L})
        EXPECT_LT(dist(R_cusp(3, a), R_cusp_quad(3, a)), 1e-30) << a;
}

TEST(RIter, ConstCuspAndCuspCuspMatchQuadrature)
{
    PathSpec p;
    p.start = I();
    auto q1 = quad_oracle({Factor::constant(Complex(E(2))), Factor::cusp(2)}, {1, 1}, p);
    EXPECT_LT(dist(R_iter({MmvFactor::const_part(2), MmvFactor::cusp_part(2)}, {1, 1}), q1.value), 1e-20);
    auto q2 = quad_oracle({Factor::cusp(2), Factor::cusp(2)}, {1, 1}, p);
    EXPECT_LT(dist(R_iter({MmvFactor::cusp_part(2), MmvFactor::cusp_part(2)}, {1, 1}), q2.value), 1e-18);
    EXPECT_THROW(R_iter({MmvFactor::cusp_part(2), MmvFactor::const_part(2)}, {1, 1}), std::domain_error);
}

TEST(TCuspReg, ConvergentCaseMatchesDirectQuadrature)
{
    EXPECT_LT(dist(T_cusp_reg(2, 5), T_cusp_direct(2, 5).value), 1e-18);
    EXPECT_THROW(T_cusp_reg(2, 4), SingularExponent);
    EXPECT_THROW(T_cusp_reg(2, 0), SingularExponent);
}

TEST(TCuspReg, ReinsertionReproducesR)
{
    // R(E^0_4; 3) from the first inversion formula with T(E^0_4; 1)
    EXPECT_LT(dist(fund1_rhs(2, 3, T_cusp_reg(2, 1)), R_cusp(2, 3)), 1e-40);
}

TEST(TCuspReg, AgreesWithMellinContinuation)
{
    for (int k : {2, 3})
        for (long m : {-2L, 1L, 3L, 2L * k - 1, 2L * k + 3})
            EXPECT_LT(dist(T_cusp_reg(k, m), T_cusp_mellin(k, m)), 1e-30) << k << " " << m;
}

TEST(TMixed, CuspThenConstAgainstNestedQuadrature)
{
    const int kc = 2, kk = 3;
    const long alpha = 5, beta = 1;
    auto f = [&](const Real& y) {
        Complex t(Real(0), y);
        Complex inner = (ipow(beta) - pow(t, beta)) * (E(kk) / Real(beta)); // int_t^i E t2^{beta-1} dt2
        return eis_cusp_eval_modular(kc, t) * pow(t, alpha - 1) * inner * I();
    };
    Complex direct = integrate_real_line(f, Real(0), Real(1), 1e-32).value;
    EXPECT_LT(dist(T_mixed_reduce(MixedKind::CuspThenConst, kc, kk, alpha, beta), direct), 1e-15);
}

TEST(TMixed, ConstThenCuspAndSingularGuard)
{
    Complex v = T_mixed_reduce(MixedKind::ConstThenCusp, 2, 3, 3, 2);
    EXPECT_LT(dist(v, T_cusp_reg(2, 5) * (E(3) / 2)), 1e-50);
    EXPECT_THROW(T_mixed_reduce(MixedKind::ConstThenCusp, 2, 3, 2, 2), SingularExponent);
    EXPECT_THROW(T_mixed_reduce(MixedKind::CuspThenConst, 2, 3, 1, 0), SingularExponent);
}

TEST(ICoeff, FiniteAndRangeChecked)
{
    for (int a = 1; a <= 3; ++a) {
        Complex v = I_coeff({{2}, {a}});
        EXPECT_TRUE(boost::multiprecision::isfinite(v.re) && boost::multiprecision::isfinite(v.im));
    }
    EXPECT_THROW(I_coeff({{2}, {4}}), std::out_of_range);
    EXPECT_THROW(I_coeff({{2, 2}, {0, 1}}), std::out_of_range);
}

TEST(ICoeff, DepthTwoComponentsMatchQuadrature)
{
    PathSpec p;
    p.start = I();
    auto q = quad_oracle({Factor::constant(Complex(E(3))), Factor::cusp(2)}, {2, 1}, p);
    EXPECT_LT(dist(R_const_cusp(3, 2, 2, 1), q.value), 1e-15);
    auto q2 = quad_oracle({Factor::cusp(2), Factor::cusp(3)}, {1, 2}, p);
    EXPECT_LT(dist(R_iter({MmvFactor::cusp_part(2), MmvFactor::cusp_part(3)}, {1, 2}), q2.value), 1e-15);
}

TEST(SCoeff, WeightFourValues)
{
    const Real z3 = zeta_int(3);
    EXPECT_LT(dist(S_coeff({{2}, {1}}), Complex(z3)), 1e-12);
    EXPECT_LT(dist(S_coeff({{2}, {2}}), two_pi_i_pow(3) / Real(144)), 1e-12);
    EXPECT_LT(dist(S_coeff({{2}, {3}}), Complex(-z3)), 1e-12);
}

TEST(Int0, DepthOneEqualsConvergentIntegral)
{
    Complex direct = T_cusp_direct(2, 5).value + R_cusp_quad(2, 5);
    EXPECT_LT(dist(int0_reg({2}, {5}), direct), 1e-15);
}

TEST(Int0, DepthTwoBothAssemblyOrders)
{
    Complex x = int0_reg({2, 2}, {1, 2}), y = int0_reg({2, 2}, {2, 1});
    EXPECT_LT(dist(x + y, int0_reg({2}, {1}) * int0_reg({2}, {2})), 1e-12);
    EXPECT_THROW(int0_reg({2, 2}, {2, 2}), SingularExponent);
}

TEST(E0Cocycle, Examples)
{
    auto p2 = e0_cocycle_S(2);
    EXPECT_EQ(p2.degree, 2);
    EXPECT_EQ(p2.at(1, 1), Rational(1, 144));
    EXPECT_EQ(p2.at(2, 0), 0);
    auto p3 = e0_cocycle_S(3);
    EXPECT_EQ(p3.at(1, 3), Rational(-1, 720));
    EXPECT_EQ(p3.at(3, 1), Rational(-1, 720));
    for (int k = 2; k <= 7; ++k) {
        auto p = e0_cocycle_S(k);
        for (int x = 0; x <= p.degree; x += 2)
            EXPECT_EQ(p.at(x, p.degree - x), 0);
    }
    EXPECT_THROW(p2.at(1, 2), std::out_of_range);
}

TEST(ZetaOdd, ValuesAndCrossCheck)
{
    EXPECT_NEAR(static_cast<double>(zeta_odd(3)), 1.202056903159594, 1e-15);
    EXPECT_NEAR(static_cast<double>(zeta_odd(5)), 1.036927755143370, 1e-15);
    for (int s = 3; s <= 15; s += 2)
        EXPECT_LT(static_cast<double>(abs(zeta_odd(s) - zeta_int(s))), 1e-45) << s;
    EXPECT_LT(zeta_odd(9), zeta_odd(7));
    EXPECT_LT(zeta_odd(7), zeta_odd(5));
    EXPECT_THROW(zeta_odd(4), std::invalid_argument);
}

TEST(ZetaOdd, NaiveSummationAgreesLoosely)
{
    double s = 0;
    for (long n = 1000000; n >= 1; --n)
        s += 1.0 / (double(n) * n * n);
    EXPECT_NEAR(s, static_cast<double>(zeta_odd(3)), 1e-12);
}

TEST(Oracles, ZetaAtNonPositiveIntegers)
{
    EXPECT_EQ(zeta_int(0), Real(-1) / 2);
    EXPECT_LT(abs(zeta_int(-1) + Real(1) / 12), Real("1e-55"));
    EXPECT_LT(abs(zeta_int(-3) - Real(1) / 120), Real("1e-55"));
    EXPECT_EQ(zeta_int(-2), 0);
    // zeta'(-2) = -zeta(3)/(4 pi^2)
    EXPECT_LT(abs(zeta_prime_neg_even(1) + zeta_int(3) / (4 * pi() * pi())), Real("1e-55"));
}

TEST(Oracles, MellinEqualsSplitIntegralBeyondTheStrip)
{
    for (int k : {2, 3}) {
        long m = 2 * k + 1;
        EXPECT_LT(dist(mellin_cusp(k, m), T_cusp_direct(k, m).value + R_cusp_quad(k, m)), 1e-30);
    }
    EXPECT_THROW(mellin_cusp(2, 4), SingularExponent);
}

#include "emel/integrals.hpp"
#include "emel/lseries.hpp"
#include "emel/rewrite.hpp"
#include "test_util.hpp"

using namespace emel;

namespace {
// int_1^Y e^{2 pi i n (i y)} (i y)^{alpha-1} i dy, Y large enough that the rest is negligible
Complex vertical_exp_integral(long n, int alpha)
{
    auto f = [&](const Real& y) {
        Complex t(Real(0), y);
        return exp(Complex(-two_pi() * n * y)) * pow(t, alpha - 1) * I();
    };
    return integrate_real_line(f, Real(1), Real(25), 1e-40).value;
}
} // namespace

TEST(ElemExpTail, Examples)
{
    Complex a = elem_exp_tail(1, 1, I());
    Complex ea = -exp(Complex(-two_pi())) / two_pi_i_pow(1);
    EXPECT_LT(dist(a, ea), 1e-50);
    Complex b = elem_exp_tail(2, 1, I());
    Complex eb = -exp(Complex(-2 * two_pi())) / (two_pi_i_pow(1) * Real(2));
    EXPECT_LT(dist(b, eb), 1e-50);
    EXPECT_LT(dist(elem_exp_tail(1, 3, I()), vertical_exp_integral(1, 3)), 1e-25);
}

TEST(TailIntegral, SingleFrequency)
{
    ExpPoly f;
    f.terms()[1] = {Complex(1)};
    ExpPoly g = exppoly_tail_integral(f, 1);
    const Complex t = cx(0.25, 1.5);
    Complex expect = -exp(two_pi_i_pow(1) * t) / two_pi_i_pow(1);
    EXPECT_LT(dist(g.eval(t), expect), 1e-50);
    EXPECT_TRUE(exppoly_tail_integral(ExpPoly(), 2).empty());
}

TEST(TailIntegral, RejectsFrequencyZero)
{
    EXPECT_THROW(exppoly_tail_integral(ExpPoly::constant(Complex(1)), 1), std::domain_error);
}

TEST(TailIntegral, InvertsDifferentiation)
{
    ExpPoly f = ExpPoly::cusp_series(3, 6).mul_tpow(1);
    for (int alpha : {1, 2, 4}) {
        ExpPoly g = exppoly_tail_integral(f, alpha);
        ExpPoly dg = g.derivative();
        ExpPoly target = f.mul_tpow(alpha - 1);
        ASSERT_EQ(dg.terms().size(), target.terms().size());
        for (const auto& [n, p] : target.terms()) {
            const auto& q = dg.terms().at(n);
            for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
                Complex a = i < p.size() ? p[i] : Complex();
                Complex b = i < q.size() ? q[i] : Complex();
                EXPECT_LT(dist(a, -b), 1e-40) << "n=" << n << " i=" << i;
            }
        }
    }
}

TEST(TailIntegral, CuspSeriesMatchesQuadrature)
{
    ExpPoly g = exppoly_tail_integral(ExpPoly::cusp_series(2, 60), 2);
    PathSpec p;
    p.start = I();
    auto q = quad_oracle({Factor::cusp(2)}, {2}, p, 1e-32);
    EXPECT_LT(dist(g.eval(I()), q.value), 1e-25);
}

TEST(IntEval, DepthZeroIsOne)
{
    EXPECT_LT(dist(int_eval(make_index({}, {}), cx(0, 1)).value, Complex(1)), 1e-50);
}

TEST(IntEval, DepthOneIsMinusL)
{
    for (const Complex& tau : {cx(0, 1), cx(0.3, 1.2)}) {
        Complex a = int_eval(make_index({2}, {1}), tau).value;
        Complex b = l_eval(make_index({2}, {1}), tau).value;
        EXPECT_LT(dist(a, -b), 1e-44);
    }
}

TEST(IntEval, DepthTwoMatchesQuadrature)
{
    PathSpec p;
    p.start = I();
    auto q = quad_oracle({Factor::cusp(2), Factor::cusp(2)}, {1, 1}, p);
    EXPECT_LT(dist(int_eval(make_index({2, 2}, {1, 1}), I()).value, q.value), 1e-20);
    p.start = cx(0, 2);
    auto q2 = quad_oracle({Factor::cusp(2), Factor::cusp(2)}, {1, 1}, p);
    EXPECT_LT(dist(int_eval(make_index({2, 2}, {1, 1}), cx(0, 2)).value, q2.value), 1e-20);
}

TEST(IntEval, DepthCap)
{
    EXPECT_THROW(int_eval(make_index({2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}), I()), std::invalid_argument);
}

TEST(IntEval, ClosedFormAgreesWithTruncatedExpPoly)
{
    auto idx = make_index({2, 3}, {2, 1});
    SeriesValue v = int_eval(idx, I());
    EXPECT_LT(dist(v.value, int_exppoly(idx, v.terms).eval(I())), 1e-44);
}

TEST(IntEval, DerivativeByFiniteDifferences)
{
    const Complex tau = cx(0, 2);
    const Real h("1e-6");
    auto idx = make_index({3, 2, 2}, {2, 1, 1});
    auto f = [&](const Complex& z) { return int_eval(idx, z).value; };
    Complex d = (f(tau + Complex(h)) * Real(8) - f(tau - Complex(h)) * Real(8) - f(tau + Complex(2 * h)) +
                 f(tau - Complex(2 * h))) /
                (Real(12) * h);
    Complex rhs = -(eis_cusp_eval(3, tau).value * tau * int_eval(make_index({2, 2}, {1, 1}), tau).value);
    EXPECT_LT(dist(d, rhs) / static_cast<double>(abs(rhs)), 1e-8);
}

TEST(IntEval, ShuffleAtI)
{
    Complex a = int_eval(make_index({2, 3}, {1, 2}), I()).value;
    Complex b = int_eval(make_index({2}, {2}), I()).value;
    Complex s;
    const FormalSum sh = shuffle_product(Word{{2, 1}, {3, 2}}, Word{{2, 2}});
    for (const auto& [g, c] : sh.terms())
        s += int_eval(make_index(g.ks, g.alphas), I()).value * to_real(c);
    EXPECT_LT(dist(a * b, s), 1e-40);
}

TEST(QuadOracle, ConstantOnFiniteSegment)
{
    PathSpec p;
    p.start = I();
    p.finite = true;
    p.end = cx(0, 2);
    auto q = quad_oracle({Factor::constant(Complex(1))}, {1}, p);
    EXPECT_LT(dist(q.value, I()), 1e-40);
}

TEST(QuadOracle, CuspFromIMatchesElementarySum)
{
    PathSpec p;
    p.start = I();
    auto q = quad_oracle({Factor::cusp(2)}, {1}, p, 1e-32);
    Complex s;
    for (long n = 1; n <= 60; ++n)
        s += elem_exp_tail(n, 1, I()) * to_real(divisor_sigma(3, n));
    EXPECT_LT(dist(q.value, s), 1e-25);
    EXPECT_LT(q.tail_bound, 1e-40);
}

TEST(QuadOracle, RejectsConstantInnermostOnInfinitePath)
{
    PathSpec p;
    p.start = I();
    EXPECT_THROW(quad_oracle({Factor::cusp(2), Factor::constant(Complex(1))}, {1, 1}, p), std::domain_error);
}

TEST(ExpPolyDump, Format)
{
    ExpPoly e;
    e.terms()[2] = {Complex(1), Complex(Real(0), Real(-2))};
    EXPECT_EQ(e.dump(3), "2; 1.00e+00+0.00e+00i, 0.00e+00-2.00e+00i\n");
}

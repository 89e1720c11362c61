#include "emel/mmv.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <map>
#include <mutex>
#include <tuple>

#include "emel/integrals.hpp"

namespace emel {

namespace {

std::mutex g_mu;
std::map<std::tuple<int, long, int>, Complex> g_r1;
std::map<std::tuple<int, int, long, long, int>, Complex> g_r2;

Real e_inf(int k) { return to_real(eis_constant(k)); }

long sgn(long e) { return (e % 2) ? -1 : 1; }

void check_alpha(int k, long a)
{
    if (a < 1 || a > 2 * k - 1)
        throw std::out_of_range("alpha " + std::to_string(a) + " outside 1.." + std::to_string(2 * k - 1));
}

// R(E^0_{2k1}, E^0_{2k2}; a1, a2) = Int(k1, k2; a1, a2)(i)
Complex R_cusp_cusp(int k1, int k2, long a1, long a2, const TruncationBudget& b)
{
    if (a1 < 1 || a2 < 1)
        throw std::invalid_argument("R(cusp, cusp) implemented for exponents >= 1");
    auto key = std::make_tuple(k1, k2, a1, a2, working_digits());
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = g_r2.find(key);
        if (it != g_r2.end())
            return it->second;
    }
    Complex v = int_eval(make_index({k1, k2}, {static_cast<int>(a1), static_cast<int>(a2)}), I(), b).value;
    std::lock_guard<std::mutex> lock(g_mu);
    g_r2[key] = v;
    return v;
}

} // namespace

void clear_mmv_cache()
{
    std::lock_guard<std::mutex> lock(g_mu);
    g_r1.clear();
    g_r2.clear();
}

Complex T_const_closed(int k, long alpha)
{
    if (alpha == 0)
        throw SingularExponent("T(E^inf; 0) diverges logarithmically");
    return ipow(alpha) * (e_inf(k) / Real(alpha));
}

Complex T_const_const(int k1, int k2, long b1, long b2)
{
    if (b1 == 0 || b1 + b2 == 0)
        throw SingularExponent("T(E^inf, E^inf; " + std::to_string(b1) + ", " + std::to_string(b2) +
                               ") is logarithmic");
    return ipow(b1 + b2) * (e_inf(k1) * e_inf(k2) / Real(b1 * (b1 + b2)));
}

Complex R_cusp(int k, long alpha, const TruncationBudget& b)
{
    auto key = std::make_tuple(k, alpha, working_digits());
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = g_r1.find(key);
        if (it != g_r1.end())
            return it->second;
    }
    Complex v;
    if (alpha >= 1) {
        v = int_eval(make_index({k}, {static_cast<int>(alpha)}), I(), b).value;
    } else {
        // i^alpha sum sigma(n) E_{1-alpha}(2 pi n)
        const long N = poly_exp_cutoff(2.0 * k, 1.0, 0, b);
        const unsigned order = static_cast<unsigned>(1 - alpha);
        Real s = 0;
        for (long n = 1; n <= N; ++n)
            s += sigma_real(2 * k - 1, n) * boost::math::expint(order, Real(two_pi() * n));
        v = ipow(alpha) * s;
    }
    std::lock_guard<std::mutex> lock(g_mu);
    g_r1[key] = v;
    return v;
}

Complex R_const_cusp(int k1, int k2, long a1, long a2, const TruncationBudget& b)
{
    if (a1 == 0)
        throw SingularExponent("R(E^inf, E^0; 0, .) is logarithmic");
    return (R_cusp(k2, a1 + a2, b) - ipow(a1) * R_cusp(k2, a2, b)) * (e_inf(k1) / Real(a1));
}

Complex R_iter(const std::vector<MmvFactor>& f, const std::vector<long>& a, const TruncationBudget& b)
{
    if (f.size() != a.size() || f.empty() || f.size() > 2)
        throw std::invalid_argument("R_iter supports depth 1 or 2");
    if (!f.back().cusp)
        throw std::domain_error("R_iter: innermost constant factor diverges at i inf");
    if (f.size() == 1)
        return R_cusp(f[0].k, a[0], b);
    if (f[0].cusp)
        return R_cusp_cusp(f[0].k, f[1].k, a[0], a[1], b);
    return R_const_cusp(f[0].k, f[1].k, a[0], a[1], b);
}

Complex T_cusp_reg(int k, long m, const TruncationBudget& b)
{
    if (m == 0 || m == 2 * k)
        throw SingularExponent("T(E^0_" + std::to_string(2 * k) + "; " + std::to_string(m) +
                               ") is a singular regularization");
    Complex inner = R_cusp(k, 2 * k - m, b) - T_const_closed(k, 2 * k - m);
    return inner * Real(sgn(m)) - T_const_closed(k, m);
}

Complex T_mixed_reduce(MixedKind kind, int k_cusp, int k_const, long alpha, long beta, const TruncationBudget& b)
{
    if (beta == 0)
        throw SingularExponent("mixed T with beta = 0");
    const Real c = e_inf(k_const) / Real(beta);
    if (kind == MixedKind::ConstThenCusp)
        return T_cusp_reg(k_cusp, alpha + beta, b) * c;
    return (ipow(beta) * T_cusp_reg(k_cusp, alpha, b) - T_cusp_reg(k_cusp, alpha + beta, b)) * c;
}

Complex I_coeff(const MonomialCoefficientRequest& req, const TruncationBudget& b)
{
    if (req.ks.size() != req.alphas.size() || req.ks.empty() || req.ks.size() > 2)
        throw std::invalid_argument("I_coeff supports depth 1 or 2");
    if (req.ks.size() == 1) {
        const int k = req.ks[0];
        const long a = req.alphas[0];
        check_alpha(k, a);
        Complex br = R_cusp(k, a, b) - T_const_closed(k, a);
        return br * two_pi_i_pow(2 * k - 1) * (Real(sgn(a)) * to_real(binomial(2 * k - 2, a - 1)));
    }
    const int k1 = req.ks[0], k2 = req.ks[1];
    const long a1 = req.alphas[0], a2 = req.alphas[1];
    check_alpha(k1, a1);
    check_alpha(k2, a2);
    Complex br = R_cusp_cusp(k1, k2, a1, a2, b) + R_const_cusp(k1, k2, a1, a2, b) -
                 R_const_cusp(k2, k1, a2, a1, b) - R_cusp(k1, a1, b) * T_const_closed(k2, a2) +
                 T_const_const(k2, k1, a2, a1);
    Real c = Real(sgn(a1 + a2)) * to_real(binomial(2 * k1 - 2, a1 - 1) * binomial(2 * k2 - 2, a2 - 1));
    return br * two_pi_i_pow(2 * k1 + 2 * k2 - 2) * c;
}

Complex S_coeff(const MonomialCoefficientRequest& req, const TruncationBudget& b)
{
    if (req.ks.size() == 1) {
        const int k = req.ks[0], a = req.alphas[0];
        return I_coeff(req, b) - I_coeff({{k}, {2 * k - a}}, b) * Real(sgn(a - 1));
    }
    if (req.ks.size() != 2 || req.alphas.size() != 2)
        throw std::invalid_argument("S_coeff supports depth 1 or 2");
    const int k1 = req.ks[0], k2 = req.ks[1];
    const int a1 = req.alphas[0], a2 = req.alphas[1];
    return I_coeff(req, b) - I_coeff({{k1, k2}, {2 * k1 - a1, 2 * k2 - a2}}, b) * Real(sgn(a1 + a2)) -
           I_coeff({{k1}, {2 * k1 - a1}}, b) * S_coeff({{k2}, {a2}}, b) * Real(sgn(a1 - 1));
}

Complex int0_reg(const std::vector<int>& ks, const std::vector<long>& as, const TruncationBudget& b)
{
    if (ks.size() != as.size() || ks.empty() || ks.size() > 2)
        throw std::invalid_argument("int0_reg supports depth 1 or 2");
    if (ks.size() == 1)
        return R_cusp(ks[0], as[0], b) + T_cusp_reg(ks[0], as[0], b);
    const int k1 = ks[0], k2 = ks[1];
    const long a1 = as[0], a2 = as[1];
    check_alpha(k1, a1);
    check_alpha(k2, a2);
    if (a1 + a2 == 2 * k1 || a1 + a2 == 2 * k2)
        throw SingularExponent("alpha_1 + alpha_2 = " + std::to_string(a1 + a2) + " hits 2k_1 or 2k_2");
    const Complex A0 = -(T_cusp_reg(k1, a1, b) * R_cusp(k2, a2, b));
    const Complex Ap =
        -(T_mixed_reduce(MixedKind::CuspThenConst, k1, k2, a1, a2 - 2 * k2, b) -
          T_mixed_reduce(MixedKind::CuspThenConst, k1, k2, a1, a2, b)) -
        (T_mixed_reduce(MixedKind::ConstThenCusp, k2, k1, a2, a1 - 2 * k1, b) -
         T_mixed_reduce(MixedKind::ConstThenCusp, k2, k1, a2, a1, b));
    Complex Ainf;
    for (auto [b1, s1] : {std::pair<long, long>{a1 - 2 * k1, 1}, {a1, -1}})
        for (auto [b2, s2] : {std::pair<long, long>{a2 - 2 * k2, 1}, {a2, -1}})
            Ainf += T_const_const(k1, k2, b1, b2) * Real(s1 * s2);
    return R_cusp_cusp(k1, k2, a1, a2, b) + R_cusp_cusp(k2, k1, 2 * k2 - a2, 2 * k1 - a1, b) * Real(sgn(a1 + a2)) -
           A0 - Ap - Ainf;
}

BiPolynomial<Rational> e0_cocycle_S(int k)
{
    if (k < 2)
        throw std::invalid_argument("e0_cocycle_S needs k >= 2");
    BiPolynomial<Rational> p;
    p.degree = 2 * k - 2;
    p.coeff.assign(static_cast<std::size_t>(p.degree + 1), Rational(0));
    const Rational pre = Rational(factorial(2 * k - 2)) / 2;
    for (int i = 1; i <= k - 1; ++i) {
        Rational t = bernoulli(2 * i) / Rational(factorial(2 * i)) * bernoulli(2 * k - 2 * i) /
                     Rational(factorial(2 * k - 2 * i));
        p.coeff[static_cast<std::size_t>(2 * i - 1)] += pre * t;
    }
    return p;
}

Real zeta_odd(int s, const TruncationBudget& b)
{
    if (s < 3 || s % 2 == 0)
        throw std::invalid_argument("zeta_odd needs odd s >= 3");
    const long N = 40;
    Real sum = 0;
    for (long n = 1; n < N; ++n)
        sum += boost::multiprecision::pow(Real(n), -s);
    const Real Nr(N);
    sum += boost::multiprecision::pow(Nr, 1 - s) / (s - 1) + boost::multiprecision::pow(Nr, -s) / 2;
    const Real eps = Real(b.target()) * Real("1e-10");
    Real rising = s; // s (s+1) .. (s+2j-2)
    for (int j = 1; j < 200; ++j) {
        Real term = to_real(bernoulli(2 * j) / Rational(factorial(2 * j))) * rising *
                    boost::multiprecision::pow(Nr, -s - 2 * j + 1);
        sum += term;
        if (boost::multiprecision::abs(term) < eps)
            break;
        rising *= Real(s + 2 * j - 1) * Real(s + 2 * j);
    }
    return sum;
}

Complex fund1_rhs(int k, long alpha, const Complex& t_cusp_dual)
{
    return (t_cusp_dual + T_const_closed(k, 2 * k - alpha)) * Real(sgn(alpha)) + T_const_closed(k, alpha);
}

Complex fund2_rhs(int k1, int k2, long a1, long a2, bool printed, const TruncationBudget& b)
{
    const Real s = Real(sgn(a1 + a2));
    Complex x = (T_mixed_reduce(MixedKind::CuspThenConst, k2, k1, 2 * k2 - a2, -a1, b) +
                 T_const_const(k2, k1, 2 * k2 - a2, -a1)) * s;
    Complex last = T_const_const(k2, k1, -a2, -a1);
    return printed ? x + last : x - last * s;
}

Complex haberland_rhs(int k, int alpha, const TruncationBudget& b)
{
    check_alpha(k, alpha);
    auto e0 = e0_cocycle_S(k);
    Complex v = two_pi_i_pow(2 * k - 1) * to_real(e0.at(2 * k - alpha - 1, alpha - 1));
    Real z = to_real(Rational(factorial(2 * k - 2)) / 2) * zeta_odd(2 * k - 1, b);
    if (alpha == 1)
        v += Complex(z);
    if (alpha == 2 * k - 1)
        v -= Complex(z);
    return v;
}

Complex first_difference_rhs(int k1, int k2, int a1, int a2, FirstDiffVariant v, const TruncationBudget& b)
{
    if (k1 == k2 && a1 == a2)
        return Complex(0);
    const Complex pref = two_pi_i_pow(2 * k1 + 2 * k2 - 2) *
                         (Real(sgn(a1 + a2)) * to_real(binomial(2 * k1 - 2, a1 - 1) * binomial(2 * k2 - 2, a2 - 1)));
    const Complex i12 = int0_reg({k1, k2}, {a1, a2}, b);
    const Complex i21 = int0_reg({k2, k1}, {a2, a1}, b);
    const Complex j1 = int0_reg({k1}, {a1 + a2}, b);
    const Complex j2 = int0_reg({k2}, {a1 + a2}, b);
    if (v == FirstDiffVariant::Rederived) {
        const Real c1 = 2 * e_inf(k2) / Real(a2);
        const Real c2 = 2 * e_inf(k1) / Real(a1);
        return pref * (i12 - i21 - j1 * c1 + j2 * c2);
    }
    const Rational b1 = bernoulli(2 * k1), b2 = bernoulli(2 * k2);
    const Real c1 = to_real(b2 / Rational(2 * k2 * a2));
    const Real c2 = to_real(b1 / Rational(2 * k1 * a1));
    const Real K = to_real(b1 * b2 * Rational(a2 - a1) / Rational(8L * k1 * k2 * a1 * a2 * (a1 + a2)));
    return pref * (i12 - j1 * c1 - (i21 - j2 * c2) + Complex(K));
}

} // namespace emel

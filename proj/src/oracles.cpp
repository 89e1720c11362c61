#include "emel/oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "emel/mmv.hpp"

namespace emel {

Real zeta_int(int n)
{
    if (n == 1)
        throw std::domain_error("zeta has a pole at 1");
    if (n >= 2)
        return boost::math::zeta(Real(n));
    if (n == 0)
        return Real(-1) / 2;
    const int m = 1 - n; // zeta(-j) = -B_{j+1}/(j+1)
    if (m % 2)
        return Real(0);
    return -to_real(bernoulli(m)) / Real(m);
}

Real zeta_prime_neg_even(int j)
{
    if (j < 1)
        throw std::invalid_argument("zeta_prime_neg_even needs j >= 1");
    Real v = to_real(Integer(factorial(2 * j))) * zeta_int(2 * j + 1) /
             (2 * boost::multiprecision::pow(two_pi(), 2 * j));
    return (j % 2) ? Real(-v) : v;
}

Complex mellin_cusp(int k, long m)
{
    if (m == 0 || m == 2 * k)
        throw SingularExponent("Mellin transform of E^0 has a pole at " + std::to_string(m));
    const long s2 = m - 2 * k + 1;
    Real v;
    if (m == 1) {
        // zeta(s) ~ 1/(s-1) against the simple zero of zeta(s - 2k + 1) at s = 1
        v = zeta_prime_neg_even(k - 1);
    } else if (m >= 2) {
        v = boost::math::tgamma(Real(m)) * zeta_int(static_cast<int>(m));
        if (s2 == 1)
            throw std::logic_error("unreachable");
        v *= zeta_int(static_cast<int>(s2));
    } else {
        // Gamma has a simple pole at m = -n; exactly one of m, s2 is a negative even zero of zeta
        const long n = -m;
        Real res = to_real(Integer(factorial(n)));
        res = ((n % 2) ? Real(-1) : Real(1)) / res;
        long even = (m % 2 == 0) ? m : s2;
        long other = (m % 2 == 0) ? s2 : m;
        v = res * zeta_prime_neg_even(static_cast<int>(-even / 2)) * zeta_int(static_cast<int>(other));
    }
    return ipow(m) * (v / boost::multiprecision::pow(two_pi(), m));
}

namespace {
std::mutex g_mu;
std::map<std::tuple<int, long, int>, Complex> g_rq;
} // namespace

Complex R_cusp_quad(int k, long m, const TruncationBudget& b)
{
    auto key = std::make_tuple(k, m, working_digits());
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = g_rq.find(key);
        if (it != g_rq.end())
            return it->second;
    }
    PathSpec p;
    p.start = I();
    Complex v = quad_oracle({Factor::cusp(k)}, {static_cast<int>(m)}, p, 0, b).value;
    std::lock_guard<std::mutex> lock(g_mu);
    g_rq[key] = v;
    return v;
}

Complex T_cusp_mellin(int k, long m, const TruncationBudget& b)
{
    return mellin_cusp(k, m) - R_cusp_quad(k, m, b);
}

QuadResult T_cusp_direct(int k, long m, double tol, const TruncationBudget& b)
{
    if (m <= 2 * k)
        throw std::domain_error("T(E^0; m) converges at 0 only for m > 2k");
    if (tol <= 0)
        tol = std::max(b.target(), 1e-32);
    const Complex im = ipow(m);
    auto f = [&](const Real& y) {
        Complex tau(Real(0), y);
        return im * boost::multiprecision::pow(y, m - 1) * eis_cusp_eval_modular(k, tau, b);
    };
    return integrate_real_line(f, Real(0), Real(1), tol);
}

} // namespace emel

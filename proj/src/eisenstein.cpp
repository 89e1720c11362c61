#include "emel/eisenstein.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace emel {

double TruncationBudget::target() const
{
    return eps > 0 ? eps : std::pow(10.0, -(digits() + 5));
}

TruncationBudget default_budget() { return TruncationBudget{}; }

double poly_exp_tail(double power, double y, double log_c, long N)
{
    const double a = 2 * std::numbers::pi * y;
    const double n = static_cast<double>(N + 1);
    const double log_ratio = power * std::log1p(1.0 / n) - a;
    if (log_ratio >= 0)
        return std::numeric_limits<double>::infinity();
    const double log_term = log_c + power * std::log(n) - a * n;
    return std::exp(log_term) / (1 - std::exp(log_ratio));
}

long poly_exp_cutoff(double power, double y, double log_c, const TruncationBudget& b)
{
    if (!(y > 0))
        throw std::invalid_argument("Im(tau) must be positive");
    const double eps = b.target();
    for (long N = 0; N <= b.n_max; ++N)
        if (poly_exp_tail(power, y, log_c, N) < eps)
            return N;
    throw std::runtime_error("truncation budget exhausted: Im(tau) too small for n_max");
}

namespace {

struct SigmaTable {
    std::deque<Integer> exact{Integer(0)};
    std::deque<Real> real{Real(0)};
};

std::mutex g_sigma_mutex;
std::map<int, SigmaTable> g_sigma;
int g_sigma_precision = -1;

SigmaTable& sigma_table(int w, long n)
{
    if (g_sigma_precision != working_digits()) {
        g_sigma.clear();
        g_sigma_precision = working_digits();
    }
    SigmaTable& t = g_sigma[w];
    long have = static_cast<long>(t.exact.size()) - 1;
    if (n > have) {
        long target = std::max(n, 2 * have + 16);
        std::vector<Integer> seg(static_cast<std::size_t>(target - have), Integer(0));
        for (long d = 1; d <= target; ++d) {
            Integer dw = boost::multiprecision::pow(Integer(d), static_cast<unsigned>(w));
            long first = ((have / d) + 1) * d;
            for (long m = first; m <= target; m += d)
                seg[static_cast<std::size_t>(m - have - 1)] += dw;
        }
        for (auto& s : seg) {
            t.real.push_back(to_real(s));
            t.exact.push_back(std::move(s));
        }
    }
    return t;
}

} // namespace

Integer divisor_sigma(int w, long n)
{
    if (n < 1)
        throw std::invalid_argument("divisor_sigma needs n >= 1");
    std::lock_guard<std::mutex> lock(g_sigma_mutex);
    return sigma_table(w, n).exact[static_cast<std::size_t>(n)];
}

const Real& sigma_real(int w, long n)
{
    std::lock_guard<std::mutex> lock(g_sigma_mutex);
    return sigma_table(w, n).real[static_cast<std::size_t>(n)];
}

Rational bernoulli(int m)
{
    if (m < 0)
        throw std::invalid_argument("bernoulli index must be >= 0");
    static std::mutex mu;
    static std::vector<Rational> b{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(b.size()) <= m) {
        // sum_{j=0}^{n} C(n+1, j) b_j = 0
        int n = static_cast<int>(b.size());
        Rational s = 0;
        for (int j = 0; j < n; ++j)
            s += Rational(binomial(n + 1, j)) * b[j];
        b.push_back(-s / Rational(n + 1));
    }
    return b[m];
}

Rational eis_constant(int k)
{
    if (k < 2)
        throw std::invalid_argument("eis_constant needs k >= 2");
    return -bernoulli(2 * k) / Rational(4 * k);
}

SeriesValue eis_cusp_eval(int k, const Complex& tau, const TruncationBudget& b)
{
    SeriesValue out;
    long N = poly_exp_cutoff(2.0 * k, static_cast<double>(tau.im), 0, b);
    Complex q = exp(Complex(-two_pi() * tau.im, two_pi() * tau.re));
    Complex qn = q;
    for (long n = 1; n <= N; ++n) {
        out.value += qn * sigma_real(2 * k - 1, n);
        qn *= q;
    }
    out.terms = N;
    out.tail_bound = poly_exp_tail(2.0 * k, static_cast<double>(tau.im), 0, N);
    return out;
}

SeriesValue eis_eval(int k, const Complex& tau, const TruncationBudget& b)
{
    SeriesValue v = eis_cusp_eval(k, tau, b);
    v.value += Complex(to_real(eis_constant(k)));
    return v;
}

Complex eis_cusp_eval_modular(int k, const Complex& tau, const TruncationBudget& b)
{
    if (norm(tau) >= 1)
        return eis_cusp_eval(k, tau, b).value;
    Complex c(to_real(eis_constant(k)));
    Complex tp = Complex(-1) / tau;
    return pow(tau, -2L * k) * (c + eis_cusp_eval(k, tp, b).value) - c;
}

Real precision_selftest()
{
    return abs(eis_eval(3, I()).value);
}

} // namespace emel

#include "emel/lseries.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace emel {

namespace {
Rational inv_pow(long m, int a)
{
    return Rational(Integer(1), boost::multiprecision::pow(Integer(m), static_cast<unsigned>(a)));
}
} // namespace

LCoefficients l_coeffs_dp(const CompositeIndex& idx, long N)
{
    const int r = idx.depth();
    if (r < 1)
        throw std::invalid_argument("l_coeffs_dp needs depth >= 1");
    if (N < 1)
        throw std::invalid_argument("l_coeffs_dp needs N >= 1");
    const auto n = static_cast<std::size_t>(N);

    std::vector<Rational> sig(n + 1);
    std::vector<Rational> S(n + 1), next(n + 1);
    {
        const int w = 2 * idx.ks[r - 1] - 1;
        for (long m = 1; m <= N; ++m)
            S[m] = Rational(divisor_sigma(w, m)) * inv_pow(m, idx.alphas[r - 1]);
    }
    for (int j = r - 2; j >= 0; --j) {
        const int w = 2 * idx.ks[j] - 1;
        for (long m = 1; m <= N; ++m)
            sig[m] = Rational(divisor_sigma(w, m));
        for (long m = 1; m <= N; ++m) {
            Rational s = 0;
            for (long k = 1; k < m; ++k)
                if (S[m - k] != 0)
                    s += sig[k] * S[m - k];
            next[m] = s * inv_pow(m, idx.alphas[j]);
        }
        std::swap(S, next);
    }
    LCoefficients out{idx, N, {}};
    out.coeffs.assign(S.begin() + 1, S.end());
    return out;
}

namespace {
void enumerate(const CompositeIndex& idx, int j, long remaining_cap, std::vector<long>& parts,
               std::vector<Rational>& acc)
{
    const int r = idx.depth();
    if (j == r) {
        long total = std::accumulate(parts.begin(), parts.end(), 0L);
        Integer num = 1, den = 1;
        long tail = 0;
        for (int i = r - 1; i >= 0; --i) {
            tail += parts[i];
            num *= divisor_sigma(2 * idx.ks[i] - 1, parts[i]);
            den *= boost::multiprecision::pow(Integer(tail), static_cast<unsigned>(idx.alphas[i]));
        }
        acc[static_cast<std::size_t>(total - 1)] += Rational(num, den);
        return;
    }
    // leave at least 1 for each remaining part
    for (long v = 1; v <= remaining_cap - (r - j - 1); ++v) {
        parts[j] = v;
        enumerate(idx, j + 1, remaining_cap - v, parts, acc);
    }
}
} // namespace

LCoefficients l_coeffs_bruteforce(const CompositeIndex& idx, long N)
{
    const int r = idx.depth();
    if (r < 1)
        throw std::invalid_argument("l_coeffs_bruteforce needs depth >= 1");
    if (r > 4 || N > 200 || N < 1)
        throw std::invalid_argument("l_coeffs_bruteforce: size beyond guard (r <= 4, N <= 200)");
    std::vector<Rational> acc(static_cast<std::size_t>(N), Rational(0));
    std::vector<long> parts(static_cast<std::size_t>(r));
    enumerate(idx, 0, N, parts, acc);
    return LCoefficients{idx, N, std::move(acc)};
}

namespace {
struct RealCoeffs {
    long N = 0;
    int precision = -1;
    std::vector<Real> c;
};

std::mutex g_cache_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, RealCoeffs> g_cache;

// Real coefficients c(1..N), memoized per (ks, alphas).
std::vector<Real> real_coeffs(const CompositeIndex& idx, long N)
{
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    RealCoeffs& rc = g_cache[{idx.ks, idx.alphas}];
    if (rc.N < N || rc.precision != working_digits()) {
        long M = std::max(N, rc.precision == working_digits() ? 2 * rc.N : N);
        LCoefficients lc = l_coeffs_dp(idx, M);
        rc.c.clear();
        for (const auto& q : lc.coeffs)
            rc.c.push_back(to_real(q));
        rc.N = M;
        rc.precision = working_digits();
    }
    return std::vector<Real>(rc.c.begin(), rc.c.begin() + N);
}
} // namespace

SeriesValue l_eval(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b)
{
    SeriesValue out;
    if (idx.depth() == 0) {
        out.value = pow(tau, idx.t);
        return out;
    }
    const int K = std::accumulate(idx.ks.begin(), idx.ks.end(), 0);
    const int A = std::accumulate(idx.alphas.begin(), idx.alphas.end(), 0);
    const double y = static_cast<double>(tau.im);
    // c(m) <= 2^r m^{2K}
    const double log_c = idx.depth() * std::log(2.0);
    const long N = std::max(1L, poly_exp_cutoff(2.0 * K, y, log_c, b));
    const std::vector<Real> c = real_coeffs(idx, N);

    Complex q = exp(Complex(-two_pi() * tau.im, two_pi() * tau.re));
    Complex qm = q, s;
    for (long m = 1; m <= N; ++m) {
        s += qm * c[static_cast<std::size_t>(m - 1)];
        qm *= q;
    }
    Complex pref = two_pi_i_pow(-A) * pow(tau, idx.t);
    out.value = pref * s;
    out.terms = N;
    out.tail_bound = poly_exp_tail(2.0 * K, y, log_c, N) * static_cast<double>(abs(pref));
    return out;
}

} // namespace emel

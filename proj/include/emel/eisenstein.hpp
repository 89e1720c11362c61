// Divisor sums, Bernoulli numbers and Hecke-normalized Eisenstein series
//   E_{2k} = -b_{2k}/(4k) + sum_{n>0} sigma_{2k-1}(n) q^n.
#pragma once

#include "emel/algebra.hpp"
#include "emel/numeric.hpp"

namespace emel {

struct TruncationBudget {
    double eps = 0;   // 0 means 10^-(P+5)
    long n_max = 200000;

    double target() const;
};

TruncationBudget default_budget();

struct SeriesValue {
    Complex value;
    long terms = 0;
    double tail_bound = 0;
};

// Smallest N with sum_{n>N} exp(log_c) n^power e^{-2 pi y n} < eps.
// Throws std::runtime_error when N would exceed n_max.
long poly_exp_cutoff(double power, double y, double log_c, const TruncationBudget& b);
// The certified value of that tail sum for a given N (+inf if not decreasing yet).
double poly_exp_tail(double power, double y, double log_c, long N);

Integer divisor_sigma(int w, long n);
// sigma_w(n) as a working-precision real, from a shared sieve.
const Real& sigma_real(int w, long n);

Rational bernoulli(int m);
Rational eis_constant(int k); // -b_{2k}/(4k)

SeriesValue eis_cusp_eval(int k, const Complex& tau, const TruncationBudget& b = default_budget());
// E_{2k}(tau) = constant + cusp part
SeriesValue eis_eval(int k, const Complex& tau, const TruncationBudget& b = default_budget());
// Cusp part at any tau in the upper half plane; applies tau -> -1/tau once when |tau| < 1.
Complex eis_cusp_eval_modular(int k, const Complex& tau, const TruncationBudget& b = default_budget());

// Startup check: |E_6(i)| must vanish to working precision. Returns |E_6(i)|.
Real precision_selftest();

} // namespace emel

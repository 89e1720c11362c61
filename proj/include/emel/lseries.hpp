// Multiple Eisenstein L-series
//   L^{(t)}(ks; alphas)(tau) = (2 pi i)^{-sum alpha} tau^t sum_m c(m) q^m,
//   c(m) = sum_{n_1+..+n_r=m} prod sigma_{2k_i-1}(n_i) / prod (n_i+..+n_r)^{alpha_i}.
#pragma once

#include <vector>

#include "emel/algebra.hpp"
#include "emel/eisenstein.hpp"

namespace emel {

struct LCoefficients {
    CompositeIndex index;
    long N = 0;
    std::vector<Rational> coeffs; // coeffs[m-1] = c(m), m = 1..N
};

LCoefficients l_coeffs_dp(const CompositeIndex& idx, long N);
// Literal r-fold enumeration; refuses r > 4 or N > 200.
LCoefficients l_coeffs_bruteforce(const CompositeIndex& idx, long N);

SeriesValue l_eval(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b = default_budget());

} // namespace emel

// Independent reference values: Riemann zeta at integers, the regularized Mellin
// transform of E^0_{2k}, and direct quadrature of convergent T-integrals.
#pragma once

#include "emel/integrals.hpp"
#include "emel/numeric.hpp"

namespace emel {

// zeta(n) for any integer n != 1 (boost for n >= 2, Bernoulli numbers for n <= 0).
Real zeta_int(int n);
// zeta'(-2j), j >= 1
Real zeta_prime_neg_even(int j);

// Lambda(m) = int_0^{i inf} E^0_{2k}(tau) tau^{m-1} d tau, analytically continued:
//   i^m Gamma(m) (2 pi)^{-m} zeta(m) zeta(m-2k+1),  m not in {0, 2k}.
Complex mellin_cusp(int k, long m);
// T(E^0_{2k}; m) = Lambda(m) - R(E^0_{2k}; m), R taken from quadrature.
Complex T_cusp_mellin(int k, long m, const TruncationBudget& b = default_budget());

// R(E^0_{2k}; m) by Gauss-Legendre from i upward.
Complex R_cusp_quad(int k, long m, const TruncationBudget& b = default_budget());

// int_0^i E^0_{2k}(tau) tau^{m-1} d tau for m > 2k, by quadrature over y in (0, 1].
QuadResult T_cusp_direct(int k, long m, double tol = 0, const TruncationBudget& b = default_budget());

} // namespace emel

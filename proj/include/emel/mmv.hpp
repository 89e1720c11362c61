// Length <= 2 multiple modular values of Eisenstein series at the base point i.
//
//   T(f_1..f_r; a_1..a_r) = int_{0<t_1<..<t_r<i}     prod f_j(t_j) t_j^{a_j} dt_j/t_j
//   R(f_1..f_r; a_1..a_r) = int_{i<t_1<..<t_r<i inf} prod f_j(t_j) t_j^{a_j} dt_j/t_j
//
// with f_j either the cusp part E^0_{2k} or the constant E^inf_{2k} = -b_{2k}/(4k).
// Divergent T-integrals are regularized through tau -> -1/tau.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "emel/algebra.hpp"
#include "emel/eisenstein.hpp"

namespace emel {

// Raised for exponent sets hitting a logarithmic (unregularized) case.
class SingularExponent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// E^inf_{2k} i^alpha / alpha
Complex T_const_closed(int k, long alpha);
// T(E^inf_{2k1}, E^inf_{2k2}; b1, b2) = E1 E2 i^{b1+b2} / (b1 (b1+b2))
Complex T_const_const(int k1, int k2, long b1, long b2);

// R(E^0_{2k}; alpha) for any integer alpha.
Complex R_cusp(int k, long alpha, const TruncationBudget& b = default_budget());

struct MmvFactor {
    bool cusp = true;
    int k = 2;

    static MmvFactor cusp_part(int k) { return {true, k}; }
    static MmvFactor const_part(int k) { return {false, k}; }
};

// R for depth <= 2; rejects configurations that diverge at i inf.
Complex R_iter(const std::vector<MmvFactor>& factors, const std::vector<long>& alphas,
               const TruncationBudget& b = default_budget());

// Regularized T(E^0_{2k}; m) = (-1)^m [R(E^0; 2k-m) - T(E^inf; 2k-m)] - T(E^inf; m), m not in {0, 2k}.
Complex T_cusp_reg(int k, long m, const TruncationBudget& b = default_budget());

enum class MixedKind { CuspThenConst, ConstThenCusp };

// CuspThenConst: T(E^0_{kc}, E^inf_{kk}; alpha, beta) = (E/beta) [i^beta T(E^0; alpha) - T(E^0; alpha+beta)]
// ConstThenCusp: T(E^inf_{kk}, E^0_{kc}; beta, alpha) = (E/beta) T(E^0; alpha+beta)
Complex T_mixed_reduce(MixedKind kind, int k_cusp, int k_const, long alpha_cusp, long beta,
                       const TruncationBudget& b = default_budget());

// Coefficient selector: X^{2k-alpha-1} Y^{alpha-1} per factor, 1 <= alpha <= 2k-1.
struct MonomialCoefficientRequest {
    std::vector<int> ks;
    std::vector<int> alphas;
};

// Coefficient of P(X,Y) (x) E_{2k_1}..E_{2k_r} in the iterated Eichler integral I(i; i inf).
Complex I_coeff(const MonomialCoefficientRequest& req, const TruncationBudget& b = default_budget());
// Same coefficient in the cocycle C_S.
Complex S_coeff(const MonomialCoefficientRequest& req, const TruncationBudget& b = default_budget());

// Regularized Int(...)(0) for depth 1 (alpha not in {0, 2k}) or depth 2
// (1 <= alpha_i <= 2k_i - 1, alpha_1 + alpha_2 not in {2k_1, 2k_2}).
Complex int0_reg(const std::vector<int>& ks, const std::vector<long>& alphas,
                 const TruncationBudget& b = default_budget());

// Homogeneous polynomial of degree d in X, Y; coeff[j] multiplies X^j Y^{d-j}.
template <class T>
struct BiPolynomial {
    int degree = 0;
    std::vector<T> coeff;

    const T& at(int xpow, int ypow) const
    {
        if (xpow < 0 || ypow < 0 || xpow + ypow != degree)
            throw std::out_of_range("monomial outside the homogeneous degree");
        return coeff[static_cast<std::size_t>(xpow)];
    }
};

// e^0_{2k}(S) = (2k-2)!/2 sum_{i=1}^{k-1} b_{2i}/(2i)! b_{2k-2i}/(2k-2i)! X^{2i-1} Y^{2k-2i-1}
BiPolynomial<Rational> e0_cocycle_S(int k);

// zeta(s), s odd >= 3, by Euler-Maclaurin with Bernoulli corrections.
Real zeta_odd(int s, const TruncationBudget& b = default_budget());

// ---- identities ----

// Right side of the first inversion formula, given T(E^0_{2k}; 2k-alpha) from any source:
//   (-1)^alpha [T(E^0; 2k-alpha) + T(E^inf; 2k-alpha)] + T(E^inf; alpha)
Complex fund1_rhs(int k, long alpha, const Complex& t_cusp_dual);

// Right side of the second inversion formula for R(E^inf_{2k1}, E^0_{2k2}; a1, a2).
// printed = true uses the last-term sign as it appears in the source text.
Complex fund2_rhs(int k1, int k2, long a1, long a2, bool printed = false,
                  const TruncationBudget& b = default_budget());
// R(E^inf_{2k1}, E^0_{2k2}; a1, a2) = E1/a1 [R(E^0_2; a1+a2) - i^{a1} R(E^0_2; a2)]
Complex R_const_cusp(int k1, int k2, long a1, long a2, const TruncationBudget& b = default_budget());

// Haberland: (2 pi i)^{2k-1} e0 coefficient + (2k-2)!/2 zeta(2k-1) (delta_{a,1} - delta_{a,2k-1})
Complex haberland_rhs(int k, int alpha, const TruncationBudget& b = default_budget());

enum class FirstDiffVariant {
    Rederived, // E^inf with the -b/(4k) sign, no constant term
    Printed    // Bernoulli coefficients and constant term exactly as printed
};

// Right side of S(2k1,2k2; a1,a2) - S(2k2,2k1; a2,a1).
Complex first_difference_rhs(int k1, int k2, int a1, int a2, FirstDiffVariant v,
                             const TruncationBudget& b = default_budget());

void clear_mmv_cache();

} // namespace emel

// Exact rewrite maps: shuffle, stuffle, and the conversions between
// tau^j Int(...) and L^{(t)}(...) generators.
#pragma once

#include <utility>
#include <vector>

#include "emel/algebra.hpp"

namespace emel {

using Letter = std::pair<int, int>; // (k, alpha)
using Word = std::vector<Letter>;

Word word_of(const Generator& g);

// All (|u|,|v|)-shuffles, coefficient 1 each, as TauIntegral generators (tau power 0).
// raw_terms receives the count before aggregation, C(|u|+|v|, |u|).
FormalSum shuffle_product(const Word& u, const Word& v, long* raw_terms = nullptr);
// tau^a Int(u) * tau^b Int(v)
FormalSum shuffle_product(const Generator& u, const Generator& v);

// tau^j Int(ks; alphas) as a combination of L-series:
//   sum (-1)^{I_1} prod_j (A_j - I_{j+1} - 1)!/(A_j - I_j)!  L^{(A_1 - I_1 + j)}(ks; i_1..i_r),
//   A_j = alpha_j + .. + alpha_r, I_j = i_j + .. + i_r, 1 <= i_j <= A_j - I_{j+1}.
FormalSum int_to_l(const Generator& g);
FormalSum int_to_l(const CompositeIndex& idx); // t taken as the tau power
FormalSum int_to_l(const FormalSum& s);

// L^{(t)}(ks; alphas) as a combination of tau^j Int:
//   (-1)^{sum alpha}/prod (alpha_j-1)! sum_{0<=i_j<alpha_j} (-1)^{sum i} prod C(alpha_j-1, i_j)
//   tau^{t+i_1} Int(ks; alpha_j - i_j + i_{j+1}),  i_{r+1} = 0.
FormalSum l_to_int(const Generator& g);
FormalSum l_to_int(const FormalSum& s);

// Quasi-shuffle product of two L^{(0)} generators via the partial-fraction identity
//   1/(M^a N^b) = sum_{c+d=a+b} C(c-1,a-1)/((M+N)^c N^d) + C(c-1,b-1)/((M+N)^c M^d).
FormalSum stuffle_product(const Generator& g1, const Generator& g2);

} // namespace emel

// Iterated Eisenstein tau-integrals
//   Int(ks; alphas)(tau) = int_{tau<t_1<..<t_r<i inf} prod E^0_{2k_j}(t_j) t_j^{alpha_j-1} dt_j
// in closed form (ExpPoly) and by nested Gauss-Legendre quadrature.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "emel/algebra.hpp"
#include "emel/eisenstein.hpp"

namespace emel {

// sum_n P_n(t) e^{2 pi i n t}, n >= 0, P_n with complex coefficients (low degree first).
class ExpPoly {
public:
    using Poly = std::vector<Complex>;
    using Map = std::map<long, Poly>;

    ExpPoly() = default;
    static ExpPoly constant(const Complex& c);
    // E^0_{2k} truncated to frequencies 1..N
    static ExpPoly cusp_series(int k, long N);

    const Map& terms() const { return terms_; }
    Map& terms() { return terms_; }
    bool empty() const { return terms_.empty(); }
    long max_frequency() const;

    ExpPoly mul_tpow(int m) const;
    // product with frequencies above n_cut dropped
    ExpPoly mul(const ExpPoly& o, long n_cut) const;
    ExpPoly derivative() const;
    Complex eval(const Complex& t) const;

    // lines "n; c0, c1, ..."
    std::string dump(int digits = 0) const;

private:
    Map terms_;
};

// int_a^{i inf} e^{2 pi i n t} t^{alpha-1} dt
Complex elem_exp_tail(long n, int alpha, const Complex& a);

// g(t) = int_t^{i inf} f(s) s^{alpha-1} ds; f must have no frequency-0 part.
ExpPoly exppoly_tail_integral(const ExpPoly& f, int alpha);

// Frequency cutoff certifying |Int - truncated| < eps at tau.
long int_frequency_cutoff(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b);

SeriesValue int_eval(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b = default_budget());
// The ExpPoly of Int(ks; alphas)(t) itself, truncated at n_cut.
ExpPoly int_exppoly(const CompositeIndex& idx, long n_cut);

// ---- quadrature oracle ----

// factor f_j: cusp part E^0_{2k} (is_cusp) or a complex constant
struct Factor {
    bool is_cusp = true;
    int k = 2;
    Complex value;

    static Factor cusp(int k) { return Factor{true, k, Complex()}; }
    static Factor constant(const Complex& c) { return Factor{false, 0, c}; }
};

struct PathSpec {
    Complex start;
    // Im of the top of the truncated path; 0 lets the oracle choose from the budget
    double height_cap = 0;
    // finite segment start -> end (vertical) instead of start -> i inf
    bool finite = false;
    Complex end;
};

struct QuadResult {
    Complex value;
    double error_estimate = 0;
    double tail_bound = 0;
    int panels = 0;
};

// Nested adaptive Gauss-Legendre over start < t_1 < .. < t_r (r <= 2) on a vertical path.
QuadResult quad_oracle(const std::vector<Factor>& factors, const std::vector<int>& alphas,
                       const PathSpec& path, double tol = 0, const TruncationBudget& b = default_budget());

// Adaptive Gauss-Legendre of a complex function over a real interval.
QuadResult integrate_real_line(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                               double tol, int max_depth = 40);

} // namespace emel

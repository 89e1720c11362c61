// Exact rationals, composite indices and formal sums of generators.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <string>
#include <vector>

#include "emel/numeric.hpp"

namespace emel {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(long n);
Integer binomial(long n, long k); // 0 outside 0 <= k <= n
// a!/b! for a >= b >= 0, as an exact product
Integer falling_ratio(long a, long b);

std::string to_string(const Rational& q); // "p/q", or "p" when q = 1
Rational parse_rational(const std::string& s);
Real to_real(const Rational& q);
Real to_real(const Integer& z);

// (k_1..k_r; alpha_1..alpha_r; t), k_i half-weights.
struct CompositeIndex {
    std::vector<int> ks;
    std::vector<int> alphas;
    int t = 0;

    int depth() const { return static_cast<int>(ks.size()); }
    int upper_weight() const;
    int lower_weight() const;

    auto operator<=>(const CompositeIndex&) const = default;
};

// Throws std::invalid_argument on k_i < 2, alpha_i < 1, t < 0 or length mismatch.
CompositeIndex make_index(std::vector<int> ks, std::vector<int> alphas, int t = 0);

enum class Kind { LSeries = 0, TauIntegral = 1 };

// LSeries: L^{(tpow)}(ks; alphas). TauIntegral: tau^tpow * Int(ks; alphas).
struct Generator {
    Kind kind = Kind::LSeries;
    std::vector<int> ks;
    std::vector<int> alphas;
    int tpow = 0;

    int depth() const { return static_cast<int>(ks.size()); }
    int upper_weight() const;
    int lower_weight() const;
    CompositeIndex index() const;

    auto operator<=>(const Generator&) const = default;
};

Generator lseries(const CompositeIndex& idx);
Generator lseries(std::vector<int> ks, std::vector<int> alphas, int t = 0);
Generator tau_integral(std::vector<int> ks, std::vector<int> alphas, int tau_power = 0);

// "L{ks=[2,3];alphas=[1,2];t=0}" / "I{ks=[2,3];alphas=[1,2];taupow=1}"
std::string to_string(const Generator& g);
Generator parse_generator(const std::string& s);

class FormalSum {
public:
    using Map = std::map<Generator, Rational>;

    FormalSum() = default;
    explicit FormalSum(const Generator& g, const Rational& c = Rational(1));

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Generator& g) const;

    void add(const Generator& g, const Rational& c);
    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    FormalSum& operator*=(const Rational& c);

    int max_depth() const;
    int max_upper_weight() const;
    int max_lower_weight() const;

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

FormalSum operator+(FormalSum a, const FormalSum& b);
FormalSum operator-(FormalSum a, const FormalSum& b);
FormalSum operator*(const Rational& c, FormalSum a);

// a + c*b, zero coefficients pruned
FormalSum fs_combine(const FormalSum& a, const FormalSum& b, const Rational& c);
bool fs_equal(const FormalSum& a, const FormalSum& b);

// One term per line: "<p/q> * <generator>"; empty sum prints "0".
std::string to_string(const FormalSum& s);

} // namespace emel

// Working-precision real and complex scalars.
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace emel {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Number of extra decimal digits carried beyond the requested precision.
inline constexpr int guard_digits = 20;

// Sets the requested precision P (decimal digits). Values created afterwards
// carry P + guard_digits digits. Call before any other engine function.
void set_digits(int digits);
int digits();
int working_digits();

const Real& pi();
const Real& two_pi();

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Complex& o);
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z);
Complex exp(const Complex& z);
// z^n for any integer n (z != 0 when n < 0).
Complex pow(const Complex& z, long n);
// i^n, exact.
Complex ipow(long n);
inline Complex I() { return Complex(Real(0), Real(1)); }
// (2 pi i)^n
Complex two_pi_i_pow(long n);

// "a+bi" with the requested number of significant digits (default: P).
std::string to_string(const Real& x, int digits = 0);
std::string to_string(const Complex& z, int digits = 0);
// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i"; throws std::invalid_argument.
Complex parse_complex(const std::string& s);
Real parse_real(const std::string& s);

} // namespace emel

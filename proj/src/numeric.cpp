#include "emel/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace emel {

namespace {
int g_digits = 40;

struct Constants {
    int precision = -1;
    Real pi;
    Real two_pi;
};

Constants& constants()
{
    static Constants c;
    if (c.precision != working_digits()) {
        c.pi = boost::math::constants::pi<Real>();
        c.two_pi = 2 * c.pi;
        c.precision = working_digits();
    }
    return c;
}
} // namespace

void set_digits(int d)
{
    if (d < 10)
        throw std::invalid_argument("precision must be at least 10 digits");
    g_digits = d;
    Real::default_precision(static_cast<unsigned>(d + guard_digits));
}

int digits() { return g_digits; }

namespace {
// Brings the default MPFR precision in line with g_digits before any Real is built.
const bool g_precision_init = (set_digits(40), true);
} // namespace
int working_digits() { return g_digits + guard_digits; }

const Real& pi() { return constants().pi; }
const Real& two_pi() { return constants().two_pi; }

Complex& Complex::operator/=(const Complex& o)
{
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex exp(const Complex& z)
{
    Real m = boost::multiprecision::exp(z.re);
    return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex pow(const Complex& z, long n)
{
    if (n < 0)
        return Complex(1) / pow(z, -n);
    Complex r(1), b = z;
    while (n) {
        if (n & 1)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

Complex ipow(long n)
{
    switch (((n % 4) + 4) % 4) {
    case 0: return Complex(1);
    case 1: return Complex(Real(0), Real(1));
    case 2: return Complex(-1);
    default: return Complex(Real(0), Real(-1));
    }
}

Complex two_pi_i_pow(long n)
{
    Real m = boost::multiprecision::pow(two_pi(), n);
    return ipow(n) * m;
}

std::string to_string(const Real& x, int d)
{
    if (d <= 0)
        d = g_digits;
    std::ostringstream os;
    os << std::scientific << std::setprecision(d - 1) << x;
    return os.str();
}

std::string to_string(const Complex& z, int d)
{
    std::string r = to_string(z.re, d);
    std::string i = to_string(z.im, d);
    if (i.empty() || i[0] != '-')
        i = "+" + i;
    return r + i + "i";
}

Real parse_real(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty real literal");
    if (auto slash = s.find('/'); slash != std::string::npos)
        return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-'))
            throw std::invalid_argument("bad real literal: " + s);
    return Real(s);
}

Complex parse_complex(const std::string& in)
{
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i')
        return Complex(parse_real(s));
    s.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 0;) {
        if ((s[k] == '+' || s[k] == '-') && !(k > 0 && (s[k - 1] == 'e' || s[k - 1] == 'E'))) {
            cut = k;
            break;
        }
    }
    std::string re = (cut == std::string::npos || cut == 0) ? "" : s.substr(0, cut);
    std::string im = (cut == std::string::npos) ? s : s.substr(cut);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    if (im[0] == '+')
        im.erase(0, 1);
    return Complex(re.empty() ? Real(0) : parse_real(re), parse_real(im));
}

} // namespace emel

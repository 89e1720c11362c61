#include "emel/integrals.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace emel {

namespace {

bool is_zero(const ExpPoly::Poly& p)
{
    for (const auto& c : p)
        if (c.re != 0 || c.im != 0)
            return false;
    return true;
}

void poly_add_mul(ExpPoly::Poly& acc, const ExpPoly::Poly& a, const ExpPoly::Poly& b)
{
    if (a.empty() || b.empty())
        return;
    if (acc.size() < a.size() + b.size() - 1)
        acc.resize(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] += a[i] * b[j];
}

ExpPoly::Poly poly_derivative(const ExpPoly::Poly& p)
{
    ExpPoly::Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Real(static_cast<long>(i)));
    return d;
}

Complex poly_eval(const ExpPoly::Poly& p, const Complex& t)
{
    Complex v;
    for (std::size_t i = p.size(); i-- > 0;)
        v = v * t + p[i];
    return v;
}

Complex two_pi_i_n(long n) { return Complex(Real(0), two_pi() * n); }

Complex q_of(const Complex& t) { return exp(Complex(-two_pi() * t.im, two_pi() * t.re)); }

} // namespace

ExpPoly ExpPoly::constant(const Complex& c)
{
    ExpPoly e;
    e.terms_[0] = Poly{c};
    return e;
}

ExpPoly ExpPoly::cusp_series(int k, long N)
{
    ExpPoly e;
    for (long n = 1; n <= N; ++n)
        e.terms_[n] = Poly{Complex(sigma_real(2 * k - 1, n))};
    return e;
}

long ExpPoly::max_frequency() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

ExpPoly ExpPoly::mul_tpow(int m) const
{
    if (m < 0)
        throw std::invalid_argument("mul_tpow needs m >= 0");
    ExpPoly e;
    for (const auto& [n, p] : terms_) {
        Poly q(static_cast<std::size_t>(m), Complex());
        q.insert(q.end(), p.begin(), p.end());
        e.terms_[n] = std::move(q);
    }
    return e;
}

ExpPoly ExpPoly::mul(const ExpPoly& o, long n_cut) const
{
    ExpPoly e;
    for (const auto& [n1, p1] : terms_)
        for (const auto& [n2, p2] : o.terms_) {
            if (n1 + n2 > n_cut)
                break;
            poly_add_mul(e.terms_[n1 + n2], p1, p2);
        }
    return e;
}

ExpPoly ExpPoly::derivative() const
{
    ExpPoly e;
    for (const auto& [n, p] : terms_) {
        Poly d = poly_derivative(p);
        d.resize(std::max(d.size(), p.size()));
        Complex c = two_pi_i_n(n);
        if (n != 0)
            for (std::size_t i = 0; i < p.size(); ++i)
                d[i] += c * p[i];
        e.terms_[n] = std::move(d);
    }
    return e;
}

Complex ExpPoly::eval(const Complex& t) const
{
    Complex q = q_of(t);
    Complex qn(1), v;
    long cur = 0;
    for (const auto& [n, p] : terms_) {
        qn *= pow(q, n - cur);
        cur = n;
        v += poly_eval(p, t) * qn;
    }
    return v;
}

std::string ExpPoly::dump(int digits) const
{
    std::string out;
    for (const auto& [n, p] : terms_) {
        out += std::to_string(n) + ";";
        for (std::size_t i = 0; i < p.size(); ++i)
            out += (i ? ", " : " ") + to_string(p[i], digits);
        out += "\n";
    }
    return out;
}

Complex elem_exp_tail(long n, int alpha, const Complex& a)
{
    if (n < 1 || alpha < 1)
        throw std::invalid_argument("elem_exp_tail needs n >= 1, alpha >= 1");
    Complex c = two_pi_i_n(n);
    Complex cinv = Complex(1) / c;
    Complex s, cp = cinv;
    Real ratio = 1; // (alpha-1)!/(alpha-1-j)!
    for (int j = 0; j < alpha; ++j) {
        Complex term = cp * pow(a, alpha - 1 - j) * ratio;
        if (j % 2)
            s -= term;
        else
            s += term;
        ratio *= (alpha - 1 - j);
        cp *= cinv;
    }
    return -exp(c * a) * s;
}

ExpPoly exppoly_tail_integral(const ExpPoly& f, int alpha)
{
    if (alpha < 1)
        throw std::invalid_argument("exppoly_tail_integral needs alpha >= 1");
    ExpPoly g;
    for (const auto& [n, p] : f.terms()) {
        if (n == 0) {
            if (!is_zero(p))
                throw std::domain_error("tail integral diverges: nonzero frequency-0 part");
            continue;
        }
        ExpPoly::Poly q(static_cast<std::size_t>(alpha - 1), Complex());
        q.insert(q.end(), p.begin(), p.end());
        Complex cinv = Complex(1) / two_pi_i_n(n);
        Complex factor = -cinv;
        ExpPoly::Poly out(q.size(), Complex());
        ExpPoly::Poly cur = q;
        while (!cur.empty()) {
            for (std::size_t i = 0; i < cur.size(); ++i)
                out[i] += factor * cur[i];
            cur = poly_derivative(cur);
            factor *= -cinv;
        }
        g.terms()[n] = std::move(out);
    }
    return g;
}

long int_frequency_cutoff(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b)
{
    const int r = idx.depth();
    const int K = std::accumulate(idx.ks.begin(), idx.ks.end(), 0);
    const int A = std::accumulate(idx.alphas.begin(), idx.alphas.end(), 0);
    // frequency-m coefficient <= (A+1)! 2^{A+r} max(1,|tau|)^A m^{2K}
    const double rad = std::max(1.0, static_cast<double>(abs(tau)));
    const double log_c = std::lgamma(A + 2.0) + (A + r) * std::log(2.0) + A * std::log(rad);
    return std::max<long>(r, poly_exp_cutoff(2.0 * K, static_cast<double>(tau.im), log_c, b));
}

ExpPoly int_exppoly(const CompositeIndex& idx, long n_cut)
{
    ExpPoly g = ExpPoly::constant(Complex(1));
    for (int j = idx.depth() - 1; j >= 0; --j) {
        ExpPoly f = ExpPoly::cusp_series(idx.ks[j], n_cut).mul(g, n_cut);
        g = exppoly_tail_integral(f, idx.alphas[j]);
    }
    return g;
}

SeriesValue int_eval(const CompositeIndex& idx, const Complex& tau, const TruncationBudget& b)
{
    SeriesValue out;
    if (idx.depth() == 0) {
        out.value = Complex(1);
        return out;
    }
    if (idx.depth() > 6)
        throw std::invalid_argument("int_eval supports depth <= 6");
    if (!(tau.im > 0))
        throw std::invalid_argument("int_eval needs Im(tau) > 0");
    long N = int_frequency_cutoff(idx, tau, b);
    out.value = int_exppoly(idx, N).eval(tau);
    out.terms = N;
    const int K = std::accumulate(idx.ks.begin(), idx.ks.end(), 0);
    const int A = std::accumulate(idx.alphas.begin(), idx.alphas.end(), 0);
    const double rad = std::max(1.0, static_cast<double>(abs(tau)));
    out.tail_bound = poly_exp_tail(2.0 * K, static_cast<double>(tau.im),
                                   std::lgamma(A + 2.0) + (A + idx.depth()) * std::log(2.0) + A * std::log(rad), N);
    return out;
}

// ---------------------------------------------------------------- quadrature

namespace {

struct Rule {
    std::vector<Real> x; // nodes on [-1, 1]
    std::vector<Real> w;
};

template <unsigned N>
Rule make_rule()
{
    using G = boost::math::quadrature::gauss<Real, N>;
    const auto& a = G::abscissa();
    const auto& wt = G::weights();
    Rule r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            r.x.push_back(a[i]);
            r.w.push_back(wt[i]);
            continue;
        }
        r.x.push_back(a[i]);
        r.w.push_back(wt[i]);
        r.x.push_back(-a[i]);
        r.w.push_back(wt[i]);
    }
    return r;
}

const Rule& rule(int n)
{
    static int precision = -1;
    static Rule r20, r30;
    if (precision != working_digits()) {
        r20 = make_rule<20>();
        r30 = make_rule<30>();
        precision = working_digits();
    }
    return n == 20 ? r20 : r30;
}

template <class F>
Complex gl(const F& f, const Real& a, const Real& b, const Rule& r)
{
    Real h = (b - a) / 2, m = (a + b) / 2;
    Complex s;
    for (std::size_t i = 0; i < r.x.size(); ++i)
        s += f(m + h * r.x[i]) * r.w[i];
    return s * h;
}

// sum_{n>=1} n^{2k} e^{-2 pi n y}
double cusp_majorant(int k, double y)
{
    double s = 0;
    for (int n = 1; n < 100000; ++n) {
        double t = std::exp(2.0 * k * std::log(n) - 2 * std::numbers::pi * n * y);
        s += t;
        if (n > 2 * k && t < 1e-300)
            break;
    }
    return s;
}

} // namespace

QuadResult integrate_real_line(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                               double tol, int max_depth)
{
    QuadResult res;
    const Real total = b - a;
    struct Job {
        Real a, b;
        int depth;
    };
    std::vector<Job> stack{{a, b, 0}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        Complex g20 = gl(f, j.a, j.b, rule(20));
        Complex g30 = gl(f, j.a, j.b, rule(30));
        double err = static_cast<double>(abs(g30 - g20));
        double local = tol * static_cast<double>((j.b - j.a) / total);
        if (err <= local || j.depth >= max_depth) {
            res.value += g30;
            res.error_estimate += err;
            ++res.panels;
            continue;
        }
        Real mid = (j.a + j.b) / 2;
        stack.push_back({mid, j.b, j.depth + 1});
        stack.push_back({j.a, mid, j.depth + 1});
    }
    return res;
}

QuadResult quad_oracle(const std::vector<Factor>& factors, const std::vector<int>& alphas, const PathSpec& path,
                       double tol, const TruncationBudget& b)
{
    const int r = static_cast<int>(factors.size());
    if (r < 1 || r > 2 || alphas.size() != factors.size())
        throw std::invalid_argument("quad_oracle supports depth 1 or 2");
    if (!path.finite && !factors.back().is_cusp)
        throw std::domain_error("quad_oracle: innermost factor must be a cusp part on an infinite path");
    if (!(path.start.im > 0))
        throw std::invalid_argument("quad_oracle: start must lie in the upper half plane");
    const double eps = b.target();
    if (tol <= 0)
        tol = std::max(eps, 1e-32);

    QuadResult res;
    Real U;
    if (path.finite) {
        if (path.end.re != path.start.re || !(path.end.im > path.start.im))
            throw std::invalid_argument("quad_oracle: finite path must be vertical and upward");
        U = path.end.im - path.start.im;
    } else {
        const int A = std::accumulate(alphas.begin(), alphas.end(), 0);
        const double y0 = static_cast<double>(path.start.im);
        const double r0 = static_cast<double>(abs(path.start));
        double cst = 1;
        for (int j = 0; j + 1 < r; ++j)
            cst *= factors[j].is_cusp ? std::max(1.0, cusp_majorant(factors[j].k, y0))
                                      : std::max(1.0, static_cast<double>(abs(factors[j].value)));
        auto bound = [&](double H) {
            return std::pow(r0 + H + 1, A + 2) * cst * cusp_majorant(factors.back().k, y0 + H);
        };
        double H = path.height_cap > y0 ? path.height_cap - y0 : 1.0;
        if (path.height_cap <= y0)
            while (bound(H) > eps / 10)
                H += 0.5;
        U = Real(H);
        res.tail_bound = bound(H);
    }

    const Complex i = I();
    auto factor_at = [&](int j, const Complex& t) -> Complex {
        const Factor& f = factors[static_cast<std::size_t>(j)];
        Complex v = f.is_cusp ? eis_cusp_eval(f.k, t, b).value : f.value;
        return v * pow(t, alphas[static_cast<std::size_t>(j)] - 1) * i;
    };
    auto tau_at = [&](const Real& u) { return Complex(path.start.re, path.start.im + u); };

    auto run = [&](int n, int panels) -> Complex {
        const Rule& R = rule(n);
        Real h = U / panels;
        if (r == 1) {
            Complex s;
            for (int l = 0; l < panels; ++l)
                s += gl([&](const Real& u) { return factor_at(0, tau_at(u)); }, h * l, h * (l + 1), R);
            return s;
        }
        auto inner = [&](const Real& u) { return factor_at(1, tau_at(u)); };
        std::vector<Complex> suffix(static_cast<std::size_t>(panels) + 1);
        for (int l = panels - 1; l >= 0; --l)
            suffix[l] = suffix[l + 1] + gl(inner, h * l, h * (l + 1), R);
        Complex s;
        for (int l = 0; l < panels; ++l) {
            Real a = h * l, e = h * (l + 1);
            auto outer = [&](const Real& u) {
                Complex g = gl(inner, u, e, R) + suffix[l + 1];
                return factor_at(0, tau_at(u)) * g;
            };
            s += gl(outer, a, e, R);
        }
        return s;
    };

    int panels = std::max(1, static_cast<int>(std::ceil(static_cast<double>(U) / 0.5)));
    Complex prev = run(20, panels);
    for (int round = 0; round < 6; ++round) {
        Complex cur = run(30, 2 * panels);
        double err = static_cast<double>(abs(cur - prev));
        res.value = cur;
        res.error_estimate = err;
        res.panels = 2 * panels;
        if (err <= tol)
            return res;
        panels *= 2;
        prev = run(20, panels);
    }
    throw std::runtime_error("quad_oracle: tolerance unachievable within panel budget");
}

} // namespace emel

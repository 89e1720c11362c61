#include "emel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "emel/integrals.hpp"
#include "emel/lseries.hpp"
#include "emel/mmv.hpp"
#include "emel/oracles.hpp"
#include "emel/rewrite.hpp"

#ifndef EMEL_VERSION
#define EMEL_VERSION "0.0.0"
#endif

namespace emel {

using nlohmann::json;

const char* engine_version() { return EMEL_VERSION; }

ReportSummary VerificationReport::summary() const
{
    ReportSummary s;
    s.total = static_cast<long>(cases.size());
    for (const auto& c : cases)
        (c.pass ? s.passed : s.failed) += 1;
    s.skipped_singular = static_cast<long>(skipped.size());
    return s;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"roundtrip", "shuffle", "stuffle", "deriv", "fund",
                                                "haberland", "symmetry", "firstdiff", "oracle-cross",
                                                "regularization"};
    return names;
}

namespace {

struct Ctx {
    VerificationReport& rep;
    TruncationBudget budget;
    bool full;
    int digits;
    bool fault;

    std::string fmt(const Complex& z) const { return to_string(z, digits); }

    void add(std::string id, json params, const Complex& lhs, const Complex& rhs, double tol, std::string notes = {})
    {
        CaseResult c;
        c.id = std::move(id);
        c.parameters = std::move(params);
        c.lhs = fmt(lhs);
        c.rhs = fmt(rhs);
        c.abs_err = static_cast<double>(abs(lhs - rhs));
        c.tol = tol;
        c.pass = c.abs_err <= c.tol;
        c.notes = std::move(notes);
        rep.cases.push_back(std::move(c));
    }

    void add_exact(std::string id, json params, std::string lhs, std::string rhs, bool equal, std::string notes = {})
    {
        CaseResult c;
        c.id = std::move(id);
        c.parameters = std::move(params);
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        c.abs_err = equal ? 0.0 : 1.0;
        c.tol = 0;
        c.pass = equal;
        c.notes = std::move(notes);
        rep.cases.push_back(std::move(c));
    }

    void skip(std::string id, json params, std::string reason)
    {
        rep.skipped.push_back({std::move(id), std::move(params), std::move(reason)});
    }

    // Runs body; a SingularExponent turns the case into a skipped one.
    void guarded(const std::string& id, const json& params, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const SingularExponent& e) {
            skip(id, params, e.what());
        }
    }
};

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

long sgn(long e) { return (e % 2) ? -1 : 1; }

// All tuples over `values` of length r.
std::vector<std::vector<int>> tuples(const std::vector<int>& values, int r)
{
    std::vector<std::vector<int>> out{{}};
    for (int j = 0; j < r; ++j) {
        std::vector<std::vector<int>> next;
        for (const auto& p : out)
            for (int v : values) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> range(int a, int b)
{
    std::vector<int> v;
    for (int i = a; i <= b; ++i)
        v.push_back(i);
    return v;
}

Complex eval_generator(const Generator& g, const Complex& tau, const TruncationBudget& b)
{
    if (g.kind == Kind::LSeries)
        return l_eval(g.index(), tau, b).value;
    return pow(tau, g.tpow) * int_eval(make_index(g.ks, g.alphas), tau, b).value;
}

Complex eval_sum(const FormalSum& s, const Complex& tau, const TruncationBudget& b)
{
    Complex v;
    for (const auto& [g, c] : s.terms())
        v += eval_generator(g, tau, b) * to_real(c);
    return v;
}

struct NamedTau {
    std::string name;
    Complex value;
};

NamedTau tau_i() { return {"i", I()}; }
NamedTau tau_2i() { return {"2i", Complex(Real(0), Real(2))}; }
NamedTau tau_third() { return {"1/3+i", Complex(Real(1) / 3, Real(1))}; }

// ---------------------------------------------------------------- roundtrip

void suite_roundtrip(Ctx& c)
{
    const int rmax = c.full ? 3 : 2;
    const int kmax = c.full ? 5 : 3;
    const int amax = c.full ? 4 : 3;
    const int tmax = c.full ? 2 : 1;
    for (int r = 0; r <= rmax; ++r)
        for (const auto& ks : tuples(range(2, kmax), r))
            for (const auto& as : tuples(range(1, amax), r))
                for (int t = 0; t <= tmax; ++t) {
                    json p{{"ks", ks}, {"alphas", as}, {"t", t}};
                    Generator l = lseries(ks, as, t);
                    FormalSum back = int_to_l(l_to_int(l));
                    c.add_exact("roundtrip/l2i2l/" + to_string(l), p, to_string(FormalSum(l)), to_string(back),
                                fs_equal(back, FormalSum(l)));
                    Generator g = tau_integral(ks, as, t);
                    FormalSum back2 = l_to_int(int_to_l(g));
                    c.add_exact("roundtrip/i2l2i/" + to_string(g), p, to_string(FormalSum(g)), to_string(back2),
                                fs_equal(back2, FormalSum(g)));
                }
    // numeric faithfulness of both conversions
    const std::vector<NamedTau> taus = c.full ? std::vector<NamedTau>{tau_i(), tau_2i(), tau_third()}
                                              : std::vector<NamedTau>{tau_2i()};
    std::vector<std::pair<std::vector<int>, std::vector<int>>> idx{
        {{2}, {1}}, {{2}, {2}}, {{3}, {3}}, {{2, 2}, {1, 1}}, {{2, 3}, {1, 2}}, {{3, 2}, {2, 1}}};
    for (const auto& tau : taus)
        for (const auto& [ks, as] : idx) {
            json p{{"ks", ks}, {"alphas", as}, {"tau", tau.name}};
            Generator g = tau_integral(ks, as);
            c.add("roundtrip/numeric/int2l/" + to_string(g) + "@" + tau.name, p, eval_generator(g, tau.value, c.budget),
                  eval_sum(int_to_l(g), tau.value, c.budget), 1e-12);
            Generator l = lseries(ks, as, 0);
            c.add("roundtrip/numeric/l2int/" + to_string(l) + "@" + tau.name, p, eval_generator(l, tau.value, c.budget),
                  eval_sum(l_to_int(l), tau.value, c.budget), 1e-12);
        }
}

// ---------------------------------------------------------------- shuffle / stuffle

void suite_shuffle(Ctx& c)
{
    const std::vector<NamedTau> taus = c.full ? std::vector<NamedTau>{tau_i(), tau_2i()} : std::vector<NamedTau>{tau_i()};
    std::vector<Letter> letters;
    for (int k : {2, 3})
        for (int a : {1, 2})
            letters.emplace_back(k, a);
    for (const auto& tau : taus)
        for (const auto& u : letters)
            for (const auto& v : letters) {
                Generator gu = tau_integral({u.first}, {u.second}), gv = tau_integral({v.first}, {v.second});
                json p{{"left", to_string(gu)}, {"right", to_string(gv)}, {"tau", tau.name}};
                long raw = 0;
                FormalSum sh = shuffle_product(Word{u}, Word{v}, &raw);
                Complex lhs = eval_generator(gu, tau.value, c.budget) * eval_generator(gv, tau.value, c.budget);
                c.add("shuffle/" + to_string(gu) + "*" + to_string(gv) + "@" + tau.name, p, lhs,
                      eval_sum(sh, tau.value, c.budget), 1e-15, "raw terms " + std::to_string(raw));
            }
}

void suite_stuffle(Ctx& c)
{
    const int wmax = 5;
    std::vector<Generator> d1, d2;
    for (int k : {2, 3})
        for (int a = 1; a <= wmax - 1; ++a)
            d1.push_back(lseries({k}, {a}));
    for (const auto& ks : tuples({2, 3}, 2))
        for (const auto& as : tuples(range(1, wmax - 2), 2))
            d2.push_back(lseries(ks, as));
    std::vector<std::pair<Generator, Generator>> pairs;
    for (const auto& a : d1) {
        for (const auto& b : d1)
            pairs.emplace_back(a, b);
        for (const auto& b : d2)
            pairs.emplace_back(a, b);
    }
    if (c.full)
        for (const auto& a : d2)
            for (const auto& b : d2)
                pairs.emplace_back(a, b);
    const Complex tau = I();
    for (const auto& [a, b] : pairs) {
        const int w = a.lower_weight() + b.lower_weight();
        if (w > wmax)
            continue;
        json p{{"left", to_string(a)}, {"right", to_string(b)}, {"tau", "i"}};
        const std::string id = "stuffle/" + to_string(a) + "*" + to_string(b);
        FormalSum st = stuffle_product(a, b);
        bool weights_ok = true;
        for (const auto& [g, q] : st.terms())
            weights_ok = weights_ok && g.lower_weight() == w && g.upper_weight() == a.upper_weight() + b.upper_weight();
        c.add_exact(id + "/weights", p, "lower " + std::to_string(w), "every term", weights_ok);
        Complex lhs = eval_generator(a, tau, c.budget) * eval_generator(b, tau, c.budget);
        c.add(id, p, lhs, eval_sum(st, tau, c.budget), 1e-15);
    }
}

// ---------------------------------------------------------------- deriv

// f'(x) by the five-point central stencil along the real direction.
Complex central_diff(const std::function<Complex(const Complex&)>& f, const Complex& tau)
{
    const Real h("1e-6");
    Complex a = f(tau + Complex(2 * h)), b = f(tau + Complex(h)), d = f(tau - Complex(h)), e = f(tau - Complex(2 * h));
    return (b * Real(8) - d * Real(8) - a + e) / (Real(12) * h);
}

void suite_deriv(Ctx& c)
{
    const Complex tau(Real(0), Real(2));
    const int rmax = c.full ? 3 : 2;
    for (int r = 1; r <= rmax; ++r)
        for (const auto& ks : tuples({2, 3}, r))
            for (const auto& as : tuples({1, 2}, r)) {
                const std::vector<int> ts = c.full ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1};
                // L-series: d/dtau L^{(t)}(..;a1,..) = t L^{(t-1)} + L^{(t)}(..;a1-1,..), a1 >= 2
                std::vector<int> as_up = as;
                as_up[0] += 1;
                for (int t : ts) {
                    auto idx = make_index(ks, as_up, t);
                    json p{{"ks", ks}, {"alphas", as_up}, {"t", t}, {"tau", "2i"}};
                    auto idx0 = make_index(ks, as_up, 0);
                    Complex series = l_eval(idx0, tau, c.budget).value;
                    Complex dseries = central_diff([&](const Complex& z) { return l_eval(idx0, z, c.budget).value; }, tau);
                    Complex lhs = pow(tau, t) * dseries;
                    if (t > 0)
                        lhs += pow(tau, t - 1) * series * Real(t);
                    Complex rhs = l_eval(make_index(ks, as, t), tau, c.budget).value;
                    if (t > 0)
                        rhs += l_eval(make_index(ks, as_up, t - 1), tau, c.budget).value * Real(t);
                    c.add("deriv/L/" + to_string(lseries(idx)), p, lhs, rhs,
                          1e-8 * static_cast<double>(abs(rhs)));
                }
                // integrals: d/dtau Int(ks; as) = -E^0_{2k1}(tau) tau^{a1-1} Int(rest)
                auto idx = make_index(ks, as);
                json p{{"ks", ks}, {"alphas", as}, {"tau", "2i"}};
                Complex lhs = central_diff([&](const Complex& z) { return int_eval(idx, z, c.budget).value; }, tau);
                auto rest = make_index(std::vector<int>(ks.begin() + 1, ks.end()),
                                       std::vector<int>(as.begin() + 1, as.end()));
                Complex rhs = -(eis_cusp_eval(ks[0], tau, c.budget).value * pow(tau, as[0] - 1) *
                                int_eval(rest, tau, c.budget).value);
                c.add("deriv/I/" + to_string(tau_integral(ks, as)), p, lhs, rhs,
                      1e-8 * static_cast<double>(abs(rhs)));
            }
}

// ---------------------------------------------------------------- fund

void suite_fund(Ctx& c)
{
    const std::vector<int> kk = c.full ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};
    for (int k : kk)
        for (int a = c.full ? -2 : 1; a <= (c.full ? 2 * k + 2 : 2 * k - 1); ++a) {
            json p{{"k", k}, {"alpha", a}};
            std::string id = "fund/1/2k=" + std::to_string(2 * k) + "/alpha=" + std::to_string(a);
            c.guarded(id, p, [&] {
                Complex lhs = R_cusp_quad(k, a, c.budget);
                Complex dual = T_cusp_mellin(k, 2 * k - a, c.budget);
                c.add(id, p, lhs, fund1_rhs(k, a, dual), 1e-15,
                      "lhs by quadrature; T(E^0; 2k-alpha) from the Mellin transform");
            });
        }
    double worst_printed = 0;
    for (int k1 : kk)
        for (int k2 : kk)
            for (int a1 = 1; a1 <= 2 * k1 - 1; ++a1)
                for (int a2 = 1; a2 <= 2 * k2 - 1; ++a2) {
                    json p{{"k1", k1}, {"k2", k2}, {"alpha1", a1}, {"alpha2", a2}};
                    std::string id = "fund/2/2k=" + std::to_string(2 * k1) + "," + std::to_string(2 * k2) +
                                     "/alpha=" + std::to_string(a1) + "," + std::to_string(a2);
                    c.guarded(id, p, [&] {
                        Complex rhs = fund2_rhs(k1, k2, a1, a2, false, c.budget);
                        Complex printed = fund2_rhs(k1, k2, a1, a2, true, c.budget);
                        Real e1 = to_real(eis_constant(k1));
                        Complex lhs = (R_cusp_quad(k2, a1 + a2, c.budget) - ipow(a1) * R_cusp_quad(k2, a2, c.budget)) *
                                      (e1 / Real(a1));
                        double pe = static_cast<double>(abs(lhs - printed));
                        worst_printed = std::max(worst_printed, pe);
                        c.add(id, p, lhs, rhs, 1e-15, "printed last-term sign: abs_err " + sci(pe));
                    });
                }
    c.rep.notes.push_back("formula 2: last term taken as -(-1)^{a1+a2} T(E^inf_2,E^inf_1;-a2,-a1); the printed "
                          "'+' sign gives max abs_err " + sci(worst_printed) + " (wrong whenever a1+a2 is even)");
    c.rep.notes.push_back("const-const closed form uses i^{b1+b2}/(b1(b1+b2))");
}

// ---------------------------------------------------------------- haberland

void suite_haberland(Ctx& c)
{
    {
        json p{{"k", 2}, {"alpha", 1}};
        Complex lhs = S_coeff({{2}, {1}}, c.budget);
        Complex z = zeta_odd(3, c.budget);
        c.add("haberland/anchor/S(4;1)=zeta(3)", p, lhs, z, 1e-12,
              "zeta_odd vs boost zeta: " + sci(static_cast<double>(abs(z - Complex(zeta_int(3))))));
    }
    for (int k : {2, 3, 4})
        for (int a = 1; a <= 2 * k - 1; ++a) {
            json p{{"k", k}, {"alpha", a}};
            Complex lhs = S_coeff({{k}, {a}}, c.budget);
            Complex rhs = haberland_rhs(k, a, c.budget);
            double tol = 1e-12 * std::max(1.0, static_cast<double>(abs(rhs)));
            char buf[64];
            std::snprintf(buf, sizeof buf, "haberland/2k=%02d/alpha=%02d", 2 * k, a);
            c.add(buf, p, lhs, rhs, tol, "relative tolerance 1e-12 (absolute when |rhs| < 1)");
        }
}

// ---------------------------------------------------------------- symmetry / firstdiff

void suite_symmetry(Ctx& c)
{
    for (int k1 : {2, 3})
        for (int k2 : {2, 3})
            for (int a1 = 1; a1 <= 2 * k1 - 1; ++a1)
                for (int a2 = 1; a2 <= 2 * k2 - 1; ++a2) {
                    if (!c.full && (k1 == 3 && k2 == 3))
                        continue;
                    json p{{"k1", k1}, {"k2", k2}, {"alpha1", a1}, {"alpha2", a2}};
                    Complex lhs = S_coeff({{k1, k2}, {a1, a2}}, c.budget);
                    Complex rhs = S_coeff({{k2, k1}, {2 * k2 - a2, 2 * k1 - a1}}, c.budget) *
                                  Real(c.fault ? -sgn(a1 + a2) : sgn(a1 + a2));
                    double tol = 1e-10 * std::pow(2 * std::numbers::pi, 2 * k1 + 2 * k2 - 2);
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "symmetry/2k=%d,%d/alpha=%d,%d", 2 * k1, 2 * k2, a1, a2);
                    c.add(buf, p, lhs, rhs, tol);
                }
}

void suite_firstdiff(Ctx& c)
{
    double worst_printed = 0;
    for (int k1 : {2, 3})
        for (int k2 : {2, 3})
            for (int a1 = 1; a1 <= 2 * k1 - 1; ++a1)
                for (int a2 = 1; a2 <= 2 * k2 - 1; ++a2) {
                    if (!c.full && (k1 == 3 && k2 == 3))
                        continue;
                    json p{{"k1", k1}, {"k2", k2}, {"alpha1", a1}, {"alpha2", a2}};
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "firstdiff/2k=%d,%d/alpha=%d,%d", 2 * k1, 2 * k2, a1, a2);
                    const double tol = 1e-10 * std::pow(2 * std::numbers::pi, 2 * k1 + 2 * k2 - 2);
                    if (k1 == k2 && a1 == a2) {
                        c.add(buf, p, Complex(0), Complex(0), tol, "diagonal case: 0 = 0");
                        continue;
                    }
                    if (a1 + a2 == 2 * k1 || a1 + a2 == 2 * k2) {
                        c.skip(buf, p, "alpha1 + alpha2 = " + std::to_string(a1 + a2) + " hits 2k1 or 2k2");
                        continue;
                    }
                    Complex lhs = S_coeff({{k1, k2}, {a1, a2}}, c.budget) - S_coeff({{k2, k1}, {a2, a1}}, c.budget);
                    Complex rhs = first_difference_rhs(k1, k2, a1, a2, FirstDiffVariant::Rederived, c.budget);
                    Complex printed = first_difference_rhs(k1, k2, a1, a2, FirstDiffVariant::Printed, c.budget);
                    double pe = static_cast<double>(abs(lhs - printed));
                    worst_printed = std::max(worst_printed, pe / tol * 1e-10);
                    c.add(buf, p, lhs, rhs, tol, "printed right side: abs_err " + sci(pe));
                }
    c.rep.notes.push_back(
        "right side uses +2E^inf_2/a2 and -2E^inf_1/a1 with E^inf = -b/(4k), and no constant term; the printed "
        "form (-b_2/(2k2 a2), constant with denominator (a1+a2)) fails with max scaled error " + sci(worst_printed));
    c.rep.notes.push_back("prefactor sign taken as (-1)^{a1+a2}; the printed (-1)^{a1+a1} is read as a typo");
}

// ---------------------------------------------------------------- oracle-cross

void suite_oracle_cross(Ctx& c)
{
    const long N = 50;
    for (int r = 1; r <= 3; ++r) {
        const std::vector<int> kv = (c.full && r < 3) ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};
        const std::vector<int> av = (c.full && r < 3) ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
        if (!c.full && r == 3)
            continue;
        for (const auto& ks : tuples(kv, r))
            for (const auto& as : tuples(av, r)) {
                auto idx = make_index(ks, as);
                json p{{"ks", ks}, {"alphas", as}, {"N", N}};
                auto dp = l_coeffs_dp(idx, N);
                auto bf = l_coeffs_bruteforce(idx, N);
                long bad = 0;
                for (long m = 0; m < N; ++m)
                    bad += dp.coeffs[m] != bf.coeffs[m];
                c.add_exact("oracle-cross/coeffs/" + to_string(lseries(idx)), p, "c(1.." + std::to_string(N) + ") dp",
                            "brute force", bad == 0, bad ? std::to_string(bad) + " coefficients differ" : "");
            }
    }
    const std::vector<NamedTau> taus = c.full ? std::vector<NamedTau>{tau_i(), tau_2i(), {"1/2+i", Complex(Real(1) / 2, Real(1))}}
                                              : std::vector<NamedTau>{tau_i()};
    for (const auto& tau : taus) {
        for (int k : {2, 3, 4})
            for (int a = 1; a <= 4; ++a) {
                json p{{"ks", std::vector<int>{k}}, {"alphas", std::vector<int>{a}}, {"tau", tau.name}};
                PathSpec path;
                path.start = tau.value;
                auto q = quad_oracle({Factor::cusp(k)}, {a}, path, 0, c.budget);
                c.add("oracle-cross/int/" + to_string(tau_integral({k}, {a})) + "@" + tau.name, p,
                      int_eval(make_index({k}, {a}), tau.value, c.budget).value, q.value, 1e-18,
                      "quadrature error estimate " + sci(q.error_estimate));
            }
        for (const auto& ks : tuples({2, 3}, 2))
            for (const auto& as : tuples({1, 2}, 2)) {
                if (!c.full && !(ks[0] == ks[1] || as[0] == as[1]))
                    continue;
                json p{{"ks", ks}, {"alphas", as}, {"tau", tau.name}};
                PathSpec path;
                path.start = tau.value;
                auto q = quad_oracle({Factor::cusp(ks[0]), Factor::cusp(ks[1])}, as, path, 0, c.budget);
                c.add("oracle-cross/int/" + to_string(tau_integral(ks, as)) + "@" + tau.name, p,
                      int_eval(make_index(ks, as), tau.value, c.budget).value, q.value, 1e-18,
                      "quadrature error estimate " + sci(q.error_estimate));
            }
    }
    // constant-then-cusp R values at the base point
    for (int k1 : {2, 3})
        for (int k2 : {2, 3})
            for (int a1 : {1, 2})
                for (int a2 : {1, 2}) {
                    if (!c.full && k1 != k2)
                        continue;
                    json p{{"factors", std::vector<std::string>{"const", "cusp"}}, {"ks", std::vector<int>{k1, k2}}, {"alphas", std::vector<int>{a1, a2}}};
                    PathSpec path;
                    path.start = I();
                    Complex e1(to_real(eis_constant(k1)));
                    auto q = quad_oracle({Factor::constant(e1), Factor::cusp(k2)}, {a1, a2}, path, 0, c.budget);
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "oracle-cross/R-const-cusp/2k=%d,%d/alpha=%d,%d", 2 * k1, 2 * k2, a1, a2);
                    c.add(buf, p, R_const_cusp(k1, k2, a1, a2, c.budget), q.value, 1e-18);
                }
}

// ---------------------------------------------------------------- regularization

void suite_regularization(Ctx& c)
{
    const std::vector<int> kk = c.full ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};
    for (int k : kk)
        for (long m : {2L * k + 1, 2L * k + 2}) {
            json p{{"k", k}, {"m", m}};
            auto q = T_cusp_direct(k, m, 0, c.budget);
            char buf[64];
            std::snprintf(buf, sizeof buf, "regularization/T/2k=%d/m=%ld", 2 * k, m);
            c.add(buf, p, T_cusp_reg(k, m, c.budget), q.value, 1e-15,
                  "direct quadrature over (0, i], error estimate " + sci(q.error_estimate));
        }
    for (int k : kk)
        for (long m = 1; m <= 2 * k + 2; ++m) {
            json p{{"ks", std::vector<int>{k}}, {"alpha", m}};
            char buf[64];
            std::snprintf(buf, sizeof buf, "regularization/int0/2k=%d/alpha=%02ld", 2 * k, m);
            c.guarded(buf, p, [&] {
                c.add(buf, p, int0_reg({k}, {m}, c.budget), mellin_cusp(k, m), 1e-15,
                      "regularized Int(0) against the continued Mellin transform");
            });
        }
    // depth 2: Int(12)(0) + Int(21)(0) = Int(1)(0) Int(2)(0)
    for (int k1 : {2, 3})
        for (int k2 : {2, 3})
            for (int a1 = 1; a1 <= 2 * k1 - 1; ++a1)
                for (int a2 = 1; a2 <= 2 * k2 - 1; ++a2) {
                    if (k1 > k2 || (k1 == k2 && a1 > a2))
                        continue;
                    if (!c.full && k1 == 3 && k2 == 3)
                        continue;
                    json p{{"ks", std::vector<int>{k1, k2}}, {"alphas", std::vector<int>{a1, a2}}};
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "regularization/int0-swap/2k=%d,%d/alpha=%d,%d", 2 * k1, 2 * k2, a1, a2);
                    c.guarded(buf, p, [&] {
                        Complex lhs = int0_reg({k1, k2}, {a1, a2}, c.budget) + int0_reg({k2, k1}, {a2, a1}, c.budget);
                        Complex rhs = int0_reg({k1}, {a1}, c.budget) * int0_reg({k2}, {a2}, c.budget);
                        c.add(buf, p, lhs, rhs, 1e-12, "assembled in both orders, compared through the shuffle product");
                    });
                }
}

} // namespace

VerificationReport run_suite(const std::string& name, const EngineConfig& config)
{
    if (config.grid != "small" && config.grid != "full")
        throw std::invalid_argument("unknown grid '" + config.grid + "' (small | full)");
    if (config.digits < 16)
        throw std::invalid_argument("digits must be at least 16");
    if (config.eps < 0 || config.n_max < 1)
        throw std::invalid_argument("invalid truncation settings");
    static const std::map<std::string, void (*)(Ctx&)> table{
        {"roundtrip", suite_roundtrip}, {"shuffle", suite_shuffle},     {"stuffle", suite_stuffle},
        {"deriv", suite_deriv},         {"fund", suite_fund},           {"haberland", suite_haberland},
        {"symmetry", suite_symmetry},   {"firstdiff", suite_firstdiff}, {"oracle-cross", suite_oracle_cross},
        {"regularization", suite_regularization}};
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    set_digits(config.digits);
    VerificationReport rep;
    rep.suite = name;
    Ctx ctx{rep, config.budget(), config.grid == "full", config.digits, config.inject_fault};
    rep.engine = {config.digits, ctx.budget.target(), config.n_max, config.grid, engine_version(), config.inject_fault};
    it->second(ctx);
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::stable_sort(rep.cases.begin(), rep.cases.end(), by_id);
    std::stable_sort(rep.skipped.begin(), rep.skipped.end(), by_id);
    return rep;
}

json to_json(const VerificationReport& r)
{
    json j;
    j["suite"] = r.suite;
    j["engine"] = {{"digits", r.engine.digits},
                   {"eps", r.engine.eps},
                   {"n_max", r.engine.n_max},
                   {"grid", r.engine.grid},
                   {"version", r.engine.version},
                   {"inject_fault", r.engine.inject_fault}};
    const auto s = r.summary();
    j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped_singular", s.skipped_singular}};
    j["notes"] = r.notes;
    j["cases"] = json::array();
    for (const auto& c : r.cases)
        j["cases"].push_back({{"id", c.id},
                              {"parameters", c.parameters},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"abs_err", c.abs_err},
                              {"tol", c.tol},
                              {"pass", c.pass},
                              {"notes", c.notes}});
    j["skipped"] = json::array();
    for (const auto& c : r.skipped)
        j["skipped"].push_back({{"id", c.id}, {"parameters", c.parameters}, {"reason", c.reason}});
    return j;
}

VerificationReport report_from_json(const json& j)
{
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    const auto& e = j.at("engine");
    r.engine = {e.at("digits").get<int>(), e.at("eps").get<double>(), e.at("n_max").get<long>(),
                e.at("grid").get<std::string>(), e.at("version").get<std::string>(),
                e.at("inject_fault").get<bool>()};
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& c : j.at("cases"))
        r.cases.push_back({c.at("id").get<std::string>(), c.at("parameters"), c.at("lhs").get<std::string>(),
                           c.at("rhs").get<std::string>(), c.at("abs_err").get<double>(), c.at("tol").get<double>(),
                           c.at("pass").get<bool>(), c.at("notes").get<std::string>()});
    for (const auto& c : j.at("skipped"))
        r.skipped.push_back({c.at("id").get<std::string>(), c.at("parameters"), c.at("reason").get<std::string>()});
    const auto s = r.summary();
    const auto& js = j.at("summary");
    if (js.at("total").get<long>() != s.total || js.at("passed").get<long>() != s.passed ||
        js.at("failed").get<long>() != s.failed || js.at("skipped_singular").get<long>() != s.skipped_singular)
        throw std::invalid_argument("report summary inconsistent with its cases");
    return r;
}

std::string to_csv(const VerificationReport& r)
{
    std::ostringstream os;
    os << "id,abs_err,tol,pass\n";
    for (const auto& c : r.cases) {
        std::string id = c.id;
        if (id.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char ch : id)
                q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            id = q + "\"";
        }
        os << id << ',' << sci(c.abs_err) << ',' << sci(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

void emit(const VerificationReport& r, const std::string& format, const std::string& path)
{
    std::string text;
    if (format == "json")
        text = to_json(r).dump(2) + "\n";
    else if (format == "csv")
        text = to_csv(r);
    else
        throw std::invalid_argument("unknown format '" + format + "' (json | csv)");
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace emel

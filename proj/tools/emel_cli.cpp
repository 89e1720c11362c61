// emel: evaluate, convert and verify multiple Eisenstein L-series and tau-integrals.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "emel/integrals.hpp"
#include "emel/lseries.hpp"
#include "emel/rewrite.hpp"
#include "emel/verify.hpp"

using namespace emel;

namespace {

struct Global {
    int digits = 40;
    double eps = 0;
    long n_max = 200000;

    TruncationBudget budget() const { return TruncationBudget{eps, n_max}; }
};

void print_value(const SeriesValue& v, int digits)
{
    std::cout << "value      " << to_string(v.value, digits) << "\n"
              << "terms      " << v.terms << "\n"
              << "tail_bound " << v.tail_bound << "\n";
}

void warn_small_height(const Complex& tau)
{
    if (tau.im < Real("0.1"))
        std::cerr << "warning: Im(tau) < 0.1, truncation order grows like 1/Im(tau)\n";
}

Generator expect_kind(const std::string& text, Kind kind)
{
    Generator g = parse_generator(text);
    if (g.kind != kind)
        throw std::invalid_argument(std::string("expected an ") + (kind == Kind::LSeries ? "L{...}" : "I{...}") +
                                    " index, got '" + text + "'");
    return g;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiple Eisenstein L-series, iterated Eisenstein integrals and their identities"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--digits", g.digits, "working precision in decimal digits")->capture_default_str();
    app.add_option("--eps", g.eps, "truncation target (0: 10^-(digits+5))")->capture_default_str();
    app.add_option("--nmax", g.n_max, "hard cap on any summation index")->capture_default_str();

    auto* eval_l = app.add_subcommand("eval-l", "evaluate L^{(t)}(ks; alphas)(tau)");
    std::string l_index, l_tau = "0+1i", coeff_csv;
    long coeff_n = 0;
    eval_l->add_option("--index", l_index, "e.g. L{ks=[2,3];alphas=[1,2];t=0}")->required();
    eval_l->add_option("--tau", l_tau, "point a+bi in the upper half plane")->capture_default_str();
    eval_l->add_option("--coeffs", coeff_n, "also export c(1..N) as CSV");
    eval_l->add_option("--coeffs-out", coeff_csv, "CSV destination (default stdout)");

    auto* eval_i = app.add_subcommand("eval-int", "evaluate tau^j Int(ks; alphas)(tau)");
    std::string i_index, i_tau = "0+1i";
    long dump_n = 0;
    eval_i->add_option("--index", i_index, "e.g. I{ks=[2,3];alphas=[1,2];taupow=0}")->required();
    eval_i->add_option("--tau", i_tau, "point a+bi in the upper half plane")->capture_default_str();
    eval_i->add_option("--dump", dump_n, "print the closed form truncated at frequency N");

    auto* convert = app.add_subcommand("convert", "rewrite between integral and L-series generators");
    std::string dir, c_index;
    convert->add_option("--dir", dir, "int2l | l2int")->required()->check(CLI::IsMember({"int2l", "l2int"}));
    convert->add_option("--index", c_index, "generator in textual syntax")->required();

    auto* stuffle = app.add_subcommand("stuffle", "quasi-shuffle product of two L^{(0)} generators");
    std::string left, right;
    stuffle->add_option("--left", left)->required();
    stuffle->add_option("--right", right)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, grid = "small", out = "-", format = "json";
    bool inject = false;
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--grid", grid, "small | full")->capture_default_str()->check(CLI::IsMember({"small", "full"}));
    verify->add_option("--out", out, "report path ('-' for stdout)")->capture_default_str();
    verify->add_option("--format", format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--inject-fault", inject, "corrupt a sign in the symmetry suite");

    auto* selftest = app.add_subcommand("selftest", "precision and modularity checks");

    CLI11_PARSE(app, argc, argv);

    try {
        set_digits(g.digits);
        const auto budget = g.budget();

        if (*eval_l) {
            Generator gen = expect_kind(l_index, Kind::LSeries);
            Complex tau = parse_complex(l_tau);
            warn_small_height(tau);
            print_value(l_eval(gen.index(), tau, budget), g.digits);
            if (coeff_n > 0) {
                auto co = l_coeffs_dp(make_index(gen.ks, gen.alphas), coeff_n);
                std::ofstream file;
                if (!coeff_csv.empty()) {
                    file.open(coeff_csv);
                    if (!file)
                        throw std::runtime_error("cannot open '" + coeff_csv + "'");
                }
                std::ostream& os = coeff_csv.empty() ? std::cout : file;
                os << "m,c\n";
                for (long m = 1; m <= coeff_n; ++m)
                    os << m << ',' << to_string(co.coeffs[m - 1]) << '\n';
            }
            return 0;
        }
        if (*eval_i) {
            Generator gen = expect_kind(i_index, Kind::TauIntegral);
            Complex tau = parse_complex(i_tau);
            warn_small_height(tau);
            auto idx = make_index(gen.ks, gen.alphas);
            SeriesValue v = int_eval(idx, tau, budget);
            v.value *= pow(tau, gen.tpow);
            print_value(v, g.digits);
            if (dump_n > 0)
                std::cout << int_exppoly(idx, dump_n).mul_tpow(gen.tpow).dump(g.digits);
            return 0;
        }
        if (*convert) {
            FormalSum s = dir == "int2l" ? int_to_l(expect_kind(c_index, Kind::TauIntegral))
                                         : l_to_int(expect_kind(c_index, Kind::LSeries));
            std::cout << to_string(s) << "\n";
            return 0;
        }
        if (*stuffle) {
            std::cout << to_string(stuffle_product(expect_kind(left, Kind::LSeries), expect_kind(right, Kind::LSeries)))
                      << "\n";
            return 0;
        }
        if (*verify) {
            EngineConfig cfg{g.digits, g.eps, g.n_max, grid, inject};
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            long failed = 0;
            for (const auto& name : names) {
                VerificationReport rep = run_suite(name, cfg);
                std::string path = out;
                if (names.size() > 1 && out != "-")
                    path = out + "." + name + "." + format;
                emit(rep, format, path);
                const auto s = rep.summary();
                std::cerr << name << ": " << s.passed << "/" << s.total << " passed, " << s.failed << " failed, "
                          << s.skipped_singular << " skipped-singular\n";
                failed += s.failed;
            }
            return failed == 0 ? 0 : 1;
        }
        if (*selftest) {
            bool ok = true;
            Real e6 = precision_selftest();
            bool p = e6 < boost::multiprecision::pow(Real(10), -(g.digits - 5));
            ok &= p;
            std::cout << (p ? "PASS" : "FAIL") << "  |E6(i)| = " << to_string(e6, 6) << "\n";
            const Complex tau(Real(1) / 2, Real(2));
            for (int k : {2, 3, 4}) {
                Complex lhs = eis_eval(k, Complex(-1) / tau, budget).value;
                Complex rhs = pow(tau, 2 * k) * eis_eval(k, tau, budget).value;
                Real err = abs(lhs - rhs);
                bool q = err < Real(10 * budget.target());
                ok &= q;
                std::cout << (q ? "PASS" : "FAIL") << "  E" << 2 * k << "(-1/tau) = tau^" << 2 * k
                          << " E(tau) at 1/2+2i, err " << to_string(err, 6) << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

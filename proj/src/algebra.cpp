#include "emel/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace emel {

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (long k = 2; k <= n; ++k)
        r *= k;
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

Integer falling_ratio(long a, long b)
{
    if (b < 0 || a < b)
        throw std::invalid_argument("falling_ratio needs a >= b >= 0");
    Integer r = 1;
    for (long k = b + 1; k <= a; ++k)
        r *= k;
    return r;
}

std::string to_string(const Rational& q)
{
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer d(s.substr(slash + 1));
        if (d == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(Integer(s.substr(0, slash)), d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

Real to_real(const Integer& z) { return Real(z.str()); }

Real to_real(const Rational& q)
{
    return to_real(Integer(boost::multiprecision::numerator(q))) /
           to_real(Integer(boost::multiprecision::denominator(q)));
}

namespace {
int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }
} // namespace

int CompositeIndex::upper_weight() const { return sum(ks); }
int CompositeIndex::lower_weight() const { return t + sum(alphas); }

CompositeIndex make_index(std::vector<int> ks, std::vector<int> alphas, int t)
{
    if (ks.size() != alphas.size())
        throw std::invalid_argument("ks and alphas differ in length");
    for (int k : ks)
        if (k < 2)
            throw std::invalid_argument("half-weight k must be >= 2");
    for (int a : alphas)
        if (a < 1)
            throw std::invalid_argument("alpha must be >= 1");
    if (t < 0)
        throw std::invalid_argument("t must be >= 0");
    return CompositeIndex{std::move(ks), std::move(alphas), t};
}

int Generator::upper_weight() const { return sum(ks); }
int Generator::lower_weight() const { return tpow + sum(alphas); }
CompositeIndex Generator::index() const { return make_index(ks, alphas, tpow); }

Generator lseries(const CompositeIndex& idx)
{
    return Generator{Kind::LSeries, idx.ks, idx.alphas, idx.t};
}

Generator lseries(std::vector<int> ks, std::vector<int> alphas, int t)
{
    return lseries(make_index(std::move(ks), std::move(alphas), t));
}

Generator tau_integral(std::vector<int> ks, std::vector<int> alphas, int tau_power)
{
    CompositeIndex idx = make_index(std::move(ks), std::move(alphas), tau_power);
    return Generator{Kind::TauIntegral, idx.ks, idx.alphas, idx.t};
}

namespace {
std::string list(const std::vector<int>& v)
{
    std::string s = "[";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j)
            s += ",";
        s += std::to_string(v[j]);
    }
    return s + "]";
}

std::vector<int> parse_list(const std::string& s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected [..] list, got " + s);
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}
} // namespace

std::string to_string(const Generator& g)
{
    if (g.kind == Kind::LSeries)
        return "L{ks=" + list(g.ks) + ";alphas=" + list(g.alphas) + ";t=" + std::to_string(g.tpow) + "}";
    return "I{ks=" + list(g.ks) + ";alphas=" + list(g.alphas) + ";taupow=" + std::to_string(g.tpow) + "}";
}

Generator parse_generator(const std::string& in)
{
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() < 3 || (s[0] != 'L' && s[0] != 'I') || s[1] != '{' || s.back() != '}')
        throw std::invalid_argument("bad generator syntax: " + in);
    Kind kind = s[0] == 'L' ? Kind::LSeries : Kind::TauIntegral;
    std::map<std::string, std::string> fields;
    std::stringstream ss(s.substr(2, s.size() - 3));
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad field in generator: " + part);
        fields[part.substr(0, eq)] = part.substr(eq + 1);
    }
    const char* pkey = kind == Kind::LSeries ? "t" : "taupow";
    for (const auto& [key, _] : fields)
        if (key != "ks" && key != "alphas" && key != pkey)
            throw std::invalid_argument("unknown field '" + key + "' in " + in);
    if (!fields.count("ks") || !fields.count("alphas"))
        throw std::invalid_argument("generator needs ks and alphas: " + in);
    int p = fields.count(pkey) ? std::stoi(fields[pkey]) : 0;
    auto ks = parse_list(fields["ks"]);
    auto as = parse_list(fields["alphas"]);
    return kind == Kind::LSeries ? lseries(ks, as, p) : tau_integral(ks, as, p);
}

FormalSum::FormalSum(const Generator& g, const Rational& c) { add(g, c); }

Rational FormalSum::coeff(const Generator& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add(const Generator& g, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, -c);
    return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_)
        v *= c;
    return *this;
}

int FormalSum::max_depth() const
{
    int m = 0;
    for (const auto& [g, c] : terms_)
        m = std::max(m, g.depth());
    return m;
}

int FormalSum::max_upper_weight() const
{
    int m = 0;
    for (const auto& [g, c] : terms_)
        m = std::max(m, g.upper_weight());
    return m;
}

int FormalSum::max_lower_weight() const
{
    int m = 0;
    for (const auto& [g, c] : terms_)
        m = std::max(m, g.lower_weight());
    return m;
}

FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }

FormalSum fs_combine(const FormalSum& a, const FormalSum& b, const Rational& c)
{
    FormalSum r = a;
    for (const auto& [g, v] : b.terms())
        r.add(g, c * v);
    return r;
}

bool fs_equal(const FormalSum& a, const FormalSum& b) { return a == b; }

std::string to_string(const FormalSum& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (const auto& [g, c] : s.terms()) {
        if (!out.empty())
            out += "\n";
        out += to_string(c) + " * " + to_string(g);
    }
    return out;
}

} // namespace emel

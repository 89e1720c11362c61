#include "emel/rewrite.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace emel {

Word word_of(const Generator& g)
{
    Word w;
    for (int j = 0; j < g.depth(); ++j)
        w.emplace_back(g.ks[j], g.alphas[j]);
    return w;
}

namespace {

Generator from_word(Kind kind, const Word& w, int tpow)
{
    Generator g{kind, {}, {}, tpow};
    for (const auto& [k, a] : w) {
        g.ks.push_back(k);
        g.alphas.push_back(a);
    }
    return kind == Kind::LSeries ? lseries(g.ks, g.alphas, tpow) : tau_integral(g.ks, g.alphas, tpow);
}

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur, std::map<Word, long>& out)
{
    if (i == u.size() && j == v.size()) {
        ++out[cur];
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

FormalSum shuffle_product(const Word& u, const Word& v, long* raw_terms)
{
    std::map<Word, long> words;
    Word cur;
    shuffle_rec(u, 0, v, 0, cur, words);
    FormalSum s;
    long raw = 0;
    for (const auto& [w, c] : words) {
        s.add(from_word(Kind::TauIntegral, w, 0), Rational(c));
        raw += c;
    }
    if (raw_terms)
        *raw_terms = raw;
    return s;
}

FormalSum shuffle_product(const Generator& u, const Generator& v)
{
    if (u.kind != Kind::TauIntegral || v.kind != Kind::TauIntegral)
        throw std::invalid_argument("shuffle_product expects integral generators");
    FormalSum raw = shuffle_product(word_of(u), word_of(v));
    FormalSum out;
    for (const auto& [g, c] : raw.terms())
        out.add(tau_integral(g.ks, g.alphas, u.tpow + v.tpow), c);
    return out;
}

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, FormalSum> g_int_to_l_memo;

void int_to_l_rec(const std::vector<int>& ks, const std::vector<int>& alphas, int j, int I_next,
                  std::vector<int>& is, const Rational& coeff, FormalSum& out)
{
    if (j < 0) {
        const int A1 = std::accumulate(alphas.begin(), alphas.end(), 0);
        const int I1 = I_next;
        out.add(lseries(ks, is, A1 - I1), (I1 % 2) ? -coeff : coeff);
        return;
    }
    const int Aj = std::accumulate(alphas.begin() + j, alphas.end(), 0);
    const int top = Aj - I_next;
    for (int i = 1; i <= top; ++i) {
        is[static_cast<std::size_t>(j)] = i;
        // (A_j - I_{j+1} - 1)! / (A_j - I_j)!
        Rational c = coeff * Rational(falling_ratio(top - 1, top - i));
        int_to_l_rec(ks, alphas, j - 1, I_next + i, is, c, out);
    }
}

FormalSum int_to_l_base(const std::vector<int>& ks, const std::vector<int>& alphas)
{
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_int_to_l_memo.find({ks, alphas});
        if (it != g_int_to_l_memo.end())
            return it->second;
    }
    FormalSum out;
    if (ks.empty()) {
        out.add(lseries({}, {}, 0), Rational(1));
    } else {
        std::vector<int> is(ks.size(), 0);
        int_to_l_rec(ks, alphas, static_cast<int>(ks.size()) - 1, 0, is, Rational(1), out);
    }
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_int_to_l_memo.emplace(std::make_pair(ks, alphas), out);
    return out;
}

} // namespace

FormalSum int_to_l(const Generator& g)
{
    if (g.kind != Kind::TauIntegral)
        throw std::invalid_argument("int_to_l expects an integral generator");
    FormalSum base = int_to_l_base(g.ks, g.alphas);
    if (g.tpow == 0)
        return base;
    FormalSum out;
    for (const auto& [h, c] : base.terms())
        out.add(lseries(h.ks, h.alphas, h.tpow + g.tpow), c);
    return out;
}

FormalSum int_to_l(const CompositeIndex& idx)
{
    return int_to_l(tau_integral(idx.ks, idx.alphas, idx.t));
}

FormalSum int_to_l(const FormalSum& s)
{
    FormalSum out;
    for (const auto& [g, c] : s.terms()) {
        if (g.kind == Kind::LSeries)
            out.add(g, c);
        else
            out += c * int_to_l(g);
    }
    return out;
}

namespace {

void l_to_int_rec(const Generator& g, int j, std::vector<int>& is, const Rational& coeff, FormalSum& out)
{
    const int r = g.depth();
    if (j == r) {
        std::vector<int> shifted(static_cast<std::size_t>(r));
        int isum = 0;
        for (int m = 0; m < r; ++m) {
            int next = m + 1 < r ? is[m + 1] : 0;
            shifted[m] = g.alphas[m] - is[m] + next;
            if (shifted[m] < 1)
                throw std::logic_error("l_to_int produced a nonpositive alpha");
            isum += is[m];
        }
        out.add(tau_integral(g.ks, shifted, g.tpow + is[0]), (isum % 2) ? -coeff : coeff);
        return;
    }
    const int top = g.alphas[j] - 1;
    for (int i = 0; i <= top; ++i) {
        is[j] = i;
        l_to_int_rec(g, j + 1, is, coeff * Rational(binomial(top, i)), out);
    }
}

} // namespace

FormalSum l_to_int(const Generator& g)
{
    if (g.kind != Kind::LSeries)
        throw std::invalid_argument("l_to_int expects an L-series generator");
    if (g.depth() == 0)
        return FormalSum(tau_integral({}, {}, g.tpow));
    Integer den = 1;
    int A = 0;
    for (int a : g.alphas) {
        den *= factorial(a - 1);
        A += a;
    }
    Rational pre(Integer(A % 2 ? -1 : 1), den);
    std::vector<int> is(static_cast<std::size_t>(g.depth()), 0);
    FormalSum out;
    l_to_int_rec(g, 0, is, pre, out);
    return out;
}

FormalSum l_to_int(const FormalSum& s)
{
    FormalSum out;
    for (const auto& [g, c] : s.terms()) {
        if (g.kind == Kind::TauIntegral)
            out.add(g, c);
        else
            out += c * l_to_int(g);
    }
    return out;
}

namespace {

using Chain = Word; // (k, exponent on the partial sum starting at that letter), outermost first

std::map<Chain, Rational> stuffle_rec(const Chain& u, const Chain& v)
{
    if (u.empty())
        return {{v, Rational(1)}};
    if (v.empty())
        return {{u, Rational(1)}};
    const int a = u[0].second, b = v[0].second;
    std::map<Chain, Rational> out;
    Chain u_rest(u.begin() + 1, u.end()), v_rest(v.begin() + 1, v.end());
    for (int c = 1; c < a + b; ++c) {
        const int d = a + b - c;
        Integer cu = binomial(c - 1, a - 1);
        if (cu != 0) {
            Chain vd = v;
            vd[0].second = d;
            for (const auto& [w, x] : stuffle_rec(u_rest, vd)) {
                Chain full{{u[0].first, c}};
                full.insert(full.end(), w.begin(), w.end());
                out[full] += Rational(cu) * x;
            }
        }
        Integer cv = binomial(c - 1, b - 1);
        if (cv != 0) {
            Chain ud = u;
            ud[0].second = d;
            for (const auto& [w, x] : stuffle_rec(ud, v_rest)) {
                Chain full{{v[0].first, c}};
                full.insert(full.end(), w.begin(), w.end());
                out[full] += Rational(cv) * x;
            }
        }
    }
    return out;
}

} // namespace

FormalSum stuffle_product(const Generator& g1, const Generator& g2)
{
    if (g1.kind != Kind::LSeries || g2.kind != Kind::LSeries || g1.tpow != 0 || g2.tpow != 0)
        throw std::invalid_argument("stuffle_product expects L-series generators with t = 0");
    FormalSum out;
    for (const auto& [w, c] : stuffle_rec(word_of(g1), word_of(g2)))
        out.add(from_word(Kind::LSeries, w, 0), c);
    return out;
}

} // namespace emel

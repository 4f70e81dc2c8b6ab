#include "twobridge/alexander.hpp"

#include <cstdlib>
#include <sstream>

namespace twobridge {

namespace {

LaurentInt u_mono(const Int& c, int e) { return LaurentInt::monomial(c, e); }

// t^b + t^-b in u
LaurentInt t_pair(int b) { return u_mono(1, 2 * b) + u_mono(1, -2 * b); }

LaurentInt raw_from_f(const LamPoly& f) { return f.eval(laurent_s()); }

}  // namespace

std::string SymLaurent::str() const
{
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = u.min_exp(); e <= u.max_exp(); ++e) {
        Int c = u.coeff(e);
        if (c == 0) continue;
        if (e % 2) throw Error(ErrorCode::Nonintegral, "odd power of t^(1/2)");
        int te = e / 2;
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (te == 0)
            os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (te != 1) os << "^" << te;
        }
    }
    return os.str();
}

SymLaurent normalize_alexander(const LaurentInt& p)
{
    if (p.is_zero()) return {p};
    int sum = p.min_exp() + p.max_exp();
    LaurentInt q = p.shifted(-sum / 2);
    if (q.eval(1) < 0) q = -q;
    return {q};
}

SymLaurent alexander_from_riley(const RileyPair& pair) { return normalize_alexander(raw_from_f(pair.f_n())); }

std::vector<int> hat_exponents(const EpsilonSeq& eps)
{
    int sigma = eps.sigma(), run = 0;
    std::vector<int> out;
    for (int e : eps.eps) {
        out.push_back(-sigma + e + 2 * run);
        run += e;
    }
    return out;
}

SymLaurent alexander_sigma(const EpsilonSeq& eps)
{
    auto hat = hat_exponents(eps);
    LaurentInt sum;
    for (size_t i = 0; i < eps.eps.size(); i += 2) sum += u_mono(eps.eps[i], hat[i]);
    return normalize_alexander(u_mono(1, eps.sigma()) - laurent_z() * sum);
}

SymLaurent alexander_minkus(const EpsilonSeq& eps)
{
    LaurentInt acc = u_mono(1, 0);
    int run = 0, sign = 1;
    for (int e : eps.eps) {
        run += e;
        sign = -sign;
        acc += u_mono(sign, 2 * run);
    }
    return normalize_alexander(acc.shifted(-eps.sigma()));
}

SymLaurent alexander_chebyshev(const HalfSeq& h)
{
    int n = h.n();
    LaurentInt acc(n % 2 ? -1 : 1);
    for (int i = 1; i <= n; ++i) {
        LaurentInt t = t_pair(h.beta[i - 1]);
        acc += (n - i) % 2 ? -t : t;
    }
    return normalize_alexander(acc);
}

std::vector<int> fukuhara_nu(const EpsilonSeq& eps)
{
    int a = eps.alpha();
    std::vector<int> ext(2 * a);
    ext[0] = 1;
    for (int i = 1; i < a; ++i) ext[i] = eps.eps[i - 1];
    for (int i = 0; i < a; ++i) ext[a + i] = -ext[i];
    std::vector<int> nu;
    for (int k = 1; k < a; ++k) {
        int s = 1;
        for (int i = 1; i < a; ++i) s += ext[k + i];
        nu.push_back(s);
    }
    return nu;
}

SymLaurent alexander_fukuhara(const EpsilonSeq& eps)
{
    int sigma = eps.sigma();
    auto nu = fukuhara_nu(eps);
    // 4 Delta = 2(u^-sigma + u^sigma) - (u^-1 - u) sum (-1)^k eps_k (u^-nu_k - u^nu_k)
    LaurentInt sum;
    for (size_t k = 1; k <= nu.size(); ++k) {
        int c = (k % 2 ? -1 : 1) * eps.eps[k - 1];
        sum += u_mono(c, -nu[k - 1]) - u_mono(c, nu[k - 1]);
    }
    LaurentInt four = u_mono(2, -sigma) + u_mono(2, sigma) - (u_mono(1, -1) - u_mono(1, 1)) * sum;
    LaurentInt delta;
    if (!four.divexact(4, delta)) throw Error(ErrorCode::Nonintegral, "Fukuhara sum is not divisible by 4");
    return normalize_alexander(delta);
}

LaurentInt chebyshev_eval(const ChebSpec& spec, const LaurentInt& x)
{
    if (spec.n < 0) throw Error(ErrorCode::Range, "negative Chebyshev index");
    LaurentInt prev = spec.init_a, cur = spec.init_b;
    if (spec.n == 0) return prev;
    for (int i = 1; i < spec.n; ++i) {
        LaurentInt next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ChebSpec cheb_t(int n, const LaurentInt& x) { return {LaurentInt(2), x, n}; }
ChebSpec cheb_s(int n) { return {LaurentInt(0), LaurentInt(1), n}; }
ChebSpec cheb_v(int n, const LaurentInt& x) { return {LaurentInt(1), x - 1, n}; }

bool QCheckReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

QCheckReport q_recursion_check(const HalfSeq& h)
{
    QCheckReport rep;
    RileyPair rp = riley_recursive(h);
    int n = h.n();
    LaurentInt x = t_pair(1);
    std::vector<LaurentInt> Q{LaurentInt(2)};
    for (int k = 1; k <= n; ++k) Q.push_back(raw_from_f(rp.f[k]) + raw_from_f(rp.f[k - 1]));

    auto record = [&](const std::string& name, bool ok, int k) {
        for (auto& c : rep.checks)
            if (c.name == name) {
                if (!ok && c.pass) c = {name, false, "k=" + std::to_string(k)};
                return;
            }
        rep.checks.push_back({name, ok, ok ? "" : "k=" + std::to_string(k)});
    };
    for (int k = 1; k <= n; ++k) {
        int b = h.beta[k - 1];
        record("prefix_sum_is_power_pair", Q[k] == t_pair(b), k);
        record("prefix_sum_chebyshev_value", Q[k] == chebyshev_eval(cheb_t(std::abs(b), x), x), k);
        int bs = 0;
        for (int i = 0; i < k; ++i) bs += h.e[i];
        record("beta_partial_sum_identity", b == h.e[0] * bs, k);
        if (k >= 2) {
            int d = h.delta[k - 1];
            LaurentInt alpha_k = d == 1 ? x : LaurentInt();
            record("prefix_sum_three_term", Q[k] == alpha_k * Q[k - 1] - d * Q[k - 2], k);
        }
    }
    return rep;
}

}  // namespace twobridge

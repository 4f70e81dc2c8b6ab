#pragma once

// Small, slow, independent reference implementations.  Nothing here calls
// into the library; the tests compare library output against these.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Int = mpz_class;

// Sparse polynomial in (lam, L, M) with integer coefficients, M exponents may be negative.
struct Poly {
    using Key = std::array<int, 3>;  // lam, L, M
    std::map<Key, Int> t;

    Poly() = default;
    Poly(long c)
    {
        if (c) t[{0, 0, 0}] = c;
    }
    static Poly mono(const Int& c, int lam, int L, int M)
    {
        Poly p;
        if (c != 0) p.t[{lam, L, M}] = c;
        return p;
    }
    bool zero() const { return t.empty(); }
    void add(const Key& k, const Int& c)
    {
        if (c == 0) return;
        Int& v = t[k];
        v += c;
        if (v == 0) t.erase(k);
    }
    friend Poly operator+(Poly a, const Poly& b)
    {
        for (const auto& [k, v] : b.t) a.add(k, v);
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b)
    {
        for (const auto& [k, v] : b.t) a.add(k, -v);
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [ka, va] : a.t)
            for (const auto& [kb, vb] : b.t) r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, va * vb);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
    // M -> 1/M
    Poly bar() const
    {
        Poly r;
        for (const auto& [k, v] : t) r.add({k[0], k[1], -k[2]}, v);
        return r;
    }
    int deg_lam() const
    {
        int d = -1;
        for (const auto& [k, v] : t) d = std::max(d, k[0]);
        return d;
    }
    // coefficient of lam^i as a polynomial in L, M
    Poly coeff_lam(int i) const
    {
        Poly r;
        for (const auto& [k, v] : t)
            if (k[0] == i) r.add({0, k[1], k[2]}, v);
        return r;
    }
    std::string str() const
    {
        std::string s;
        for (const auto& [k, v] : t)
            s += (v < 0 ? " - " : " + ") + Int(abs(v)).get_str() + "*l^" + std::to_string(k[0]) + "*L^" +
                 std::to_string(k[1]) + "*M^" + std::to_string(k[2]);
        return s.empty() ? "0" : s;
    }
};

inline Poly M(int e) { return Poly::mono(1, 0, 0, e); }
inline Poly lam() { return Poly::mono(1, 1, 0, 0); }
inline Poly Lvar() { return Poly::mono(1, 0, 1, 0); }

// Determinant by the Leibniz formula; only for tiny matrices.
inline Poly leibniz_det(const std::vector<std::vector<Poly>>& a)
{
    size_t n = a.size();
    if (n == 0) return Poly(1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Poly term(1);
        bool nz = true;
        for (size_t i = 0; i < n && nz; ++i) {
            const Poly& e = a[i][perm[i]];
            if (e.zero()) nz = false;
            else term = term * e;
        }
        if (!nz) continue;
        total = (inv % 2) ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Sylvester matrix of p, q in lam; the determinant is Res_lam(p, q).
inline Poly sylvester_resultant(const Poly& p, const Poly& q)
{
    int d = p.deg_lam(), e = q.deg_lam();
    int n = d + e;
    if (n == 0) return Poly(1);
    std::vector<std::vector<Poly>> s(n, std::vector<Poly>(n));
    for (int r = 0; r < e; ++r)
        for (int i = 0; i <= d; ++i) s[r][r + d - i] = p.coeff_lam(i);
    for (int r = 0; r < d; ++r)
        for (int i = 0; i <= e; ++i) s[e + r][r + e - i] = q.coeff_lam(i);
    return leibniz_det(s);
}

// Remove integer content and the largest monomial L^a M^b, sign so that the
// lexicographically largest (L, M) term is positive.  Input must be lam-free.
inline std::map<std::pair<int, int>, Int> normalize_lm(const Poly& p)
{
    std::map<std::pair<int, int>, Int> out;
    if (p.zero()) return out;
    Int g = 0;
    int a = 1 << 30, b = 1 << 30;
    for (const auto& [k, v] : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        a = std::min(a, k[1]);
        b = std::min(b, k[2]);
    }
    std::pair<int, int> top{-1, -1};
    Int topc;
    for (const auto& [k, v] : p.t) {
        std::pair<int, int> key{k[1] - a, k[2] - b};
        out[key] = v / g;
        if (key > top) {
            top = key;
            topc = v;
        }
    }
    if (topc < 0)
        for (auto& [k, v] : out) v = -v;
    return out;
}

// epsilon_i = (-1)^floor(i beta / alpha) by direct integer division
inline std::vector<int> floor_epsilon(int alpha, int beta)
{
    std::vector<int> e;
    for (int i = 1; i < alpha; ++i) {
        long q = static_cast<long>(i) * beta;
        long f = q >= 0 ? q / alpha : -((-q + alpha - 1) / alpha);
        e.push_back(f % 2 == 0 ? 1 : -1);
    }
    return e;
}

// brute-force inverse modulo alpha
inline int inverse_mod(int beta, int alpha)
{
    int b = ((beta % alpha) + alpha) % alpha;
    for (int x = 1; x < alpha; ++x)
        if (b * x % alpha == 1) return x;
    return 0;
}

// Knot classes S(alpha, beta) by brute force: beta ~ beta' iff beta' = beta^{+-1} mod alpha.
// Each class is reported by its sorted residues in (0, alpha).
inline std::vector<std::vector<int>> knot_classes(int alpha)
{
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (int b = 1; b < alpha; ++b) {
        if (std::gcd(b, alpha) != 1 || seen.count(b)) continue;
        std::set<int> cls{b, inverse_mod(b, alpha)};
        for (int x : cls) seen.insert(x);
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

// rho(x)^e and rho(y)^e in the standard Riley form
inline std::array<Poly, 4> rho(bool is_x, int e)
{
    if (is_x) {
        if (e > 0) return {M(1), Poly(1), Poly(), M(-1)};
        return {M(-1), Poly(-1), Poly(), M(1)};
    }
    if (e > 0) return {M(1), Poly(), lam(), M(-1)};
    return {M(-1), Poly(), Poly() - lam(), M(1)};
}

inline std::array<Poly, 4> matmul(const std::array<Poly, 4>& a, const std::array<Poly, 4>& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// W = x^e1 y^e2 x^e3 ..., entries in Z[M^+-1, lam]
inline std::array<Poly, 4> word_matrix(const std::vector<int>& eps)
{
    std::array<Poly, 4> w{Poly(1), Poly(), Poly(), Poly(1)};
    for (size_t i = 0; i < eps.size(); ++i) w = matmul(w, rho(i % 2 == 0, eps[i]));
    return w;
}

// Riley polynomial W11 - z W12 in lam
inline Poly riley_lambda(const std::vector<int>& eps)
{
    auto w = word_matrix(eps);
    return w[0] - (M(1) - M(-1)) * w[1];
}

// A-polynomial eliminant built from the word matrix: Res_lam(W11 - z W12, L M^(2 sigma) bar(W12) + W12)
inline Poly apoly_from_word(const std::vector<int>& eps)
{
    int sigma = std::accumulate(eps.begin(), eps.end(), 0);
    auto w = word_matrix(eps);
    Poly f = w[0] - (M(1) - M(-1)) * w[1];
    Poly elim = Lvar() * M(2 * sigma) * w[1].bar() + w[1];
    return sylvester_resultant(f, elim);
}

// Alexander polynomial by Fox calculus on <x, y | w x w^-1 y^-1>: the x-column of
// the abelianized Jacobian is (1 - t) phi(dw/dx) + t^sigma.  Returned as t-exponent -> coeff.
inline std::map<int, Int> fox_alexander(const std::vector<int>& eps)
{
    std::map<int, Int> dw;  // phi(dw/dx)
    int prefix = 0;
    for (size_t i = 0; i < eps.size(); ++i) {
        if (i % 2 == 0) {
            if (eps[i] > 0) dw[prefix] += 1;
            else dw[prefix - 1] -= 1;
        }
        prefix += eps[i];
    }
    std::map<int, Int> r;
    for (const auto& [k, v] : dw) {
        r[k] += v;
        r[k + 1] -= v;
    }
    r[prefix] += 1;
    std::map<int, Int> out;
    for (const auto& [k, v] : r)
        if (v != 0) out[k] = v;
    // shift to symmetric position and make the value at t = 1 positive
    if (out.empty()) return out;
    int lo = out.begin()->first, hi = out.rbegin()->first;
    Int at1 = 0;
    for (const auto& [k, v] : out) at1 += v;
    std::map<int, Int> sym;
    // exponents are integers when hi - lo is even, which holds for knots
    for (const auto& [k, v] : out) sym[k - (lo + hi) / 2] = at1 < 0 ? Int(-v) : v;
    return sym;
}

// Chebyshev-like sequence Ch_0 = a, Ch_1 = b, Ch_{k+1} = x Ch_k - Ch_{k-1} evaluated at an integer
inline Int cheb_int(int n, const Int& a, const Int& b, const Int& x)
{
    if (n == 0) return a;
    Int p = a, c = b;
    for (int k = 1; k < n; ++k) {
        Int nx = x * c - p;
        p = c;
        c = nx;
    }
    return c;
}

}  // namespace oracle

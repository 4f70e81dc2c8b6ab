#include <algorithm>
#include <climits>
#include <sstream>

#include "twobridge/bivar.hpp"

namespace twobridge {

BivarInt BivarInt::from_dense(const DensePoly2& d)
{
    BivarInt r;
    for (int l = 0; l < d.nl(); ++l)
        for (int m = 0; m < d.nm(); ++m)
            if (d.at(l, m) != 0) r.terms_.emplace(Key{l, m}, d.at(l, m));
    return r;
}

BivarInt BivarInt::from_lpoly(const LPoly& p, int* m_shift)
{
    int lo = INT_MAX;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) lo = std::min(lo, c.min_exp());
    if (lo == INT_MAX) lo = 0;
    BivarInt r;
    for (int l = 0; l <= p.degree(); ++l) {
        const LaurentInt& c = p.coeffs()[l];
        for (size_t i = 0; i < c.coeffs().size(); ++i)
            if (c.coeffs()[i] != 0) r.terms_.emplace(Key{l, c.min_exp() + static_cast<int>(i) - lo}, c.coeffs()[i]);
    }
    if (m_shift) *m_shift = -lo;
    return r;
}

DensePoly2 BivarInt::to_dense() const
{
    if (terms_.empty()) return {};
    DensePoly2 d(deg_L() + 1, deg_M() + 1);
    for (const auto& [k, v] : terms_) d.at(k.first, k.second) = v;
    return d;
}

LPoly BivarInt::to_lpoly() const
{
    if (terms_.empty()) return {};
    std::vector<LaurentInt> c(deg_L() + 1);
    for (const auto& [k, v] : terms_) c[k.first] += LaurentInt::monomial(v, k.second);
    return LPoly(std::move(c));
}

void BivarInt::add_term(int l, int m, const Int& c)
{
    if (l < 0 || m < 0) throw Error(ErrorCode::Range, "negative exponent in BivarInt");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{l, m}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int BivarInt::coeff(int l, int m) const
{
    auto it = terms_.find({l, m});
    return it == terms_.end() ? Int(0) : it->second;
}

int BivarInt::deg_L() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

int BivarInt::deg_M() const
{
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}

BivarInt BivarInt::operator-() const
{
    BivarInt r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

BivarInt operator+(const BivarInt& a, const BivarInt& b)
{
    BivarInt r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, v);
    return r;
}

BivarInt operator-(const BivarInt& a, const BivarInt& b) { return a + (-b); }

BivarInt operator*(const BivarInt& a, const BivarInt& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return BivarInt::from_dense(a.to_dense() * b.to_dense());
}

std::string BivarInt::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [l, m] = it->first;
        const Int& v = it->second;
        Int a = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        if (l > 0) mono += l == 1 ? "L" : "L^" + std::to_string(l);
        if (m > 0) {
            if (!mono.empty()) mono += "*";
            mono += m == 1 ? "M" : "M^" + std::to_string(m);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

std::string UnitReport::str() const
{
    std::ostringstream os;
    os << scalar.get_str();
    if (l_exp) os << "*L^" << l_exp;
    if (m_exp) os << "*M^" << m_exp;
    return os.str();
}

Normalized content_and_units(const BivarInt& r)
{
    if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "normalizing the zero polynomial");
    Int g = 0;
    int a = INT_MAX, b = INT_MAX;
    for (const auto& [k, v] : r.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        a = std::min(a, k.first);
        b = std::min(b, k.second);
    }
    if (r.terms().rbegin()->second < 0) g = -g;
    Normalized out;
    out.unit = {g, a, b};
    for (const auto& [k, v] : r.terms()) {
        Int q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        out.normalized.add_term(k.first - a, k.second - b, q);
    }
    return out;
}

}  // namespace twobridge

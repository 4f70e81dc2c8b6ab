#include <algorithm>
#include <climits>
#include <numeric>

#include "twobridge/resultant.hpp"

namespace twobridge {

namespace {

using PolyD = std::vector<DensePoly2>;

int deg(const PolyD& a) { return static_cast<int>(a.size()) - 1; }

void trim(PolyD& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool is_zero(const PolyD& a) { return a.empty(); }

// lc(b)^(deg a - deg b + 1) * a mod b
PolyD prem(PolyD r, const PolyD& b)
{
    const DensePoly2& lb = b.back();
    int db = deg(b);
    int e = deg(r) - db + 1;
    bool unit = lb == DensePoly2::constant(1);
    while (!is_zero(r) && deg(r) >= db) {
        DensePoly2 lr = r.back();
        int k = deg(r) - db;
        if (!unit)
            for (auto& c : r) c = c * lb;
        for (int i = 0; i < db; ++i)
            if (!b[i].is_zero()) r[i + k] = r[i + k] - lr * b[i];
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0 && !unit) {
        DensePoly2 f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : r) c = c * f;
    }
    return r;
}

struct PrsOutcome {
    DensePoly2 res;
    PolyD last;
};

PrsOutcome subresultant(PolyD a, PolyD b)
{
    trim(a);
    trim(b);
    if (is_zero(a) || is_zero(b)) throw Error(ErrorCode::EmptyInput, "resultant of a zero polynomial");
    int da = deg(a), db = deg(b);
    if (db == 0) return {b[0].pow(static_cast<unsigned>(da)), b};
    if (da == 0) return {a[0].pow(static_cast<unsigned>(db)), a};

    int s = 1;
    if (da < db) {
        std::swap(a, b);
        if ((da & 1) && (db & 1)) s = -1;
    }
    DensePoly2 g = DensePoly2::constant(1), h = DensePoly2::constant(1);
    for (;;) {
        int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
        PolyD r = prem(a, b);
        if (is_zero(r)) return {DensePoly2(), b};
        a = std::move(b);
        DensePoly2 div = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r) c = divexact_or_throw(c, div);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = divexact_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        if (deg(b) == 0) break;
    }
    int dA = deg(a);
    DensePoly2 hh = divexact_or_throw(b[0].pow(static_cast<unsigned>(dA)), h.pow(static_cast<unsigned>(dA - 1)));
    return {s < 0 ? -hh : hh, b};
}

PolyD deflate_m(const PolyD& a, int w)
{
    PolyD out;
    for (const auto& c : a) {
        if (c.is_zero()) {
            out.emplace_back();
            continue;
        }
        DensePoly2 d(c.nl(), (c.nm() - 1) / w + 1);
        for (int l = 0; l < c.nl(); ++l)
            for (int m = 0; m < d.nm(); ++m) d.at(l, m) = c.at(l, m * w);
        out.push_back(std::move(d));
    }
    return out;
}

DensePoly2 inflate_m(const DensePoly2& c, int w)
{
    if (c.is_zero()) return c;
    DensePoly2 d(c.nl(), (c.nm() - 1) * w + 1);
    for (int l = 0; l < c.nl(); ++l)
        for (int m = 0; m < c.nm(); ++m) d.at(l, m * w) = c.at(l, m);
    return d;
}

}  // namespace

// Laurent coefficients -> Z[L,M] after multiplying by M^-min
std::vector<DensePoly2> clear_denominators(const LamPolyL& p, int& shift)
{
    int lo = INT_MAX;
    for (const auto& lp : p.coeffs())
        for (const auto& c : lp.coeffs())
            if (!c.is_zero()) lo = std::min(lo, c.min_exp());
    if (lo == INT_MAX) lo = 0;
    shift = lo;
    PolyD out;
    for (const auto& lp : p.coeffs()) out.push_back(dense_from_lpoly(lp.coeffs(), -lo));
    return out;
}

DensePoly2 resultant_prs(const std::vector<DensePoly2>& p, const std::vector<DensePoly2>& q)
{
    return subresultant(p, q).res;
}

std::vector<DensePoly2> prs_last_remainder(const std::vector<DensePoly2>& p,
                                           const std::vector<DensePoly2>& q)
{
    return subresultant(p, q).last;
}

LPoly resultant(const LamPolyL& p, const LamPolyL& q, const ResultantOptions& opt)
{
    if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::EmptyInput, "resultant of a zero polynomial");
    int sp = 0, sq = 0;
    PolyD a = clear_denominators(p, sp), b = clear_denominators(q, sq);
    // everything in Z[M^w] for the common exponent gcd w: work in M^w
    int w = 0;
    for (const PolyD* x : {&a, &b})
        for (const auto& c : *x)
            for (int l = 0; l < c.nl(); ++l)
                for (int m = 1; m < c.nm() && w != 1; ++m)
                    if (c.at(l, m) != 0) w = std::gcd(w, m);
    if (w > 1) {
        a = deflate_m(a, w);
        b = deflate_m(b, w);
    }
    DensePoly2 r = opt.strategy == ResultantStrategy::Prs ? resultant_prs(a, b)
                                                          : resultant_evalinterp(a, b, opt.threads);
    if (w > 1) r = inflate_m(r, w);
    // Res(M^sp a, M^sq b) = M^(sp*deg b + sq*deg a) Res(a, b)
    int shift = sp * q.degree() + sq * p.degree();
    std::vector<LaurentInt> lc;
    for (int l = 0; l < r.nl(); ++l) {
        std::vector<Int> row(r.nm());
        for (int m = 0; m < r.nm(); ++m) row[m] = r.at(l, m);
        lc.push_back(LaurentInt::from_coeffs(shift, std::move(row)));
    }
    return LPoly(std::move(lc));
}

LaurentInt resultant_lambda(const LamPoly& p, const LamPoly& q, const ResultantOptions& opt)
{
    check_tags(p, q);
    auto lift = [](const LamPoly& x) {
        std::vector<LPoly> c;
        for (const auto& v : x.poly().coeffs()) c.push_back(LPoly(v));
        return LamPolyL(std::move(c));
    };
    return resultant(lift(p), lift(q), opt).coeff(0);
}

}  // namespace twobridge

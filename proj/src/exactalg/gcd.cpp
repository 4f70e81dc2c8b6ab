#include <algorithm>

#include "twobridge/bivar.hpp"

namespace twobridge {

namespace {

constexpr size_t kLimbBits = 8 * sizeof(mp_limb_t);

// make the L-major leading coefficient positive
DensePoly2 fix_sign(DensePoly2 a)
{
    if (a.is_zero()) return a;
    int l = a.nl() - 1;
    for (int m = a.nm() - 1; m >= 0; --m)
        if (a.at(l, m) != 0) return a.at(l, m) < 0 ? -a : a;
    return a;
}

DensePoly2 primitive(const DensePoly2& a)
{
    Int c = a.content();
    return c == 1 || c == 0 ? a : a.divexact_int(c);
}

// heuristic gcd of primitive a, b.  One variable is replaced by a large
// power of two at a time: substituting both at once is a ring map that can
// create spurious common factors.
bool gcd_heu_uni(const DensePoly2& a, const DensePoly2& b, DensePoly2& g);

bool gcd_heu(const DensePoly2& a, const DensePoly2& b, DensePoly2& g)
{
    if (a.nm() <= 1 && b.nm() <= 1) return gcd_heu_uni(a, b, g);
    int stride = std::max(a.nm(), b.nm());
    size_t base_bits = 2 * std::min(a.max_bits(), b.max_bits()) + 8;
    for (int attempt = 0; attempt < 4; ++attempt) {
        size_t k = (base_bits << attempt) / kLimbBits + 1;
        auto image = [&](const DensePoly2& x) {
            DensePoly2 r(x.nl(), 1);
            for (int l = 0; l < x.nl(); ++l) r.at(l, 0) = kronecker_pack(x.row(l), x.nm(), k, x.nm());
            r.trim();
            return r;
        };
        DensePoly2 gam = gcd(image(a), image(b));
        DensePoly2 h(gam.nl(), stride);
        bool ok = true;
        std::vector<Int> dig;
        for (int l = 0; l < gam.nl() && ok; ++l) {
            ok = kronecker_unpack(gam.at(l, 0), k, stride, dig);
            for (int m = 0; ok && m < stride; ++m) h.at(l, m) = dig[m];
        }
        if (!ok) continue;
        h.trim();
        if (h.is_zero()) continue;
        h = fix_sign(primitive(h));
        DensePoly2 qa, qb;
        if (divexact(a, h, qa) && divexact(b, h, qb)) {
            g = h;
            return true;
        }
    }
    return false;
}

// univariate case (one of the variables absent): plain evaluation
bool gcd_heu_uni(const DensePoly2& a0, const DensePoly2& b0, DensePoly2& g)
{
    bool in_m = a0.nl() <= 1 && b0.nl() <= 1;
    DensePoly2 a = in_m ? a0.transpose() : a0, b = in_m ? b0.transpose() : b0;
    size_t base_bits = 2 * std::min(a.max_bits(), b.max_bits()) + 8;
    for (int attempt = 0; attempt < 6; ++attempt) {
        size_t k = (base_bits << attempt) / kLimbBits + 1;
        Int va = kronecker_pack(a, 1, k, a.nl()), vb = kronecker_pack(b, 1, k, b.nl());
        Int gam;
        mpz_gcd(gam.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        int nl = std::min(a.nl(), b.nl());
        std::vector<Int> dig;
        if (!kronecker_unpack(gam, k, nl, dig)) continue;
        DensePoly2 h(nl, 1);
        for (int l = 0; l < nl; ++l) h.at(l, 0) = dig[l];
        h.trim();
        if (h.is_zero()) continue;
        h = fix_sign(primitive(h));
        DensePoly2 qa, qb;
        if (divexact(a, h, qa) && divexact(b, h, qb)) {
            g = in_m ? fix_sign(h.transpose()) : h;
            return true;
        }
    }
    return false;
}

using Rows = std::vector<DensePoly2>;

Rows to_rows(const DensePoly2& a)
{
    Rows r;
    for (int l = 0; l < a.nl(); ++l) r.push_back(a.row(l));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

DensePoly2 from_rows(const Rows& r)
{
    DensePoly2 out;
    for (size_t l = 0; l < r.size(); ++l) out = out + r[l].shifted(static_cast<int>(l), 0);
    return out;
}

DensePoly2 content_L(const DensePoly2& a)
{
    DensePoly2 c;
    for (int l = 0; l < a.nl(); ++l) {
        DensePoly2 row = a.row(l);
        if (row.is_zero()) continue;
        c = c.is_zero() ? fix_sign(row) : gcd(c, row);
        if (c.is_constant()) break;
    }
    return c;
}

Rows prem_rows(Rows r, const Rows& b)
{
    const DensePoly2& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        DensePoly2 lr = r.back();
        int k = static_cast<int>(r.size()) - 1 - db;
        for (auto& c : r) c = c * lb;
        for (int i = 0; i < db; ++i) r[i + k] = r[i + k] - lr * b[i];
        r.pop_back();
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return r;
}

DensePoly2 gcd_prs(const DensePoly2& a, const DensePoly2& b)
{
    if (a.nl() <= 1 && b.nl() <= 1) {
        if (a.nm() <= 1 && b.nm() <= 1) {
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get(0, 0).get_mpz_t(), b.get(0, 0).get_mpz_t());
            return DensePoly2::constant(g);
        }
        return gcd_prs(a.transpose(), b.transpose()).transpose();
    }
    if (a.nl() <= 1) return gcd(a, content_L(b));
    if (b.nl() <= 1) return gcd(content_L(a), b);

    DensePoly2 ca = content_L(a), cb = content_L(b);
    DensePoly2 c = gcd(ca, cb);
    Rows x = to_rows(divexact_or_throw(a, ca)), y = to_rows(divexact_or_throw(b, cb));
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Rows r = prem_rows(x, y);
        x = std::move(y);
        if (r.empty()) break;
        DensePoly2 rp = from_rows(r);
        y = to_rows(divexact_or_throw(rp, content_L(rp)));
        if (y.size() == 1) {
            x = {DensePoly2::constant(1)};
            break;
        }
    }
    DensePoly2 g = from_rows(x);
    if (g.nl() > 1) g = divexact_or_throw(g, content_L(g));
    else g = DensePoly2::constant(1);
    return fix_sign(c * g);
}

// Yun's algorithm w.r.t. L on a primitive polynomial of positive L-degree
std::vector<std::pair<DensePoly2, int>> yun(const DensePoly2& f)
{
    std::vector<std::pair<DensePoly2, int>> out;
    DensePoly2 fp = f.deriv_L();
    DensePoly2 a0 = gcd(f, fp);
    DensePoly2 b = divexact_or_throw(f, a0);
    DensePoly2 c = divexact_or_throw(fp, a0);
    DensePoly2 d = c - b.deriv_L();
    for (int i = 1; b.nl() > 1; ++i) {
        DensePoly2 a = gcd(b, d);
        b = divexact_or_throw(b, a);
        c = divexact_or_throw(d, a);
        d = c - b.deriv_L();
        if (a.nl() > 1) out.emplace_back(a, i);
    }
    return out;
}

}  // namespace

DensePoly2 gcd(const DensePoly2& a, const DensePoly2& b)
{
    if (a.is_zero()) return fix_sign(b);
    if (b.is_zero()) return fix_sign(a);
    Int ca = a.content(), cb = b.content(), ci;
    mpz_gcd(ci.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    DensePoly2 pa = a.divexact_int(ca), pb = b.divexact_int(cb);
    if (pa.is_constant() || pb.is_constant()) return DensePoly2::constant(ci);
    DensePoly2 g;
    if (!gcd_heu(pa, pb, g)) g = gcd_prs(pa, pb);
    return fix_sign(g.scaled(ci));
}

BivarInt gcd(const BivarInt& a, const BivarInt& b)
{
    return BivarInt::from_dense(gcd(a.to_dense(), b.to_dense()));
}

SquarefreeResult squarefree_part(const BivarInt& r, Variable wrt)
{
    if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree part of zero");
    DensePoly2 f = r.to_dense();
    if (wrt == Variable::M) f = f.transpose();
    f = primitive(f);

    auto flip = [&](const DensePoly2& x) { return wrt == Variable::M ? x.transpose() : x; };
    SquarefreeResult out;
    DensePoly2 sqf = DensePoly2::constant(1);

    // factors free of the main variable live in the content
    DensePoly2 cont = content_L(f);
    DensePoly2 pp = divexact_or_throw(f, cont);
    if (!cont.is_constant()) {
        DensePoly2 ct = primitive(cont.transpose());
        for (auto& [fac, mult] : yun(ct)) {
            DensePoly2 back = fix_sign(fac.transpose());
            sqf = sqf * back;
            if (mult > 1) out.multiplicities.emplace_back(BivarInt::from_dense(flip(back)), mult);
        }
    }
    if (pp.nl() > 1) {
        for (auto& [fac, mult] : yun(pp)) {
            sqf = sqf * fac;
            if (mult > 1) out.multiplicities.emplace_back(BivarInt::from_dense(flip(fix_sign(fac))), mult);
        }
    }
    out.squarefree = BivarInt::from_dense(flip(fix_sign(sqf)));
    return out;
}

}  // namespace twobridge

#include "twobridge/riley.hpp"

namespace twobridge {

namespace {

LamPoly lt_const(const LaurentInt& c) { return LamPoly::constant(VarTag::LambdaTilde, c); }

LaurentInt mono(int e) { return LaurentInt::monomial(1, e); }

Mat2 diag(const LamPoly& a, const LamPoly& b)
{
    VarTag t = a.tag();
    return {a, LamPoly(t), LamPoly(t), b};
}

Mat2 rho_x(int e)
{
    VarTag t = VarTag::Lambda;
    if (e > 0) return {LamPoly::constant(t, mono(1)), LamPoly::constant(t, 1), LamPoly(t), LamPoly::constant(t, mono(-1))};
    return {LamPoly::constant(t, mono(-1)), LamPoly::constant(t, -1), LamPoly(t), LamPoly::constant(t, mono(1))};
}

Mat2 rho_y(int e)
{
    VarTag t = VarTag::Lambda;
    LamPoly lam = LamPoly::var(t);
    if (e > 0) return {LamPoly::constant(t, mono(1)), LamPoly(t), lam, LamPoly::constant(t, mono(-1))};
    return {LamPoly::constant(t, mono(-1)), LamPoly(t), -lam, LamPoly::constant(t, mono(1))};
}

Mat2 word(const std::vector<int>& eps, bool exchanged)
{
    Mat2 w = Mat2::identity(VarTag::Lambda);
    for (size_t i = 0; i < eps.size(); ++i) {
        bool use_x = (i % 2 == 0) != exchanged;
        w = w * (use_x ? rho_x(eps[i]) : rho_y(eps[i]));
    }
    return w;
}

}  // namespace

RileyPair riley_recursive(const HalfSeq& h)
{
    if (h.e.empty()) throw Error(ErrorCode::EmptySequence, "half sequence is empty");
    LamPoly lt = LamPoly::var(VarTag::LambdaTilde);
    LamPoly one = lt_const(1);
    RileyPair r;
    r.f = {one, one + lt};
    r.g = {LamPoly(VarTag::LambdaTilde), lt_const(LaurentInt::monomial(h.e[0], -h.e[0]))};
    LaurentInt m_sum = mono(1) + mono(-1);
    for (int n = 2; n <= h.n(); ++n) {
        int e = h.e[n - 1];
        LamPoly gb = r.g[n - 1].bar();
        LamPoly fn = mono(2 * e) * r.f[n - 2] + (lt + lt_const(1 - mono(2 * e))) * r.f[n - 1] +
                     LaurentInt(e) * m_sum * (lt * gb);
        LamPoly gn = LaurentInt::monomial(e, -e) * r.f[n - 1] + mono(-2 * e) * gb;
        r.f.push_back(std::move(fn));
        r.g.push_back(std::move(gn));
    }
    return r;
}

std::vector<LamPoly> riley_delta(const HalfSeq& h)
{
    if (h.e.empty()) throw Error(ErrorCode::EmptySequence, "half sequence is empty");
    LamPoly lt = LamPoly::var(VarTag::LambdaTilde);
    LaurentInt s = laurent_s();
    std::vector<LamPoly> f{lt_const(1), lt_const(1) + lt};
    if (h.n() >= 2) {
        // f_2 depends only on delta_2
        LaurentInt mid = h.delta[1] == 1 ? LaurentInt(3) : -(s + 1);
        f.push_back(lt * lt + mid * lt + lt_const(1));
    }
    for (int n = 3; n <= h.n(); ++n) {
        int d = h.delta[n - 1];
        LamPoly factor = lt + lt_const(d == 1 ? LaurentInt(1) : -(s + 1));
        f.push_back(factor * (f[n - 1] + LaurentInt(d) * f[n - 2]) - LaurentInt(d) * f[n - 3]);
    }
    return f;
}

Mat2 w_matrix(const std::vector<int>& eps) { return word(eps, false); }

Mat2 w_star_matrix(const std::vector<int>& eps) { return word(eps, true); }

LamPoly riley_direct(const EpsilonSeq& eps)
{
    Mat2 w = w_matrix(eps.eps);
    return w.a11 - laurent_z() * w.a12;
}

QuandleFG quandle_fg(const EpsilonSeq& eps)
{
    VarTag t = VarTag::LambdaTilde;
    LamPoly lt = LamPoly::var(t);
    // diagonal matrices as entry pairs
    LamPoly f1 = lt_const(1), f2 = lt_const(1), g1(t), g2(t);
    const LamPoly ab1 = lt_const(-1), ab2 = lt, ba1 = -lt, ba2 = lt_const(1);
    for (size_t i = 1; i <= eps.eps.size(); ++i) {
        int e = eps.eps[i - 1];
        LaurentInt ep = mono(e), em = mono(-e);
        if (i % 2 == 1) {
            LamPoly nf1 = f1 * em, nf2 = f2 * ep;
            LamPoly ng1 = g1 * ep - LaurentInt(e) * (ab1 * f1);
            LamPoly ng2 = g2 * em - LaurentInt(e) * (ab2 * f2);
            f1 = nf1, f2 = nf2, g1 = ng1, g2 = ng2;
        } else {
            LamPoly nf1 = f1 * ep - LaurentInt(e) * (ba1 * g1);
            LamPoly nf2 = f2 * em - LaurentInt(e) * (ba2 * g2);
            g1 = g1 * em, g2 = g2 * ep;
            f1 = nf1, f2 = nf2;
        }
    }
    return {diag(f1, f2), diag(g1, g2)};
}

}  // namespace twobridge

#include "twobridge/apoly.hpp"

namespace twobridge {

namespace {

LPoly lpoly_const(const LaurentInt& c) { return LPoly(c); }

LamPolyL lift(const LamPoly& p)
{
    std::vector<LPoly> c;
    for (const auto& v : p.poly().coeffs()) c.push_back(lpoly_const(v));
    return LamPolyL(std::move(c));
}

}  // namespace

LongitudePair longitude_pair(const RileyPair& pair, const EpsilonSeq& eps)
{
    LongitudePair lp;
    lp.f = pair.f_n();
    lp.g = pair.g_n();
    lp.sigma = eps.sigma();
    LamPoly gb = lp.g.bar();
    LaurentInt m2s = LaurentInt::monomial(1, 2 * lp.sigma);
    std::vector<LPoly> c;
    for (int k = 0; k <= std::max(lp.g.degree(), gb.degree()); ++k)
        c.push_back(LPoly(std::vector<LaurentInt>{lp.g.coeff(k), m2s * gb.coeff(k)}));
    lp.elim = LamPolyL(std::move(c));
    return lp;
}

APolyResult finish_apoly(const LPoly& res)
{
    APolyResult out;
    out.raw = BivarInt::from_lpoly(res, &out.m_shift);
    Normalized nz = content_and_units(out.raw);
    out.normalized = nz.normalized;
    out.unit = nz.unit;
    SquarefreeResult sq = squarefree_part(out.normalized, Variable::L);
    out.squarefree = sq.squarefree;
    out.multiplicities = sq.multiplicities;
    return out;
}

namespace {

APolyResult eliminate_lifted(const LamPolyL& f, const LamPolyL& q, const ResultantOptions& ro)
{
    LPoly res = resultant(f, q, ro);
    if (res.is_zero()) {
        int sf = 0, sq = 0;
        auto a = clear_denominators(f, sf), b = clear_denominators(q, sq);
        auto gcd_rows = prs_last_remainder(a, b);
        std::string desc;
        for (size_t k = 0; k < gcd_rows.size(); ++k)
            desc += (k ? " | " : "") + BivarInt::from_dense(gcd_rows[k]).str();
        throw Error(ErrorCode::Degenerate, "resultant vanishes; common factor in lambda-tilde with coefficients [" +
                                               desc + "]");
    }
    return finish_apoly(res);
}

}  // namespace

APolyResult eliminate(const LongitudePair& lp, const APolyOptions& opt)
{
    if (lp.f.degree() < 1) throw Error(ErrorCode::Range, "Riley polynomial has no lambda-tilde");
    return eliminate_lifted(lift(lp.f), lp.elim, {opt.strategy, opt.threads});
}

LamPoly reduce_mod(const LamPoly& p, const LamPoly& f)
{
    check_tags(p, f);
    const LaurentInt& lf = f.lead();
    if (!(lf == LaurentInt(1) || lf == LaurentInt(-1)))
        throw Error(ErrorCode::Nonintegral, "divisor is not monic up to sign");
    LamPoly r = p;
    int df = f.degree();
    while (!r.is_zero() && r.degree() >= df) {
        LaurentInt c = r.lead() * lf;
        r -= LamPoly(f.tag(), Poly<LaurentInt>::monomial(c, r.degree() - df)) * f;
    }
    return r;
}

LongitudeWitness longitude_witness(const LongitudePair& lp)
{
    LamPoly lt = LamPoly::var(lp.f.tag());
    return {reduce_mod(lt * lp.g * lp.g, lp.f), lp.sigma};
}

APolyResult eliminate_witness(const LongitudePair& lp, const LongitudeWitness& w, const APolyOptions& opt)
{
    // L M^(2 sigma) - witness, as a polynomial in lambda-tilde over Z[M^+-1][L]
    std::vector<LPoly> c;
    for (int k = 0; k <= std::max(0, w.L_value_mod_f.degree()); ++k) {
        std::vector<LaurentInt> lc{-w.L_value_mod_f.coeff(k)};
        if (k == 0) lc.push_back(LaurentInt::monomial(1, 2 * w.sigma));
        c.push_back(LPoly(std::move(lc)));
    }
    return eliminate_lifted(lift(lp.f), LamPolyL(std::move(c)), {opt.strategy, opt.threads});
}

APolyResult a_polynomial(const EpsilonSeq& eps, const APolyOptions& opt)
{
    RileyPair rp = riley_recursive(half_sequences(eps));
    return eliminate(longitude_pair(rp, eps), opt);
}

APolyResult a_polynomial(const TwoBridgeFraction& fr, const APolyOptions& opt)
{
    return a_polynomial(epsilon_from_fraction(fr), opt);
}

BivarInt invert_L(const BivarInt& p)
{
    int d = p.deg_L();
    BivarInt r;
    for (const auto& [k, v] : p.terms()) r.add_term(d - k.first, k.second, v);
    return content_and_units(r).normalized;
}

}  // namespace twobridge

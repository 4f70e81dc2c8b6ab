#include <doctest.h>

#include "oracles.hpp"
#include "twobridge/apoly.hpp"
#include "twobridge/error.hpp"

using namespace twobridge;

namespace {

BivarInt bivar(std::initializer_list<std::tuple<int, int, long>> terms)
{
    BivarInt b;
    for (auto [l, m, c] : terms) b.add_term(l, m, c);
    return b;
}

std::map<std::pair<int, int>, Int> as_map(const BivarInt& b)
{
    std::map<std::pair<int, int>, Int> m;
    for (const auto& [k, v] : b.terms()) m[k] = v;
    return m;
}

const BivarInt kTrefoil = bivar({{1, 6, 1}, {0, 0, 1}});
const BivarInt kTorus5 = bivar({{1, 10, 1}, {0, 0, 1}});
const BivarInt kFigureEight =
    bivar({{2, 4, 1}, {1, 8, -1}, {1, 6, 1}, {1, 4, 2}, {1, 2, 1}, {1, 0, -1}, {0, 4, 1}});

LaurentInt mono(long c, int e) { return LaurentInt::monomial(c, e); }

}  // namespace

TEST_CASE("longitude pair assembly")
{
    EpsilonSeq t = parse_epsilon("++");
    LongitudePair lp = longitude_pair(riley_recursive(half_sequences(t)), t);
    CHECK(lp.sigma == 2);
    CHECK(lp.elim == LamPolyL(std::vector<LPoly>{LPoly(std::vector<LaurentInt>{mono(1, -1), mono(1, 5)})}));

    EpsilonSeq f8 = parse_epsilon("+--+");
    RileyPair r = riley_recursive(half_sequences(f8));
    LongitudePair lf = longitude_pair(r, f8);
    CHECK(lf.sigma == 0);
    CHECK(lf.elim.degree() == 1);
    for (int k = 0; k <= 1; ++k) {
        LPoly want(std::vector<LaurentInt>{r.g_n().coeff(k), r.g_n().bar().coeff(k)});
        CHECK(lf.elim.coeffs()[k] == want);
    }
}

TEST_CASE("desk-scale A-polynomials")
{
    CHECK(a_polynomial(make_fraction(3, 1)).normalized == kTrefoil);
    CHECK(a_polynomial(make_fraction(5, 3)).normalized == kFigureEight);
    APolyResult t5 = a_polynomial(make_fraction(5, 1));
    CHECK(t5.squarefree == kTorus5);
    CHECK(t5.normalized == kTorus5 * kTorus5);
    REQUIRE(t5.multiplicities.size() == 1);
    CHECK(t5.multiplicities[0].second == 2);
    // the figure-eight result is already squarefree
    APolyResult f8 = a_polynomial(make_fraction(5, 3));
    CHECK(f8.squarefree == f8.normalized);
    CHECK(f8.multiplicities.empty());
}

TEST_CASE("A-polynomials match the Sylvester determinant of the word matrix")
{
    CHECK(oracle::normalize_lm(oracle::apoly_from_word({1, 1})) == as_map(kTrefoil));
    CHECK(oracle::normalize_lm(oracle::apoly_from_word({1, -1, -1, 1})) == as_map(kFigureEight));
    for (const auto& c : census(9)) {
        EpsilonSeq eps = epsilon_from_fraction(c.fraction);
        APolyResult r = a_polynomial(c.fraction);
        CHECK_MESSAGE(as_map(r.normalized) == oracle::normalize_lm(oracle::apoly_from_word(eps.eps)),
                      c.fraction.str());
    }
}

TEST_CASE("strategies agree")
{
    for (const auto& c : census(21)) {
        APolyResult p = a_polynomial(c.fraction, {ResultantStrategy::Prs, 1});
        APolyResult e = a_polynomial(c.fraction, {ResultantStrategy::EvalInterp, 1});
        CHECK_MESSAGE(p.raw == e.raw, c.fraction.str());
        CHECK(p.m_shift == e.m_shift);
        CHECK(p.normalized == e.normalized);
    }
}

TEST_CASE("witness elimination agrees on squarefree parts")
{
    EpsilonSeq t = parse_epsilon("++");
    LongitudePair lp = longitude_pair(riley_recursive(half_sequences(t)), t);
    LongitudeWitness w = longitude_witness(lp);
    CHECK(w.L_value_mod_f == LamPoly::constant(VarTag::LambdaTilde, mono(-1, -2)));

    for (const auto& c : census(19)) {
        EpsilonSeq eps = epsilon_from_fraction(c.fraction);
        LongitudePair p = longitude_pair(riley_recursive(half_sequences(eps)), eps);
        LongitudeWitness wit = longitude_witness(p);
        CHECK(wit.L_value_mod_f.degree() < p.f.degree());
        CHECK_MESSAGE(eliminate_witness(p, wit).squarefree == eliminate(p).squarefree, c.fraction.str());
    }
}

TEST_CASE("witness of a synthetic f = lambda-tilde is zero")
{
    LongitudePair lp;
    lp.f = LamPoly::var(VarTag::LambdaTilde);
    lp.g = LamPoly::constant(VarTag::LambdaTilde, mono(1, -1));
    lp.sigma = 0;
    CHECK(longitude_witness(lp).L_value_mod_f.is_zero());
}

TEST_CASE("common factor is reported as degenerate")
{
    const VarTag LT = VarTag::LambdaTilde;
    LamPoly a(LT, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(1)});
    LamPoly b(LT, std::vector<LaurentInt>{LaurentInt(2), LaurentInt(1)});
    LongitudePair lp;
    lp.f = a * b;
    lp.g = a;
    lp.sigma = 0;
    // elim = (L + 1)(1 + lambda-tilde)
    LPoly lp1(std::vector<LaurentInt>{LaurentInt(1), LaurentInt(1)});
    lp.elim = LamPolyL(std::vector<LPoly>{lp1, lp1});
    try {
        (void)eliminate(lp);
        FAIL("expected DEGENERATE");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Degenerate);
    }
}

TEST_CASE("mirror images invert L")
{
    for (const auto& c : census(15)) {
        int a = c.fraction.alpha, b = c.fraction.beta;
        APolyResult r = a_polynomial(c.fraction);
        APolyResult m = a_polynomial(make_fraction(a, a - b));
        CHECK_MESSAGE(m.normalized == invert_L(r.normalized), c.fraction.str());
    }
}

TEST_CASE("reduce modulo a unit-leading polynomial")
{
    const VarTag LT = VarTag::LambdaTilde;
    LamPoly f(LT, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(1)});
    LamPoly p(LT, std::vector<LaurentInt>{LaurentInt(0), mono(1, -2)});
    CHECK(reduce_mod(p, f) == LamPoly::constant(LT, mono(-1, -2)));
    LamPoly q(LT, std::vector<LaurentInt>{LaurentInt(3), mono(2, 1), LaurentInt(1)});
    LamPoly r = reduce_mod(q * f + LamPoly::constant(LT, mono(5, 3)), f);
    CHECK(r == LamPoly::constant(LT, mono(5, 3)));
}

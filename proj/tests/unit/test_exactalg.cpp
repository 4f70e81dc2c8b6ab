#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twobridge/bivar.hpp"
#include "twobridge/dense2.hpp"
#include "twobridge/error.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/poly.hpp"
#include "twobridge/resultant.hpp"

using namespace twobridge;

namespace {

LaurentInt lp(int lo, std::vector<long> c)
{
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return LaurentInt::from_coeffs(lo, v);
}

LaurentInt random_laurent(std::mt19937_64& rng, int span = 5)
{
    int lo = static_cast<int>(rng() % 7) - 3;
    int n = 1 + static_cast<int>(rng() % span);
    std::vector<Int> v;
    for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng() % 19) - 9);
    return LaurentInt::from_coeffs(lo, v);
}

LamPoly random_lampoly(std::mt19937_64& rng, int maxdeg, VarTag tag = VarTag::LambdaTilde)
{
    int d = static_cast<int>(rng() % (maxdeg + 1));
    std::vector<LaurentInt> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_laurent(rng, 3));
    if (c.back().is_zero()) c.back() = LaurentInt(1);
    return LamPoly(tag, c);
}

// library LamPoly in lambda-tilde -> oracle poly (lam slot)
oracle::Poly to_oracle(const LamPoly& p)
{
    oracle::Poly r;
    for (int i = 0; i <= p.degree(); ++i) {
        const LaurentInt& c = p.coeff(i);
        for (size_t j = 0; j < c.coeffs().size(); ++j)
            r.add({i, 0, c.min_exp() + static_cast<int>(j)}, c.coeffs()[j]);
    }
    return r;
}

oracle::Poly to_oracle(const LaurentInt& c)
{
    oracle::Poly r;
    for (size_t j = 0; j < c.coeffs().size(); ++j) r.add({0, 0, c.min_exp() + static_cast<int>(j)}, c.coeffs()[j]);
    return r;
}

oracle::Poly to_oracle(const LPoly& p)
{
    oracle::Poly r;
    for (int l = 0; l <= p.degree(); ++l) {
        const LaurentInt& c = p.coeffs()[l];
        for (size_t j = 0; j < c.coeffs().size(); ++j)
            r.add({0, l, c.min_exp() + static_cast<int>(j)}, c.coeffs()[j]);
    }
    return r;
}

}  // namespace

TEST_CASE("laurent products")
{
    LaurentInt z = laurent_z();
    CHECK(laurent_mul(z, z) == lp(-2, {1, 0, -2, 0, 1}));
    CHECK(laurent_mul(z, z) == laurent_s());
    CHECK(laurent_mul(LaurentInt(0), LaurentInt::monomial(1, 3)).is_zero());
    LaurentInt sum = lp(-1, {1, 0, 1});
    CHECK(laurent_mul(sum, z) == lp(-2, {-1, 0, 0, 0, 1}));
}

TEST_CASE("laurent bar")
{
    CHECK(laurent_bar(lp(0, {3, 0, 1})) == lp(-2, {1, 0, 3}));
    CHECK(laurent_bar(laurent_z()) == -laurent_z());
    CHECK(laurent_bar(LaurentInt()).is_zero());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentInt a = random_laurent(rng);
        CHECK(laurent_bar(laurent_bar(a)) == a);
    }
}

TEST_CASE("lampoly arithmetic")
{
    LamPoly one_plus = LamPoly(VarTag::LambdaTilde, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(1)});
    CHECK(one_plus * one_plus == LamPoly(VarTag::LambdaTilde, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(2), LaurentInt(1)}));
    LamPoly f2(VarTag::LambdaTilde, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(3), LaurentInt(1)});
    CHECK(f2.eval(LaurentInt(0)) == LaurentInt(1));
    CHECK(laurent_z() * LaurentInt::monomial(1, -1) == lp(-2, {-1, 0, 1}));

    LamPoly other(VarTag::Lambda, std::vector<LaurentInt>{LaurentInt(1)});
    try {
        (void)(one_plus + other);
        FAIL("expected TAG_MISMATCH");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TagMismatch);
    }
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        LaurentInt a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        LamPoly p = random_lampoly(rng, 3), q = random_lampoly(rng, 3), r = random_lampoly(rng, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(to_oracle(p * q) == to_oracle(p) * to_oracle(q));
    }
}

TEST_CASE("substitute lambda")
{
    LaurentInt s = laurent_s();
    LamPoly f1(VarTag::LambdaTilde, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(1)});
    LamPoly g = substitute_lambda(f1, s, VarTag::Lambda);
    CHECK(g.tag() == VarTag::Lambda);
    CHECK(g == LamPoly(VarTag::Lambda, std::vector<LaurentInt>{LaurentInt(1) + s, LaurentInt(1)}));

    LamPoly sq = LamPoly::var(VarTag::LambdaTilde) * LamPoly::var(VarTag::LambdaTilde);
    CHECK(substitute_lambda(sq, s, VarTag::Lambda) ==
          LamPoly(VarTag::Lambda, std::vector<LaurentInt>{s * s, LaurentInt(2) * s, LaurentInt(1)}));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        LamPoly p = random_lampoly(rng, 4);
        LaurentInt sh = random_laurent(rng);
        CHECK(substitute_lambda(substitute_lambda(p, sh, VarTag::Lambda), -sh, VarTag::LambdaTilde) == p);
    }
}

TEST_CASE("resultant small cases")
{
    LaurentInt a = lp(-1, {2, 0, 1}), b = lp(0, {-3, 1});
    LamPoly p(VarTag::LambdaTilde, std::vector<LaurentInt>{-a, LaurentInt(1)}), q(VarTag::LambdaTilde, {-b, LaurentInt(1)});
    CHECK(resultant_lambda(p, q) == a - b);
    LamPoly f2(VarTag::LambdaTilde, std::vector<LaurentInt>{LaurentInt(1), LaurentInt(3), LaurentInt(1)});
    CHECK(resultant_lambda(f2, f2).is_zero());
    try {
        (void)resultant_lambda(p, LamPoly(VarTag::LambdaTilde));
        FAIL("expected EMPTY_INPUT");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyInput);
    }
}

TEST_CASE("resultant matches the Sylvester determinant and swaps with sign")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        LamPoly p = random_lampoly(rng, 3), q = random_lampoly(rng, 3);
        if (p.is_zero() || q.is_zero()) continue;
        LaurentInt r = resultant_lambda(p, q);
        CHECK(to_oracle(r) == oracle::sylvester_resultant(to_oracle(p), to_oracle(q)));
        LaurentInt e = resultant_lambda(p, q, {ResultantStrategy::EvalInterp, 1});
        CHECK(e == r);
        LaurentInt rs = resultant_lambda(q, p);
        int sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
        CHECK(rs == LaurentInt(sign) * r);
    }
}

TEST_CASE("resultant over Z[L, M] agrees across strategies and with the oracle")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        auto rand_lp = [&](int maxl) {
            std::vector<LaurentInt> c;
            int dl = static_cast<int>(rng() % (maxl + 1));
            for (int l = 0; l <= dl; ++l) c.push_back(random_laurent(rng, 3));
            return LPoly(c);
        };
        auto rand_poly = [&](int maxd, int maxl) {
            int d = 1 + static_cast<int>(rng() % maxd);
            std::vector<LPoly> c;
            for (int k = 0; k < d; ++k) c.push_back(rand_lp(maxl));
            c.push_back(LPoly(LaurentInt::monomial(rng() % 2 ? 1 : -1, static_cast<int>(rng() % 3) - 1)));
            return LamPolyL(c);
        };
        LamPolyL p = rand_poly(3, 1), q = rand_poly(2, 1);
        LPoly a = resultant(p, q, {ResultantStrategy::Prs, 1});
        LPoly b = resultant(p, q, {ResultantStrategy::EvalInterp, 1});
        CHECK(a == b);
        oracle::Poly op, oq;
        for (int k = 0; k <= p.degree(); ++k) {
            auto c = to_oracle(p.coeffs()[k]);
            for (const auto& [key, v] : c.t) op.add({k, key[1], key[2]}, v);
        }
        for (int k = 0; k <= q.degree(); ++k) {
            auto c = to_oracle(q.coeffs()[k]);
            for (const auto& [key, v] : c.t) oq.add({k, key[1], key[2]}, v);
        }
        CHECK(to_oracle(a) == oracle::sylvester_resultant(op, oq));
    }
}

TEST_CASE("resultant commutes with evaluation at integer M")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        LamPoly p = random_lampoly(rng, 3), q = random_lampoly(rng, 2);
        if (p.degree() < 1 || q.degree() < 1) continue;
        LaurentInt r = resultant_lambda(p, q);
        for (int m0 : {1, -1}) {
            if (p.lead().eval(m0) == 0 || q.lead().eval(m0) == 0) continue;
            std::vector<LaurentInt> pc, qc;
            for (const auto& c : p.poly().coeffs()) pc.emplace_back(c.eval(m0));
            for (const auto& c : q.poly().coeffs()) qc.emplace_back(c.eval(m0));
            LaurentInt ev = resultant_lambda(LamPoly(VarTag::LambdaTilde, pc), LamPoly(VarTag::LambdaTilde, qc));
            CHECK(ev == LaurentInt(r.eval(m0)));
        }
    }
}

TEST_CASE("content and units")
{
    BivarInt r;
    r.add_term(2, 4, -6);
    r.add_term(1, 2, 6);
    Normalized n = content_and_units(r);
    BivarInt want;
    want.add_term(1, 2, 1);
    want.add_term(0, 0, -1);
    CHECK(n.normalized == want);
    CHECK(n.unit.scalar == -6);
    CHECK(n.unit.l_exp == 1);
    CHECK(n.unit.m_exp == 2);

    BivarInt one;
    one.add_term(0, 0, 1);
    Normalized n1 = content_and_units(one);
    CHECK(n1.normalized == one);
    CHECK(n1.unit.scalar == 1);
    try {
        (void)content_and_units(BivarInt());
        FAIL("expected ZERO_INPUT");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInput);
    }
}

TEST_CASE("squarefree part")
{
    BivarInt lm1;
    lm1.add_term(1, 1, 1);
    lm1.add_term(0, 0, -1);
    SquarefreeResult s = squarefree_part(lm1 * lm1);
    CHECK(s.squarefree == lm1);
    REQUIRE(s.multiplicities.size() == 1);
    CHECK(s.multiplicities[0].first == lm1);
    CHECK(s.multiplicities[0].second == 2);

    SquarefreeResult t = squarefree_part(lm1);
    CHECK(t.squarefree == lm1);
    CHECK(t.multiplicities.empty());

    // a factor free of L is found through the content
    BivarInt mfac;
    mfac.add_term(0, 2, 1);
    mfac.add_term(0, 0, 1);
    SquarefreeResult u = squarefree_part(lm1 * mfac * mfac);
    CHECK(u.squarefree == lm1 * mfac);
}

TEST_CASE("bivariate gcd")
{
    std::mt19937_64 rng(17);
    auto rand_b = [&](int dl, int dm) {
        BivarInt b;
        for (int l = 0; l <= dl; ++l)
            for (int m = 0; m <= dm; ++m)
                if (rng() % 2) b.add_term(l, m, static_cast<long>(rng() % 11) - 5);
        b.add_term(dl, dm, 1);
        return b;
    };
    for (int i = 0; i < 20; ++i) {
        BivarInt g = rand_b(2, 3), a = rand_b(2, 2), b = rand_b(1, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        BivarInt h = gcd(g * a, g * b);
        // h is a multiple of g's primitive part and divides both products
        DensePoly2 q;
        CHECK(divexact((g * a).to_dense(), h.to_dense(), q));
        CHECK(divexact((g * b).to_dense(), h.to_dense(), q));
        CHECK(divexact(h.to_dense(), content_and_units(g).normalized.to_dense(), q));
    }
}

TEST_CASE("dense products match a schoolbook oracle")
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 40; ++it) {
        auto rnd = [&](int nl, int nm, int bits) {
            DensePoly2 a(nl, nm);
            for (int l = 0; l < nl; ++l)
                for (int m = 0; m < nm; ++m) {
                    Int v = 0;
                    for (int b = 0; b < bits; b += 30) v = (v << 30) + static_cast<unsigned long>(rng() & 0x3fffffff);
                    if (rng() % 2) v = -v;
                    a.at(l, m) = v;
                }
            a.trim();
            return a;
        };
        int bits = 1 + static_cast<int>(rng() % 300);
        DensePoly2 a = rnd(1 + rng() % 20, 1 + rng() % 60, bits), b = rnd(1 + rng() % 20, 1 + rng() % 60, bits);
        if (a.is_zero() || b.is_zero()) continue;
        DensePoly2 c = a * b;
        DensePoly2 r(a.nl() + b.nl() - 1, a.nm() + b.nm() - 1);
        for (int i = 0; i < a.nl(); ++i)
            for (int j = 0; j < a.nm(); ++j)
                for (int p = 0; p < b.nl(); ++p)
                    for (int q = 0; q < b.nm(); ++q) r.at(i + p, j + q) += a.at(i, j) * b.at(p, q);
        r.trim();
        CHECK(c == r);
        DensePoly2 q;
        REQUIRE(divexact(c, b, q));
        CHECK(q == a);
    }
}

TEST_CASE("json round trip")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        LamPoly p = random_lampoly(rng, 3);
        CHECK(lampoly_from_json(to_json(p)) == p);
    }
    BivarInt b;
    b.add_term(2, 4, -1);
    b.add_term(0, 0, Int("123456789012345678901234567890"));
    CHECK(bivar_from_json(to_json(b)) == b);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "twobridge/error.hpp"
#include "twobridge/alexander.hpp"
#include "twobridge/apoly.hpp"
#include "twobridge/knotspec.hpp"
#include "twobridge/riley.hpp"

using namespace twobridge;

namespace {

template <class F>
ErrorCode code_of(F fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("epsilon from fraction")
{
    CHECK(epsilon_from_fraction(make_fraction(3, 1)).eps == std::vector<int>{1, 1});
    CHECK(epsilon_from_fraction(make_fraction(5, 3)).eps == std::vector<int>{1, -1, -1, 1});
    CHECK(epsilon_from_fraction(make_fraction(5, 1)).eps == std::vector<int>{1, 1, 1, 1});
    for (int a = 3; a <= 41; a += 2)
        for (int b = 1; b < a; b += 2) {
            if (std::gcd(a, b) != 1) continue;
            EpsilonSeq e = epsilon_from_fraction(make_fraction(a, b));
            CHECK(e.eps == oracle::floor_epsilon(a, b));
            CHECK(e.sigma() % 2 == 0);
            std::vector<int> rev(e.eps.rbegin(), e.eps.rend());
            CHECK(rev == e.eps);
        }
}

TEST_CASE("fraction validation")
{
    CHECK(code_of([] { make_fraction(4, 1); }) == ErrorCode::InvalidFraction);
    CHECK(code_of([] { make_fraction(9, 3); }) == ErrorCode::InvalidFraction);
    CHECK(code_of([] { make_fraction(7, 7); }) == ErrorCode::InvalidFraction);
    CHECK(code_of([] { make_fraction(7, 0); }) == ErrorCode::InvalidFraction);
}

TEST_CASE("validate epsilon")
{
    CHECK(validate_epsilon({1, -1, -1, 1}).alpha() == 5);
    CHECK(code_of([] { validate_epsilon({1, -1, 1, 1}); }) == ErrorCode::NotSymmetric);
    CHECK(code_of([] { validate_epsilon({1, 1, 1}); }) == ErrorCode::OddLength);
    CHECK(code_of([] { validate_epsilon({1, 2, 2, 1}); }) == ErrorCode::NonUnitEntry);
    CHECK(code_of([] { riley_recursive(half_from_e({})); }) == ErrorCode::EmptySequence);
    CHECK(code_of([] { riley_delta(half_from_e({})); }) == ErrorCode::EmptySequence);
    CHECK(parse_epsilon("+--+").eps == std::vector<int>{1, -1, -1, 1});
    CHECK(parse_epsilon("+−−+").eps == std::vector<int>{1, -1, -1, 1});
    CHECK(parse_epsilon("+--+").str() == "+--+");
}

TEST_CASE("half sequences")
{
    HalfSeq h = half_sequences(validate_epsilon({1, -1, -1, 1}));
    CHECK(h.e == std::vector<int>{-1, 1});
    CHECK(h.delta == std::vector<int>{1, -1});
    CHECK(h.beta == std::vector<int>{1, 0});

    HalfSeq t = half_sequences(validate_epsilon({1, 1}));
    CHECK(t.e == std::vector<int>{1});
    CHECK(t.delta == std::vector<int>{1});
    CHECK(t.beta == std::vector<int>{1});

    HalfSeq u = half_sequences(validate_epsilon({1, 1, 1, 1}));
    CHECK(u.beta == std::vector<int>{1, 2});

    for (int a = 3; a <= 17; a += 2)
        for (const auto& eps : all_symmetric(a)) {
            HalfSeq hs = half_sequences(eps);
            CHECK(epsilon_from_half(hs.e) == eps);
            int run = 0;
            for (int i = 0; i < hs.n(); ++i) {
                run += hs.e[i];
                CHECK(hs.beta[i] == hs.e[0] * run);
            }
        }
}

TEST_CASE("normalize fraction")
{
    auto [f1, r1] = normalize_fraction(5, 8);
    CHECK(f1 == TwoBridgeFraction{5, 3});
    CHECK(r1.orbit == std::vector<int>{3, 2});
    CHECK(r1.mirror == 2);

    auto [f2, r2] = normalize_fraction(3, 1);
    CHECK(f2 == TwoBridgeFraction{3, 1});
    CHECK(r2.orbit == std::vector<int>{1});
    CHECK(r2.mirror == 2);

    auto [f3, r3] = normalize_fraction(7, 10);
    CHECK(f3 == TwoBridgeFraction{7, 3});
    CHECK(r3.orbit == std::vector<int>{3, 5});
    CHECK(r3.mirror == 4);

    for (int a = 3; a <= 51; a += 2)
        for (int b = -2 * a; b <= 2 * a; ++b) {
            if (std::gcd(a, std::abs(b)) != 1) continue;
            auto [f, r] = normalize_fraction(a, b);
            int red = ((b % a) + a) % a;
            CHECK(f.beta == red);
            int inv = oracle::inverse_mod(red, a);
            std::set<int> want{red, inv};
            CHECK(std::set<int>(r.orbit.begin(), r.orbit.end()) == want);
            CHECK(r.mirror == a - red);
        }
    CHECK(code_of([] { normalize_fraction(9, 6); }) == ErrorCode::InvalidFraction);
    CHECK(code_of([] { normalize_fraction(8, 3); }) == ErrorCode::InvalidFraction);
}

TEST_CASE("census against brute-force enumeration")
{
    CHECK(census(1).empty());
    auto c3 = census(3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].fraction == TwoBridgeFraction{3, 1});

    auto c5 = census(5);
    REQUIRE(c5.size() == 3);
    CHECK(c5[1].fraction == TwoBridgeFraction{5, 1});
    CHECK(c5[2].fraction == TwoBridgeFraction{5, 3});
    CHECK(c5[2].orbit == std::vector<int>{2, 3});

    auto all = census(49);
    size_t idx = 0;
    for (int a = 3; a <= 49; a += 2) {
        for (const auto& cls : oracle::knot_classes(a)) {
            int rep = 0;
            for (int x : cls)
                if (x % 2 == 1) {
                    rep = x;
                    break;
                }
            if (rep == 0) {
                // the mirror class consists of odd residues and is listed instead
                for (int x : cls) CHECK((a - x) % 2 == 1);
                continue;
            }
            REQUIRE(idx < all.size());
            CHECK(all[idx].fraction == TwoBridgeFraction{a, rep});
            CHECK(all[idx].orbit == cls);
            bool amph = std::find(cls.begin(), cls.end(), a - rep) != cls.end();
            CHECK(all[idx].amphichiral == amph);
            ++idx;
        }
    }
    CHECK(idx == all.size());
}

TEST_CASE("equivalent fractions give the same knot invariants")
{
    // the Riley polynomial itself depends on the chosen generators
    CHECK_FALSE(riley_recursive(half_sequences(epsilon_from_fraction(make_fraction(7, 3)))).f_n() ==
                riley_recursive(half_sequences(epsilon_from_fraction(make_fraction(7, 5)))).f_n());
    for (const auto& c : census(15)) {
        int a = c.fraction.alpha;
        EpsilonSeq ref = epsilon_from_fraction(c.fraction);
        APolyResult ap = a_polynomial(ref);
        SymLaurent alex = alexander_sigma(ref);
        for (int b : c.orbit) {
            int odd = b % 2 ? b : b - a;  // same knot, odd representative
            EpsilonSeq eps = validate_epsilon(oracle::floor_epsilon(a, odd));
            CHECK_MESSAGE(a_polynomial(eps).normalized == ap.normalized, a << "/" << b);
            CHECK(alexander_sigma(eps) == alex);
        }
    }
}

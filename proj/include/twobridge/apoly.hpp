#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twobridge/bivar.hpp"
#include "twobridge/knotspec.hpp"
#include "twobridge/resultant.hpp"
#include "twobridge/riley.hpp"

namespace twobridge {

struct LongitudePair {
    LamPoly f;       // Riley polynomial in lambda-tilde
    LamPoly g;       // g_n in lambda-tilde
    LamPolyL elim;   // L M^(2 sigma) gbar + g
    int sigma = 0;
};

LongitudePair longitude_pair(const RileyPair& pair, const EpsilonSeq& eps);

struct APolyOptions {
    ResultantStrategy strategy = ResultantStrategy::Prs;
    unsigned threads = 1;
};

struct APolyResult {
    BivarInt raw;          // resultant times M^m_shift
    int m_shift = 0;
    BivarInt normalized;   // raw = unit * normalized
    BivarInt squarefree;
    std::vector<std::pair<BivarInt, int>> multiplicities;
    UnitReport unit;
};

// builds the result fields from an exact resultant
APolyResult finish_apoly(const LPoly& res);

APolyResult eliminate(const LongitudePair& lp, const APolyOptions& opt = {});

struct LongitudeWitness {
    LamPoly L_value_mod_f;  // lambda-tilde g^2 mod f, before the M^(-2 sigma) factor
    int sigma = 0;
};

LongitudeWitness longitude_witness(const LongitudePair& lp);
// Res(f, L M^(2 sigma) - witness)
APolyResult eliminate_witness(const LongitudePair& lp, const LongitudeWitness& w, const APolyOptions& opt = {});

// remainder of p modulo a polynomial with leading coefficient +-1
LamPoly reduce_mod(const LamPoly& p, const LamPoly& f);

APolyResult a_polynomial(const EpsilonSeq& eps, const APolyOptions& opt = {});
APolyResult a_polynomial(const TwoBridgeFraction& fr, const APolyOptions& opt = {});

// P(L, M) -> L^deg_L P(1/L, M), renormalized
BivarInt invert_L(const BivarInt& p);

}  // namespace twobridge

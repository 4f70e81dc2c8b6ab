#pragma once

#include <vector>

#include "twobridge/dense2.hpp"
#include "twobridge/poly.hpp"

namespace twobridge {

enum class ResultantStrategy { Prs, EvalInterp };

struct ResultantOptions {
    ResultantStrategy strategy = ResultantStrategy::Prs;
    unsigned threads = 1;
};

// Res over the main variable.  Coefficients are Laurent in M and polynomial in L;
// the result is returned exactly, including negative M-powers.
LPoly resultant(const LamPolyL& p, const LamPolyL& q, const ResultantOptions& opt = {});
LaurentInt resultant_lambda(const LamPoly& p, const LamPoly& q, const ResultantOptions& opt = {});

// Same over Z[L,M] coefficient vectors (index = degree in the main variable,
// leading entry nonzero).
DensePoly2 resultant_prs(const std::vector<DensePoly2>& p, const std::vector<DensePoly2>& q);
DensePoly2 resultant_evalinterp(const std::vector<DensePoly2>& p, const std::vector<DensePoly2>& q,
                                unsigned threads = 1);

// Last nonzero subresultant remainder of p and q; a gcd of p and q over the
// fraction field of Z[L,M].
std::vector<DensePoly2> prs_last_remainder(const std::vector<DensePoly2>& p,
                                           const std::vector<DensePoly2>& q);

// coefficients times M^-shift, where shift is the lowest M-exponent present
std::vector<DensePoly2> clear_denominators(const LamPolyL& p, int& shift);

// M-exponent window [lo, hi] guaranteed to contain every term of Res(p, q)
struct ExponentWindow {
    int lo = 0, hi = 0;
};
ExponentWindow resultant_m_window(const std::vector<DensePoly2>& p, const std::vector<DensePoly2>& q);

}  // namespace twobridge

#pragma once

#include <string>
#include <vector>

#include "twobridge/knotspec.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/riley.hpp"

namespace twobridge {

// Laurent polynomial in u with t = u^2
struct SymLaurent {
    LaurentInt u;

    bool palindromic() const { return u.bar() == u; }
    Int at_one() const { return u.eval(1); }
    // "t^-1 - 1 + t"; throws NONINTEGRAL on odd u-exponents
    std::string str() const;
    friend bool operator==(const SymLaurent&, const SymLaurent&) = default;
};

// multiply by the unit +-u^k making the polynomial palindromic with positive value at 1
SymLaurent normalize_alexander(const LaurentInt& u_poly);

SymLaurent alexander_from_riley(const RileyPair& pair);
SymLaurent alexander_sigma(const EpsilonSeq& eps);
SymLaurent alexander_minkus(const EpsilonSeq& eps);
SymLaurent alexander_chebyshev(const HalfSeq& h);
SymLaurent alexander_fukuhara(const EpsilonSeq& eps);

// hat_k = -sigma + eps_k + 2 sum_{i<k} eps_i, k = 1..alpha-1
std::vector<int> hat_exponents(const EpsilonSeq& eps);
// nu_k = 1 + sum_{i=1}^{alpha-1} eps_{k+i} on the extended sequence
std::vector<int> fukuhara_nu(const EpsilonSeq& eps);

// Ch_n(a, b) with Ch_0 = a, Ch_1 = b, Ch_{n+1} = x Ch_n - Ch_{n-1}
struct ChebSpec {
    LaurentInt init_a;
    LaurentInt init_b;
    int n = 0;
};

LaurentInt chebyshev_eval(const ChebSpec& spec, const LaurentInt& x);
ChebSpec cheb_t(int n, const LaurentInt& x);  // (2, x)
ChebSpec cheb_s(int n);                       // (0, 1)
ChebSpec cheb_v(int n, const LaurentInt& x);  // (1, x - 1)

struct QCheckReport {
    std::vector<IdentityResult> checks;
    bool all_pass() const;
};

QCheckReport q_recursion_check(const HalfSeq& h);

}  // namespace twobridge

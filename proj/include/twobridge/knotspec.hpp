#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twobridge {

struct TwoBridgeFraction {
    int alpha = 3;
    int beta = 1;
    std::string str() const { return std::to_string(alpha) + "/" + std::to_string(beta); }
    friend bool operator==(const TwoBridgeFraction&, const TwoBridgeFraction&) = default;
};

// throws INVALID_FRACTION unless alpha is odd >= 3, 0 < beta < alpha, gcd = 1
TwoBridgeFraction make_fraction(int alpha, int beta);

struct EpsilonSeq {
    std::vector<int> eps;  // eps[i-1] = epsilon_i, i = 1 .. alpha-1

    int alpha() const { return static_cast<int>(eps.size()) + 1; }
    int sigma() const;
    int at(int i) const { return eps[i - 1]; }  // 1-based
    EpsilonSeq negated() const;
    std::string str() const;  // "+--+"
    friend bool operator==(const EpsilonSeq&, const EpsilonSeq&) = default;
};

EpsilonSeq validate_epsilon(const std::vector<int>& raw);
// accepts '+', '-' and U+2212
EpsilonSeq parse_epsilon(const std::string& s);
EpsilonSeq epsilon_from_fraction(const TwoBridgeFraction& fr);

struct HalfSeq {
    std::vector<int> e;      // e_k = epsilon_{n+1-k}
    std::vector<int> delta;  // delta_1 = 1, delta_k = e_{k-1} e_k
    std::vector<int> beta;   // beta_k = sum_{i<=k} delta_1 ... delta_i
    int n() const { return static_cast<int>(e.size()); }
};

HalfSeq half_sequences(const EpsilonSeq& eps);
HalfSeq half_from_e(const std::vector<int>& e);
EpsilonSeq epsilon_from_half(const std::vector<int>& e);

// every symmetric sequence of length alpha - 1
std::vector<EpsilonSeq> all_symmetric(int alpha);

struct EquivalenceReport {
    std::vector<int> orbit;  // {beta, beta^-1 mod alpha}, duplicates removed
    int mirror = 0;          // alpha - beta
};

std::pair<TwoBridgeFraction, EquivalenceReport> normalize_fraction(long alpha, long beta_raw);

struct CensusEntry {
    TwoBridgeFraction fraction;  // smallest odd member of its orbit
    std::vector<int> orbit;
    int mirror_beta = 0;           // representative of the mirror class, 0 if absent
    bool amphichiral = false;      // mirror class equals own class
};

std::vector<CensusEntry> census(int max_alpha);

}  // namespace twobridge

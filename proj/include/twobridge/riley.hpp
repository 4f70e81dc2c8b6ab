#pragma once

#include <string>
#include <vector>

#include "twobridge/knotspec.hpp"
#include "twobridge/poly.hpp"

namespace twobridge {

// f_0..f_n and g_0..g_n in lambda-tilde
struct RileyPair {
    std::vector<LamPoly> f;
    std::vector<LamPoly> g;

    int n() const { return static_cast<int>(f.size()) - 1; }
    const LamPoly& f_n() const { return f.back(); }
    const LamPoly& g_n() const { return g.back(); }
};

RileyPair riley_recursive(const HalfSeq& h);
std::vector<LamPoly> riley_delta(const HalfSeq& h);

// product of rho(x)^eps_odd rho(y)^eps_even, entries in lambda
Mat2 w_matrix(const std::vector<int>& eps);
// same word with x and y exchanged
Mat2 w_star_matrix(const std::vector<int>& eps);
// W11 - z W12 in lambda
LamPoly riley_direct(const EpsilonSeq& eps);

struct QuandleFG {
    Mat2 F;  // diagonal
    Mat2 G;  // diagonal
};
QuandleFG quandle_fg(const EpsilonSeq& eps);

enum class CDKind { C, D, CTilde, DTilde };
const char* cd_kind_name(CDKind k);

struct CDIndexSum {
    CDKind kind = CDKind::C;
    int k = 0;
    int n = 0;
    LaurentInt value;
};

constexpr int kCdMaxLength = 16;

// the sequence need not be symmetric; prefixes and shifted windows are allowed
CDIndexSum cd_enumerate(const std::vector<int>& eps, CDKind kind, int k, int n);
// values for every k = 0..n at once
std::vector<LaurentInt> cd_table(const std::vector<int>& eps, CDKind kind, int n);

// f in Z[s, lambda-tilde]: result[i][j] is the coefficient of lt^i s^j
std::vector<std::vector<Int>> rewrite_in_s(const LamPoly& f);
LamPoly expand_from_s(const std::vector<std::vector<Int>>& c);

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::string eps;
    std::vector<IdentityResult> results;
    bool all_pass() const;
    const IdentityResult* find(const std::string& name) const;
};

struct IdentityOptions {
    int cd_max_length = 12;  // cd-based identities only up to this length
};

IdentityReport identity_suite(const EpsilonSeq& eps, const IdentityOptions& opt = {});

}  // namespace twobridge

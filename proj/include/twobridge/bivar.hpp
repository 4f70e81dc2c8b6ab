#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/dense2.hpp"
#include "twobridge/poly.hpp"

namespace twobridge {

// Sparse polynomial in Z[L, M], terms ordered L-major then M.
class BivarInt {
public:
    using Key = std::pair<int, int>;  // (deg_L, deg_M)

    BivarInt() = default;
    static BivarInt from_dense(const DensePoly2& d);
    // multiplies by M^(-min M-exponent); the applied power is returned in m_shift
    static BivarInt from_lpoly(const LPoly& p, int* m_shift = nullptr);

    DensePoly2 to_dense() const;
    LPoly to_lpoly() const;

    void add_term(int l, int m, const Int& c);
    Int coeff(int l, int m) const;
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int deg_L() const;
    int deg_M() const;
    size_t size() const { return terms_.size(); }

    BivarInt operator-() const;
    friend BivarInt operator+(const BivarInt& a, const BivarInt& b);
    friend BivarInt operator-(const BivarInt& a, const BivarInt& b);
    friend BivarInt operator*(const BivarInt& a, const BivarInt& b);
    friend bool operator==(const BivarInt& a, const BivarInt& b) { return a.terms_ == b.terms_; }

    // "L^2*M^4 - L*M^8 + ...", highest terms first
    std::string str() const;

private:
    std::map<Key, Int> terms_;
};

struct UnitReport {
    Int scalar = 1;  // signed integer content removed
    int l_exp = 0;   // removed L^l_exp
    int m_exp = 0;   // removed M^m_exp
    std::string str() const;
};

struct Normalized {
    BivarInt normalized;
    UnitReport unit;  // input == unit * normalized
};

Normalized content_and_units(const BivarInt& r);

enum class Variable { L, M };

struct SquarefreeResult {
    BivarInt squarefree;
    std::vector<std::pair<BivarInt, int>> multiplicities;  // repeated factors only
};

SquarefreeResult squarefree_part(const BivarInt& r, Variable wrt = Variable::L);

// gcd over Z[L,M], normalized with positive L-major leading coefficient
DensePoly2 gcd(const DensePoly2& a, const DensePoly2& b);
BivarInt gcd(const BivarInt& a, const BivarInt& b);

}  // namespace twobridge

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace twobridge {

using Int = mpz_class;

// Laurent polynomial in a single unit variable (M unless stated otherwise),
// dense over [min_exp, min_exp + coeffs.size()).
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long c);  // NOLINT: constants convert implicitly
    LaurentInt(const Int& c);  // NOLINT

    static LaurentInt monomial(const Int& c, int e);
    static LaurentInt from_coeffs(int min_exp, std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int e) const;
    size_t term_count() const;

    LaurentInt bar() const;
    LaurentInt shifted(int k) const;  // times M^k

    LaurentInt operator-() const;
    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt& operator*=(const LaurentInt& o);
    LaurentInt& operator*=(const Int& s);

    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
    friend bool operator==(const LaurentInt& a, const LaurentInt& b)
    {
        return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
    }

    // exact division by an integer; false if some coefficient is not divisible
    bool divexact(const Int& d, LaurentInt& out) const;
    Int eval(const Int& x) const;  // x must be +-1 when negative exponents occur
    std::string str(const std::string& var = "M") const;

private:
    void normalize();
    int min_exp_ = 0;
    std::vector<Int> c_;
};

LaurentInt laurent_mul(const LaurentInt& a, const LaurentInt& b);
LaurentInt laurent_bar(const LaurentInt& a);

// frequently used constants
LaurentInt laurent_z();  // M - M^-1
LaurentInt laurent_s();  // z^2

}  // namespace twobridge

#pragma once

#include <cstdint>
#include <vector>

#include "twobridge/laurent.hpp"

namespace twobridge {

// Dense polynomial in Z[L, M] stored row-major by L-degree.  Products and
// exact quotients of large operands go through Kronecker substitution into
// a single GMP integer.
class DensePoly2 {
public:
    DensePoly2() = default;
    DensePoly2(int nl, int nm) : nl_(nl), nm_(nm), c_(static_cast<size_t>(nl) * nm) {}

    static DensePoly2 constant(const Int& v);
    static DensePoly2 monomial(const Int& v, int l, int m);

    int nl() const { return nl_; }
    int nm() const { return nm_; }
    int deg_L() const { return nl_ - 1; }
    int deg_M() const { return nm_ - 1; }
    bool is_zero() const { return nl_ == 0; }
    bool is_constant() const { return nl_ <= 1 && nm_ <= 1; }

    Int& at(int l, int m) { return c_[static_cast<size_t>(l) * nm_ + m]; }
    const Int& at(int l, int m) const { return c_[static_cast<size_t>(l) * nm_ + m]; }
    Int get(int l, int m) const;
    const std::vector<Int>& raw() const { return c_; }

    // drop zero rows/columns at the top ends
    void trim();
    size_t max_bits() const;
    size_t term_count() const;
    Int content() const;
    // coefficient of L^l as a 1 x nm polynomial in M
    DensePoly2 row(int l) const;
    // lowest M-exponent carrying a nonzero coefficient
    int min_m() const;

    DensePoly2 operator-() const;
    friend DensePoly2 operator+(const DensePoly2& a, const DensePoly2& b);
    friend DensePoly2 operator-(const DensePoly2& a, const DensePoly2& b);
    friend DensePoly2 operator*(const DensePoly2& a, const DensePoly2& b);
    friend bool operator==(const DensePoly2& a, const DensePoly2& b);
    DensePoly2 scaled(const Int& s) const;
    DensePoly2 shifted(int dl, int dm) const;  // times L^dl M^dm, dl, dm >= 0
    DensePoly2 divexact_int(const Int& s) const;

    DensePoly2 transpose() const;
    DensePoly2 deriv_L() const;
    DensePoly2 pow(unsigned e) const;

private:
    int nl_ = 0, nm_ = 0;
    std::vector<Int> c_;
};

// q = a / b if b divides a exactly in Z[L,M]
bool divexact(const DensePoly2& a, const DensePoly2& b, DensePoly2& q);
DensePoly2 divexact_or_throw(const DensePoly2& a, const DensePoly2& b);

// Kronecker layout: coefficient (l, m) sits in slot l * stride + m of a
// base 2^(64k) expansion; unpacking uses balanced digits.
Int kronecker_pack(const DensePoly2& a, int stride, size_t k, size_t nslots);
bool kronecker_unpack(const Int& v, size_t k, size_t nslots, std::vector<Int>& out);

// convert Laurent-in-M / poly-in-L data into a DensePoly2 times M^shift
DensePoly2 dense_from_lpoly(const std::vector<LaurentInt>& lcoeffs, int m_shift);

}  // namespace twobridge

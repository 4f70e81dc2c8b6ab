#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "twobridge/bivar.hpp"
#include "twobridge/knotspec.hpp"
#include "twobridge/poly.hpp"

namespace twobridge {

using cplx = std::complex<double>;

struct ComplexMat2 {
    cplx a11, a12, a21, a22;

    static ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }
    ComplexMat2 inverse() const;  // assumes det = 1
    double norm() const;          // Frobenius
    friend ComplexMat2 operator*(const ComplexMat2& x, const ComplexMat2& y);
    friend ComplexMat2 operator-(const ComplexMat2& x, const ComplexMat2& y);
};

struct NumericRoot {
    cplx M0;
    cplx lam_tilde0;
    double residual = 0;  // |f| relative to the sum of |coefficient terms|
};

cplx eval_laurent(const LaurentInt& p, cplx M);
cplx eval_lampoly(const LamPoly& p, cplx M, cplx v);
double bivar_relative_residual(const BivarInt& p, cplx L, cplx M);

std::vector<NumericRoot> numeric_roots(const LamPoly& f, cplx M0);

struct NumericCheck {
    std::string name;
    double residual = 0;
    bool pass = false;
};

struct NumericReport {
    std::vector<NumericCheck> checks;
    cplx L;  // longitude eigenvalue when computed
    bool pass() const;
    std::string json() const;
};

ComplexMat2 numeric_word(const EpsilonSeq& eps, cplx M, cplx lam, bool exchanged = false);

// throws RELATION_FAILED
NumericReport verify_representation(const EpsilonSeq& eps, const NumericRoot& root, double tol);
// throws LONGITUDE_MISMATCH
NumericReport verify_longitude(const EpsilonSeq& eps, const NumericRoot& root, double tol);

// deterministic samples with |M| in [0.8, 1.6] kept away from +-1
std::vector<cplx> sample_m0(int count, std::uint64_t seed);

}  // namespace twobridge

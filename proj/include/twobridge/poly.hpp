#pragma once

#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge {

// Dense univariate polynomial over a commutative ring C, index = degree.
template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(C c0)
    {
        c_.push_back(std::move(c0));
        trim();
    }
    explicit Poly(std::vector<C> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(C c, int k)
    {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : C(); }
    const C& lead() const { return c_.back(); }

    void set(int i, C v)
    {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
        c_[i] = std::move(v);
        trim();
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly scaled(const C& s) const
    {
        Poly r = *this;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }
    template <class F>
    Poly map(F fn) const
    {
        Poly r = *this;
        for (auto& v : r.c_) v = fn(v);
        r.trim();
        return r;
    }
    C eval(const C& x) const
    {
        C r;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

// polynomial in L with Laurent-in-M coefficients
using LPoly = Poly<LaurentInt>;
// polynomial in lambda-tilde whose coefficients live in Z[M^+-1][L]
using LamPolyL = Poly<LPoly>;

enum class VarTag { LambdaTilde, Lambda, L };
const char* tag_name(VarTag t);

// Polynomial in one tagged variable with LaurentInt coefficients.
class LamPoly {
public:
    LamPoly() = default;
    explicit LamPoly(VarTag tag) : tag_(tag) {}
    LamPoly(VarTag tag, Poly<LaurentInt> p) : tag_(tag), p_(std::move(p)) {}
    LamPoly(VarTag tag, std::vector<LaurentInt> c) : tag_(tag), p_(std::move(c)) {}

    static LamPoly constant(VarTag tag, const LaurentInt& c) { return LamPoly(tag, Poly<LaurentInt>(c)); }
    static LamPoly var(VarTag tag) { return LamPoly(tag, Poly<LaurentInt>::monomial(LaurentInt(1), 1)); }

    VarTag tag() const { return tag_; }
    const Poly<LaurentInt>& poly() const { return p_; }
    int degree() const { return p_.degree(); }
    bool is_zero() const { return p_.is_zero(); }
    LaurentInt coeff(int i) const { return p_.coeff(i); }
    const LaurentInt& lead() const { return p_.lead(); }

    LamPoly operator-() const { return LamPoly(tag_, -p_); }
    LamPoly& operator+=(const LamPoly& o);
    LamPoly& operator-=(const LamPoly& o);
    friend LamPoly operator+(LamPoly a, const LamPoly& b) { return a += b; }
    friend LamPoly operator-(LamPoly a, const LamPoly& b) { return a -= b; }
    friend LamPoly operator*(const LamPoly& a, const LamPoly& b);
    friend LamPoly operator*(const LaurentInt& s, const LamPoly& a) { return LamPoly(a.tag_, a.p_.scaled(s)); }
    friend LamPoly operator*(const LamPoly& a, const LaurentInt& s) { return s * a; }
    friend bool operator==(const LamPoly& a, const LamPoly& b) { return a.tag_ == b.tag_ && a.p_ == b.p_; }

    LamPoly bar() const;
    LaurentInt eval(const LaurentInt& x) const { return p_.eval(x); }
    std::string str() const;

private:
    VarTag tag_ = VarTag::LambdaTilde;
    Poly<LaurentInt> p_;
};

void check_tags(const LamPoly& a, const LamPoly& b);

// replaces the variable v by (w + shift); result is tagged out_tag
LamPoly substitute_lambda(const LamPoly& p, const LaurentInt& shift, VarTag out_tag = VarTag::Lambda);

struct Mat2 {
    LamPoly a11, a12, a21, a22;

    static Mat2 identity(VarTag tag);
    VarTag tag() const { return a11.tag(); }
    Mat2 bar() const;
    LamPoly det() const { return a11 * a22 - a12 * a21; }
    LamPoly trace() const { return a11 + a22; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y)
    {
        return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
    }
};

}  // namespace twobridge

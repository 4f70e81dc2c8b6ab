#include <sstream>

#include "twobridge/poly.hpp"

namespace twobridge {

const char* tag_name(VarTag t)
{
    switch (t) {
    case VarTag::LambdaTilde: return "Ltilde";
    case VarTag::Lambda: return "lambda";
    case VarTag::L: return "L";
    }
    return "?";
}

void check_tags(const LamPoly& a, const LamPoly& b)
{
    if (a.tag() != b.tag())
        throw Error(ErrorCode::TagMismatch,
                    std::string("mixing ") + tag_name(a.tag()) + " and " + tag_name(b.tag()));
}

LamPoly& LamPoly::operator+=(const LamPoly& o)
{
    check_tags(*this, o);
    p_ += o.p_;
    return *this;
}

LamPoly& LamPoly::operator-=(const LamPoly& o)
{
    check_tags(*this, o);
    p_ -= o.p_;
    return *this;
}

LamPoly operator*(const LamPoly& a, const LamPoly& b)
{
    check_tags(a, b);
    return LamPoly(a.tag_, a.p_ * b.p_);
}

LamPoly LamPoly::bar() const
{
    return LamPoly(tag_, p_.map([](const LaurentInt& c) { return c.bar(); }));
}

std::string LamPoly::str() const
{
    if (is_zero()) return "0";
    const char* v = tag_ == VarTag::LambdaTilde ? "lt" : tag_ == VarTag::Lambda ? "lambda" : "L";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const LaurentInt& c = p_.coeffs()[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << c.str() << ")";
            continue;
        }
        if (!(c == LaurentInt(1))) os << "(" << c.str() << ")*";
        os << v;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

LamPoly substitute_lambda(const LamPoly& p, const LaurentInt& shift, VarTag out_tag)
{
    Poly<LaurentInt> lin(std::vector<LaurentInt>{shift, LaurentInt(1)});
    Poly<LaurentInt> r;
    const auto& c = p.poly().coeffs();
    for (size_t i = c.size(); i-- > 0;) r = r * lin + Poly<LaurentInt>(c[i]);
    return LamPoly(out_tag, r);
}

Mat2 Mat2::identity(VarTag tag)
{
    return {LamPoly::constant(tag, 1), LamPoly(tag), LamPoly(tag), LamPoly::constant(tag, 1)};
}

Mat2 Mat2::bar() const { return {a11.bar(), a12.bar(), a21.bar(), a22.bar()}; }

Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

}  // namespace twobridge

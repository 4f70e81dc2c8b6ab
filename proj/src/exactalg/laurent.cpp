#include "twobridge/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "twobridge/error.hpp"

namespace twobridge {

LaurentInt::LaurentInt(long c)
{
    if (c != 0) c_.push_back(Int(c));
}

LaurentInt::LaurentInt(const Int& c)
{
    if (c != 0) c_.push_back(c);
}

LaurentInt LaurentInt::monomial(const Int& c, int e)
{
    LaurentInt r;
    if (c != 0) {
        r.min_exp_ = e;
        r.c_.push_back(c);
    }
    return r;
}

LaurentInt LaurentInt::from_coeffs(int min_exp, std::vector<Int> coeffs)
{
    LaurentInt r;
    r.min_exp_ = min_exp;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

void LaurentInt::normalize()
{
    size_t hi = c_.size();
    while (hi > 0 && c_[hi - 1] == 0) --hi;
    size_t lo = 0;
    while (lo < hi && c_[lo] == 0) ++lo;
    if (lo == hi) {
        c_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0 || hi < c_.size()) {
        c_.erase(c_.begin() + hi, c_.end());
        c_.erase(c_.begin(), c_.begin() + lo);
        min_exp_ += static_cast<int>(lo);
    }
}

Int LaurentInt::coeff(int e) const
{
    if (c_.empty() || e < min_exp_ || e > max_exp()) return 0;
    return c_[e - min_exp_];
}

size_t LaurentInt::term_count() const
{
    return std::count_if(c_.begin(), c_.end(), [](const Int& v) { return v != 0; });
}

LaurentInt LaurentInt::bar() const
{
    if (c_.empty()) return {};
    LaurentInt r;
    r.min_exp_ = -max_exp();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

LaurentInt LaurentInt::shifted(int k) const
{
    LaurentInt r = *this;
    if (!r.c_.empty()) r.min_exp_ += k;
    return r;
}

LaurentInt LaurentInt::operator-() const
{
    LaurentInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

static void add_into(int& min_exp, std::vector<Int>& c, const LaurentInt& b, bool sub)
{
    if (b.is_zero()) return;
    if (c.empty()) {
        min_exp = b.min_exp();
        c = b.coeffs();
        if (sub)
            for (auto& v : c) v = -v;
        return;
    }
    int lo = std::min(min_exp, b.min_exp());
    int hi = std::max(min_exp + static_cast<int>(c.size()) - 1, b.max_exp());
    if (lo < min_exp) c.insert(c.begin(), min_exp - lo, Int(0));
    c.resize(hi - lo + 1);
    min_exp = lo;
    const auto& bc = b.coeffs();
    int off = b.min_exp() - lo;
    for (size_t i = 0; i < bc.size(); ++i) {
        if (sub)
            c[off + i] -= bc[i];
        else
            c[off + i] += bc[i];
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o)
{
    add_into(min_exp_, c_, o, false);
    normalize();
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o)
{
    add_into(min_exp_, c_, o, true);
    normalize();
    return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return LaurentInt::from_coeffs(a.min_exp_ + b.min_exp_, std::move(c));
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o)
{
    *this = *this * o;
    return *this;
}

LaurentInt& LaurentInt::operator*=(const Int& s)
{
    if (s == 0) {
        c_.clear();
        min_exp_ = 0;
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

bool LaurentInt::divexact(const Int& d, LaurentInt& out) const
{
    if (d == 0) throw Error(ErrorCode::ZeroInput, "division by zero");
    out = *this;
    for (auto& v : out.c_) {
        if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) return false;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    return true;
}

Int LaurentInt::eval(const Int& x) const
{
    if (c_.empty()) return 0;
    if (min_exp_ < 0 && x != 1 && x != -1)
        throw Error(ErrorCode::Range, "integer evaluation of a Laurent polynomial at a non-unit");
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    // multiply by x^min_exp; for units x^-k == x^k
    int e = min_exp_ < 0 ? -min_exp_ : min_exp_;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    return r * p;
}

std::string LaurentInt::str(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Int& v = c_[i];
        if (v == 0) continue;
        int e = min_exp_ + static_cast<int>(i);
        Int a = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentInt laurent_mul(const LaurentInt& a, const LaurentInt& b) { return a * b; }
LaurentInt laurent_bar(const LaurentInt& a) { return a.bar(); }

LaurentInt laurent_z() { return LaurentInt::from_coeffs(-1, {Int(-1), Int(0), Int(1)}); }
LaurentInt laurent_s() { return LaurentInt::from_coeffs(-2, {Int(1), Int(0), Int(-2), Int(0), Int(1)}); }

}  // namespace twobridge

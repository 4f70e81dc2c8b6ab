#include "twobridge/dense2.hpp"

#include <algorithm>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

constexpr size_t kLimbBits = 8 * sizeof(mp_limb_t);

size_t ceil_log2(size_t n)
{
    size_t b = 0;
    while ((size_t(1) << b) < n) ++b;
    return b;
}

// Sum of coeffs * 2^(slot * k * 64); coefficients must fit in k limbs.
Int pack(const DensePoly2& a, int stride, size_t k, size_t nslots)
{
    std::vector<mp_limb_t> pos(nslots * k, 0), neg(nslots * k, 0);
    bool any_neg = false;
    Int wide;  // coefficients wider than a slot are added separately
    for (int l = 0; l < a.nl(); ++l) {
        for (int m = 0; m < a.nm(); ++m) {
            const Int& v = a.at(l, m);
            int sg = sgn(v);
            if (sg == 0) continue;
            size_t slot = static_cast<size_t>(l) * stride + m;
            if (mpz_size(v.get_mpz_t()) > k) {
                Int t;
                mpz_mul_2exp(t.get_mpz_t(), v.get_mpz_t(), slot * k * kLimbBits);
                wide += t;
                continue;
            }
            auto& buf = sg > 0 ? pos : neg;
            any_neg |= sg < 0;
            size_t cnt = 0;
            mpz_export(buf.data() + slot * k, &cnt, -1, sizeof(mp_limb_t), 0, 0, v.get_mpz_t());
        }
    }
    Int p, n;
    mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        p -= n;
    }
    return wide == 0 ? p : Int(p + wide);
}

// Balanced base-2^(64k) digits of v; false if v needs more than nslots digits.
bool unpack(const Int& v, size_t k, size_t nslots, std::vector<Int>& out)
{
    out.clear();
    out.resize(nslots);
    int sg = sgn(v);
    if (sg == 0) return true;
    size_t nlimbs = mpz_size(v.get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(v.get_mpz_t());
    auto limb = [&](size_t i) -> mp_limb_t { return i < nlimbs ? src[i] : 0; };

    const mp_limb_t top = mp_limb_t(1) << (kLimbBits - 1);
    std::vector<mp_limb_t> d(k);
    mp_limb_t carry = 0;
    for (size_t i = 0; i < nslots; ++i) {
        bool zero = true;
        for (size_t j = 0; j < k; ++j) {
            d[j] = limb(i * k + j);
            zero &= d[j] == 0;
        }
        if (zero && !carry) continue;
        // add the incoming carry
        for (size_t j = 0; j < k && carry; ++j) carry = ++d[j] == 0;
        // a carry out of the slot means the digit was base - 1 + 1 == 0 mod base
        bool wrapped = carry != 0;
        carry = 0;
        Int& o = out[i];
        if (!wrapped && (d[k - 1] & top)) {
            // digit - base: negate the two's complement value
            for (size_t j = 0; j < k; ++j) d[j] = ~d[j];
            for (size_t j = 0; j < k; ++j)
                if (++d[j] != 0) break;
            mpz_import(o.get_mpz_t(), k, -1, sizeof(mp_limb_t), 0, 0, d.data());
            if (sg > 0) mpz_neg(o.get_mpz_t(), o.get_mpz_t());
            carry = 1;
        } else {
            if (wrapped) {
                carry = 1;
                continue;
            }
            mpz_import(o.get_mpz_t(), k, -1, sizeof(mp_limb_t), 0, 0, d.data());
            if (sg < 0) mpz_neg(o.get_mpz_t(), o.get_mpz_t());
        }
    }
    if (carry) return false;
    for (size_t i = nslots * k; i < nlimbs; ++i)
        if (src[i] != 0) return false;
    return true;
}

DensePoly2 mul_school(const DensePoly2& a, const DensePoly2& b)
{
    DensePoly2 r(a.nl() + b.nl() - 1, a.nm() + b.nm() - 1);
    for (int i = 0; i < a.nl(); ++i)
        for (int j = 0; j < a.nm(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            for (int p = 0; p < b.nl(); ++p)
                for (int q = 0; q < b.nm(); ++q) {
                    const Int& y = b.at(p, q);
                    if (y != 0) mpz_addmul(r.at(i + p, j + q).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                }
        }
    r.trim();
    return r;
}

DensePoly2 mul_kronecker(const DensePoly2& a, const DensePoly2& b)
{
    int nl = a.nl() + b.nl() - 1, nm = a.nm() + b.nm() - 1;
    size_t bits = a.max_bits() + b.max_bits() +
                  ceil_log2(std::min(a.raw().size(), b.raw().size())) + 2;
    size_t k = bits / kLimbBits + 1;
    Int pa = pack(a, nm, k, static_cast<size_t>(a.nl() - 1) * nm + a.nm());
    Int pb = pack(b, nm, k, static_cast<size_t>(b.nl() - 1) * nm + b.nm());
    Int prod = pa * pb;
    std::vector<Int> digits;
    size_t nslots = static_cast<size_t>(nl) * nm;
    if (!unpack(prod, k, nslots, digits))
        throw Error(ErrorCode::Range, "Kronecker product overflow");
    DensePoly2 r(nl, nm);
    for (int l = 0; l < nl; ++l)
        for (int m = 0; m < nm; ++m) r.at(l, m) = std::move(digits[static_cast<size_t>(l) * nm + m]);
    r.trim();
    return r;
}

// Exact long division in Z[M][L]; rows are divided recursively in Z[M].
bool divexact_classic(const DensePoly2& a, const DensePoly2& b, DensePoly2& q)
{
    if (b.nl() == 1 && b.nm() == 1) {
        const Int& d = b.at(0, 0);
        q = DensePoly2(a.nl(), a.nm());
        for (int l = 0; l < a.nl(); ++l)
            for (int m = 0; m < a.nm(); ++m) {
                if (!mpz_divisible_p(a.at(l, m).get_mpz_t(), d.get_mpz_t())) return false;
                mpz_divexact(q.at(l, m).get_mpz_t(), a.at(l, m).get_mpz_t(), d.get_mpz_t());
            }
        return true;
    }
    if (a.nl() < b.nl() || a.nm() < b.nm()) return false;
    DensePoly2 r = a;
    if (b.nl() == 1) {
        // univariate in M: divide from the top M-degree downwards
        int bm = b.nm() - 1;
        const Int& lc = b.at(0, bm);
        q = DensePoly2(a.nl(), a.nm() - b.nm() + 1);
        for (int l = 0; l < a.nl(); ++l) {
            for (int m = a.nm() - 1; m >= bm; --m) {
                Int& top = r.at(l, m);
                if (top == 0) continue;
                if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
                Int t;
                mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
                for (int j = 0; j <= bm; ++j)
                    mpz_submul(r.at(l, m - bm + j).get_mpz_t(), t.get_mpz_t(), b.at(0, j).get_mpz_t());
                q.at(l, m - bm) = t;
            }
            for (int m = 0; m < bm; ++m)
                if (r.at(l, m) != 0) return false;
        }
        q.trim();
        return true;
    }
    int bl = b.nl() - 1;
    DensePoly2 blead = b.row(bl);
    q = DensePoly2(a.nl() - b.nl() + 1, a.nm() - b.nm() + 1);
    for (int l = a.nl() - 1; l >= bl; --l) {
        DensePoly2 top = r.row(l);
        top.trim();
        if (top.is_zero()) continue;
        DensePoly2 t;
        if (!divexact_classic(top, blead, t)) return false;
        if (t.nm() > q.nm()) return false;
        for (int m = 0; m < t.nm(); ++m) q.at(l - bl, m) = t.at(0, m);
        DensePoly2 sub = (t * b).shifted(l - bl, 0);
        r = r - sub;
    }
    r.trim();
    if (!r.is_zero()) return false;
    q.trim();
    return true;
}

}  // namespace

Int kronecker_pack(const DensePoly2& a, int stride, size_t k, size_t nslots)
{
    return pack(a, stride, k, nslots);
}

bool kronecker_unpack(const Int& v, size_t k, size_t nslots, std::vector<Int>& out)
{
    return unpack(v, k, nslots, out);
}

DensePoly2 DensePoly2::constant(const Int& v)
{
    if (v == 0) return {};
    DensePoly2 r(1, 1);
    r.at(0, 0) = v;
    return r;
}

DensePoly2 DensePoly2::monomial(const Int& v, int l, int m)
{
    if (v == 0) return {};
    DensePoly2 r(l + 1, m + 1);
    r.at(l, m) = v;
    return r;
}

Int DensePoly2::get(int l, int m) const
{
    if (l < 0 || m < 0 || l >= nl_ || m >= nm_) return 0;
    return at(l, m);
}

void DensePoly2::trim()
{
    int nl = nl_;
    while (nl > 0) {
        bool zero = true;
        for (int m = 0; m < nm_ && zero; ++m) zero = at(nl - 1, m) == 0;
        if (!zero) break;
        --nl;
    }
    int nm = 0;
    for (int l = 0; l < nl; ++l)
        for (int m = nm_ - 1; m >= nm; --m)
            if (at(l, m) != 0) {
                nm = m + 1;
                break;
            }
    if (nl == 0 || nm == 0) {
        nl_ = nm_ = 0;
        c_.clear();
        return;
    }
    if (nl == nl_ && nm == nm_) return;
    std::vector<Int> c(static_cast<size_t>(nl) * nm);
    for (int l = 0; l < nl; ++l)
        for (int m = 0; m < nm; ++m) c[static_cast<size_t>(l) * nm + m] = std::move(at(l, m));
    nl_ = nl;
    nm_ = nm;
    c_ = std::move(c);
}

size_t DensePoly2::max_bits() const
{
    size_t b = 0;
    for (const auto& v : c_)
        if (v != 0) b = std::max(b, mpz_sizeinbase(v.get_mpz_t(), 2));
    return b;
}

size_t DensePoly2::term_count() const
{
    return std::count_if(c_.begin(), c_.end(), [](const Int& v) { return v != 0; });
}

Int DensePoly2::content() const
{
    Int g = 0;
    for (const auto& v : c_) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

DensePoly2 DensePoly2::row(int l) const
{
    if (l < 0 || l >= nl_) return {};
    DensePoly2 r(1, nm_);
    for (int m = 0; m < nm_; ++m) r.at(0, m) = at(l, m);
    r.trim();
    return r;
}

int DensePoly2::min_m() const
{
    int best = nm_;
    for (int l = 0; l < nl_; ++l)
        for (int m = 0; m < best; ++m)
            if (at(l, m) != 0) {
                best = m;
                break;
            }
    return best == nm_ ? 0 : best;
}

DensePoly2 DensePoly2::operator-() const
{
    DensePoly2 r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

static DensePoly2 addsub(const DensePoly2& a, const DensePoly2& b, bool sub)
{
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    DensePoly2 r(std::max(a.nl(), b.nl()), std::max(a.nm(), b.nm()));
    for (int l = 0; l < a.nl(); ++l)
        for (int m = 0; m < a.nm(); ++m) r.at(l, m) = a.at(l, m);
    for (int l = 0; l < b.nl(); ++l)
        for (int m = 0; m < b.nm(); ++m) {
            if (sub)
                r.at(l, m) -= b.at(l, m);
            else
                r.at(l, m) += b.at(l, m);
        }
    r.trim();
    return r;
}

DensePoly2 operator+(const DensePoly2& a, const DensePoly2& b) { return addsub(a, b, false); }
DensePoly2 operator-(const DensePoly2& a, const DensePoly2& b) { return addsub(a, b, true); }

DensePoly2 operator*(const DensePoly2& a, const DensePoly2& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    size_t work = a.raw().size() * b.raw().size();
    if (work <= 2048 || a.raw().size() <= 2 || b.raw().size() <= 2) return mul_school(a, b);
    return mul_kronecker(a, b);
}

bool operator==(const DensePoly2& a, const DensePoly2& b)
{
    return a.nl_ == b.nl_ && a.nm_ == b.nm_ && a.c_ == b.c_;
}

DensePoly2 DensePoly2::scaled(const Int& s) const
{
    if (s == 0) return {};
    DensePoly2 r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

DensePoly2 DensePoly2::shifted(int dl, int dm) const
{
    if (is_zero()) return {};
    DensePoly2 r(nl_ + dl, nm_ + dm);
    for (int l = 0; l < nl_; ++l)
        for (int m = 0; m < nm_; ++m) r.at(l + dl, m + dm) = at(l, m);
    return r;
}

DensePoly2 DensePoly2::divexact_int(const Int& s) const
{
    DensePoly2 r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return r;
}

DensePoly2 DensePoly2::transpose() const
{
    DensePoly2 r(nm_, nl_);
    for (int l = 0; l < nl_; ++l)
        for (int m = 0; m < nm_; ++m) r.at(m, l) = at(l, m);
    return r;
}

DensePoly2 DensePoly2::deriv_L() const
{
    if (nl_ <= 1) return {};
    DensePoly2 r(nl_ - 1, nm_);
    for (int l = 1; l < nl_; ++l)
        for (int m = 0; m < nm_; ++m) r.at(l - 1, m) = at(l, m) * l;
    r.trim();
    return r;
}

DensePoly2 DensePoly2::pow(unsigned e) const
{
    DensePoly2 r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool divexact(const DensePoly2& a, const DensePoly2& b, DensePoly2& q)
{
    if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
    if (a.is_zero()) {
        q = {};
        return true;
    }
    if (a.nl() < b.nl() || a.nm() < b.nm()) return false;
    if (a.raw().size() * b.raw().size() <= 4096 || b.raw().size() == 1) return divexact_classic(a, b, q);

    int qnl = a.nl() - b.nl() + 1, qnm = a.nm() - b.nm() + 1;
    int stride = a.nm();
    size_t need = std::max(a.max_bits(), b.max_bits()) + 2;
    for (int attempt = 0; attempt < 4; ++attempt) {
        size_t k = need / kLimbBits + 1;
        Int pa = pack(a, stride, k, static_cast<size_t>(a.nl()) * stride);
        Int pb = pack(b, stride, k, static_cast<size_t>(b.nl()) * stride);
        Int qv, rv;
        mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
        if (rv != 0) return false;
        std::vector<Int> digits;
        if (!unpack(qv, k, static_cast<size_t>(qnl) * stride, digits)) {
            need *= 2;
            continue;
        }
        DensePoly2 cand(qnl, qnm);
        bool spill = false;
        for (int l = 0; l < qnl; ++l)
            for (int m = 0; m < stride; ++m) {
                Int& d = digits[static_cast<size_t>(l) * stride + m];
                if (m < qnm)
                    cand.at(l, m) = std::move(d);
                else if (d != 0)
                    spill = true;
            }
        if (spill) {
            need *= 2;
            continue;
        }
        cand.trim();
        // B*Q and A agree at 2^(64k); if every coefficient on both sides is
        // below 2^(64k-1) the balanced digits coincide and A == B*Q.
        size_t bound = std::max(a.max_bits(),
                                b.max_bits() + cand.max_bits() +
                                    ceil_log2(std::min(b.raw().size(), cand.raw().size())) + 1);
        if (bound + 1 < k * kLimbBits) {
            q = std::move(cand);
            return true;
        }
        need = std::max(need, bound + 2);
    }
    return divexact_classic(a, b, q);
}

DensePoly2 divexact_or_throw(const DensePoly2& a, const DensePoly2& b)
{
    DensePoly2 q;
    if (!divexact(a, b, q)) throw Error(ErrorCode::Nonintegral, "inexact polynomial division");
    return q;
}

DensePoly2 dense_from_lpoly(const std::vector<LaurentInt>& lcoeffs, int m_shift)
{
    int hi = -1;
    for (const auto& c : lcoeffs)
        if (!c.is_zero()) {
            if (c.min_exp() + m_shift < 0) throw Error(ErrorCode::Range, "negative M-exponent after shift");
            hi = std::max(hi, c.max_exp() + m_shift);
        }
    if (hi < 0) return {};
    DensePoly2 r(static_cast<int>(lcoeffs.size()), hi + 1);
    for (size_t l = 0; l < lcoeffs.size(); ++l) {
        const auto& c = lcoeffs[l];
        for (size_t i = 0; i < c.coeffs().size(); ++i)
            r.at(static_cast<int>(l), c.min_exp() + m_shift + static_cast<int>(i)) = c.coeffs()[i];
    }
    r.trim();
    return r;
}

}  // namespace twobridge

#include <algorithm>
#include <climits>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "twobridge/resultant.hpp"

namespace twobridge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using PolyD = std::vector<DensePoly2>;

// Montgomery arithmetic modulo an odd prime below 2^62.
struct Mont {
    u64 p, pinv, r2;

    explicit Mont(u64 prime) : p(prime)
    {
        u64 inv = p;
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        pinv = -inv;
        u128 r = (static_cast<u128>(1) << 64) % p;
        r2 = static_cast<u64>(r * r % p);
    }
    u64 reduce(u128 t) const
    {
        u64 m = static_cast<u64>(t) * pinv;
        u64 u = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
        return u >= p ? u - p : u;
    }
    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    u64 add(u64 a, u64 b) const
    {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 to(u64 a) const { return mul(a % p, r2); }
    u64 from(u64 a) const { return reduce(a); }
    u64 one() const { return to(1); }
    u64 pow(u64 a, u64 e) const
    {
        u64 r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 from_int(const Int& v) const { return to(mpz_fdiv_ui(v.get_mpz_t(), p)); }
};

const std::vector<u64>& prime_list(size_t count)
{
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    Int c = (Int(1) << 62) - 1;
    if (!primes.empty()) c = Int(primes.back()) - 2;
    while (primes.size() < count) {
        if (mpz_probab_prime_p(c.get_mpz_t(), 40)) primes.push_back(mpz_get_ui(c.get_mpz_t()));
        c -= 2;
    }
    return primes;
}

// Res over F_p of dense polys (Montgomery form, trimmed)
u64 res_euclid(const Mont& F, std::vector<u64> a, std::vector<u64> b)
{
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    u64 res = F.one();
    for (;;) {
        int n = static_cast<int>(a.size()) - 1, m = static_cast<int>(b.size()) - 1;
        if (m == 0) return F.mul(res, F.pow(b[0], static_cast<u64>(n)));
        u64 ilc = F.inv(b.back());
        for (int i = n; i >= m; --i) {
            u64 t = F.mul(a[i], ilc);
            if (t == 0) continue;
            for (int j = 0; j <= m; ++j) a[i - m + j] = F.sub(a[i - m + j], F.mul(t, b[j]));
        }
        a.resize(m);
        trim(a);
        if (a.empty()) return 0;
        int dr = static_cast<int>(a.size()) - 1;
        if ((n & 1) && (m & 1)) res = F.sub(0, res);
        res = F.mul(res, F.pow(b.back(), static_cast<u64>(n - dr)));
        std::swap(a, b);
    }
}

// Res of specialized p, q whose p keeps its leading coefficient; q may drop degree
u64 point_res(const Mont& F, std::vector<u64> pv, std::vector<u64> qv)
{
    int d = static_cast<int>(pv.size()) - 1, e = static_cast<int>(qv.size()) - 1;
    int ea = e;
    while (ea >= 0 && qv[ea] == 0) --ea;
    if (ea < 0) return d == 0 ? F.one() : 0;
    qv.resize(ea + 1);
    u64 lead = pv[d];
    u64 r = res_euclid(F, std::move(pv), std::move(qv));
    if (ea < e) r = F.mul(r, F.pow(lead, static_cast<u64>(e - ea)));
    return r;
}

// Lagrange interpolation of several value vectors sharing the nodes xs.
// ys[j][i] is the j-th series at xs[i]; returns coefficient vectors.
std::vector<std::vector<u64>> interpolate(const Mont& F, const std::vector<u64>& xs,
                                          const std::vector<std::vector<u64>>& ys)
{
    size_t n = xs.size();
    std::vector<u64> master(n + 1, 0);
    master[0] = F.one();
    for (size_t i = 0; i < n; ++i) {
        // master *= (X - x_i)
        for (size_t k = i + 1; k > 0; --k) master[k] = F.sub(master[k - 1], F.mul(master[k], xs[i]));
        master[0] = F.sub(0, F.mul(master[0], xs[i]));
    }
    std::vector<u64> denom(n, F.one());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (j != i) denom[i] = F.mul(denom[i], F.sub(xs[i], xs[j]));
    // batch inversion
    std::vector<u64> pref(n + 1, F.one());
    for (size_t i = 0; i < n; ++i) pref[i + 1] = F.mul(pref[i], denom[i]);
    u64 inv = F.inv(pref[n]);
    std::vector<u64> w(n);
    for (size_t i = n; i-- > 0;) {
        w[i] = F.mul(inv, pref[i]);
        inv = F.mul(inv, denom[i]);
    }
    std::vector<std::vector<u64>> out(ys.size(), std::vector<u64>(n, 0));
    std::vector<u64> quot(n);
    std::vector<u64> scale(ys.size());
    for (size_t i = 0; i < n; ++i) {
        // quot = master / (X - x_i)
        u64 carry = 0;
        for (size_t k = n; k > 0; --k) {
            carry = F.add(master[k], F.mul(carry, xs[i]));
            quot[k - 1] = carry;
        }
        for (size_t j = 0; j < ys.size(); ++j) scale[j] = F.mul(ys[j][i], w[i]);
        for (size_t j = 0; j < ys.size(); ++j) {
            u64 sj = scale[j];
            if (sj == 0) continue;
            auto& o = out[j];
            for (size_t k = 0; k < n; ++k) o[k] = F.add(o[k], F.mul(sj, quot[k]));
        }
    }
    return out;
}

struct Bounds {
    int deg_l = 0;
    ExponentWindow m;
    double log2_coeff = 0;
};

double log2_l1(const DensePoly2& a)
{
    Int s = 0;
    for (const auto& v : a.raw()) s += abs(v);
    if (s == 0) return -INFINITY;
    long e = 0;
    double d = mpz_get_d_2exp(&e, s.get_mpz_t());
    return std::log2(d) + static_cast<double>(e);
}

// log2 sqrt(sum ||a_k||_1^2)
double log2_row(const PolyD& a)
{
    double mx = -INFINITY;
    std::vector<double> l;
    for (const auto& c : a) {
        double v = log2_l1(c);
        l.push_back(v);
        mx = std::max(mx, v);
    }
    double s = 0;
    for (double v : l)
        if (std::isfinite(v)) s += std::exp2(2 * (v - mx));
    return mx + 0.5 * std::log2(s);
}

Bounds bounds(const PolyD& p, const PolyD& q)
{
    int d = static_cast<int>(p.size()) - 1, e = static_cast<int>(q.size()) - 1;
    Bounds b;
    int lp = 0, lq = 0;
    for (const auto& c : p) lp = std::max(lp, c.deg_L());
    for (const auto& c : q) lq = std::max(lq, c.deg_L());
    b.deg_l = e * lp + d * lq;
    b.m = resultant_m_window(p, q);
    b.log2_coeff = e * log2_row(p) + d * log2_row(q);
    return b;
}

struct Image {
    bool ok = false;
    std::vector<u64> coeff;  // [l * nm + m], canonical residues
};

Image image_mod(u64 prime, const PolyD& p, const PolyD& q, const Bounds& bd)
{
    Mont F(prime);
    int d = static_cast<int>(p.size()) - 1;
    int nl = bd.deg_l + 1, nm = bd.m.hi - bd.m.lo + 1;

    // residues: per coefficient, per L-row, M-coefficients
    auto reduce = [&](const PolyD& a) {
        std::vector<std::vector<std::vector<u64>>> r(a.size());
        for (size_t k = 0; k < a.size(); ++k) {
            r[k].assign(a[k].nl(), std::vector<u64>(a[k].nm()));
            for (int l = 0; l < a[k].nl(); ++l)
                for (int m = 0; m < a[k].nm(); ++m) r[k][l][m] = F.from_int(a[k].at(l, m));
        }
        return r;
    };
    auto pr = reduce(p), qr = reduce(q);

    auto eval_m = [&](const std::vector<std::vector<std::vector<u64>>>& a, u64 x) {
        std::vector<std::vector<u64>> out(a.size());
        for (size_t k = 0; k < a.size(); ++k) {
            out[k].resize(a[k].size());
            for (size_t l = 0; l < a[k].size(); ++l) {
                u64 acc = 0;
                const auto& row = a[k][l];
                for (size_t m = row.size(); m-- > 0;) acc = F.add(F.mul(acc, x), row[m]);
                out[k][l] = acc;
            }
        }
        return out;
    };
    auto eval_l = [&](const std::vector<std::vector<u64>>& a, u64 y) {
        std::vector<u64> out(a.size());
        for (size_t k = 0; k < a.size(); ++k) {
            u64 acc = 0;
            for (size_t l = a[k].size(); l-- > 0;) acc = F.add(F.mul(acc, y), a[k][l]);
            out[k] = acc;
        }
        return out;
    };

    std::vector<u64> mxs;
    std::vector<std::vector<u64>> table(nl);  // table[j][i]: coefficient of L^j at mxs[i]
    long cand = 1;
    bool neg = false;
    int tries = 0;
    while (static_cast<int>(mxs.size()) < nm) {
        if (++tries > 4 * nm + 64) return {};
        u64 xm = neg ? prime - static_cast<u64>(cand) : static_cast<u64>(cand);
        if (neg) ++cand;
        neg = !neg;
        u64 x = F.to(xm);
        auto pm = eval_m(pr, x);
        bool lead_zero = std::all_of(pm[d].begin(), pm[d].end(), [](u64 v) { return v == 0; });
        if (lead_zero) continue;
        auto qm = eval_m(qr, x);

        std::vector<u64> lys;
        std::vector<std::vector<u64>> vals(1);
        for (u64 yl = 0; static_cast<int>(lys.size()) < nl; ++yl) {
            if (yl > static_cast<u64>(4 * nl + 64)) return {};
            u64 y = F.to(yl);
            auto pv = eval_l(pm, y);
            if (pv[d] == 0) continue;
            u64 r = point_res(F, std::move(pv), eval_l(qm, y));
            lys.push_back(y);
            vals[0].push_back(r);
        }
        auto lc = interpolate(F, lys, vals)[0];
        // remove the M^lo factor
        u64 xinv = F.inv(x);
        u64 unshift = bd.m.lo >= 0 ? F.pow(xinv, static_cast<u64>(bd.m.lo)) : F.pow(x, static_cast<u64>(-bd.m.lo));
        for (int j = 0; j < nl; ++j) table[j].push_back(F.mul(lc[j], unshift));
        mxs.push_back(x);
    }
    auto coeffs = interpolate(F, mxs, table);
    Image img;
    img.ok = true;
    img.coeff.resize(static_cast<size_t>(nl) * nm);
    for (int j = 0; j < nl; ++j)
        for (int i = 0; i < nm; ++i) img.coeff[static_cast<size_t>(j) * nm + i] = F.from(coeffs[j][i]);
    return img;
}

DensePoly2 power_of(const DensePoly2& c, int e) { return c.pow(static_cast<unsigned>(e)); }

// compare a candidate resultant with direct evaluation modulo a fresh random prime
bool spot_check(const DensePoly2& r, const PolyD& p, const PolyD& q, std::mt19937_64& rng)
{
    Int c = static_cast<unsigned long>((rng() >> 4) | (u64(1) << 59));
    mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
    Mont F(mpz_get_ui(c.get_mpz_t()));
    auto eval2 = [&](const DensePoly2& a, u64 x, u64 y) {
        u64 acc = 0;
        for (int l = a.nl(); l-- > 0;) {
            u64 row = 0;
            for (int m = a.nm(); m-- > 0;) row = F.add(F.mul(row, x), F.from_int(a.get(l, m)));
            acc = F.add(F.mul(acc, y), row);
        }
        return acc;
    };
    for (int done = 0, tries = 0; done < 3; ++tries) {
        if (tries > 64) return false;
        u64 x = F.to(2 + rng() % (F.p - 4)), y = F.to(2 + rng() % (F.p - 4));
        std::vector<u64> pv, qv;
        for (const auto& a : p) pv.push_back(eval2(a, x, y));
        if (pv.back() == 0) continue;
        for (const auto& a : q) qv.push_back(eval2(a, x, y));
        if (point_res(F, pv, qv) != eval2(r, x, y)) return false;
        ++done;
    }
    return true;
}

}  // namespace

ExponentWindow resultant_m_window(const std::vector<DensePoly2>& p, const std::vector<DensePoly2>& q)
{
    // Res(a(x M^w), b(x M^w)) = M^(w d e) Res(a, b); bound the weighted
    // Sylvester determinant by its row extremes and keep the best w.
    int d = static_cast<int>(p.size()) - 1, e = static_cast<int>(q.size()) - 1;
    int span = 1;
    for (const auto& c : p) span = std::max(span, c.nm());
    for (const auto& c : q) span = std::max(span, c.nm());
    auto ext = [](const PolyD& a, int w, bool hi) {
        long best = hi ? LONG_MIN : LONG_MAX;
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k].is_zero()) continue;
            long v = (hi ? a[k].deg_M() : a[k].min_m()) + static_cast<long>(w) * static_cast<long>(k);
            best = hi ? std::max(best, v) : std::min(best, v);
        }
        return best;
    };
    long up = LONG_MAX, lo = LONG_MIN;
    for (int w = -span - 1; w <= span + 1; ++w) {
        long de = static_cast<long>(w) * d * e;
        up = std::min(up, e * ext(p, w, true) + d * ext(q, w, true) - de);
        lo = std::max(lo, e * ext(p, w, false) + d * ext(q, w, false) - de);
    }
    return {static_cast<int>(lo), static_cast<int>(up)};
}

DensePoly2 resultant_evalinterp(const std::vector<DensePoly2>& p0, const std::vector<DensePoly2>& q0,
                                unsigned threads)
{
    PolyD p = p0, q = q0;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (p.empty() || q.empty()) throw Error(ErrorCode::EmptyInput, "resultant of a zero polynomial");
    int d = static_cast<int>(p.size()) - 1, e = static_cast<int>(q.size()) - 1;
    if (e == 0) return power_of(q[0], d);
    if (d == 0) return power_of(p[0], e);

    Bounds bd = bounds(p, q);
    if (bd.m.lo > bd.m.hi) return {};
    int nl = bd.deg_l + 1, nm = bd.m.hi - bd.m.lo + 1;
    size_t ncoef = static_cast<size_t>(nl) * nm;
    // enough primes for prod(primes) > 2 * bound
    size_t bound_primes = static_cast<size_t>(std::ceil((bd.log2_coeff + 2) / 61.0)) + 1;
    const auto& primes = prime_list(bound_primes + 16);
    unsigned nt = std::max(1u, threads);

    // symmetric Garner accumulation
    std::vector<Int> acc(ncoef);
    Int modulus = 1;
    size_t next_prime = 0, used = 0;
    auto add_image = [&](u64 pr, const Image& img) {
        u64 minv;
        {
            Int inv, pz(pr);
            Int mm = modulus % pz;
            mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
            minv = mpz_get_ui(inv.get_mpz_t());
        }
        bool changed = false;
        for (size_t i = 0; i < ncoef; ++i) {
            u64 cur = mpz_fdiv_ui(acc[i].get_mpz_t(), pr);
            u64 r = img.coeff[i];
            u64 diff = r >= cur ? r - cur : r + pr - cur;
            u64 t = static_cast<u64>(static_cast<u128>(diff) * minv % pr);
            if (t == 0) continue;
            changed = true;
            if (t > pr / 2)
                mpz_submul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), pr - t);
            else
                mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        modulus *= Int(pr);
        ++used;
        return changed;
    };

    auto take_images = [&](size_t count) {
        std::vector<Image> imgs(count);
        std::vector<u64> ps(count);
        std::mutex mu;
        size_t slot_next = 0;
        auto worker = [&] {
            for (;;) {
                size_t slot, pi;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (slot_next >= count) return;
                    slot = slot_next++;
                    if (next_prime >= primes.size()) throw Error(ErrorCode::Range, "ran out of primes");
                    pi = next_prime++;
                }
                for (;;) {
                    Image img = image_mod(primes[pi], p, q, bd);
                    if (img.ok) {
                        imgs[slot] = std::move(img);
                        ps[slot] = primes[pi];
                        break;
                    }
                    std::lock_guard<std::mutex> lock(mu);
                    if (next_prime >= primes.size()) throw Error(ErrorCode::Range, "ran out of primes");
                    pi = next_prime++;
                }
            }
        };
        unsigned n = std::min<unsigned>(nt, static_cast<unsigned>(count));
        if (n <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errs(n);
            for (unsigned t = 0; t < n; ++t)
                pool.emplace_back([&, t] {
                    try {
                        worker();
                    } catch (...) {
                        errs[t] = std::current_exception();
                    }
                });
            for (auto& th : pool) th.join();
            for (auto& ep : errs)
                if (ep) std::rethrow_exception(ep);
        }
        return std::make_pair(std::move(ps), std::move(imgs));
    };

    DensePoly2 r;
    auto build = [&] {
        r = DensePoly2(nl, bd.m.hi + 1);
        for (int j = 0; j < nl; ++j)
            for (int i = 0; i < nm; ++i) {
                const Int& v = acc[static_cast<size_t>(j) * nm + i];
                if (v != 0) r.at(j, bd.m.lo + i) = v;
            }
        r.trim();
    };

    // Stop early once a new prime leaves every coefficient unchanged and the
    // candidate agrees with direct evaluation at random points; otherwise run
    // to the coefficient bound.
    std::mt19937_64 rng(0x5eed ^ (static_cast<u64>(nl) << 32) ^ static_cast<u64>(nm));
    while (used < bound_primes) {
        size_t batch = std::min<size_t>(nt, bound_primes - used);
        auto [ps, imgs] = take_images(batch);
        bool stable = false;
        for (size_t b = 0; b < batch; ++b) {
            bool first = used == 0;
            bool changed = add_image(ps[b], imgs[b]);
            stable = !first && !changed;
        }
        if (!stable || used >= bound_primes) continue;
        build();
        if (spot_check(r, p, q, rng)) return r;
    }
    build();
    return r;
}

}  // namespace twobridge

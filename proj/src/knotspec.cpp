#include "twobridge/knotspec.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod_inverse(long a, long m)
{
    long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr) {
        long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return ((t % m) + m) % m;
}

std::vector<int> orbit_of(int alpha, int beta)
{
    std::set<int> s{beta, static_cast<int>(mod_inverse(beta, alpha))};
    std::vector<int> o{beta};
    for (int v : s)
        if (v != beta) o.push_back(v);
    return o;
}

int smallest_odd(const std::vector<int>& orbit)
{
    int best = 0;
    for (int v : orbit)
        if (v % 2 == 1 && (best == 0 || v < best)) best = v;
    return best;
}

}  // namespace

TwoBridgeFraction make_fraction(int alpha, int beta)
{
    if (alpha < 3 || alpha % 2 == 0)
        throw Error(ErrorCode::InvalidFraction, "alpha must be odd and at least 3");
    if (beta <= 0 || beta >= alpha) throw Error(ErrorCode::InvalidFraction, "beta out of range");
    if (std::gcd(alpha, beta) != 1) throw Error(ErrorCode::InvalidFraction, "alpha and beta not coprime");
    return {alpha, beta};
}

int EpsilonSeq::sigma() const { return std::accumulate(eps.begin(), eps.end(), 0); }

EpsilonSeq EpsilonSeq::negated() const
{
    EpsilonSeq r = *this;
    for (int& v : r.eps) v = -v;
    return r;
}

std::string EpsilonSeq::str() const
{
    std::string s;
    for (int v : eps) s += v > 0 ? '+' : '-';
    return s;
}

EpsilonSeq validate_epsilon(const std::vector<int>& raw)
{
    for (int v : raw)
        if (v != 1 && v != -1) throw Error(ErrorCode::NonUnitEntry, "entries must be +1 or -1");
    if (raw.size() % 2) throw Error(ErrorCode::OddLength, "sequence length must be even");
    size_t n = raw.size();
    for (size_t i = 0; i < n; ++i)
        if (raw[i] != raw[n - 1 - i]) throw Error(ErrorCode::NotSymmetric, "sequence is not symmetric");
    return EpsilonSeq{raw};
}

EpsilonSeq parse_epsilon(const std::string& s)
{
    std::vector<int> v;
    for (size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == '+') {
            v.push_back(1);
        } else if (c == '-') {
            v.push_back(-1);
        } else if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
                   static_cast<unsigned char>(s[i + 2]) == 0x92) {
            v.push_back(-1);
            i += 2;
        } else {
            throw Error(ErrorCode::NonUnitEntry, std::string("unexpected character in sign string: ") + s);
        }
    }
    return validate_epsilon(v);
}

EpsilonSeq epsilon_from_fraction(const TwoBridgeFraction& fr)
{
    TwoBridgeFraction f = make_fraction(fr.alpha, fr.beta);
    // an even beta is replaced by beta - alpha; both name the same knot and
    // only the odd one gives a symmetric sequence
    long b = f.beta % 2 ? f.beta : f.beta - f.alpha;
    EpsilonSeq e;
    for (long i = 1; i < f.alpha; ++i) e.eps.push_back(floor_div(i * b, f.alpha) % 2 == 0 ? 1 : -1);
    return e;
}

HalfSeq half_from_e(const std::vector<int>& e)
{
    HalfSeq h;
    h.e = e;
    int prod = 1, acc = 0;
    for (size_t k = 0; k < e.size(); ++k) {
        int d = k == 0 ? 1 : e[k - 1] * e[k];
        h.delta.push_back(d);
        prod *= d;
        acc += prod;
        h.beta.push_back(acc);
    }
    return h;
}

HalfSeq half_sequences(const EpsilonSeq& eps)
{
    int n = static_cast<int>(eps.eps.size()) / 2;
    std::vector<int> e;
    for (int k = 1; k <= n; ++k) e.push_back(eps.eps[n - k]);
    return half_from_e(e);
}

EpsilonSeq epsilon_from_half(const std::vector<int>& e)
{
    EpsilonSeq s;
    s.eps.assign(e.rbegin(), e.rend());
    s.eps.insert(s.eps.end(), e.begin(), e.end());
    return s;
}

std::vector<EpsilonSeq> all_symmetric(int alpha)
{
    std::vector<EpsilonSeq> out;
    if (alpha < 1 || alpha % 2 == 0) return out;
    int n = (alpha - 1) / 2;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e(n);
        for (int k = 0; k < n; ++k) e[k] = (mask >> k) & 1 ? -1 : 1;
        out.push_back(epsilon_from_half(e));
    }
    return out;
}

std::pair<TwoBridgeFraction, EquivalenceReport> normalize_fraction(long alpha, long beta_raw)
{
    if (alpha < 3 || alpha % 2 == 0) throw Error(ErrorCode::InvalidFraction, "alpha must be odd and at least 3");
    long b = ((beta_raw % alpha) + alpha) % alpha;
    if (std::gcd(alpha, b) != 1) throw Error(ErrorCode::InvalidFraction, "alpha and beta not coprime");
    TwoBridgeFraction fr = make_fraction(static_cast<int>(alpha), static_cast<int>(b));
    EquivalenceReport rep;
    rep.orbit = orbit_of(fr.alpha, fr.beta);
    rep.mirror = fr.alpha - fr.beta;
    return {fr, rep};
}

std::vector<CensusEntry> census(int max_alpha)
{
    std::vector<CensusEntry> out;
    for (int a = 3; a <= max_alpha; a += 2) {
        std::set<int> seen;
        for (int b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1 || seen.count(b)) continue;
            auto orbit = orbit_of(a, b);
            seen.insert(orbit.begin(), orbit.end());
            int rep = smallest_odd(orbit);
            if (rep == 0) continue;
            CensusEntry c;
            c.fraction = {a, rep};
            c.orbit = orbit;
            std::sort(c.orbit.begin(), c.orbit.end());
            auto morbit = orbit_of(a, a - rep);
            c.mirror_beta = smallest_odd(morbit);
            c.amphichiral = std::find(c.orbit.begin(), c.orbit.end(), a - rep) != c.orbit.end();
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace twobridge

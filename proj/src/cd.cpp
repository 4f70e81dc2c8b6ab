#include <functional>

#include "twobridge/riley.hpp"

namespace twobridge {

const char* cd_kind_name(CDKind k)
{
    switch (k) {
    case CDKind::C: return "c";
    case CDKind::D: return "d";
    case CDKind::CTilde: return "c_tilde";
    case CDKind::DTilde: return "d_tilde";
    }
    return "?";
}

std::vector<LaurentInt> cd_table(const std::vector<int>& eps, CDKind kind, int n)
{
    if (n < 0 || n > static_cast<int>(eps.size()) || n > kCdMaxLength)
        throw Error(ErrorCode::Range, "cd length out of range: " + std::to_string(n));
    bool first_odd = kind == CDKind::C || kind == CDKind::CTilde;
    bool alt = kind == CDKind::CTilde || kind == CDKind::DTilde;
    bool negate = kind == CDKind::D || kind == CDKind::DTilde;

    // counts[k][exponent + n]
    std::vector<std::vector<long>> counts(n + 1, std::vector<long>(2 * n + 1, 0));
    std::function<void(int, int, int, int, int)> walk = [&](int i, int j, int expo, int coef, int sign) {
        if (i > n) {
            counts[j][(negate ? -expo : expo) + n] += coef;
            return;
        }
        int e = eps[i - 1];
        // skip i
        if (alt)
            walk(i + 1, j, expo + sign * e, coef, -sign);
        else
            walk(i + 1, j, expo + sign * e, coef, sign);
        // take i as the (j+1)-th index
        bool parity_ok = ((i % 2 == 1) == ((j % 2 == 0) == first_odd));
        if (parity_ok) walk(i + 1, j + 1, expo, coef * e, alt ? sign : -sign);
    };
    walk(1, 0, 0, 1, alt ? -1 : 1);

    std::vector<LaurentInt> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<Int> c(counts[k].begin(), counts[k].end());
        out.push_back(LaurentInt::from_coeffs(-n, std::move(c)));
    }
    return out;
}

CDIndexSum cd_enumerate(const std::vector<int>& eps, CDKind kind, int k, int n)
{
    if (k < -1) throw Error(ErrorCode::Range, "cd index below -1");
    CDIndexSum r{kind, k, n, LaurentInt()};
    auto table = cd_table(eps, kind, n);
    if (k >= 0 && k <= n) r.value = table[k];
    return r;
}

}  // namespace twobridge

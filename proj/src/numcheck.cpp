#include "twobridge/numcheck.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

#include "twobridge/riley.hpp"

namespace twobridge {

ComplexMat2 ComplexMat2::inverse() const { return {a22, -a12, -a21, a11}; }

double ComplexMat2::norm() const
{
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
}

ComplexMat2 operator*(const ComplexMat2& x, const ComplexMat2& y)
{
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22, x.a21 * y.a11 + x.a22 * y.a21,
            x.a21 * y.a12 + x.a22 * y.a22};
}

ComplexMat2 operator-(const ComplexMat2& x, const ComplexMat2& y)
{
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}

cplx eval_laurent(const LaurentInt& p, cplx M)
{
    if (p.is_zero()) return 0.0;
    cplx acc = 0.0;
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * M + c[i].get_d();
    return acc * std::pow(M, p.min_exp());
}

cplx eval_lampoly(const LamPoly& p, cplx M, cplx v)
{
    cplx acc = 0.0;
    const auto& c = p.poly().coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * v + eval_laurent(c[i], M);
    return acc;
}

double bivar_relative_residual(const BivarInt& p, cplx L, cplx M)
{
    cplx sum = 0.0;
    double biggest = 0;
    for (const auto& [k, v] : p.terms()) {
        cplx t = v.get_d() * std::pow(L, k.first) * std::pow(M, k.second);
        sum += t;
        biggest = std::max(biggest, std::abs(t));
    }
    return biggest > 0 ? std::abs(sum) / biggest : 0.0;
}

std::vector<NumericRoot> numeric_roots(const LamPoly& f, cplx M0)
{
    if (std::abs(M0) < 1e-12 || std::abs(M0 - 1.0) < 1e-9 || std::abs(M0 + 1.0) < 1e-9)
        throw Error(ErrorCode::BadM0, "M0 must avoid 0, 1 and -1");
    int d = f.degree();
    std::vector<cplx> c;
    for (int i = 0; i <= d; ++i) c.push_back(eval_laurent(f.coeff(i), M0));
    if (d < 0 || std::abs(c[d]) < 1e-300) throw Error(ErrorCode::BadM0, "leading coefficient vanishes at M0");

    std::vector<cplx> roots;
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
    } else if (d > 1) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
        for (int j = 0; j < d; ++j) comp(0, j) = -c[d - 1 - j] / c[d];
        for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
        for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
    }
    std::vector<NumericRoot> out;
    for (cplx r : roots) {
        cplx val = 0.0;
        double scale = 0;
        for (int i = d; i >= 0; --i) {
            val = val * r + c[i];
            scale += std::abs(c[i]) * std::pow(std::abs(r), i);
        }
        out.push_back({M0, r, scale > 0 ? std::abs(val) / scale : 0.0});
    }
    return out;
}

bool NumericReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string NumericReport::json() const
{
    std::ostringstream os;
    os.precision(3);
    os << "{\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i)
        os << (i ? "," : "") << "{\"name\":\"" << checks[i].name << "\",\"residual\":" << std::scientific
           << checks[i].residual << ",\"pass\":" << (checks[i].pass ? "true" : "false") << "}";
    os << "],\"pass\":" << (pass() ? "true" : "false") << "}";
    return os.str();
}

namespace {

ComplexMat2 rho_x(cplx M) { return {M, 1.0, 0.0, 1.0 / M}; }
ComplexMat2 rho_y(cplx M, cplx lam) { return {M, 0.0, lam, 1.0 / M}; }

std::string residual_text(const NumericReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) os << " " << c.name << "=" << c.residual;
    return os.str();
}

}  // namespace

ComplexMat2 numeric_word(const EpsilonSeq& eps, cplx M, cplx lam, bool exchanged)
{
    ComplexMat2 x = rho_x(M), y = rho_y(M, lam);
    ComplexMat2 w = ComplexMat2::identity();
    for (size_t i = 0; i < eps.eps.size(); ++i) {
        const ComplexMat2& b = ((i % 2 == 0) != exchanged) ? x : y;
        w = w * (eps.eps[i] > 0 ? b : b.inverse());
    }
    return w;
}

NumericReport verify_representation(const EpsilonSeq& eps, const NumericRoot& root, double tol)
{
    cplx M = root.M0, z = M - 1.0 / M;
    cplx lam = root.lam_tilde0 - z * z;
    ComplexMat2 x = rho_x(M), y = rho_y(M, lam);
    ComplexMat2 w = numeric_word(eps, M, lam);
    NumericReport rep;
    double rel = (w * x - y * w).norm() / (w.norm() * (x.norm() + y.norm()));
    rep.checks.push_back({"word_relation", rel, rel <= tol});
    double t1 = std::abs((x * y).trace() - 2.0 - root.lam_tilde0) / (1.0 + std::abs(root.lam_tilde0));
    rep.checks.push_back({"trace_product", t1, t1 <= tol});
    double t2 = std::abs(2.0 - (x * y.inverse()).trace() - lam) / (1.0 + std::abs(lam));
    rep.checks.push_back({"trace_quotient", t2, t2 <= tol});
    if (!rep.pass()) throw Error(ErrorCode::RelationFailed, "representation check failed:" + residual_text(rep));
    return rep;
}

NumericReport verify_longitude(const EpsilonSeq& eps, const NumericRoot& root, double tol)
{
    cplx M = root.M0, z = M - 1.0 / M;
    cplx lam = root.lam_tilde0 - z * z;
    ComplexMat2 w = numeric_word(eps, M, lam), ws = numeric_word(eps, M, lam, true);
    int sigma = eps.sigma();
    ComplexMat2 xp = ComplexMat2::identity(), x = rho_x(M);
    ComplexMat2 step = sigma > 0 ? x.inverse() : x;
    for (int i = 0; i < 2 * std::abs(sigma); ++i) xp = xp * step;
    ComplexMat2 gamma = ws * w * xp;

    RileyPair rp = riley_recursive(half_sequences(eps));
    cplx g = eval_lampoly(rp.g_n(), M, root.lam_tilde0);
    cplx gb = eval_lampoly(rp.g_n().bar(), M, root.lam_tilde0);
    cplx m2s = std::pow(M, -2 * sigma);

    NumericReport rep;
    rep.L = gamma.a11;
    double scale = std::max(1.0, std::abs(rep.L));
    double low = std::abs(gamma.a21) / gamma.norm();
    rep.checks.push_back({"lower_left_zero", low, low <= tol});
    double r1 = std::abs(rep.L + g / gb * m2s) / scale;
    rep.checks.push_back({"eigenvalue_ratio_form", r1, r1 <= tol});
    double r2 = std::abs(rep.L - root.lam_tilde0 * g * g * m2s) / scale;
    rep.checks.push_back({"eigenvalue_square_form", r2, r2 <= tol});
    if (!rep.pass()) throw Error(ErrorCode::LongitudeMismatch, "longitude check failed:" + residual_text(rep));
    return rep;
}

std::vector<cplx> sample_m0(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.8, 1.6), angle(0.0, 2 * M_PI);
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < count) {
        cplx m = std::polar(radius(rng), angle(rng));
        if (std::abs(m - 1.0) < 0.05 || std::abs(m + 1.0) < 0.05) continue;
        out.push_back(m);
    }
    return out;
}

}  // namespace twobridge

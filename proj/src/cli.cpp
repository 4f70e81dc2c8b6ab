#include "twobridge/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "twobridge/alexander.hpp"
#include "twobridge/apoly.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/numcheck.hpp"
#include "twobridge/riley.hpp"

namespace twobridge {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ResultantStrategy to_strategy(StrategyChoice c)
{
    return c == StrategyChoice::EvalInterp ? ResultantStrategy::EvalInterp : ResultantStrategy::Prs;
}

// the A-polynomial under the chosen strategy; "both" insists on agreement
APolyResult compute_apoly(const EpsilonSeq& eps, const CliConfig& cfg, unsigned threads)
{
    if (cfg.strategy != StrategyChoice::Both) return a_polynomial(eps, {to_strategy(cfg.strategy), threads});
    APolyResult a = a_polynomial(eps, {ResultantStrategy::Prs, threads});
    APolyResult b = a_polynomial(eps, {ResultantStrategy::EvalInterp, threads});
    if (!(a.raw == b.raw) || a.m_shift != b.m_shift)
        throw Error(ErrorCode::RelationFailed, "resultant strategies disagree for " + eps.str());
    return a;
}

int cmd_riley(const KnotArg& k, const CliConfig& cfg, std::ostream& out)
{
    RileyPair rp = riley_recursive(half_sequences(k.eps));
    LamPoly f_lambda = substitute_lambda(rp.f_n(), laurent_s(), VarTag::Lambda);
    if (cfg.output == OutputFormat::Json) {
        json j{{"knot", k.label}, {"eps", k.eps.str()}, {"f", to_json(rp.f_n())}, {"g", to_json(rp.g_n())},
               {"f_lambda", to_json(f_lambda)}};
        out << j.dump() << "\n";
    } else {
        out << "knot " << k.label << " eps " << k.eps.str() << "\n";
        out << "f = " << rp.f_n().str() << "\n";
        out << "g = " << rp.g_n().str() << "\n";
        out << "f(lambda) = " << f_lambda.str() << "\n";
    }
    return 0;
}

struct AlexPaths {
    std::vector<std::pair<std::string, SymLaurent>> values;
    bool agree() const
    {
        for (const auto& v : values)
            if (!(v.second == values.front().second)) return false;
        return true;
    }
};

AlexPaths alexander_paths(const EpsilonSeq& eps)
{
    HalfSeq h = half_sequences(eps);
    AlexPaths p;
    p.values.emplace_back("riley", alexander_from_riley(riley_recursive(h)));
    p.values.emplace_back("sigma", alexander_sigma(eps));
    p.values.emplace_back("minkus", alexander_minkus(eps));
    p.values.emplace_back("chebyshev", alexander_chebyshev(h));
    p.values.emplace_back("fukuhara", alexander_fukuhara(eps));
    return p;
}

int cmd_alex(const KnotArg& k, const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    AlexPaths p = alexander_paths(k.eps);
    const SymLaurent& d = p.values.front().second;
    if (cfg.output == OutputFormat::Json) {
        json j{{"knot", k.label}, {"eps", k.eps.str()}, {"alexander", d.str()}, {"paths_agree", p.agree()}};
        out << j.dump() << "\n";
    } else {
        out << d.str() << "\n";
    }
    if (!p.agree()) {
        for (const auto& [name, v] : p.values) err << "  " << name << ": " << v.str() << "\n";
        err << "alexander formulas disagree\n";
        return 1;
    }
    return 0;
}

std::string csv_row(const TwoBridgeFraction& fr, const EpsilonSeq& eps, const BivarInt& poly, double ms)
{
    std::ostringstream os;
    os << fr.alpha << "," << fr.beta << "," << eps.sigma() << "," << poly.deg_L() << "," << poly.deg_M() << ",\""
       << poly.str() << "\"," << static_cast<long>(ms + 0.5);
    return os.str();
}

const char* kCsvHeader = "alpha,beta,sigma,deg_L,deg_M,normalized,ms";

int cmd_apoly(const KnotArg& k, const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    auto t0 = Clock::now();
    APolyResult r = compute_apoly(k.eps, cfg, cfg.threads);
    double ms = ms_since(t0);
    const BivarInt& shown = cfg.squarefree ? r.squarefree : r.normalized;
    if (cfg.output == OutputFormat::Json) {
        json mult = json::array();
        for (const auto& [fac, m] : r.multiplicities) mult.push_back({{"factor", to_json(fac)}, {"multiplicity", m}});
        json j{{"knot", k.label},
               {"eps", k.eps.str()},
               {"apoly", to_json(shown)},
               {"squarefree", cfg.squarefree},
               {"raw", to_json(r.raw)},
               {"m_shift", r.m_shift},
               {"unit", r.unit.str()},
               {"multiplicities", mult}};
        out << j.dump() << "\n";
    } else if (cfg.output == OutputFormat::Csv) {
        TwoBridgeFraction fr = k.is_fraction ? k.fraction : TwoBridgeFraction{k.eps.alpha(), 0};
        out << kCsvHeader << "\n" << csv_row(fr, k.eps, shown, ms) << "\n";
    } else {
        out << shown.str() << "\n";
    }
    if (cfg.timing) err << "time_ms " << ms << "\n";
    return 0;
}

int cmd_verify(const KnotArg& k, const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    RileyPair rp = riley_recursive(half_sequences(k.eps));
    APolyResult ap = a_polynomial(k.eps, {to_strategy(cfg.strategy == StrategyChoice::Both ? StrategyChoice::Prs
                                                                                           : cfg.strategy),
                                          cfg.threads});
    const double tol = 1e-8, apoly_tol = 1e-6;
    int failures = 0;
    json reports = json::array();
    for (cplx m0 : sample_m0(cfg.samples, cfg.seed)) {
        for (const NumericRoot& root : numeric_roots(rp.f_n(), m0)) {
            json entry{{"M0", {m0.real(), m0.imag()}}, {"lam_tilde0", {root.lam_tilde0.real(), root.lam_tilde0.imag()}}};
            try {
                NumericReport rep = verify_representation(k.eps, root, tol);
                NumericReport lon = verify_longitude(k.eps, root, tol);
                double res = bivar_relative_residual(ap.normalized, lon.L, m0);
                entry["representation"] = json::parse(rep.json());
                entry["longitude"] = json::parse(lon.json());
                entry["apoly_residual"] = res;
                if (res > apoly_tol) {
                    ++failures;
                    err << "A-polynomial residual " << res << " at M0=" << m0 << "\n";
                }
            } catch (const Error& e) {
                ++failures;
                entry["error"] = e.what();
                err << e.what() << "\n";
            }
            reports.push_back(entry);
        }
    }
    if (cfg.output == OutputFormat::Json)
        out << json{{"knot", k.label}, {"roots", reports}, {"failures", failures}}.dump() << "\n";
    else
        out << "verified " << reports.size() << " roots of " << k.label << ", " << failures << " failures\n";
    return failures ? 1 : 0;
}

int cmd_census(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    auto entries = census(cfg.max_alpha);
    std::vector<std::string> rows(entries.size());
    std::vector<std::string> errors(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < entries.size();) {
            const auto& c = entries[i];
            try {
                EpsilonSeq eps = epsilon_from_fraction(c.fraction);
                auto t0 = Clock::now();
                APolyResult r = compute_apoly(eps, cfg, 1);
                double ms = ms_since(t0);
                rows[i] = csv_row(c.fraction, eps, cfg.squarefree ? r.squarefree : r.normalized, ms);
            } catch (const std::exception& e) {
                errors[i] = c.fraction.str() + ": " + e.what();
            }
        }
    };
    unsigned nt = std::max(1u, cfg.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int failures = 0;
    out << kCsvHeader << "\n";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (!errors[i].empty()) {
            ++failures;
            err << errors[i] << "\n";
        } else {
            out << rows[i] << "\n";
        }
    }
    return failures ? 1 : 0;
}

// seeded algebraic property checks on random inputs
std::vector<IdentityResult> property_checks(std::uint64_t seed, int rounds)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-20, 20), expo(-4, 4), len(0, 4), deg(0, 3);
    auto laurent = [&] {
        std::vector<Int> c(len(rng) + 1);
        for (auto& v : c) v = coef(rng);
        return LaurentInt::from_coeffs(expo(rng), std::move(c));
    };
    auto lampoly = [&] {
        std::vector<LaurentInt> c(deg(rng) + 1);
        for (auto& v : c) v = laurent();
        return LamPoly(VarTag::LambdaTilde, std::move(c));
    };
    bool ring = true, involution = true, shift = true, swap = true;
    for (int r = 0; r < rounds; ++r) {
        LaurentInt a = laurent(), b = laurent(), c = laurent();
        ring = ring && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        involution = involution && a.bar().bar() == a;
        LamPoly p = lampoly(), q = lampoly();
        LamPoly there = substitute_lambda(p, laurent_s(), VarTag::Lambda);
        shift = shift && substitute_lambda(there, -laurent_s(), VarTag::LambdaTilde) == p;
        if (!p.is_zero() && !q.is_zero()) {
            LaurentInt pq = resultant_lambda(p, q), qp = resultant_lambda(q, p);
            swap = swap && ((p.degree() * q.degree()) % 2 ? pq == -qp : pq == qp);
        }
    }
    return {{"ring_axioms", ring, ""},
            {"bar_involution", involution, ""},
            {"substitution_round_trip", shift, ""},
            {"resultant_swap_sign", swap, ""}};
}

int cmd_identities(const CliConfig& cfg, std::ostream& out)
{
    int sequences = 0, checks = 0, failures = 0;
    auto report = [&](const std::string& eps, const IdentityResult& r) {
        ++checks;
        if (!r.pass) {
            ++failures;
            out << "FAIL " << eps << " " << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        }
    };
    for (int a = 3; a <= cfg.max_alpha; a += 2) {
        for (const EpsilonSeq& eps : all_symmetric(a)) {
            ++sequences;
            IdentityReport rep = identity_suite(eps);
            for (const auto& r : rep.results) report(eps.str(), r);
            for (const auto& r : q_recursion_check(half_sequences(eps)).checks) report(eps.str(), r);
            AlexPaths p = alexander_paths(eps);
            const SymLaurent& d = p.values.front().second;
            report(eps.str(), {"alexander_paths_agree", p.agree(), ""});
            report(eps.str(), {"alexander_palindromic", d.palindromic(), ""});
            report(eps.str(), {"alexander_value_at_one", d.at_one() == 1, ""});
        }
    }
    for (const auto& r : property_checks(cfg.seed, 200)) report("random", r);
    out << "identities: " << sequences << " sequences, " << checks << " checks, " << failures << " failures\n";
    return failures ? 1 : 0;
}

}  // namespace

KnotArg parse_knot_arg(const std::string& s)
{
    KnotArg k;
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            size_t p1 = 0, p2 = 0;
            long a = std::stol(s.substr(0, slash), &p1);
            long b = std::stol(s.substr(slash + 1), &p2);
            if (p1 != slash || p2 != s.size() - slash - 1) throw Error(ErrorCode::Usage, "bad fraction " + s);
            k.is_fraction = true;
            k.fraction = normalize_fraction(a, b).first;
            k.eps = epsilon_from_fraction(k.fraction);
            k.label = k.fraction.str();
        } else {
            if (s.empty()) throw Error(ErrorCode::Usage, "empty knot argument");
            k.eps = parse_epsilon(s);
            if (k.eps.eps.empty()) throw Error(ErrorCode::Usage, "empty sign sequence");
            k.label = k.eps.str();
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Usage) throw;
        throw Error(ErrorCode::Usage, std::string("cannot parse knot '") + s + "': " + e.what());
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::Usage, "cannot parse knot '" + s + "'");
    }
    return k;
}

unsigned default_threads()
{
    if (const char* v = std::getenv("TWOBRIDGE_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (end != v && *end == 0 && n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        switch (cfg.command) {
        case Command::Census: return cmd_census(cfg, out, err);
        case Command::Identities: return cmd_identities(cfg, out);
        default: break;
        }
        if (cfg.knot.empty()) throw Error(ErrorCode::Usage, "--knot is required");
        KnotArg k = parse_knot_arg(cfg.knot);
        switch (cfg.command) {
        case Command::Riley: return cmd_riley(k, cfg, out);
        case Command::Alex: return cmd_alex(k, cfg, out, err);
        case Command::APoly: return cmd_apoly(k, cfg, out, err);
        case Command::Verify: return cmd_verify(k, cfg, out, err);
        default: return 2;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::Usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twobridge

#include "twobridge/json_io.hpp"

namespace twobridge {

using nlohmann::json;

namespace {

json term(int l, int m, int lam, const Int& c)
{
    return json{{"L", l}, {"M", m}, {"lam", lam}, {"coeff", c.get_str()}};
}

Int coeff_of(const json& t)
{
    Int c;
    if (!t.contains("coeff") || !t["coeff"].is_string() || c.set_str(t["coeff"].get<std::string>(), 10) != 0)
        throw Error(ErrorCode::Usage, "bad coefficient in polynomial JSON");
    return c;
}

VarTag tag_from(const std::string& s)
{
    if (s == "Ltilde") return VarTag::LambdaTilde;
    if (s == "lambda") return VarTag::Lambda;
    if (s == "L") return VarTag::L;
    throw Error(ErrorCode::Usage, "unknown var tag '" + s + "'");
}

}  // namespace

json to_json(const LamPoly& p)
{
    json terms = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        const LaurentInt& c = p.poly().coeffs()[k];
        for (size_t i = 0; i < c.coeffs().size(); ++i) {
            if (c.coeffs()[i] == 0) continue;
            int m = c.min_exp() + static_cast<int>(i);
            if (p.tag() == VarTag::L)
                terms.push_back(term(k, m, 0, c.coeffs()[i]));
            else
                terms.push_back(term(0, m, k, c.coeffs()[i]));
        }
    }
    return json{{"var", tag_name(p.tag())}, {"terms", terms}};
}

json to_json(const LPoly& p)
{
    return to_json(LamPoly(VarTag::L, p));
}

json to_json(const BivarInt& p)
{
    json terms = json::array();
    for (const auto& [k, v] : p.terms()) terms.push_back(term(k.first, k.second, 0, v));
    return json{{"var", "L"}, {"terms", terms}};
}

LamPoly lampoly_from_json(const json& j)
{
    VarTag tag = tag_from(j.at("var").get<std::string>());
    std::vector<LaurentInt> c;
    for (const auto& t : j.at("terms")) {
        int deg = tag == VarTag::L ? t.at("L").get<int>() : t.at("lam").get<int>();
        int other = tag == VarTag::L ? t.value("lam", 0) : t.value("L", 0);
        if (deg < 0 || other != 0) throw Error(ErrorCode::Usage, "term outside the polynomial's variables");
        if (deg >= static_cast<int>(c.size())) c.resize(deg + 1);
        c[deg] += LaurentInt::monomial(coeff_of(t), t.at("M").get<int>());
    }
    return LamPoly(tag, std::move(c));
}

LPoly lpoly_from_json(const json& j)
{
    LamPoly p = lampoly_from_json(j);
    if (p.tag() != VarTag::L) throw Error(ErrorCode::TagMismatch, "expected var L");
    return p.poly();
}

BivarInt bivar_from_json(const json& j)
{
    if (j.at("var").get<std::string>() != "L") throw Error(ErrorCode::TagMismatch, "expected var L");
    BivarInt r;
    for (const auto& t : j.at("terms")) {
        if (t.value("lam", 0) != 0) throw Error(ErrorCode::Usage, "lambda term in an (L, M) polynomial");
        r.add_term(t.at("L").get<int>(), t.at("M").get<int>(), coeff_of(t));
    }
    return r;
}

}  // namespace twobridge

#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "twobridge/cli.hpp"
#include "twobridge/error.hpp"

using namespace twobridge;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(CliConfig cfg)
{
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

CliConfig with(Command c, const std::string& knot)
{
    CliConfig cfg;
    cfg.command = c;
    cfg.knot = knot;
    return cfg;
}

}  // namespace

TEST_CASE("knot arguments")
{
    KnotArg f = parse_knot_arg("5/3");
    CHECK(f.is_fraction);
    CHECK(f.eps.eps == std::vector<int>{1, -1, -1, 1});
    KnotArg g = parse_knot_arg("5/8");
    CHECK(g.fraction == TwoBridgeFraction{5, 3});
    KnotArg s = parse_knot_arg("++");
    CHECK_FALSE(s.is_fraction);
    CHECK(s.label == "++");
    for (const char* bad : {"", "5/", "x/3", "4/1", "+-", "5/3z", "+a+"}) {
        try {
            (void)parse_knot_arg(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Usage);
        }
    }
}

TEST_CASE("apoly output")
{
    Outcome t = invoke(with(Command::APoly, "3/1"));
    CHECK(t.code == 0);
    CHECK(t.out == "L*M^6 + 1\n");

    CliConfig both = with(Command::APoly, "5/1");
    both.strategy = StrategyChoice::Both;
    both.squarefree = true;
    Outcome sq = invoke(both);
    CHECK(sq.code == 0);
    CHECK(sq.out == "L*M^10 + 1\n");

    CliConfig js = with(Command::APoly, "+--+");
    js.output = OutputFormat::Json;
    Outcome j = invoke(js);
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["eps"] == "+--+");
    CHECK(doc["multiplicities"].empty());

    CliConfig csv = with(Command::APoly, "5/3");
    csv.output = OutputFormat::Csv;
    Outcome c = invoke(csv);
    CHECK(c.out.rfind("alpha,beta,sigma,deg_L,deg_M,normalized,ms\n5,3,0,2,8,", 0) == 0);
}

TEST_CASE("riley, alex and verify")
{
    Outcome r = invoke(with(Command::Riley, "3/1"));
    CHECK(r.code == 0);
    CHECK(r.out.find("knot 3/1 eps ++") != std::string::npos);
    Outcome a = invoke(with(Command::Alex, "5/3"));
    CHECK(a.code == 0);
    CHECK(a.out == "-t^-1 + 3 - t\n");
    CliConfig v = with(Command::Verify, "7/3");
    v.samples = 2;
    Outcome ver = invoke(v);
    CHECK(ver.code == 0);
    CHECK(ver.out.find("0 failures") != std::string::npos);
}

TEST_CASE("census and identities")
{
    CliConfig c;
    c.command = Command::Census;
    c.max_alpha = 7;
    c.threads = 2;
    Outcome o = invoke(c);
    CHECK(o.code == 0);
    std::istringstream lines(o.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) ++n;
    CHECK(n == 1 + 1 + 2 + 2);

    CliConfig id;
    id.command = Command::Identities;
    id.max_alpha = 9;
    Outcome i = invoke(id);
    CHECK(i.code == 0);
    CHECK(i.out.find(" 0 failures") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(invoke(with(Command::APoly, "")).code == 2);
    CHECK(invoke(with(Command::APoly, "6/1")).code == 2);
    Outcome bad = invoke(with(Command::Riley, "+-"));
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

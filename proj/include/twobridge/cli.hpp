#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twobridge/knotspec.hpp"

namespace twobridge {

enum class Command { Riley, Alex, APoly, Verify, Census, Identities };
enum class StrategyChoice { Prs, EvalInterp, Both };
enum class OutputFormat { Text, Json, Csv };

struct CliConfig {
    Command command = Command::Riley;
    std::string knot;
    StrategyChoice strategy = StrategyChoice::Prs;
    OutputFormat output = OutputFormat::Text;
    bool squarefree = false;
    int max_alpha = 15;
    unsigned threads = 1;
    bool timing = false;
    std::uint64_t seed = 20240601;
    int samples = 5;
};

struct KnotArg {
    bool is_fraction = false;
    TwoBridgeFraction fraction;
    EpsilonSeq eps;
    std::string label;
};

// "a/b" or a sign string; any failure is USAGE
KnotArg parse_knot_arg(const std::string& s);

// thread default from TWOBRIDGE_THREADS, else 1
unsigned default_threads();

// 0 success, 1 computation failure, 2 usage
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace twobridge

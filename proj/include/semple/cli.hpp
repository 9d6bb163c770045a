#ifndef SEMPLE_CLI_HPP
#define SEMPLE_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <semple/sweeps.hpp>

namespace semple {

enum class ExitCode : int { Ok = 0, Input = 1, Invariant = 2, Precision = 3 };

struct RunConfig {
    // ring, module, contact, lift, verify or formula.
    std::string subcommand;
    std::vector<std::string> args;
    // json, text or latex; empty picks the subcommand default (text for
    // verify, json otherwise).
    std::string format;
    std::uint64_t seed = kDefaultSeed;
    int max_level = 6;
    // ANSI colour in TAP output.
    bool color = false;
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Never throws; failures become a {"error": {...}} object.
RunResult run(const RunConfig &config, std::string_view input);

bool needs_input(const std::string &subcommand);

} // namespace semple

#endif

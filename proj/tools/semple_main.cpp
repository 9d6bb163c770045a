#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include <semple/cli.hpp>

int main(int argc, char **argv)
{
    CLI::App app{"Contact calculus on the Semple tower of the projective plane"};
    app.require_subcommand(1);

    semple::RunConfig config;
    std::string input_path;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", config.format, "json, text or latex")
            ->check(CLI::IsMember({"json", "text", "latex"}));
        sub->add_option("--seed", config.seed, "seed for randomized sweeps");
        sub->add_option("--max-level", config.max_level, "highest tower level to lift to")
            ->capture_default_str();
    };

    auto *ring = app.add_subcommand("ring", "pairing matrix of F(n) and the i_k^2 relations");
    ring->add_option("n", config.args, "level")->required();
    add_common(ring);

    const std::pair<const char *, const char *> json_commands[] = {
        {"module", "contact module m_n(C) of a curve"},
        {"contact", "proto-contact number of curves against a family"},
        {"lift", "lift a branch or curve, reporting kappa and cusp flags"},
        {"formula", "symbolic proto-contact formula"},
    };
    for (const auto &[name, help] : json_commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--input", input_path, "JSON input file; standard input when absent");
        if (std::string(name) == "module") {
            sub->add_option("n", config.args, "level");
        }
        add_common(sub);
    }
    auto *verify = app.add_subcommand("verify", "identity and rank sweeps, TAP output");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);
    config.subcommand = app.get_subcommands().front()->get_name();
    config.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);

    std::string input;
    if (semple::needs_input(config.subcommand)) {
        if (input_path.empty()) {
            input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        } else {
            std::ifstream f(input_path, std::ios::binary);
            if (!f) {
                std::cout << "{\n  \"error\": {\n    \"type\": \"InputError\",\n    \"message\": \"cannot open input file\"\n  }\n}\n";
                return 1;
            }
            std::ostringstream buf;
            buf << f.rdbuf();
            input = buf.str();
        }
    }
    const auto result = semple::run(config, input);
    std::cout << result.output;
    return result.exit_code;
}

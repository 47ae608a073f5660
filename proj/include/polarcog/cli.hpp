#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace polarcog::cli {

enum class Subcommand { Check, Certify, Generate, Count, Enumerate, Cotree };
enum class Format { Default, Json, G6, Csv, Text };

struct Command {
    Subcommand sub = Subcommand::Check;
    std::optional<int> s;      // check (optional), certify, generate
    int s_max = 20;            // count
    int n = 1;                 // enumerate
    Format format = Format::Default;
    std::string catalog_path;  // generate: optional sidecar JSON catalog
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotCograph = 2;

/// Runs one command. Graph-consuming commands read one graph6 string per non-empty line of
/// `in` and write exactly one result line per input line, in input order.
int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

Format parse_format(const std::string& name);

}  // namespace polarcog::cli

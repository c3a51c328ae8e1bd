#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace etk::cli {

enum class Command { Generate, Min, Max, Classify, Construct, Verify };
enum class OutputFormat { Text, Json };

struct RunConfig {
    Command command = Command::Generate;
    std::string alphabet;
    std::optional<std::string> directive;
    std::optional<std::string> literal;
    std::optional<std::string> skew;
    std::optional<std::string> order;
    bool all_orders = false;
    std::size_t k = 1;
    std::size_t depth = 50;
    std::size_t horizon = 1000;
    std::size_t prefix_len = 0;
    OutputFormat output = OutputFormat::Text;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr std::size_t default_horizon = 1000;
inline constexpr std::size_t max_alphabet_orders = 6;

// Default horizon, overridden by ETK_HORIZON when it holds a positive integer.
std::size_t horizon_from_environment();

// Parses argv (argv[0] included) into a config. Errors come back as a
// RunResult with exit code 1 (or 0 for --help).
std::variant<RunConfig, RunResult> parse_args(const std::vector<std::string>& args);

// Executes a validated config. Exit 0 on success, 1 on spec or validation
// errors, 2 on internal-consistency failures.
RunResult run(const RunConfig& config);

// parse_args followed by run.
RunResult main_entry(const std::vector<std::string>& args);

} // namespace etk::cli

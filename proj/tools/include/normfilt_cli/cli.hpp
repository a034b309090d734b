#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace normfilt::cli {

enum ExitCode : int { Success = 0, CheckFailure = 1, InputFailure = 2 };

enum class Format { Text, Json };

struct RunConfig {
    std::string command;
    std::optional<std::filesystem::path> ideal_path;
    std::optional<std::filesystem::path> complex_path;
    std::optional<std::filesystem::path> reduction_ideal_path;
    unsigned power = 1;
    unsigned max_n = 8;
    unsigned r = 1;
    unsigned k = 2;
    std::int64_t type = 1;
    unsigned hyper_d = 2;
    std::int64_t hyper_n = 2;
    bool cohen_macaulay = false;
    std::optional<std::filesystem::path> cache_dir;
    bool use_cache = true;
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;
    bool verbose = false;
};

/// Flag, then NORMFILT_CACHE_DIR, then $XDG_CACHE_HOME/normfilt or ~/.cache/normfilt.
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

/// Default location of the bundled shellable complex.
std::filesystem::path bundled_complex_path();

/// Parses `args` (without the program name) and runs the chosen command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace normfilt::cli

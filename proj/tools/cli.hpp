#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cograph::cli {

enum class Command { Generate, Count, Verify, Bench };
enum class Format { Cotree, Graph6, Edgelist, Dot };

struct RunConfig {
    Command command = Command::Generate;
    std::uint32_t n = 0;
    Format format = Format::Cotree;
    std::optional<std::uint64_t> limit;
    bool connected_only = false;
    bool trees_only = false;
    bool long_oracle = false;
    unsigned threads = 1;
    // bench only: sweep n..max_n and report a fitted delay constant.
    std::optional<std::uint32_t> max_n;
    // Empty means stdout.
    std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_generate(const RunConfig& cfg, std::ostream& out);
int cmd_count(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_bench(const RunConfig& cfg, std::ostream& out);

// Parses argv, dispatches, and maps errors onto the exit-code contract:
// 0 success, 1 verification or runtime failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cograph::cli

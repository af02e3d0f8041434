#ifndef DGRE_CLI_HPP
#define DGRE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dgre::cli {

enum class OutputFormat { pretty, machine };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCheckFailed = 2;

struct Invocation {
    std::string graph_path;
    std::optional<std::string> script_text;
    std::optional<std::string> script_path;
    OutputFormat format = OutputFormat::pretty;
    // verify
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::size_t max_nodes = 10;
    // bench
    std::vector<std::size_t> sizes{8, 16, 32, 64};
};

int run_convert(const Invocation& inv, std::ostream& out, std::ostream& err);
int run_mutate(const Invocation& inv, std::ostream& out, std::ostream& err);
int run_verify(const Invocation& inv, std::ostream& out, std::ostream& err);
int run_bench(const Invocation& inv, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; used by the executable.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace dgre::cli

#endif

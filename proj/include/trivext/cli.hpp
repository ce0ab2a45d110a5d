#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trivext/sampling.hpp"

namespace trivext::cli {

enum class Command { Classify, Ann, Dac, Divisorial, Semiregular, Coherence, PaperExamples };
enum class Format { Text, Structured };

struct Request {
    Command command = Command::PaperExamples;
    std::string domain;
    std::optional<std::string> modulus;
    std::optional<std::string> ideal;
    std::optional<std::string> ref;
    std::optional<std::string> gens;
    /// dac: treat --ideal as a submodule carrier J ⊇ I (DAC2) instead of K (DAC1).
    bool submodule = false;
    std::optional<std::size_t> samples;
    std::optional<std::int64_t> window;
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::Text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconclusive = 2;

/// Executes a parsed request; the report goes to `out`, diagnostics to `err`.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (argv[0] included) and runs the request.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The fixed example table printed by `paper-examples`.
std::string paper_examples(Format format, std::uint64_t seed = kDefaultSeed);

} // namespace trivext::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpf::cli {

enum class Format { kText, kMachine };

/// Exit statuses of the cpf tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

struct ComputeRequest {
  std::string braid;
  std::size_t strands = 1;
  std::string colors = "auto";  ///< "auto" or one comma-separated name per strand
  std::size_t open = 1;         ///< 1-based strand position
};

struct OutputRecord {
  std::string braid;
  std::size_t strands = 0;
  std::string colors;
  std::size_t open = 0;
  std::vector<std::vector<std::size_t>> components;  ///< 1-based positions
  std::string value;
  std::string numerator;
  std::string denominator;  ///< "t1^1*t2^2" style, empty when none
  double millis = 0.0;
};

struct Preset {
  std::string name;
  std::string braid;
  std::size_t strands;
};

/// Strand cap from CPF_MAX_STRANDS (default 12, never above the library cap).
std::size_t max_strands();

/// Throws cpf::Error (or a subclass) on bad input.
OutputRecord cmd_compute(const ComputeRequest& request);

std::string format_record(const OutputRecord& record, Format format, bool timing);

const std::vector<Preset>& cmd_presets();
/// Throws cpf::Error for an unknown name.
const Preset& find_preset(const std::string& name);

/// Parses one batch line "<strands> <colors> <open> [letters...]" or
/// "preset <name> [<open>]". Throws cpf::ParseError.
ComputeRequest parse_batch_line(const std::string& line);

/// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpf::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nearspace/oracle.hpp"

namespace nearspace::cli {

enum class Command { CheckPair, Table, Triple, Count, Gen, Span, OracleVerify, Member, SearchTwo };

enum class Format { Ascii, Csv, Json };

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kInputError = 2 };

struct JobSpec {
  Command command = Command::CheckPair;
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  /// Matrix file; inline vectors are appended after its rows.
  std::optional<std::string> input_path;
  std::vector<std::string> inline_vectors;
  /// Column count for empty inputs, n for count/search-two.
  std::optional<std::size_t> n;
  std::optional<std::uint32_t> k;
  /// Defaults to json for gen/span, ascii otherwise.
  std::optional<Format> format;
  /// oracle-verify: "gen", "span" or "both".
  std::string mode = "both";
  std::optional<std::string> basis_path;
  std::uint64_t search_limit = 1'000'000;
  oracle::Config oracle;
};

/// Executes one job. Returns kSuccess, kMismatch (oracle-verify disagreed) or
/// kInputError; errors are reported on `err` as "error: <Code>: <message>".
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec (honouring ORACLE_CAP) and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nearspace::cli
